#include "foliation/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

namespace fs = std::filesystem;
using namespace fol;

namespace {

Json read_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + p.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, p.string() + ": " + e.what());
    }
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

int run_batch(const fs::path& dir, const fs::path& out_dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json" && e.path().string().find(".report.") == std::string::npos) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    fs::create_directories(out_dir);
    std::vector<std::future<std::pair<int, std::string>>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(std::launch::async, [f, out_dir] {
            RunResult r;
            try {
                r = run(parse_job(read_json(f)));
            } catch (const Error& e) {
                r.report["status"] = "unsupported";
                r.report["error"] = e.what();
                r.exit_code = ExitUnsupported;
            }
            std::string stem = f.stem().string();
            write_file(out_dir / (stem + ".report.json"), r.report.dump(2) + "\n");
            if (!r.dot.empty()) write_file(out_dir / (stem + ".dot"), r.dot);
            return std::make_pair(r.exit_code, stem + ": " + r.report.value("status", std::string("?")));
        }));
    int code = ExitOk;
    for (auto& j : jobs) {
        auto [c, line] = j.get();
        std::cout << line << "\n";
        code = std::max(code, c);
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction of singularities and index invariants of plane foliation germs"};
    std::string job_path, P, Q, name, check, permute, balanced, dot_path, out_path, batch_dir, out_dir;
    int max_blowups = -1;
    std::uint64_t seed = 0;
    bool seed_given = false, dump_job = false;
    std::vector<std::string> curves;
    app.add_option("job", job_path, "JobSpec JSON file");
    app.add_option("-P", P, "coefficient of dx");
    app.add_option("-Q", Q, "coefficient of dy");
    app.add_option("--name", name, "job name");
    app.add_option("--max-blowups", max_blowups, "blow-up limit (default 64)");
    auto* seed_opt = app.add_option("--seed", seed, "oracle seed (default 0)");
    app.add_option("--check", check, "all | none | comma separated check names");
    app.add_option("--curve", curves, "extra curve, repeatable");
    app.add_option("--permute", permute, "component reordering such as 2,3,1");
    app.add_option("--balanced", balanced, "equation of the balanced divisor for the polar oracle");
    app.add_option("--dot", dot_path, "write the dual graph here");
    app.add_option("-o,--out", out_path, "write the report here instead of stdout");
    app.add_option("--batch", batch_dir, "run every *.json job in a directory");
    app.add_option("--out-dir", out_dir, "report directory for --batch");
    app.add_flag("--dump-job", dump_job, "print the normalized JobSpec and exit");
    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;

    try {
        if (!batch_dir.empty()) return run_batch(batch_dir, out_dir.empty() ? fs::path(batch_dir) : fs::path(out_dir));

        JobSpec job;
        if (!job_path.empty()) {
            job = parse_job(read_json(job_path));
        } else {
            if (P.empty() || Q.empty()) {
                std::cerr << "either a job file or both -P and -Q are required\n";
                return ExitUnsupported;
            }
            job.form.P = parse_bipoly(P);
            job.form.Q = parse_bipoly(Q);
        }
        if (!name.empty()) job.name = name;
        if (max_blowups > 0) job.max_blowups = max_blowups;
        if (seed_given) job.seed = seed;
        if (!check.empty()) job.checks = parse_checks(check);
        for (const auto& c : curves) job.curves.push_back(c);
        if (!permute.empty()) job.permutation = permute;
        if (!balanced.empty()) job.balanced_equation = balanced;

        if (dump_job) {
            std::cout << job_to_json(job).dump(2) << "\n";
            return ExitOk;
        }
        RunResult r = run(job);
        std::string text = r.report.dump(2) + "\n";
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
        if (!dot_path.empty() && !r.dot.empty()) write_file(dot_path, r.dot);
        return r.exit_code;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return is_unsupported(e.code()) ? ExitUnsupported : ExitMismatch;
    }
}
