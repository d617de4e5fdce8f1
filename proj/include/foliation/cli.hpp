#ifndef FOLIATION_CLI_HPP
#define FOLIATION_CLI_HPP

#include "foliation/invariants.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fol {

using Json = nlohmann::ordered_json;

enum ExitCode { ExitOk = 0, ExitMismatch = 2, ExitUnsupported = 3 };

struct JobSpec {
    std::string name = "job";
    OneForm form;
    int max_blowups = 64;
    std::uint64_t seed = 0;
    std::vector<std::string> curves;
    std::optional<std::string> permutation;  // "2,3,1"
    std::optional<std::string> balanced_equation;  // f_B for the polar oracle
    std::set<std::string> checks;  // empty means all
};

const std::vector<std::string>& check_names();
// "all", "none" or a comma separated list of check names
std::set<std::string> parse_checks(const std::string& s);

JobSpec parse_job(const Json& j);
Json job_to_json(const JobSpec& job);

struct RunResult {
    Json report;
    std::string dot;
    int exit_code = ExitOk;
};
RunResult run(const JobSpec& job);

std::string dual_graph_dot(const FoliationData& d, const std::string& name);

} // namespace fol

#endif
