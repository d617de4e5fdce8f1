#include "foliation/cli.hpp"
#include "foliation/oracles.hpp"

#include <sstream>

namespace fol {

namespace {

Json ex(const Rational& r) { return to_exact(r); }

Json ex(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_exact(x));
    return a;
}

Json ex(const Matrix& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_exact(m(i, j)));
        a.push_back(row);
    }
    return a;
}

Json triples(const BiPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e.first, e.second, to_exact(c)}));
    return a;
}

BiPoly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_bipoly(j.get<std::string>());
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "coefficients must be a list of [i, j, \"num/den\"]");
    BiPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "bad coefficient triple " + t.dump());
        int i = t[0].get<int>(), k = t[1].get<int>();
        if (i < 0 || k < 0) throw Error(ErrorCode::ParseError, "negative exponent in " + t.dump());
        Rational c = t[2].is_string() ? parse_rational(t[2].get<std::string>()) : Rational(t[2].get<long>());
        p.add_term(i, k, c);
    }
    return p;
}

const char* kind_name(ReducedKind k) { return k == ReducedKind::SaddleNode ? "saddle-node" : "non-degenerate"; }

Json tree_json(const FoliationData& d) {
    const ResolutionTree& t = d.tree;
    Json j;
    Json comps = Json::array();
    for (const auto& c : t.components) {
        Json e;
        e["index"] = c.index;
        e["invariant"] = c.invariant;
        e["ell"] = ex(Rational(c.recorded_discrepancy));
        e["self_intersection"] = ex(Rational(c.self_intersection));
        e["center"] = t.points[c.center].location.describe();
        comps.push_back(e);
    }
    j["components"] = comps;
    j["iota"] = ex(d.iota);
    j["delta"] = ex(d.delta);
    j["ell_recorded"] = ex(d.ell_recorded);
    Json sings = Json::array();
    for (const auto& s : t.singularities) {
        Json e;
        e["location"] = s.location.describe();
        e["kind"] = kind_name(s.kind);
        e["orbit_size"] = s.orbit_size();
        e["milnor"] = ex(Rational(s.milnor));
        e["trace"] = s.trace;
        e["det"] = s.det;
        if (s.saddle_node()) {
            e["k"] = ex(Rational(s.k));
            e["lambda"] = s.lambda;
            e["tangent"] = s.tangent;
            e["corner"] = s.corner;
            e["weak_component"] = s.weak_component;
            e["strong_component"] = s.strong_component;
        }
        Json along = Json::object();
        for (const auto& [c, v] : s.cs_along) along["E" + std::to_string(c)] = ex(v);
        e["cs_along"] = along;
        if (s.non_corner()) e["cs_isolated"] = ex(s.cs_isolated_total);
        e["bb"] = ex(s.bb_total);
        sings.push_back(e);
    }
    j["singularities"] = sings;
    j["notes"] = t.notes;
    return j;
}

Json row_json(const IndexRow& r) {
    Json j;
    j["divisor"] = r.name;
    j["S"] = ex(r.S);
    j["cs"] = ex(r.cs);
    j["var"] = ex(r.var);
    j["gsv"] = r.gsv ? Json(to_exact(*r.gsv)) : Json(nullptr);
    j["milnor_along"] = ex(r.mu);
    j["polar_excess"] = ex(r.delta);
    return j;
}

Json describe_divisor(const AttachmentDivisor& D) {
    Json a = Json::array();
    for (const auto& b : D.branches) a.push_back(b.describe());
    return a;
}

// scalars that must not depend on the component order or the curvette choice
std::vector<Rational> scalar_fingerprint(const FoliationData& d, const InvariantReport& r) {
    std::vector<Rational> s{r.milnor, r.bb, r.identities.cs, r.identities.var, r.identities.delta, r.identities.tau_norm2,
                            r.gap.gap_B, r.gap.gap_Bprime};
    for (const auto& row : r.indices) {
        s.push_back(row.mu);
        if (row.gsv) s.push_back(*row.gsv);
    }
    s.push_back(Rational(d.nu0));
    return s;
}

bool all_positive(const Vec& v) {
    for (const auto& x : v)
        if (x <= 0) return false;
    return true;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"milnor",          "van_den_essen", "cs_theorem",  "bb_recursion",
                                                "curvette_choice", "permutation",   "noether",     "gsv_mu",
                                                "polar",           "positivity"};
    return names;
}

std::set<std::string> parse_checks(const std::string& s) {
    std::set<std::string> out;
    if (s == "all" || s.empty()) return out;
    if (s == "none") return {"none"};
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        bool known = false;
        for (const auto& n : check_names()) known = known || n == tok;
        if (!known) throw Error(ErrorCode::ParseError, "unknown check '" + tok + "'");
        out.insert(tok);
    }
    return out;
}

JobSpec parse_job(const Json& j) {
    JobSpec job;
    try {
        if (j.contains("name")) job.name = j.at("name").get<std::string>();
        const Json& f = j.at("one_form");
        job.form.P = poly_from_json(f.at("P"));
        job.form.Q = poly_from_json(f.at("Q"));
        if (j.contains("options")) {
            const Json& o = j.at("options");
            if (o.contains("max_blowups")) job.max_blowups = o.at("max_blowups").get<int>();
            if (o.contains("seed")) job.seed = o.at("seed").get<std::uint64_t>();
            if (o.contains("extra_curves")) job.curves = o.at("extra_curves").get<std::vector<std::string>>();
            if (o.contains("permutation") && !o.at("permutation").is_null())
                job.permutation = o.at("permutation").get<std::string>();
            if (o.contains("balanced_equation") && !o.at("balanced_equation").is_null())
                job.balanced_equation = o.at("balanced_equation").get<std::string>();
            if (o.contains("checks")) {
                std::string joined;
                for (const auto& c : o.at("checks")) joined += (joined.empty() ? "" : ",") + c.get<std::string>();
                job.checks = parse_checks(joined);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (job.form.P.zero() && job.form.Q.zero()) throw Error(ErrorCode::ParseError, "zero one-form");
    return job;
}

Json job_to_json(const JobSpec& job) {
    Json j;
    j["name"] = job.name;
    j["one_form"]["P"] = triples(job.form.P);
    j["one_form"]["Q"] = triples(job.form.Q);
    Json& o = j["options"];
    o["max_blowups"] = job.max_blowups;
    o["seed"] = job.seed;
    o["extra_curves"] = job.curves;
    o["permutation"] = job.permutation ? Json(*job.permutation) : Json(nullptr);
    o["balanced_equation"] = job.balanced_equation ? Json(*job.balanced_equation) : Json(nullptr);
    Json checks = Json::array();
    if (job.checks.empty())
        checks.push_back("all");
    else
        for (const auto& c : job.checks) checks.push_back(c);
    o["checks"] = checks;
    return j;
}

std::string dual_graph_dot(const FoliationData& d, const std::string& name) {
    const ResolutionTree& t = d.tree;
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n  node [shape=ellipse];\n";
    for (const auto& c : t.components) {
        os << "  E" << c.index << " [label=\"E" << c.index << "\\n" << c.self_intersection << " | l=" << c.recorded_discrepancy
           << (c.invariant ? "" : " | dicritical") << "\"" << (c.invariant ? "" : ", style=dashed") << "];\n";
    }
    for (const auto& [a, b] : t.adjacency) os << "  E" << a << " -- E" << b << ";\n";
    for (size_t i = 0; i < t.singularities.size(); ++i) {
        const auto& s = t.singularities[i];
        os << "  s" << i << " [shape=box, fontsize=10, label=\"";
        if (s.saddle_node())
            os << "SN k=" << s.k << (s.tangent ? " T" : "") << (s.corner ? " C" : "");
        else
            os << "tr2/det=" << s.bb_total.get_str();
        if (s.orbit_size() > 1) os << " x" << s.orbit_size();
        os << "\"];\n";
        for (const auto& h : s.location.hosts) os << "  E" << h.component << " -- s" << i << " [style=dotted];\n";
    }
    int k = 0;
    for (const auto& b : d.balanced.B.branches) {
        if (b.kind != AttachmentKind::Curvette) continue;
        os << "  c" << k << " [shape=plaintext, label=\"" << (b.coefficient > 0 ? "+" : "-") << "curvette\"];\n";
        os << "  E" << b.component << " -- c" << k << ";\n";
        ++k;
    }
    os << "}\n";
    return os.str();
}

RunResult run(const JobSpec& job) {
    RunResult res;
    Json& rep = res.report;
    rep["name"] = job.name;
    rep["form"] = {{"P", to_string(job.form.P)}, {"Q", to_string(job.form.Q)}};
    rep["seed"] = std::to_string(job.seed);
    rep["max_blowups"] = job.max_blowups;
    auto want = [&](const std::string& n) {
        if (job.checks.count("none")) return false;
        return job.checks.empty() || job.checks.count(n) > 0;
    };
    bool all_ok = true;
    Json checks = Json::object();
    auto verdict = [&](const std::string& n, bool ok, Json detail) {
        detail["ok"] = ok;
        checks[n] = detail;
        all_ok = all_ok && ok;
    };
    try {
        ResolutionTree tree = reduce_singularities(job.form, job.max_blowups);
        FoliationData d = analyze(tree);
        std::optional<int> mu_oracle;
        if (want("milnor") || want("van_den_essen")) mu_oracle = milnor_direct(job.form, job.seed);
        InvariantReport inv = invariant_report(d, want("milnor") ? mu_oracle : std::nullopt);

        rep["tree"] = tree_json(d);
        rep["matrices"] = {{"F", ex(d.F)}, {"A", ex(d.A)}};
        rep["vectors"] = {{"rho", ex(d.rho)}, {"S_B", ex(d.S_B)}, {"T_F", ex(d.T)}, {"C_F", ex(d.C)},
                          {"S_F", ex(d.S_F)}, {"tau_F", ex(d.tau.tau)}, {"ell", ex(inv.ell)}, {"nu_F", ex(inv.nu)}};
        rep["balanced_divisor"] = describe_divisor(d.balanced.B);
        rep["scalars"] = {{"milnor", ex(inv.milnor)}, {"bb", ex(inv.bb)}, {"transverse_excess_B", ex(d.excess_B)},
                          {"nu0", ex(Rational(d.nu0))}};
        rep["classification"] = {{"generalized_curve", inv.classification.generalized_curve},
                                 {"second_type", inv.classification.second_type},
                                 {"cnd", inv.classification.cnd}};
        const IndexIdentities& pi = inv.identities;
        rep["identities"] = {{"cs_B", ex(pi.cs)},
                             {"var_B", ex(pi.var)},
                             {"bb", ex(pi.bb)},
                             {"delta_B", ex(pi.delta)},
                             {"tau_norm2", ex(pi.tau_norm2)},
                             {"var_minus_cs", ex(pi.var_minus_cs)},
                             {"bb_minus_var", ex(pi.bb_minus_var)},
                             {"bb_minus_cs", ex(pi.bb_minus_cs)},
                             {"equalities", pi.equalities},
                             {"equivalence", pi.equivalence}};
        rep["mil_gap"] = {{"gap_B", ex(inv.gap.gap_B)},
                          {"gap_B_prime", ex(inv.gap.gap_Bprime)},
                          {"direct_B", ex(inv.gap.direct_B)},
                          {"direct_B_prime", ex(inv.gap.direct_Bprime)}};

        Json rows = Json::array();
        for (const auto& r : inv.indices) rows.push_back(row_json(r));

        if (want("milnor")) verdict("milnor", inv.milnor == Rational(*mu_oracle), {{"oracle", ex(Rational(*mu_oracle))}});
        if (want("van_den_essen")) {
            VanDenEssenResult v = van_den_essen_check(d.tree, *mu_oracle);
            verdict("van_den_essen", v.ok,
                    {{"sum_milnor", ex(Rational(v.sum_milnor))}, {"N_ell", ex(Rational(v.n_ell))}, {"oracle", ex(Rational(v.oracle))}});
        }
        if (want("cs_theorem")) {
            bool ok = true;
            Json per = Json::array();
            for (const auto& c : cs_index_theorem_check(d.tree)) {
                ok = ok && c.ok;
                per.push_back({{"component", c.component}, {"sum", ex(c.sum)}, {"self_intersection", ex(Rational(c.self_intersection))}});
            }
            verdict("cs_theorem", ok, {{"components", per}});
        }
        if (want("bb_recursion")) {
            BBRecursionResult b = bb_recursion_check(d.tree, inv.bb);
            verdict("bb_recursion", b.ok, {{"recursion", ex(b.recursion)}, {"closed", ex(b.closed)}});
        }
        if (want("positivity")) {
            Vec v = d.negAinv * d.S_B;
            verdict("positivity", all_positive(v), {{"neg_Ainv_S_B", ex(v)}});
        }
        std::vector<Rational> fingerprint = scalar_fingerprint(d, inv);
        if (want("curvette_choice")) {
            FoliationData d2 = analyze(tree, 1);
            InvariantReport inv2 = invariant_report(d2);
            verdict("curvette_choice", scalar_fingerprint(d2, inv2) == fingerprint && d2.S_B == d.S_B,
                    {{"balanced_divisor", describe_divisor(d2.balanced.B)}});
        }
        std::optional<Permutation> perm;
        if (job.permutation) {
            perm = parse_permutation(*job.permutation);
        } else if (want("permutation") && d.n > 1) {
            Permutation p;
            for (int i = 0; i < d.n; ++i) p.sigma.push_back((i + 1) % d.n);
            perm = p;
        }
        if (perm) {
            FoliationData e = reorder(d, *perm);
            InvariantReport inv2 = invariant_report(e, mu_oracle);
            Json sig = Json::array();
            for (int s : perm->sigma) sig.push_back(s + 1);
            Json block = {{"sigma", sig}, {"A", ex(e.A)}, {"F", ex(e.F)}, {"S_F", ex(e.S_F)}, {"ell", ex(inv2.ell)}};
            rep["permutation"] = block;
            if (want("permutation") || job.permutation)
                verdict("permutation", scalar_fingerprint(e, inv2) == fingerprint, {{"sigma", sig}});
        }

        // user curves
        std::vector<BiPoly> curves;
        for (const auto& s : job.curves) curves.push_back(parse_bipoly(s));
        Json gsv_checks = Json::array();
        bool gsv_ok = true;
        for (size_t i = 0; i < curves.size(); ++i) {
            const BiPoly& f = curves[i];
            UserCurve uc = attach_user_curve(tree, f, job.max_blowups);
            FoliationData de = analyze(uc.tree);
            discrepancy_vector(de);
            DivisorData C = divisor_data(de, uc.divisor);
            if (!C.invariant) {
                rows.push_back({{"divisor", job.curves[i]}, {"invariant", false}, {"S", ex(C.S)}, {"components", de.n}});
                continue;
            }
            IndexRow r = index_row(de, job.curves[i], C);
            Json rj = row_json(r);
            rj["invariant"] = true;
            rj["components"] = de.n;
            rows.push_back(rj);
            if (want("gsv_mu") && r.gsv) {
                try {
                    GsvMuResult g = gsv_via_mu_check(job.form, f, static_cast<int>(r.gsv->get_num().get_si()));
                    gsv_ok = gsv_ok && g.ok;
                    gsv_checks.push_back({{"curve", job.curves[i]},
                                          {"milnor_along", ex(Rational(g.mu_foliation_along))},
                                          {"curve_milnor", ex(Rational(g.mu_curve))},
                                          {"gsv", ex(*r.gsv)},
                                          {"ok", g.ok}});
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::UnsupportedBranch) throw;
                    gsv_checks.push_back({{"curve", job.curves[i]}, {"skipped", e.what()}});
                }
            }
        }
        rep["indices"] = rows;
        if (want("gsv_mu") && !curves.empty()) verdict("gsv_mu", gsv_ok, {{"curves", gsv_checks}});

        if (want("noether") && curves.size() >= 2) {
            bool ok = true;
            Json pairs = Json::array();
            for (size_t i = 0; i < curves.size(); ++i)
                for (size_t k = i + 1; k < curves.size(); ++k) {
                    NoetherResult nr;
                    try {
                        nr = noether_check(job.form, curves[i], curves[k], job.max_blowups, job.seed);
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::CommonComponent) throw;
                        pairs.push_back({{"C", job.curves[i]}, {"D", job.curves[k]}, {"skipped", e.what()}});
                        continue;
                    }
                    bool bound = nr.oracle >= curves[i].order() * curves[k].order();
                    ok = ok && nr.ok && bound;
                    pairs.push_back({{"C", job.curves[i]},
                                     {"D", job.curves[k]},
                                     {"oracle", ex(Rational(nr.oracle))},
                                     {"nu_pairing", ex(nr.nu_pairing)},
                                     {"matrix_pairing", ex(nr.matrix_pairing)}});
                }
            verdict("noether", ok, {{"pairs", pairs}});
        }

        if (want("polar")) {
            if (!d.balanced.Binf.branches.empty()) {
                checks["polar"] = {{"skipped", "balanced divisor has a polar part"}};
            } else if (!job.balanced_equation) {
                checks["polar"] = {{"skipped", "no equation for the balanced divisor"}};
            } else {
                BiPoly fB = parse_bipoly(*job.balanced_equation);
                int delta = polar_oracle(job.form, fB, fB, job.seed);
                verdict("polar", Rational(delta) == pi.delta,
                        {{"oracle", ex(Rational(delta))}, {"formula", ex(pi.delta)}, {"genericity", "two agreeing random polars"}});
            }
        }
        rep["checks"] = checks;
        rep["status"] = all_ok ? "ok" : "mismatch";
        res.exit_code = all_ok ? ExitOk : ExitMismatch;
        res.dot = dual_graph_dot(d, job.name);
    } catch (const Error& e) {
        rep["checks"] = checks;
        rep["status"] = is_unsupported(e.code()) ? "unsupported" : "mismatch";
        rep["error"] = e.what();
        res.exit_code = is_unsupported(e.code()) ? ExitUnsupported : ExitMismatch;
    }
    return res;
}

} // namespace fol
