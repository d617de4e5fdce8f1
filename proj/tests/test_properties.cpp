#include "doctest.h"

#include "corpus.hpp"
#include "foliation/cli.hpp"
#include "foliation/oracles.hpp"

#include <random>

using namespace fol;

namespace {

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("corpus size and composition") {
    const auto& g = corpus::germs();
    CHECK(g.size() >= 30);
    int dicritical = 0;
    for (const auto& x : g) dicritical += x.dicritical;
    CHECK(dicritical >= 3);
}

TEST_CASE("resolution records are consistent on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        ResolutionTree t = reduce_singularities(g.form);
        for (const auto& c : t.components) {
            int m = t.points.at(c.center).multiplicity;
            CHECK(c.recorded_discrepancy == m + 1 - (c.invariant ? 1 : 0));
        }
        for (const auto& s : t.singularities) {
            CHECK((s.kind == ReducedKind::SaddleNode ? s.milnor == s.k : s.milnor == 1));
            if (s.corner) CHECK(s.tangent);
            CHECK(s.location.hosts.size() <= 2);
            for (const auto& h : s.location.hosts) CHECK(t.components.at(h.component - 1).invariant);
        }
        CHECK(t.components.size() >= 1);
        for (size_t i = 0; i < t.components.size(); ++i) CHECK(t.components[i].index == static_cast<int>(i) + 1);
        CHECK(g.dicritical == [&] {
            for (const auto& c : t.components)
                if (!c.invariant) return true;
            return false;
        }());
    }
}

TEST_CASE("matrix identities on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        FoliationData d = analyze(g.form);
        CHECK(d.A == -(d.F.transpose() * d.F));
        for (int i = 0; i < d.n; ++i) {
            CHECK(d.Finv(i, 0) > 0);
            CHECK(d.negAinv(i, i) > 0);
            CHECK(d.iota[i] + d.delta[i] == 1);
            for (int j = 0; j < d.n; ++j) {
                CHECK(d.Finv(i, j) >= 0);
                CHECK(d.negAinv(i, j) >= 0);
            }
        }
        Vec m = d.negAinv * d.S_B;
        for (const auto& x : m) CHECK(x > 0);
        Rational pairing = dot(m, d.T);
        CHECK(pairing >= 0);
        CHECK((pairing == 0) == is_zero_vec(d.T));
        for (int i = 0; i < d.n; ++i) {
            CHECK(d.C[i] >= 0);
            CHECK(d.C[i] <= d.T[i]);
            if (d.delta[i] == 1) CHECK(d.T[i] == 0);
        }
    }
}

TEST_CASE("discrepancy and multiplicity vectors on the corpus") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        FoliationData d = analyze(g.form);
        Vec ell = discrepancy_vector(d);
        CHECK(ell == d.ell_recorded);
        Vec nu = multiplicity_vector(d);
        CHECK(ell == nu + d.u - d.iota);
        FoliationClass c = classify_foliation(d);
        bool formula_with_B = discrepancy_vector(d.F, d.S_B, d.iota) == ell;
        CHECK(c.second_type == is_zero_vec(d.T));
        CHECK(c.second_type == formula_with_B);
        CHECK(c.cnd == is_zero_vec(d.C));
    }
}

TEST_CASE("Milnor numbers are seed independent") {
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        int a = milnor_direct(g.form, 0);
        CHECK(a == milnor_direct(g.form, 11));
        CHECK(a == milnor_direct(g.form, 12345));
        CHECK(milnor_number(analyze(g.form), a) == a);
    }
}

TEST_CASE("intersection multiplicity is additive over branches") {
    const char* f[] = {"y^2+x^3", "y-x^2", "x", "y^2-2*x^3", "y+x"};
    for (const char* a : f)
        for (const char* b : f)
            for (const char* c : f) {
                std::string sa(a), sb(b), sc(c);
                if (sa == sb || sa == sc) continue;
                BiPoly F = parse_bipoly(a), G = parse_bipoly(b), H = parse_bipoly(c);
                CHECK(intersection_multiplicity(F, G * H) == intersection_multiplicity(F, G) + intersection_multiplicity(F, H));
            }
}

TEST_CASE("Milnor number along a union of branches") {
    // mu(F, C1 + C2) = mu(F, C1) + mu(F, C2) - 1 for the separatrices of hamiltonian germs
    for (const char* H : {"x*y*(x+y)", "x*(y^2-x^3)", "y*(y-x^2)*(y-2*x^2)"}) {
        CAPTURE(H);
        BiPoly h = parse_bipoly(H);
        OneForm w{h.dx(), h.dy()};
        FoliationData base = analyze(w);
        std::vector<std::string> parts;
        if (std::string(H) == "x*y*(x+y)") parts = {"x", "y*(x+y)"};
        else if (std::string(H) == "x*(y^2-x^3)") parts = {"x", "y^2-x^3"};
        else parts = {"y*(y-x^2)", "y-2*x^2"};
        auto mu = [&](const std::string& f) {
            UserCurve uc = attach_user_curve(base.tree, parse_bipoly(f));
            FoliationData d = analyze(uc.tree);
            return milnor_along(d.A, d.F, d.S_F, divisor_data(d, uc.divisor));
        };
        CHECK(mu(H) == mu(parts[0]) + mu(parts[1]) - 1);
    }
}

TEST_CASE("random reorderings keep every scalar") {
    std::mt19937_64 rng(2024);
    for (const auto& g : corpus::germs()) {
        CAPTURE(g.name);
        FoliationData d = analyze(g.form);
        InvariantReport r = invariant_report(d);
        for (int rep = 0; rep < 3; ++rep) {
            Permutation p;
            for (int i = 0; i < d.n; ++i) p.sigma.push_back(i);
            std::shuffle(p.sigma.begin(), p.sigma.end(), rng);
            FoliationData e = reorder(d, p);
            InvariantReport s = invariant_report(e);
            CHECK(s.milnor == r.milnor);
            CHECK(s.bb == r.bb);
            CHECK(s.identities.cs == r.identities.cs);
            CHECK(s.identities.var == r.identities.var);
            CHECK(s.identities.delta == r.identities.delta);
            CHECK(s.identities.tau_norm2 == r.identities.tau_norm2);
            CHECK(s.indices[0].mu == r.indices[0].mu);
        }
    }
}

TEST_CASE("reports are reproducible from serialized jobs") {
    for (size_t i = 0; i < corpus::germs().size(); i += 5) {
        const auto& g = corpus::germs()[i];
        CAPTURE(g.name);
        JobSpec job;
        job.name = g.name;
        job.form = g.form;
        job.seed = 7;
        job.balanced_equation = g.balanced;
        RunResult a = run(job);
        RunResult b = run(parse_job(Json::parse(job_to_json(job).dump())));
        CHECK(a.report.dump() == b.report.dump());
        CHECK(a.exit_code == ExitOk);
    }
}
