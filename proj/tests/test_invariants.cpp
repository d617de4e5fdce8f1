#include "doctest.h"

#include "foliation/invariants.hpp"
#include "foliation/oracles.hpp"

using namespace fol;

namespace {

FoliationData cnd() { return analyze(make_form("(x*y+x^2*y-x^2-y^2)*y", "-(x-1)*x^3")); }
FoliationData corner_sn() { return analyze(make_form("y", "-(2*x+y^2)")); }
FoliationData tangent_sn() { return analyze(make_form("y", "y-x")); }
FoliationData cusp() { return analyze(make_form("3*x^2", "2*y")); }

// multiplicity of the foliation at the center of each component, read off the blow-up record
Vec center_multiplicities(const FoliationData& d) {
    Vec v;
    for (const auto& c : d.tree.components) v.emplace_back(d.tree.points.at(c.center).multiplicity);
    return v;
}

DivisorData curve_on(FoliationData& d, const std::string& f) {
    UserCurve uc = attach_user_curve(d.tree, parse_bipoly(f));
    d = analyze(uc.tree);
    return divisor_data(d, uc.divisor);
}

} // namespace

TEST_CASE("discrepancies") {
    FoliationData d = cnd();
    CHECK(discrepancy_vector(d) == make_vec({3, 2}));
    CHECK(discrepancy_vector(d.F, d.S_B, d.iota) == make_vec({2, 2}));
    CHECK(discrepancy_vector(cusp()) == make_vec({1, 1, 2}));
    CHECK(discrepancy_vector(analyze(make_form("-y", "x"))) == make_vec({2}));
}

TEST_CASE("multiplicity vectors agree with the blow-up record") {
    for (const auto& d : {cnd(), corner_sn(), tangent_sn(), cusp()}) {
        Vec nu = multiplicity_vector(d);
        CHECK(nu == center_multiplicities(d));
        CHECK(nu[0] == d.nu0);
    }
    CHECK(multiplicity_vector(cnd()) == make_vec({3, 1}));
    CHECK(multiplicity_vector(tangent_sn()) == make_vec({1}));
    CHECK(multiplicity_vector(cusp())[0] == 1);
}

TEST_CASE("Milnor numbers against resultants") {
    CHECK(milnor_number(corner_sn(), 1) == 1);
    CHECK(milnor_number(tangent_sn(), 1) == 1);
    CHECK(milnor_number(cusp(), 2) == 2);
    CHECK(milnor_number(cnd()) == milnor_direct(cnd().tree.original_form));
    CHECK_THROWS_AS(milnor_number(cusp(), 3), Error);
    FoliationData d = corner_sn();
    Vec zero = d.negAinv * d.S_F - (d.u + d.Finv * d.u);
    CHECK(zero == make_vec({0, 0}));
}

TEST_CASE("indices on the corner saddle-node germ") {
    FoliationData d = corner_sn();
    DivisorData B = divisor_data(d, d.balanced.B);
    CHECK(B.S == make_vec({1, 0}));
    CHECK(milnor_along(d.A, d.F, d.S_F, B) == 1);
    CHECK(gsv(d.A, d.S_F, B) == 1);
    CHECK(variation(d.A, d.S_F, d.iota, B) == cs(d.A, B) + 1);
    CHECK(polar_excess(d.A, d.T, B) == 1);
}

TEST_CASE("indices on the tangent saddle-node germ") {
    FoliationData d = tangent_sn();
    DivisorData B = divisor_data(d, d.balanced.B);
    CHECK(d.S_B == make_vec({1}));
    CHECK(d.T == make_vec({1}));
    CHECK(d.S_F == make_vec({2}));
    CHECK(gsv(d.A, d.S_F, B) == 1);
    MilGap g = milnor_gap(d, milnor_number(d));
    CHECK(g.gap_B == 0);
    CHECK(g.direct_B == 0);
}

TEST_CASE("indices on the cusp") {
    FoliationData d = cusp();
    DivisorData B = divisor_data(d, d.balanced.B);
    CHECK(B.S == make_vec({0, 0, 1}));
    CHECK(gsv(d.A, d.S_F, B) == 0);
    CHECK(cs(d.A, B) == B.cs_local + 6);
    CHECK(variation(d.A, d.S_F, d.iota, B) == cs(d.A, B));
    CHECK(polar_excess(d.A, d.T, B) == 0);
    BBRecursionResult r = bb_recursion_check(d.tree, baum_bott(d.A, d.S_F, d.iota, d.local_bb));
    CHECK(r.ok);
}

TEST_CASE("Baum-Bott of the linear saddle x dy + y dx") {
    FoliationData d = analyze(make_form("y", "x"));
    // trace^2 / det of the linear part
    CHECK(baum_bott(d.A, d.S_F, d.iota, d.local_bb) == 0);
    CHECK(d.local_bb == -1);
}

TEST_CASE("Camacho-Sad of two axes by hand residues") {
    // x dy - (2/3) y dx: 2/3 + 3/2 + 2
    FoliationData d = analyze(make_form("-2*y", "3*x"));
    DivisorData C = curve_on(d, "x*y");
    CHECK(cs(d.A, C) == make_rational(25, 6));
    // x dy + (2/3) y dx: -2/3 - 3/2 + 2
    FoliationData e = analyze(make_form("2*y", "3*x"));
    DivisorData D = curve_on(e, "x*y");
    CHECK(cs(e.A, D) == make_rational(-1, 6));
}

TEST_CASE("saddle-node normal form separatrices") {
    for (int k : {2, 3, 4}) {
        std::string P = "-y*(1+x^" + std::to_string(k - 1) + ")";
        std::string Q = "x^" + std::to_string(k);
        FoliationData d = analyze(make_form(P, Q));
        FoliationData w = d, s = d;
        DivisorData weak = curve_on(w, "y");
        DivisorData strong = curve_on(s, "x");
        CHECK(milnor_along(w.A, w.F, w.S_F, weak) == k);
        CHECK(milnor_along(s.A, s.F, s.S_F, strong) == 1);
        CHECK(gsv(w.A, w.S_F, weak) == k);
        CHECK(gsv(s.A, s.S_F, strong) == 1);
        CHECK(cs(s.A, strong) == 0);
        CHECK(cs(w.A, weak) == 1);
        CHECK(variation(w.A, w.S_F, w.iota, weak) == 1 + k);
    }
}

TEST_CASE("GSV is additive up to twice the intersection") {
    // GSV(C + D) = GSV(C) + GSV(D) - 2 i(C, D) for invariant curves without common components
    FoliationData d = analyze(make_form("y", "y-x"));
    FoliationData a = d;
    DivisorData C = curve_on(a, "y");
    CHECK(gsv(a.A, a.S_F, C) == 1);
    FoliationData h = analyze(make_form("(2*x+y)*y", "x*(x+2*y)"));  // d(xy(x+y))
    FoliationData h1 = h, h2 = h, h12 = h;
    DivisorData X = curve_on(h1, "x");
    DivisorData Y = curve_on(h2, "y");
    DivisorData XY = curve_on(h12, "x*y");
    Rational gx = gsv(h1.A, h1.S_F, X), gy = gsv(h2.A, h2.S_F, Y), gxy = gsv(h12.A, h12.S_F, XY);
    CHECK(gxy == gx + gy - 2);
}

TEST_CASE("attaching user curves") {
    FoliationData c = cusp();
    UserCurve u = attach_user_curve(c.tree, parse_bipoly("y^2+x^3"));
    CHECK(u.tree.n() == 3);
    CHECK(u.divisor.incidence(3) == make_vec({0, 0, 1}));

    FoliationData d = cnd();
    UserCurve v = attach_user_curve(d.tree, parse_bipoly("x*y*(y-x)"));
    CHECK(v.tree.n() == 2);
    CHECK(v.divisor.incidence(2) == make_vec({2, 1}));

    FoliationData r = analyze(make_form("-y", "x"));
    UserCurve w = attach_user_curve(r.tree, parse_bipoly("x"));
    CHECK(w.divisor.incidence(1) == make_vec({1}));
    DivisorData W = divisor_data(r.tree, w.divisor);
    CHECK(W.invariant);  // every line is a leaf of the radial foliation
    CHECK(cs(r.A, W) == 1);
    UserCurve p = attach_user_curve(r.tree, parse_bipoly("y-x^2"));
    FoliationData rp = analyze(p.tree);
    DivisorData Pd = divisor_data(rp, p.divisor);
    CHECK(!Pd.invariant);
    CHECK_THROWS_AS(cs(rp.A, Pd), Error);
}

TEST_CASE("non-reduced divisors refuse GSV") {
    FoliationData d = corner_sn();
    DivisorData B = divisor_data(d, d.balanced.B + d.balanced.B);
    CHECK(!B.reduced);
    CHECK_THROWS_AS(gsv(d.A, d.S_F, B), Error);
}

TEST_CASE("classification") {
    FoliationClass a = classify_foliation(cnd());
    CHECK(a.cnd);
    CHECK(!a.second_type);
    CHECK(!a.generalized_curve);
    CHECK(!classify_foliation(corner_sn()).cnd);
    FoliationClass c = classify_foliation(cusp());
    CHECK(c.cnd);
    CHECK(c.second_type);
    CHECK(c.generalized_curve);
}

TEST_CASE("Var, CS and BB identities on the worked germs") {
    IndexIdentities c = index_identities(cusp());
    CHECK(c.var_minus_cs == 0);
    CHECK(c.bb_minus_var == 0);
    CHECK(c.bb_minus_cs == 0);
    CHECK(c.equalities);
    CHECK(c.equivalence);

    // tau = (F^{-1})^T T = (1, 0), so the norm is 1
    IndexIdentities a = index_identities(cnd());
    CHECK(a.delta == 3);
    CHECK(a.tau_norm2 == 1);
    CHECK(a.var_minus_cs == 3);
    CHECK(a.bb_minus_var == 4);
    CHECK(a.bb_minus_cs == 7);
    CHECK(a.bb == 16);

    IndexIdentities b = index_identities(corner_sn());
    CHECK(b.var_minus_cs == 1);
    CHECK(b.bb_minus_var == 3);
    CHECK(b.bb_minus_cs == 4);
    CHECK(b.bb == make_rational(9, 2));
}

TEST_CASE("gaps between Milnor numbers") {
    MilGap c = milnor_gap(corner_sn(), 1);
    CHECK(c.gap_B == 0);
    CHECK(c.gap_Bprime == 0);
    CHECK(c.direct_B == 0);
    MilGap k = milnor_gap(cusp(), 2);
    CHECK(k.gap_B == 0);
    CHECK(k.gap_Bprime == 0);
}

TEST_CASE("reordering components keeps every scalar") {
    FoliationData d = cusp();
    FoliationData r = reorder(d, parse_permutation("2,3,1"));
    CHECK(r.A == Matrix::from_rows({{-2, 1, 0}, {1, -1, 1}, {0, 1, -3}}));
    CHECK(r.origin == 2);
    InvariantReport a = invariant_report(d), b = invariant_report(r);
    CHECK(a.milnor == b.milnor);
    CHECK(a.bb == b.bb);
    CHECK(a.indices[0].cs == b.indices[0].cs);
    CHECK(a.indices[0].var == b.indices[0].var);
    CHECK(b.indices[0].S == make_vec({0, 1, 0}));
    CHECK_THROWS_AS(reorder(d, parse_permutation("1,2")), Error);
}
