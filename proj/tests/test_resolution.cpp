#include "doctest.h"

#include "foliation/resolution.hpp"
#include "foliation/series.hpp"

using namespace fol;

namespace {

const char* const kCndP = "(x*y+x^2*y-x^2-y^2)*y";
const char* const kCndQ = "-(x-1)*x^3";

int count_kind(const ResolutionTree& t, bool saddle_node) {
    int n = 0;
    for (const auto& s : t.singularities) n += s.saddle_node() == saddle_node ? s.orbit_size() : 0;
    return n;
}

} // namespace

TEST_CASE("blow-up of the cnd germ in the first chart") {
    BlowUpResult r = blow_up(make_form(kCndP, kCndQ), Chart::XT);
    CHECK(r.stripped_power == 3);
    CHECK(r.invariant_flag);
    // -t(t-1)(t-x) dx - (x-1)x dt
    CHECK(r.pulled_back.P == parse_bipoly("-y*(y-1)*(y-x)"));
    CHECK(r.pulled_back.Q == parse_bipoly("-(x-1)*x"));
}

TEST_CASE("blow-up of the radial form is dicritical") {
    BlowUpResult r = blow_up(make_form("-y", "x"), Chart::XT);
    CHECK(r.stripped_power == 2);
    CHECK(!r.invariant_flag);
    CHECK(r.pulled_back.P.zero());
    CHECK(r.pulled_back.Q == parse_bipoly("1"));
}

TEST_CASE("blow-up of the cusp differential") {
    BlowUpResult r = blow_up(make_form("3*x^2", "2*y"), Chart::XT);
    CHECK(r.stripped_power == 1);
    CHECK(r.invariant_flag);
    CHECK(r.pulled_back.P == parse_bipoly("3*x+2*y^2"));
    CHECK(r.pulled_back.Q == parse_bipoly("2*x*y"));
    BlowUpResult s = blow_up(make_form("3*x^2", "2*y"), Chart::SY);
    CHECK(s.stripped_power == 1);
    CHECK_THROWS_AS(blow_up(make_form("1", "x"), Chart::XT), Error);
}

TEST_CASE("pull-back commutes with the chart substitution") {
    // x^a y^b dx in chart (x, tx): x^(a+b) t^b dx
    OneForm w = make_form("x^2*y", "x*y^2");
    BlowUpResult r = blow_up(w, Chart::XT);
    // P1 = P(x,tx) + t Q(x,tx), Q1 = x Q(x,tx), then strip x^3
    CHECK(r.pulled_back.P == parse_bipoly("y+y^3"));
    CHECK(r.pulled_back.Q == parse_bipoly("x*y^2"));
    CHECK(r.stripped_power == 3);
}

TEST_CASE("local classification") {
    CHECK(classify_singularity(make_form("y^2", "x*(y-1)")).kind == LocalKind::SaddleNode);
    CHECK(classify_singularity(make_form("y", "x")).kind == LocalKind::NonDegenerate);
    CHECK(classify_singularity(make_form("-2*y", "x")).kind == LocalKind::NonReduced);
    CHECK(classify_singularity(make_form("y^2", "x^2")).kind == LocalKind::NonReduced);
    CHECK(classify_singularity(make_form("x^2", "y")).kind == LocalKind::NonReduced);  // nilpotent
    CHECK_THROWS_AS(classify_singularity(make_form("1", "x")), Error);
}

TEST_CASE("saddle-node profiles") {
    std::vector<Direction<Rational>> divisor_x{{Rational(0), Rational(1)}};  // {x = 0}
    auto t = saddle_node_profile(make_form("y^2", "x*(y-1)"), divisor_x);
    CHECK(t.k == 2);
    CHECK(t.tangent);
    CHECK(!t.corner);
    CHECK(t.weak.parallel(Direction<Rational>{Rational(0), Rational(1)}));

    auto n = saddle_node_profile(make_form("-y*(1+x)", "x^2"), divisor_x);
    CHECK(n.k == 2);
    CHECK(n.lambda == 1);
    CHECK(!n.tangent);
    CHECK(n.strong.parallel(Direction<Rational>{Rational(0), Rational(1)}));
    CHECK(n.weak.parallel(Direction<Rational>{Rational(1), Rational(0)}));

    auto m = saddle_node_profile(make_form("-y*(1-2*x^3)", "x^4"), {});
    CHECK(m.k == 4);
    CHECK(m.lambda == -2);
    CHECK_THROWS_AS(saddle_node_profile(make_form("y", "x"), {}), Error);
}

TEST_CASE("weak separatrix jets") {
    OneForm nf = make_form("-y*(1+x)", "x^2");
    auto jet = weak_separatrix_jet(saddle_node_adapted(nf), 2, 8);
    CHECK(jet.order() == -1);

    // x^2 dy - (y + x^2) dx: the weak branch is a divergent Euler-type series
    OneForm e = make_form("-(y+x^2)", "x^2");
    OneForm a = saddle_node_adapted(e);
    auto phi = weak_separatrix_jet(a, 2, 10);
    REQUIRE(phi.precision() >= 10);
    SeriesT<Rational> X = SeriesT<Rational>::variable(phi.precision());
    SeriesT<Rational> residual = substitute(a.P, X, phi) + substitute(a.Q, X, phi) * phi.derivative();
    for (int i = 0; i < 9; ++i) CHECK(residual[i] == 0);
    CHECK(phi.order() == 2);
}

TEST_CASE("Camacho-Sad index along smooth branches") {
    Branch<Rational> yzero{Branch<Rational>::Type::YZero, {}};
    Branch<Rational> xzero{Branch<Rational>::Type::XZero, {}};
    for (long p : {-3L, -1L, 2L}) {
        Rational lambda(p, 2);
        lambda.canonicalize();
        // x dy - lambda y dx
        OneForm w{BiPoly::constant(-lambda) * BiPoly::y(), BiPoly::x()};
        CHECK(cs_index_local(w, yzero) == lambda);
        CHECK(cs_index_local(w, xzero) == 1 / lambda);
    }
    OneForm nf = make_form("-y*(1+3*x)", "x^2");
    CHECK(cs_index_local(nf, xzero) == 0);
    CHECK(saddle_node_lambda(nf, 2) == 3);
    OneForm nf3 = make_form("-y*(1-1/2*x^2)", "x^3");
    CHECK(saddle_node_lambda(nf3, 3) == make_rational(-1, 2));
}

TEST_CASE("reduction of the cnd germ") {
    ResolutionTree t = reduce_singularities(make_form(kCndP, kCndQ));
    REQUIRE(t.n() == 2);
    CHECK(t.components[0].invariant);
    CHECK(!t.components[1].invariant);
    CHECK(t.components[0].recorded_discrepancy == 3);
    CHECK(t.components[1].recorded_discrepancy == 2);
    CHECK(t.adjacent(1, 2));
    int tangent_sn = 0;
    for (const auto& s : t.singularities)
        if (s.saddle_node()) {
            CHECK(s.non_corner());
            tangent_sn += s.tangent;
        }
    CHECK(tangent_sn == 1);
    CHECK(count_kind(t, true) == 1);
    CHECK(count_kind(t, false) >= 1);
}

TEST_CASE("reduction of the corner saddle-node germ") {
    ResolutionTree t = reduce_singularities(make_form("y", "-(2*x+y^2)"));
    REQUIRE(t.n() == 2);
    CHECK(t.components[0].invariant);
    CHECK(t.components[1].invariant);
    CHECK(count_kind(t, false) == 1);
    REQUIRE(count_kind(t, true) == 1);
    for (const auto& s : t.singularities)
        if (s.saddle_node()) {
            CHECK(s.corner);
            CHECK(s.tangent);
            CHECK(!s.non_corner());
        }
    CHECK(t.components[0].self_intersection == -2);
    CHECK(t.components[1].self_intersection == -1);
}

TEST_CASE("reduction of the cusp differential") {
    ResolutionTree t = reduce_singularities(make_form("3*x^2", "2*y"));
    REQUIRE(t.n() == 3);
    for (const auto& c : t.components) CHECK(c.invariant);
    CHECK(count_kind(t, true) == 0);
    CHECK(t.components[0].self_intersection == -3);
    CHECK(t.components[1].self_intersection == -2);
    CHECK(t.components[2].self_intersection == -1);
    CHECK(t.adjacent(1, 3));
    CHECK(t.adjacent(2, 3));
    CHECK(!t.adjacent(1, 2));
    CHECK(t.valence(3) == 2);
}

TEST_CASE("tangent saddle-node after one blow-up") {
    ResolutionTree t = reduce_singularities(make_form("y", "y-x"));
    REQUIRE(t.n() == 1);
    REQUIRE(count_kind(t, true) == 1);
    for (const auto& s : t.singularities)
        if (s.saddle_node()) {
            CHECK(s.k == 2);
            CHECK(s.tangent);
            CHECK(!s.corner);
            CHECK(s.milnor == 2);
        }
}

TEST_CASE("blowing up a tangent saddle-node gives a saddle and a corner saddle-node") {
    // over-resolution of the tangent saddle-node t^2 dx + x(t-1) dt
    OneForm local = make_form("y^2", "x*(y-1)");
    BlowUpResult r = blow_up(local, Chart::SY);  // the weak direction is x = 0
    OneForm w = r.pulled_back;
    CHECK(classify_singularity(w).kind == LocalKind::SaddleNode);
    std::vector<Direction<Rational>> both{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    auto p = saddle_node_profile(w, both);
    CHECK(p.k == 2);
    CHECK(p.corner);
    BlowUpResult s = blow_up(local, Chart::XT);
    CHECK(classify_singularity(s.pulled_back).kind == LocalKind::NonDegenerate);
}

TEST_CASE("reduction is deterministic and terminates on every simple input") {
    OneForm w = make_form(kCndP, kCndQ);
    ResolutionTree a = reduce_singularities(w), b = reduce_singularities(w);
    REQUIRE(a.n() == b.n());
    REQUIRE(a.singularities.size() == b.singularities.size());
    for (size_t i = 0; i < a.singularities.size(); ++i) {
        CHECK(a.singularities[i].location.describe() == b.singularities[i].location.describe());
        CHECK(a.singularities[i].trace == b.singularities[i].trace);
    }
    CHECK_THROWS_AS(reduce_singularities(make_form("y^2-x^7", "x^3"), 1), Error);
    CHECK_THROWS_AS(reduce_singularities(make_form("1", "x")), Error);
}

TEST_CASE("radial foliation has one dicritical component") {
    ResolutionTree t = reduce_singularities(make_form("-y", "x"));
    REQUIRE(t.n() == 1);
    CHECK(!t.components[0].invariant);
    CHECK(t.singularities.empty());
    CHECK(t.components[0].recorded_discrepancy == 2);
}
