#include "doctest.h"

#include "foliation/algebra.hpp"

using namespace fol;

TEST_CASE("rationals stay reduced and print as num/den") {
    Rational a = parse_rational("6/-4");
    CHECK(to_exact(a) == "-3/2");
    CHECK(to_exact(Rational(5)) == "5/1");
    CHECK(to_exact(parse_rational("0/7")) == "0/1");
    Rational b = make_rational(1, 3) + make_rational(1, 6);
    CHECK(b == make_rational(1, 2));
    CHECK(b.get_den() == 2);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("rational addition agrees computed two ways") {
    for (long p = -5; p <= 5; ++p)
        for (long q = 1; q <= 6; ++q) {
            Rational x = make_rational(p, q), y = make_rational(q, p == 0 ? 7 : p);
            Rational direct = x + y;
            Rational cross(x.get_num() * y.get_den() + y.get_num() * x.get_den(), x.get_den() * y.get_den());
            cross.canonicalize();
            CHECK(direct == cross);
        }
}

TEST_CASE("univariate factorization over the rationals") {
    UPoly p(std::vector<Rational>{-2, 0, 1});  // t^2 - 2
    CHECK(is_irreducible(p));
    UPoly q(std::vector<Rational>{0, -1, 0, 1});  // t^3 - t
    auto f = factor_rational(q);
    REQUIRE(f.size() == 3);
    CHECK(f[0].factor == UPoly(std::vector<Rational>{1, 1}));
    CHECK(f[2].factor == UPoly(std::vector<Rational>{-1, 1}));
    // (t^2 + 1)^2 (t - 1/2)
    UPoly r = UPoly(std::vector<Rational>{1, 0, 1}) * UPoly(std::vector<Rational>{1, 0, 1}) *
              UPoly(std::vector<Rational>{make_rational(-1, 2), 1});
    auto g = factor_rational(r);
    REQUIRE(g.size() == 2);
    CHECK(g[0].factor.degree() == 1);
    CHECK(g[1].factor == UPoly(std::vector<Rational>{1, 0, 1}));
    CHECK(g[1].multiplicity == 2);
    // product of two irreducible quadratics needs the degree-4 split
    UPoly s = UPoly(std::vector<Rational>{1, 0, 1}) * UPoly(std::vector<Rational>{-3, 0, 1});
    auto h = factor_rational(s);
    CHECK(h.size() == 2);
}

TEST_CASE("quotient ring arithmetic and traces") {
    auto mod = std::make_shared<const UPoly>(std::vector<Rational>{1, 0, 1});  // i^2 = -1
    AlgNum i = AlgNum::generator(mod);
    CHECK(i * i == AlgNum(-1L));
    CHECK(i.trace() == 0);
    CHECK((i * i).trace() == -2);
    AlgNum z = AlgNum(2L) + i;
    CHECK(z * (AlgNum(1L) / z) == AlgNum(1L));
    CHECK(field_trace(AlgNum(3L), 2) == 6);
    CHECK_THROWS_AS(AlgNum(1L) / AlgNum(mod, UPoly()), Error);
}

TEST_CASE("bivariate parsing and chart substitutions") {
    BiPoly p = parse_bipoly("(x*y+x^2*y-x^2-y^2)*y");
    CHECK(p == parse_bipoly("x*y^2 + x^2*y^2 - x^2*y - y^3"));
    CHECK(parse_bipoly("2x y - 1/2 y^2") == parse_bipoly("2*x*y-(1/2)*y^2"));
    CHECK(parse_bipoly("(x+1)^2").translate(Rational(-1), Rational(0)) == parse_bipoly("x^2"));
    CHECK(parse_bipoly("x^2+y").chart_xt() == parse_bipoly("x^2+x*y"));
    CHECK(parse_bipoly("x^2+y").chart_sy() == parse_bipoly("x^2*y^2+y"));
    CHECK(parse_bipoly("x^3+y^2").linear_subst(1, 1, 0, 1) == parse_bipoly("(x+y)^3+y^2"));
    CHECK_THROWS_AS(parse_bipoly("x^"), Error);
    CHECK_THROWS_AS(parse_bipoly("x/y"), Error);
    CHECK(parse_bipoly(to_string(parse_bipoly("y - x^2"))) == parse_bipoly("y - x^2"));
}

TEST_CASE("vanishing order") {
    CHECK(vanishing_order(parse_bipoly("y^2+x^3")) == 2);
    CHECK(vanishing_order(parse_bipoly("x")) == 1);
    CHECK(vanishing_order(parse_bipoly("(x*y+x^2*y-x^2-y^2)*y")) == 3);
    CHECK_THROWS_AS(vanishing_order(BiPoly()), Error);
}

TEST_CASE("tangent cone directions") {
    auto c = tangent_cone_roots(parse_bipoly("y^2+x^3"));
    REQUIRE(c.size() == 1);
    CHECK(!c[0].at_infinity);
    CHECK(c[0].orbit.rational_value() == 0);
    CHECK(c[0].multiplicity == 2);

    auto d = tangent_cone_roots(parse_bipoly("x*y"));
    REQUIRE(d.size() == 2);
    int infinite = 0;
    for (const auto& e : d) infinite += e.at_infinity;
    CHECK(infinite == 1);

    auto o = tangent_cone_roots(parse_bipoly("y^2+x^2"));
    REQUIRE(o.size() == 1);
    CHECK(o[0].orbit.size() == 2);
    CHECK(o[0].orbit.minimal_polynomial == UPoly(std::vector<Rational>{1, 0, 1}));
}

TEST_CASE("tangent cone multiplicities add up to the order") {
    for (const char* s : {"x*y*(x-y)", "y^2*(y-x)^3+x^7", "x^3+x*y^2", "(x^2+y^2)*(y-2*x)", "y^4-x^2*y^2"}) {
        BiPoly p = parse_bipoly(s);
        int total = 0;
        for (const auto& d : tangent_cone_roots(p)) total += d.multiplicity * (d.at_infinity ? 1 : d.orbit.size());
        CHECK(total == vanishing_order(p));
    }
}

TEST_CASE("resonance ratio test") {
    CHECK(!resonance_ratio_test(Rational(0), Rational(-1)));
    auto r = resonance_ratio_test(Rational(3), Rational(2));
    REQUIRE(r);
    CHECK((*r == 2 || *r == make_rational(1, 2)));
    CHECK(!resonance_ratio_test(Rational(1), Rational(-6)));
    CHECK(!resonance_ratio_test(Rational(1), Rational(1)));  // complex eigenvalues
    CHECK(resonance_ratio_test(Rational(2), Rational(1)));   // equal eigenvalues
    CHECK_THROWS_AS(resonance_ratio_test(Rational(1), Rational(0)), Error);
}

TEST_CASE("resonance verdict is scale invariant") {
    for (long t = -4; t <= 4; ++t)
        for (long d = -4; d <= 4; ++d) {
            if (d == 0) continue;
            for (Rational c : {Rational(2), make_rational(-1, 3), Rational(5)}) {
                auto a = resonance_ratio_test(Rational(t), Rational(d));
                auto b = resonance_ratio_test(c * t, c * c * d);
                CHECK(a.has_value() == b.has_value());
            }
        }
}

TEST_CASE("univariate resultants") {
    auto r1 = univariate_resultant(parse_bipoly("y"), parse_bipoly("2*x+y^2"), Variable::Y);
    CHECK(r1.order() == 1);
    CHECK(r1.degree() == 1);
    auto r2 = univariate_resultant(parse_bipoly("3*x^2"), parse_bipoly("2*y"), Variable::Y);
    CHECK(r2.order() == 2);
    CHECK(r2.degree() == 2);
    auto r3 = univariate_resultant(parse_bipoly("y^2+x^3"), parse_bipoly("2*y"), Variable::Y);
    CHECK(r3.order() == 3);
    CHECK(r3.degree() == 3);
    CHECK(r3.coeff(3) / r3.coeff(3) == 1);
}
