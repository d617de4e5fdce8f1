#include "foliation/algebra.hpp"

namespace fol {

int vanishing_order(const BiPoly& p) {
    if (p.zero()) throw Error(ErrorCode::ZeroPolynomial, "vanishing order of 0");
    return p.order();
}

std::vector<ConeDirection> tangent_cone_roots(const BiPoly& p) {
    if (p.zero()) throw Error(ErrorCode::ZeroPolynomial, "tangent cone of 0");
    int d = p.order();
    BiPoly h = p.homogeneous_part(d);
    UPoly affine = h.at_x(Rational(1));  // h(1, t)
    std::vector<ConeDirection> out;
    for (const auto& f : factor_rational(affine)) {
        ConeDirection c;
        c.orbit.minimal_polynomial = f.factor;
        c.multiplicity = f.multiplicity;
        out.push_back(c);
    }
    int inf = d - affine.degree();
    if (inf > 0) {
        ConeDirection c;
        c.at_infinity = true;
        c.multiplicity = inf;
        out.push_back(c);
    }
    return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& a) {
    if (sgn(a) < 0) return std::nullopt;
    Integer n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Integer sn = sqrt(n), sd = sqrt(d);
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

// q = trace^2/det; eigenvalue ratios r solve r^2 + (2 - q) r + 1 = 0
std::optional<Rational> ratio_from_invariant(const Rational& q) {
    Rational b = Rational(2) - q;
    Rational disc = b * b - 4;
    auto s = rational_sqrt(disc);
    if (!s) return std::nullopt;
    Rational r1 = (-b + *s) / 2, r2 = (-b - *s) / 2;
    Rational best = r1 > r2 ? r1 : r2;
    if (sgn(best) <= 0) return std::nullopt;
    return best;
}

} // namespace

std::optional<Rational> resonance_ratio_test(const Rational& trace, const Rational& det) {
    if (is_zero(det)) throw Error(ErrorCode::DegenerateLinearPart, "det = 0");
    return ratio_from_invariant(trace * trace / det);
}

std::optional<Rational> resonance_ratio_test(const AlgNum& trace, const AlgNum& det) {
    if (is_zero(det)) throw Error(ErrorCode::DegenerateLinearPart, "det = 0");
    AlgNum q = trace * trace / det;
    if (!q.is_rational()) return std::nullopt;
    return ratio_from_invariant(q.to_rational());
}

UPoly univariate_resultant(const BiPoly& p, const BiPoly& q, Variable eliminated) {
    if (p.zero() || q.zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with 0");
    if (eliminated == Variable::Y) return resultant_in_y(p, q);
    return resultant_in_y(p.swap_xy(), q.swap_xy());
}

} // namespace fol
