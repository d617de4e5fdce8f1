#ifndef FOLIATION_ALGEBRA_HPP
#define FOLIATION_ALGEBRA_HPP

#include "foliation/algnum.hpp"
#include "foliation/bipoly.hpp"
#include "foliation/series.hpp"
#include "foliation/upoly.hpp"

#include <optional>
#include <vector>

namespace fol {

// Galois orbit of roots of an irreducible monic polynomial.
struct AlgebraicOrbit {
    UPoly minimal_polynomial;
    int size() const { return minimal_polynomial.degree(); }
    bool rational() const { return size() == 1; }
    Rational rational_value() const { return -minimal_polynomial.coeff(0); }
};

// Direction on the projective line of slopes t = y/x; at_infinity is x = 0.
struct ConeDirection {
    bool at_infinity = false;
    AlgebraicOrbit orbit;  // unused when at_infinity
    int multiplicity = 0;
};

enum class Variable { X, Y };

int vanishing_order(const BiPoly& p);

std::vector<ConeDirection> tangent_cone_roots(const BiPoly& p);

std::optional<Rational> resonance_ratio_test(const Rational& trace, const Rational& det);
std::optional<Rational> resonance_ratio_test(const AlgNum& trace, const AlgNum& det);

// Result is a polynomial in the remaining variable.
UPoly univariate_resultant(const BiPoly& p, const BiPoly& q, Variable eliminated);

template <class K>
K determinant(std::vector<std::vector<K>> m) {
    int n = static_cast<int>(m.size());
    K det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(m[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) return K(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = K(0) - det;
        }
        det = det * m[c][c];
        K inv = K(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) continue;
            K f = m[r][c] * inv;
            for (int k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

// Resultant of a and b in y with formal degrees da, db.
template <class K>
K sylvester_resultant(const UPolyT<K>& a, int da, const UPolyT<K>& b, int db) {
    int n = da + db;
    if (n == 0) return K(1);
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[r][r + i] = a.coeff(da - i);
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) m[db + r][r + i] = b.coeff(db - i);
    return determinant(std::move(m));
}

// Res_y(p, q) as a polynomial in x, by evaluation at x = 0..bound and interpolation.
template <class K>
UPolyT<K> resultant_in_y(const BiPolyT<K>& p, const BiPolyT<K>& q) {
    int dp = std::max(0, p.degree_y()), dq = std::max(0, q.degree_y());
    int bound = std::max(0, p.total_degree()) * std::max(0, q.total_degree());
    std::vector<K> xs, ys;
    for (int a = 0; a <= bound; ++a) {
        K xa((long)a);
        xs.push_back(xa);
        ys.push_back(sylvester_resultant(p.at_x(xa), dp, q.at_x(xa), dq));
    }
    // Newton divided differences
    int n = static_cast<int>(xs.size());
    std::vector<K> dd = ys;
    for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    UPolyT<K> r = UPolyT<K>::constant(dd[n - 1]);
    for (int i = n - 2; i >= 0; --i) {
        r = r * UPolyT<K>(std::vector<K>{K(0) - xs[i], K(1)});
        r = r + UPolyT<K>::constant(dd[i]);
    }
    return r;
}

} // namespace fol

#endif
