#include "foliation/oracles.hpp"
#include "foliation/combinatorics.hpp"
#include "foliation/resolution.hpp"
#include "foliation/series.hpp"

#include <optional>
#include <random>

namespace fol {

namespace {

template <class K>
std::optional<int> order_after_change(const BiPolyT<K>& f, const BiPolyT<K>& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-7, 7);
    long a, b;
    do {
        a = dist(rng);
        b = dist(rng);
    } while (a == 0 || b == 0 || 1 - a * b == 0);
    BiPolyT<K> F = f.linear_subst(K(1L), K(a), K(b), K(1L));
    BiPolyT<K> G = g.linear_subst(K(1L), K(a), K(b), K(1L));
    UPolyT<K> r = resultant_in_y(F, G);
    if (r.zero()) return std::nullopt;
    return r.order();
}

} // namespace

template <class K>
int intersection_multiplicity(const BiPolyT<K>& f, const BiPolyT<K>& g, std::uint64_t seed) {
    if (!is_zero(f.coeff(0, 0)) || !is_zero(g.coeff(0, 0))) return 0;
    if (f.zero() || g.zero()) throw Error(ErrorCode::CommonComponent, "zero polynomial");
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    int maxdeg = std::max(f.total_degree(), g.total_degree());
    // truncating above the multiplicity leaves the local ideal unchanged
    for (int D = 4;; D *= 2) {
        bool full = D > maxdeg;
        BiPolyT<K> ft = full ? f : f.truncate(D), gt = full ? g : g.truncate(D);
        std::optional<int> value;
        bool common = false;
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::optional<int> i1 = order_after_change(ft, gt, rng);
            std::optional<int> i2 = order_after_change(ft, gt, rng);
            if (!i1 || !i2) {
                common = true;
                break;
            }
            if (*i1 == *i2) {
                value = i1;
                break;
            }
        }
        if (common) {
            if (full) throw Error(ErrorCode::CommonComponent, "the two germs share a component");
            continue;
        }
        if (!value) throw Error(ErrorCode::GenericityFailure, "independent coordinate changes disagree");
        if (full || *value < D) return *value;
    }
}

template int intersection_multiplicity(const BiPolyT<Rational>&, const BiPolyT<Rational>&, std::uint64_t);
template int intersection_multiplicity(const BiPolyT<AlgNum>&, const BiPolyT<AlgNum>&, std::uint64_t);

int milnor_direct(const OneForm& w, std::uint64_t seed) { return intersection_multiplicity(w.P, w.Q, seed); }

int multiplicity_along_branch_direct(const OneForm& w, const Parametrization& gamma) {
    int n = std::min(gamma.x.precision(), gamma.y.precision());
    SeriesT<Rational> dx = gamma.x.derivative().truncated(n - 1), dy = gamma.y.derivative().truncated(n - 1);
    SeriesT<Rational> P = substitute(w.P, gamma.x, gamma.y).truncated(n - 1);
    SeriesT<Rational> Q = substitute(w.Q, gamma.x, gamma.y).truncated(n - 1);
    if ((P * dx + Q * dy).order() >= 0) throw Error(ErrorCode::NotInvariant, "the branch is not invariant");
    if (dx.order() >= 0) {
        if (Q.order() < 0) throw Error(ErrorCode::TruncationInsufficient, "Q vanishes along the jet");
        return Q.order() - dx.order();
    }
    if (dy.order() < 0) throw Error(ErrorCode::TruncationInsufficient, "constant parametrization");
    if (P.order() < 0) throw Error(ErrorCode::TruncationInsufficient, "P vanishes along the jet");
    return P.order() - dy.order();
}

int order_along(const BiPoly& g, const Parametrization& gamma) {
    int o = substitute(g, gamma.x, gamma.y).order();
    if (o < 0) throw Error(ErrorCode::TruncationInsufficient, "the function vanishes along the jet");
    return o;
}

namespace {

using Series = SeriesT<Rational>;

struct ChartMap {
    BiPoly X, Y;  // original coordinates as polynomials in the local ones
};

// v = psi(u) solving g(u, v) = 0 when g_v(0, 0) != 0
Series implicit_branch(const BiPoly& g, int n) {
    Rational c = g.coeff(0, 1);
    Series u = Series::variable(n), psi(n);
    for (int it = 0; it < n; ++it) psi = psi - (Rational(1) / c) * substitute(g, u, psi);
    return psi;
}

void normalize_sign(Parametrization& p) {
    auto first_odd = [](const Series& s) -> int {
        for (int i = 1; i < s.precision(); i += 2)
            if (!is_zero(s[i])) return sgn(s[i]);
        return 0;
    };
    int sy = first_odd(p.y);
    int sg = sy ? sy : first_odd(p.x);
    if (sg >= 0) return;
    for (int i = 1; i < p.x.precision(); i += 2) p.x[i] = -p.x[i];
    for (int i = 1; i < p.y.precision(); i += 2) p.y[i] = -p.y[i];
}

void puiseux_rec(const BiPoly& g, const ChartMap& map, int n, int depth, std::vector<Parametrization>& out) {
    if (depth > 256) throw Error(ErrorCode::MaxBlowupsExceeded, "branch separation did not terminate");
    int ord = g.order();
    if (ord == 1) {
        Series u, v;
        if (!is_zero(g.coeff(0, 1))) {
            u = Series::variable(n);
            v = implicit_branch(g, n);
        } else {
            v = Series::variable(n);
            u = implicit_branch(g.swap_xy(), n);
        }
        Parametrization p{substitute(map.X, u, v), substitute(map.Y, u, v)};
        normalize_sign(p);
        out.push_back(p);
        return;
    }
    BiPoly U = BiPoly::x(), V = BiPoly::y();
    for (const auto& d : tangent_cone_roots(g)) {
        if (d.at_infinity) {
            BiPoly g2 = g.chart_sy().divide_monomial(0, ord);
            ChartMap m2{map.X.compose(U * V, V), map.Y.compose(U * V, V)};
            puiseux_rec(g2, m2, n, depth + 1, out);
            continue;
        }
        if (!d.orbit.rational()) throw Error(ErrorCode::UnsupportedBranch, "branch with a non-rational tangent");
        Rational c = d.orbit.rational_value();
        BiPoly g1 = g.chart_xt().divide_monomial(ord, 0).translate(Rational(0), c);
        BiPoly Vc = V + BiPoly::constant(c);
        ChartMap m1{map.X.compose(U, U * Vc), map.Y.compose(U, U * Vc)};
        puiseux_rec(g1, m1, n, depth + 1, out);
    }
}

} // namespace

std::vector<Parametrization> newton_puiseux(const BiPoly& f, int truncation) {
    if (f.zero()) throw Error(ErrorCode::ZeroPolynomial, "zero curve");
    std::vector<Parametrization> out;
    if (!is_zero(f.coeff(0, 0))) return out;
    puiseux_rec(f, ChartMap{BiPoly::x(), BiPoly::y()}, truncation + 1, 0, out);
    return out;
}

VanDenEssenResult van_den_essen_check(const ResolutionTree& tree, int mu_oracle) {
    VanDenEssenResult r;
    for (const auto& s : tree.singularities) r.sum_milnor += s.milnor * s.orbit_size();
    for (const auto& c : tree.components) {
        int l = c.recorded_discrepancy;
        r.n_ell += l * l - l - 1;
    }
    r.oracle = mu_oracle;
    r.ok = r.sum_milnor + r.n_ell == mu_oracle;
    return r;
}

std::vector<ComponentCsCheck> cs_index_theorem_check(const ResolutionTree& tree) {
    std::vector<ComponentCsCheck> out;
    for (const auto& c : tree.components) {
        if (!c.invariant) continue;
        ComponentCsCheck k;
        k.component = c.index;
        k.self_intersection = c.self_intersection;
        for (const auto& s : tree.singularities) {
            auto it = s.cs_along.find(c.index);
            if (it != s.cs_along.end()) k.sum += it->second;
        }
        k.ok = k.sum == Rational(c.self_intersection);
        out.push_back(k);
    }
    return out;
}

NoetherResult noether_check(const OneForm& w, const BiPoly& fC, const BiPoly& fD, int max_blowups, std::uint64_t seed) {
    NoetherResult r;
    r.oracle = intersection_multiplicity(fC, fD, seed);
    ResolutionTree tree = reduce_singularities(w, max_blowups, {fC, fD});
    int n = tree.n();
    Vec SC(n, Rational(0)), SD(n, Rational(0));
    for (const auto& a : tree.attachments) (a.curve == 0 ? SC : SD)[a.component - 1] += a.orbit_size();
    Matrix F = proximity_matrix(tree);
    Matrix A = intersection_matrix(tree);
    r.nu_pairing = dot(multiplicities_of_divisor(F, SC), multiplicities_of_divisor(F, SD));
    r.matrix_pairing = dot(pullback_orders(A, SC), SD);
    r.ok = r.nu_pairing == Rational(r.oracle) && r.matrix_pairing == Rational(r.oracle);
    return r;
}

BBRecursionResult bb_recursion_check(const ResolutionTree& tree, const Rational& closed_value) {
    // unrolled one-blow-up recursion: each blow-up adds l_j^2, terminal points add BB_p
    BBRecursionResult r;
    for (const auto& s : tree.singularities) r.recursion += s.bb_total;
    for (const auto& c : tree.components) r.recursion += c.recorded_discrepancy * c.recorded_discrepancy;
    r.closed = closed_value;
    r.ok = r.recursion == r.closed;
    return r;
}

GsvMuResult gsv_via_mu_check(const OneForm& w, const BiPoly& fC, int gsv_formula) {
    GsvMuResult r;
    r.gsv_formula = gsv_formula;
    r.mu_curve = intersection_multiplicity(fC.dx(), fC.dy());
    auto evaluate = [&](int truncation) {
        std::vector<Parametrization> branches = newton_puiseux(fC, truncation);
        int total = 1;
        for (const auto& b : branches) total += multiplicity_along_branch_direct(w, b) - 1;
        return total;
    };
    int prev = -1;
    for (int N = 2 * std::max(gsv_formula + r.mu_curve, 1) + 2; N <= 1024; N *= 2) {
        int cur;
        try {
            cur = evaluate(N);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationInsufficient) throw;
            continue;
        }
        if (cur == prev) break;
        prev = cur;
    }
    if (prev < 0) throw Error(ErrorCode::TruncationInsufficient, "branch jets never long enough");
    r.mu_foliation_along = prev;
    r.ok = r.mu_foliation_along - r.mu_curve == gsv_formula;
    return r;
}

int polar_oracle(const OneForm& w, const BiPoly& fC, const BiPoly& fB, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0xD1B54A32D192ED03ULL + 5);
    std::uniform_int_distribution<long> dist(-9, 9);
    BiPoly Bx = fB.dx(), By = fB.dy();
    std::optional<int> best;
    int seen = 0;
    for (int draw = 0; draw < 12; ++draw) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        int value;
        try {
            value = intersection_multiplicity(Rational(a) * w.P + Rational(b) * w.Q, fC, seed + draw) -
                    intersection_multiplicity(Rational(a) * Bx + Rational(b) * By, fC, seed + draw);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CommonComponent) throw;
            continue;
        }
        if (!best || value < *best) {
            best = value;
            seen = 1;
        } else if (value == *best && ++seen >= 2) {
            return *best;
        }
    }
    throw Error(ErrorCode::GenericityFailure, "polar draws never stabilized");
}

} // namespace fol
