#include "foliation/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace fol {

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        bool unit = a == 1;
        if (!unit || i == 0) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// integer primitive multiple of p
std::vector<Integer> integer_coeffs(const UPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * l;
        v.push_back(s.get_num());
        g = gcd(g, s.get_num());
    }
    if (g != 0)
        for (auto& a : v) a /= g;
    return v;
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

UPoly from_ints(const std::vector<Integer>& v) {
    std::vector<Rational> c;
    for (const auto& a : v) c.emplace_back(a);
    return UPoly(std::move(c));
}

// Kronecker search for a factor of degree s of a primitive integer polynomial
// with no rational roots. Returns zero polynomial when none exists.
UPoly kronecker_factor(const UPoly& f, int s) {
    std::vector<Rational> pts;
    std::vector<std::vector<Integer>> divs;
    for (long a = 0; (int)pts.size() <= s; a = (a <= 0 ? -a + 1 : -a)) {
        Rational v = f.eval(Rational(a));
        pts.emplace_back(a);
        std::vector<Integer> d = divisors(v.get_num());
        std::vector<Integer> pm;
        for (const auto& x : d) {
            pm.push_back(x);
            pm.push_back(-x);
        }
        divs.push_back(pm);
    }
    std::vector<size_t> idx(pts.size(), 0);
    idx[0] = 0;
    while (true) {
        // interpolate through (pts[i], divs[i][idx[i]])
        int n = static_cast<int>(pts.size());
        std::vector<Rational> dd;
        for (int i = 0; i < n; ++i) dd.emplace_back(divs[i][idx[i]]);
        for (int j = 1; j < n; ++j)
            for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (pts[i] - pts[i - j]);
        UPoly g = UPoly::constant(dd[n - 1]);
        for (int i = n - 2; i >= 0; --i) g = g * UPoly(std::vector<Rational>{-pts[i], 1}) + UPoly::constant(dd[i]);
        if (g.degree() == s) {
            auto [q, r] = UPoly::divmod(f, g);
            if (r.zero()) return g.monic();
        }
        // next combination; first point only needs positive divisors
        size_t k = 0;
        while (k < idx.size()) {
            idx[k] += (k == 0 ? 2 : 1);
            if (idx[k] < divs[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    return UPoly();
}

// square-free decomposition (Yun): returns pairs (factor, multiplicity)
std::vector<std::pair<UPoly, int>> square_free(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = p.monic();
    UPoly d = f.derivative();
    UPoly a = UPoly::gcd(f, d);
    UPoly b = f / a;
    UPoly c = d / a;
    UPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = UPoly::gcd(b, e);
        if (g.degree() > 0) out.push_back({g, i});
        b = b / g;
        c = e / g;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

void split_irreducible(const UPoly& f, std::vector<UPoly>& out) {
    if (f.degree() <= 3) {
        out.push_back(f.monic());
        return;
    }
    UPoly prim = from_ints(integer_coeffs(f));
    for (int s = 2; s <= f.degree() / 2; ++s) {
        UPoly g = kronecker_factor(prim, s);
        if (!g.zero()) {
            split_irreducible(g, out);
            split_irreducible(f / g, out);
            return;
        }
    }
    out.push_back(f.monic());
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
    std::vector<std::pair<Rational, int>> roots;
    if (p.degree() <= 0) return roots;
    UPoly f = p;
    int zero_mult = 0;
    while (!f.zero() && is_zero(f.coeff(0))) {
        f = f / UPoly(std::vector<Rational>{0, 1});
        ++zero_mult;
    }
    if (zero_mult) roots.push_back({Rational(0), zero_mult});
    if (f.degree() > 0) {
        std::vector<Integer> v = integer_coeffs(f);
        std::vector<Integer> ps = divisors(v.front()), qs = divisors(v.back());
        std::vector<Rational> cands;
        for (const auto& a : ps)
            for (const auto& b : qs) {
                Rational r(a, b);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& r : cands) {
            int m = 0;
            UPoly lin(std::vector<Rational>{-r, 1});
            while (f.degree() > 0 && is_zero(f.eval(r))) {
                f = f / lin;
                ++m;
            }
            if (m) roots.push_back({r, m});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<UFactor> factor_rational(const UPoly& p) {
    std::vector<UFactor> lin, high;
    if (p.degree() <= 0) return lin;
    for (const auto& [r, m] : rational_roots(p)) lin.push_back({UPoly(std::vector<Rational>{-r, 1}), m});
    UPoly rest = p.monic();
    for (const auto& f : lin)
        for (int i = 0; i < f.multiplicity; ++i) rest = rest / f.factor;
    if (rest.degree() > 0) {
        for (const auto& [sf, m] : square_free(rest)) {
            std::vector<UPoly> parts;
            split_irreducible(sf, parts);
            for (auto& q : parts) high.push_back({q, m});
        }
    }
    std::stable_sort(high.begin(), high.end(), [](const UFactor& a, const UFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i)
            if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
        return false;
    });
    lin.insert(lin.end(), high.begin(), high.end());
    return lin;
}

bool is_irreducible(const UPoly& p) {
    if (p.degree() <= 0) return false;
    auto f = factor_rational(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

} // namespace fol
