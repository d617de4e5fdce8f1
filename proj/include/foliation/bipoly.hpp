#ifndef FOLIATION_BIPOLY_HPP
#define FOLIATION_BIPOLY_HPP

#include "foliation/algnum.hpp"
#include "foliation/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fol {

using Exponent = std::pair<int, int>;

// Sparse polynomial in x, y. Keys are (i, j) for x^i y^j, zero coefficients never stored.
template <class K>
class BiPolyT {
public:
    using Terms = std::map<Exponent, K>;

    BiPolyT() = default;
    static BiPolyT constant(const K& a) { return monomial(a, 0, 0); }
    static BiPolyT monomial(const K& a, int i, int j) {
        BiPolyT p;
        p.add_term(i, j, a);
        return p;
    }
    static BiPolyT x() { return monomial(K(1), 1, 0); }
    static BiPolyT y() { return monomial(K(1), 0, 1); }

    template <class L>
    static BiPolyT convert(const BiPolyT<L>& q) {
        BiPolyT p;
        for (const auto& [e, c] : q.terms()) p.add_term(e.first, e.second, K(c));
        return p;
    }

    const Terms& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(int i, int j, const K& a) {
        if (is_zero(a)) return;
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            t_.emplace(Exponent{i, j}, a);
        } else {
            K s = it->second + a;
            if (is_zero(s))
                t_.erase(it);
            else
                it->second = s;
        }
    }

    K coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? K(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.second);
        return d;
    }

    // min(i+j); -1 for zero
    int order() const {
        int d = -1;
        for (const auto& [e, c] : t_)
            if (d < 0 || e.first + e.second < d) d = e.first + e.second;
        return d;
    }
    int order_x() const {
        int d = -1;
        for (const auto& [e, c] : t_)
            if (d < 0 || e.first < d) d = e.first;
        return d;
    }
    int order_y() const {
        int d = -1;
        for (const auto& [e, c] : t_)
            if (d < 0 || e.second < d) d = e.second;
        return d;
    }

    BiPolyT homogeneous_part(int d) const {
        BiPolyT p;
        for (const auto& [e, c] : t_)
            if (e.first + e.second == d) p.t_.emplace(e, c);
        return p;
    }
    // terms of total degree < d
    BiPolyT truncate(int d) const {
        BiPolyT p;
        for (const auto& [e, c] : t_)
            if (e.first + e.second < d) p.t_.emplace(e, c);
        return p;
    }

    K eval(const K& a, const K& b) const {
        K r(0);
        for (const auto& [e, c] : t_) r = r + c * pw(a, e.first) * pw(b, e.second);
        return r;
    }

    // p(x, c) as polynomial in x; p(c, y) as polynomial in y
    UPolyT<K> at_y(const K& c) const {
        std::vector<K> v(std::max(0, degree_x() + 1), K(0));
        for (const auto& [e, a] : t_) v[e.first] = v[e.first] + a * pw(c, e.second);
        return UPolyT<K>(std::move(v));
    }
    UPolyT<K> at_x(const K& c) const {
        std::vector<K> v(std::max(0, degree_y() + 1), K(0));
        for (const auto& [e, a] : t_) v[e.second] = v[e.second] + a * pw(c, e.first);
        return UPolyT<K>(std::move(v));
    }
    // coefficient of y^j as polynomial in x
    UPolyT<K> coeff_y(int j) const {
        std::vector<K> v(std::max(0, degree_x() + 1), K(0));
        for (const auto& [e, a] : t_)
            if (e.second == j) v[e.first] = a;
        return UPolyT<K>(std::move(v));
    }

    BiPolyT dx() const {
        BiPolyT p;
        for (const auto& [e, c] : t_)
            if (e.first > 0) p.add_term(e.first - 1, e.second, c * K((long)e.first));
        return p;
    }
    BiPolyT dy() const {
        BiPolyT p;
        for (const auto& [e, c] : t_)
            if (e.second > 0) p.add_term(e.first, e.second - 1, c * K((long)e.second));
        return p;
    }

    BiPolyT swap_xy() const {
        BiPolyT p;
        for (const auto& [e, c] : t_) p.t_.emplace(Exponent{e.second, e.first}, c);
        return p;
    }

    // divide by x^a y^b; every term must be divisible
    BiPolyT divide_monomial(int a, int b) const {
        BiPolyT p;
        for (const auto& [e, c] : t_) p.t_.emplace(Exponent{e.first - a, e.second - b}, c);
        return p;
    }
    BiPolyT multiply_monomial(int a, int b) const {
        BiPolyT p;
        for (const auto& [e, c] : t_) p.t_.emplace(Exponent{e.first + a, e.second + b}, c);
        return p;
    }

    // p(x, x*y): the first chart of a blow-up
    BiPolyT chart_xt() const {
        BiPolyT p;
        for (const auto& [e, c] : t_) p.t_.emplace(Exponent{e.first + e.second, e.second}, c);
        return p;
    }
    // p(x*y, y): the second chart
    BiPolyT chart_sy() const {
        BiPolyT p;
        for (const auto& [e, c] : t_) p.t_.emplace(Exponent{e.first, e.first + e.second}, c);
        return p;
    }

    // p(x + a, y + b)
    BiPolyT translate(const K& a, const K& b) const {
        if (is_zero(a) && is_zero(b)) return *this;
        // expand x^i via binomials
        BiPolyT p;
        for (const auto& [e, c] : t_) {
            std::vector<K> bx = binomial_row(e.first, a), by = binomial_row(e.second, b);
            for (int i = 0; i <= e.first; ++i) {
                if (is_zero(bx[i])) continue;
                for (int j = 0; j <= e.second; ++j) {
                    if (is_zero(by[j])) continue;
                    p.add_term(i, j, c * bx[i] * by[j]);
                }
            }
        }
        return p;
    }

    // p(a*x + b*y, c*x + d*y)
    BiPolyT linear_subst(const K& a, const K& b, const K& c, const K& d) const {
        BiPolyT X, Y;
        X.add_term(1, 0, a);
        X.add_term(0, 1, b);
        Y.add_term(1, 0, c);
        Y.add_term(0, 1, d);
        return compose(X, Y);
    }

    // p(X, Y) for polynomials X, Y
    BiPolyT compose(const BiPolyT& X, const BiPolyT& Y) const {
        std::vector<BiPolyT> px{constant(K(1))}, py{constant(K(1))};
        BiPolyT r;
        for (const auto& [e, c] : t_) {
            while ((int)px.size() <= e.first) px.push_back(px.back() * X);
            while ((int)py.size() <= e.second) py.push_back(py.back() * Y);
            r = r + c * (px[e.first] * py[e.second]);
        }
        return r;
    }

    friend BiPolyT operator+(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT& a) {
        BiPolyT r;
        for (const auto& [e, c] : a.t_) r.t_.emplace(e, K(0) - c);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT& a, const BiPolyT& b) { return a + (-b); }
    friend BiPolyT operator*(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r;
        for (const auto& [e1, c1] : a.t_)
            for (const auto& [e2, c2] : b.t_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        return r;
    }
    friend BiPolyT operator*(const K& s, const BiPolyT& a) {
        BiPolyT r;
        if (is_zero(s)) return r;
        for (const auto& [e, c] : a.t_) r.t_.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const BiPolyT& a, const BiPolyT& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto it = b.t_.begin();
        for (const auto& [e, c] : a.t_) {
            if (e != it->first || !is_zero(c - it->second)) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const BiPolyT& a, const BiPolyT& b) { return !(a == b); }

    BiPolyT pow(int n) const {
        BiPolyT r = constant(K(1));
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    static K pw(const K& a, int n) {
        K r(1);
        for (int i = 0; i < n; ++i) r = r * a;
        return r;
    }

private:
    // coefficients of (X + a)^n in X, low first
    static std::vector<K> binomial_row(int n, const K& a) {
        std::vector<K> r(n + 1, K(0));
        Integer binom = 1;
        for (int i = 0; i <= n; ++i) {
            // coefficient of X^i is C(n,i) a^(n-i)
            r[i] = K(Rational(binom)) * pw(a, n - i);
            binom = binom * (n - i) / (i + 1);
        }
        return r;
    }

    Terms t_;
};

using BiPoly = BiPolyT<Rational>;

std::string to_string(const BiPoly& p);

// Parses expressions like "y^2 + x^3", "3/2*x*y - (x-1)*x^3", "(y-x)^2".
BiPoly parse_bipoly(const std::string& s);

} // namespace fol

#endif
