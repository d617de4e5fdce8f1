#ifndef FOLIATION_SERIES_HPP
#define FOLIATION_SERIES_HPP

#include "foliation/bipoly.hpp"

#include <vector>

namespace fol {

// Power series truncated modulo t^n.
template <class K>
class SeriesT {
public:
    SeriesT() = default;
    explicit SeriesT(int n) : c_(n, K(0)) {}
    SeriesT(std::vector<K> c, int n) : c_(std::move(c)) { c_.resize(n, K(0)); }

    static SeriesT variable(int n, const K& scale = K(1)) {
        SeriesT s(n);
        if (n > 1) s.c_[1] = scale;
        return s;
    }
    static SeriesT constant(int n, const K& a) {
        SeriesT s(n);
        if (n > 0) s.c_[0] = a;
        return s;
    }

    int precision() const { return static_cast<int>(c_.size()); }
    const K& operator[](int i) const { return c_[i]; }
    K& operator[](int i) { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }

    // first nonzero index, -1 if zero to this precision
    int order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.precision(), b.precision()));
        for (int i = 0; i < r.precision(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) {
        SeriesT r(std::min(a.precision(), b.precision()));
        for (int i = 0; i < r.precision(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        int n = std::min(a.precision(), b.precision());
        SeriesT r(n);
        for (int i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < n; ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend SeriesT operator*(const K& s, const SeriesT& a) {
        SeriesT r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    // requires a nonzero constant term
    SeriesT inverse() const {
        int n = precision();
        SeriesT r(n);
        K inv0 = K(1) / c_[0];
        r.c_[0] = inv0;
        for (int i = 1; i < n; ++i) {
            K s(0);
            for (int j = 1; j <= i; ++j) s = s + c_[j] * r.c_[i - j];
            r.c_[i] = K(0) - s * inv0;
        }
        return r;
    }

    SeriesT derivative() const {
        SeriesT r(precision());
        for (int i = 1; i < precision(); ++i) r.c_[i - 1] = c_[i] * K((long)i);
        return r;
    }

    // divide by t^k (the first k coefficients must vanish); precision drops by k
    SeriesT shift_down(int k) const {
        SeriesT r(std::max(0, precision() - k));
        for (int i = k; i < precision(); ++i) r.c_[i - k] = c_[i];
        return r;
    }

    SeriesT truncated(int n) const {
        SeriesT r(n);
        for (int i = 0; i < n && i < precision(); ++i) r.c_[i] = c_[i];
        return r;
    }

private:
    std::vector<K> c_;
};

// p(X(t), Y(t))
template <class K>
SeriesT<K> substitute(const BiPolyT<K>& p, const SeriesT<K>& X, const SeriesT<K>& Y) {
    int n = std::min(X.precision(), Y.precision());
    std::vector<SeriesT<K>> px{SeriesT<K>::constant(n, K(1))}, py{SeriesT<K>::constant(n, K(1))};
    SeriesT<K> r(n);
    for (const auto& [e, c] : p.terms()) {
        while ((int)px.size() <= e.first) px.push_back(px.back() * X);
        while ((int)py.size() <= e.second) py.push_back(py.back() * Y);
        r = r + c * (px[e.first] * py[e.second]);
    }
    return r;
}

// residue at t = 0 of a(t)/b(t) dt; b must be nonzero to precision
template <class K>
K residue_of_quotient(const SeriesT<K>& a, const SeriesT<K>& b) {
    int m = b.order();
    SeriesT<K> unit = b.shift_down(m);
    // coefficient of t^(m-1) in a/unit
    if (m == 0) return K(0);
    SeriesT<K> q = a.truncated(m) * unit.truncated(m).inverse();
    return q[m - 1];
}

} // namespace fol

#endif
