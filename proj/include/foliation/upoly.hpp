#ifndef FOLIATION_UPOLY_HPP
#define FOLIATION_UPOLY_HPP

#include "foliation/errors.hpp"
#include "foliation/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fol {

// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
template <class K>
class UPolyT {
public:
    UPolyT() = default;
    explicit UPolyT(std::vector<K> c) : c_(std::move(c)) { trim(); }
    static UPolyT constant(const K& a) { return UPolyT(std::vector<K>{a}); }
    static UPolyT monomial(const K& a, int d) {
        std::vector<K> c(d + 1, K(0));
        c[d] = a;
        return UPolyT(std::move(c));
    }

    bool zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : K(0); }
    K lead() const { return c_.empty() ? K(0) : c_.back(); }

    // lowest exponent with nonzero coefficient; -1 for zero
    int order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    K eval(const K& x) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UPolyT derivative() const {
        std::vector<K> d;
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K((long)i));
        return UPolyT(std::move(d));
    }

    UPolyT monic() const {
        if (zero()) return *this;
        K l = lead();
        std::vector<K> c = c_;
        for (auto& a : c) a = a / l;
        return UPolyT(std::move(c));
    }

    friend UPolyT operator+(const UPolyT& a, const UPolyT& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPolyT(std::move(c));
    }
    friend UPolyT operator-(const UPolyT& a) {
        std::vector<K> c = a.c_;
        for (auto& x : c) x = K(0) - x;
        return UPolyT(std::move(c));
    }
    friend UPolyT operator-(const UPolyT& a, const UPolyT& b) { return a + (-b); }
    friend UPolyT operator*(const UPolyT& a, const UPolyT& b) {
        if (a.zero() || b.zero()) return UPolyT();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UPolyT(std::move(c));
    }
    friend UPolyT operator*(const K& s, const UPolyT& a) {
        std::vector<K> c = a.c_;
        for (auto& x : c) x = s * x;
        return UPolyT(std::move(c));
    }
    friend bool operator==(const UPolyT& a, const UPolyT& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPolyT& a, const UPolyT& b) { return !(a == b); }

    // Euclidean division over a field
    static std::pair<UPolyT, UPolyT> divmod(const UPolyT& a, const UPolyT& b) {
        if (b.zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
        std::vector<K> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {UPolyT(), a};
        std::vector<K> q(a.degree() - db + 1, K(0));
        K lb = b.lead();
        for (int i = a.degree(); i >= db; --i) {
            if (is_zero(r[i])) continue;
            K f = r[i] / lb;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
        }
        return {UPolyT(std::move(q)), UPolyT(std::move(r))};
    }
    friend UPolyT operator/(const UPolyT& a, const UPolyT& b) { return divmod(a, b).first; }
    friend UPolyT operator%(const UPolyT& a, const UPolyT& b) { return divmod(a, b).second; }

    static UPolyT gcd(UPolyT a, UPolyT b) {
        while (!b.zero()) {
            UPolyT r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // s*a + t*b = g (monic gcd)
    static void ext_gcd(const UPolyT& a, const UPolyT& b, UPolyT& g, UPolyT& s, UPolyT& t) {
        UPolyT r0 = a, r1 = b, s0 = constant(K(1)), s1, t0, t1 = constant(K(1));
        while (!r1.zero()) {
            auto [q, r] = divmod(r0, r1);
            UPolyT s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        K l = r0.lead();
        K inv = K(1) / l;
        g = inv * r0;
        s = inv * s0;
        t = inv * t0;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using UPoly = UPolyT<Rational>;

std::string to_string(const UPoly& p, const std::string& var = "t");

// Rational roots with multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

// Factorization over Q into monic irreducible factors with multiplicities.
// Linear factors first (by root, ascending), then higher degree factors by degree.
struct UFactor {
    UPoly factor;
    int multiplicity;
};
std::vector<UFactor> factor_rational(const UPoly& p);

bool is_irreducible(const UPoly& p);

} // namespace fol

#endif
