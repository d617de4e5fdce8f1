#ifndef FOLIATION_ALGNUM_HPP
#define FOLIATION_ALGNUM_HPP

#include "foliation/upoly.hpp"

#include <memory>
#include <string>

namespace fol {

// Element of Q[z]/(m). A null modulus marks a plain rational constant, which
// adopts the modulus of the other operand.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(long a) : v_(UPoly::constant(Rational(a))) {}
    AlgNum(const Rational& a) : v_(UPoly::constant(a)) {}
    AlgNum(std::shared_ptr<const UPoly> mod, UPoly v);

    // the class of z itself
    static AlgNum generator(std::shared_ptr<const UPoly> mod);

    const std::shared_ptr<const UPoly>& modulus() const { return mod_; }
    const UPoly& value() const { return v_; }

    bool is_rational() const { return v_.degree() <= 0; }
    Rational to_rational() const;  // requires is_rational()

    // trace of the multiplication map Q[z]/(m) -> Q[z]/(m)
    Rational trace() const;
    int degree() const { return mod_ ? mod_->degree() : 1; }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    std::string str() const;

private:
    static std::shared_ptr<const UPoly> pick(const AlgNum& a, const AlgNum& b);
    std::shared_ptr<const UPoly> mod_;
    UPoly v_;
};

inline bool is_zero(const AlgNum& a) { return a.value().zero(); }

// Trace helpers shared by generic code
inline Rational field_trace(const Rational& a, int orbit) { return a * orbit; }
inline Rational field_trace(const AlgNum& a, int orbit) {
    return a.modulus() ? a.trace() : a.to_rational() * orbit;
}
inline bool field_is_rational(const Rational&) { return true; }
inline bool field_is_rational(const AlgNum& a) { return a.is_rational(); }
inline Rational field_to_rational(const Rational& a) { return a; }
inline Rational field_to_rational(const AlgNum& a) { return a.to_rational(); }
inline std::string field_str(const Rational& a) { return to_exact(a); }
inline std::string field_str(const AlgNum& a) { return a.str(); }

} // namespace fol

#endif
