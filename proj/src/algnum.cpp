#include "foliation/algnum.hpp"

namespace fol {

AlgNum::AlgNum(std::shared_ptr<const UPoly> mod, UPoly v) : mod_(std::move(mod)), v_(std::move(v)) {
    if (mod_ && v_.degree() >= mod_->degree()) v_ = v_ % *mod_;
}

AlgNum AlgNum::generator(std::shared_ptr<const UPoly> mod) {
    return AlgNum(std::move(mod), UPoly(std::vector<Rational>{0, 1}));
}

std::shared_ptr<const UPoly> AlgNum::pick(const AlgNum& a, const AlgNum& b) {
    return a.mod_ ? a.mod_ : b.mod_;
}

Rational AlgNum::to_rational() const {
    return v_.zero() ? Rational(0) : v_.coeff(0);
}

Rational AlgNum::trace() const {
    if (!mod_) return to_rational();
    int d = mod_->degree();
    // sum of diagonal entries of multiplication by v on the basis 1, z, ..., z^(d-1)
    Rational tr = 0;
    UPoly basis = UPoly::constant(1);
    UPoly z(std::vector<Rational>{0, 1});
    for (int i = 0; i < d; ++i) {
        UPoly img = (v_ * basis) % *mod_;
        tr += img.coeff(i);
        basis = (basis * z) % *mod_;
    }
    return tr;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) { return AlgNum(AlgNum::pick(a, b), a.v_ + b.v_); }
AlgNum operator-(const AlgNum& a, const AlgNum& b) { return AlgNum(AlgNum::pick(a, b), a.v_ - b.v_); }
AlgNum operator*(const AlgNum& a, const AlgNum& b) { return AlgNum(AlgNum::pick(a, b), a.v_ * b.v_); }

AlgNum operator/(const AlgNum& a, const AlgNum& b) {
    if (b.v_.zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero algebraic number");
    auto mod = AlgNum::pick(a, b);
    if (b.v_.degree() == 0) return AlgNum(mod, (Rational(1) / b.v_.coeff(0)) * a.v_);
    UPoly g, s, t;
    UPoly::ext_gcd(b.v_, *mod, g, s, t);
    if (g.degree() > 0) throw Error(ErrorCode::ZeroPolynomial, "zero divisor: modulus is reducible");
    return AlgNum(mod, a.v_ * s);
}

bool operator==(const AlgNum& a, const AlgNum& b) { return (a - b).v_.zero(); }

std::string AlgNum::str() const {
    if (!mod_ || v_.degree() <= 0) return to_exact(to_rational());
    return "[" + to_string(v_, "z") + " mod " + to_string(*mod_, "z") + "]";
}

} // namespace fol
