#include "foliation/bipoly.hpp"

#include <cctype>
#include <sstream>

namespace fol {

std::string to_string(const BiPoly& p) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending total degree, then descending power of x
    std::vector<std::pair<Exponent, Rational>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first > b.first.first;
    });
    for (const auto& [e, c] : ts) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        bool unit = a == 1;
        bool constant = e.first == 0 && e.second == 0;
        if (!unit || constant) os << a.get_str();
        bool need_star = !unit;
        if (e.first > 0) {
            if (need_star) os << "*";
            os << "x";
            if (e.first > 1) os << "^" << e.first;
            need_star = true;
        }
        if (e.second > 0) {
            if (need_star) os << "*";
            os << "y";
            if (e.second > 1) os << "^" << e.second;
        }
        first = false;
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly parse() {
        BiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    BiPoly expr() {
        BiPoly p;
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        } else if (peek('+')) {
            ++pos_;
        }
        p = term();
        if (neg) p = -p;
        while (true) {
            if (peek('+')) {
                ++pos_;
                p = p + term();
            } else if (peek('-')) {
                ++pos_;
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }

    BiPoly term() {
        BiPoly p = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                p = p * power();
            } else if (peek('/')) {
                ++pos_;
                BiPoly d = power();
                if (d.total_degree() != 0) fail("division by a non-constant");
                p = (Rational(1) / d.coeff(0, 0)) * p;
            } else if (peek('(') || peek('x') || peek('y') || (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))) {
                p = p * power();
            } else {
                break;
            }
        }
        return p;
    }

    BiPoly power() {
        BiPoly b = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int n = std::stoi(s_.substr(start, pos_ - start));
            b = b.pow(n);
        }
        return b;
    }

    BiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return BiPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::y();
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer n(s_.substr(start, pos_ - start), 10);
            return BiPoly::constant(Rational(n));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

BiPoly parse_bipoly(const std::string& s) { return Parser(s).parse(); }

} // namespace fol
