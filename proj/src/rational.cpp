#include "foliation/rational.hpp"
#include "foliation/errors.hpp"

#include <cctype>

namespace fol {

namespace {
bool valid_int(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}
std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}
} // namespace

Rational parse_rational(const std::string& raw) {
    std::string s = strip(raw);
    size_t slash = s.find('/');
    std::string num = strip(s.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : strip(s.substr(slash + 1));
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid_int(num) || !valid_int(den)) throw Error(ErrorCode::ParseError, "bad rational '" + raw + "'");
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + raw + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_exact(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace fol
