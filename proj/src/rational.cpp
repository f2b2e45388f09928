#include "tangles/rational.hpp"

#include "tangles/errors.hpp"

#include <cctype>

namespace tangles {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](const std::string& t, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && i < t.size() && t[i] == '-') ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed rational: " + s);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator: " + s);
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

Real to_real(const Rational& r) {
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

} // namespace tangles
