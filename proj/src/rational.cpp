#include "thiele/rational.hpp"

#include <cctype>

namespace thiele {

namespace {

bool is_integer_token(const std::string& s, std::size_t begin,
                      std::size_t end, bool allow_sign) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (allow_sign && s[i] == '-') ++i;
    if (i >= end) return false;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, 0, text.size(), true))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(Integer(text));
    }
    if (!is_integer_token(text, 0, slash, true) ||
        !is_integer_token(text, slash + 1, text.size(), false))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);  // num/den constructor canonicalizes
}

}  // namespace thiele
