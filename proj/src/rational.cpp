#include "tqft/rational.hpp"

#include <stdexcept>

namespace tqft {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    return q.str();
}

}  // namespace tqft
