#include "tobl/rational.hpp"

namespace tobl {

Rational parse_rational(const std::string& text)
{
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed rational: '" + text + "'");
    };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw bad();
        // Division canonicalizes sign and gcd.
        return Rational(num) / Rational(den);
    }
    catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string to_string(const Rational& value)
{
    return value.str();
}

}  // namespace tobl
