#include "oneskel/rational.hpp"

#include <limits>

#include "oneskel/errors.hpp"

namespace oneskel {

std::string to_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const RationalVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

BigInt parse_signed(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("", "not an exact rational: \"" + std::string(whole) + "\"");
    BigInt z{std::string(s)};
    return negative ? BigInt(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw ParseError("", "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        BigInt num = parse_signed(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw ParseError("", "bad denominator in \"" + std::string(text) + "\"");
        BigInt den(std::string{den_text});
        if (den == 0)
            throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos)
    {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
            int_part.remove_prefix(1);
        if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac))
            throw ParseError("", "not an exact decimal: \"" + std::string(text) + "\"");
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
        BigInt num = whole * scale + BigInt(std::string(frac));
        Rational q(num, scale);
        return negative ? Rational(-q) : q;
    }

    return Rational(parse_signed(text, text));
}

Int to_int(const BigInt& z)
{
    if (z > std::numeric_limits<Int>::max() || z < std::numeric_limits<Int>::min())
        throw InternalError("integer overflow narrowing " + z.str());
    return z.convert_to<Int>();
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

} // namespace oneskel
