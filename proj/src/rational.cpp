#include "rank1/rational.hpp"

#include <cctype>

#include "rank1/errors.hpp"

namespace rank1 {

namespace {

bool is_integer_literal(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
    {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
    {
        if (!is_integer_literal(text))
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const RVector& v, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i > 0)
            out += sep;
        out += to_string(v[i]);
    }
    return out;
}

RVector parse_rational_list(std::string_view text)
{
    RVector out;
    std::size_t start = 0;
    while (start <= text.size())
    {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto item = text.substr(start, end - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        out.push_back(parse_rational(item));
        start = end + 1;
    }
    return out;
}

bool exact_sqrt(const Rational& r, Rational& root)
{
    if (r < 0)
        return false;
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den)
        return false;
    root = Rational(sn, sd);
    return true;
}

}   // namespace rank1
