#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace rank1 {

/**
 * Exact rational scalar backed by GMP. Values are kept canonical (lowest
 * terms, positive denominator) by the backend, so `==` is value equality.
 * Expression templates are disabled so that `auto` behaves as a value.
 */
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                               boost::multiprecision::et_off>;

using RVector = std::vector<Rational>;

/** Parses `p`, `-p`, `p/q` (q != 0). Throws ParseError otherwise. */
Rational parse_rational(std::string_view text);

/** Lowest-terms `p/q`, or `p` when the denominator is 1. */
std::string to_string(const Rational& r);

std::string to_string(const RVector& v, std::string_view sep = ",");

/** Parses a comma separated list of rationals. */
RVector parse_rational_list(std::string_view text);

inline int sign(const Rational& r) { return r.sign(); }

/**
 * Exact square root of a nonnegative rational if it is a perfect square
 * of a rational; returns false otherwise.
 */
bool exact_sqrt(const Rational& r, Rational& root);

}   // namespace rank1
