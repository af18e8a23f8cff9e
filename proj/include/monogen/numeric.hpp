#ifndef MONOGEN_NUMERIC_HPP
#define MONOGEN_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace monogen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

// g = gcd(a,b) >= 0 together with s, t such that s*a + t*b = g
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);

Int pow_int(const Int& base, unsigned e);

// exact fraction accepting either sign of denominator; rejects zero
Rat make_rat(Int num, Int den);

// gcd of all entries, >= 0; zero for an empty or all-zero vector
Int content_of(const std::vector<Int>& v);

std::optional<std::int64_t> to_int64(const Int& v);

}

#endif
