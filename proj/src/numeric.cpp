#include "monogen/numeric.hpp"

#include <limits>

#include "monogen/errors.hpp"

namespace monogen {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;   // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    // floor-division variant so the Bezout pair is a deterministic
    // function of (a, b), not of the platform's division rounding
    if (b == 0) {
        s = (a >= 0) ? 1 : -1;
        t = 0;
        return abs(a);
    }
    Int q = floor_div(a, b);
    Int s1, t1;
    Int g = ext_gcd(b, a - q * b, s1, t1);
    s = t1;
    t = s1 - q * t1;
    return g;
}

Int pow_int(const Int& base, unsigned e) {
    Int acc = 1, b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

// the two-argument rational constructor rejects negative denominators, so
// the sign has to move into the numerator first
Rat make_rat(Int num, Int den) {
    if (den == 0)
        throw precondition_failed("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

Int content_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

std::optional<std::int64_t> to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return std::nullopt;
    return static_cast<std::int64_t>(v);
}

}
