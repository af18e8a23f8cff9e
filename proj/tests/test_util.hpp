#ifndef MONOGEN_TEST_UTIL_HPP
#define MONOGEN_TEST_UTIL_HPP

#include <random>

#include "monogen/binary_form.hpp"
#include "monogen/ternary.hpp"

namespace monogen_test {

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline monogen::Int rand_int(std::mt19937_64& rng, long bound) {
    return monogen::Int(rand_long(rng, -bound, bound));
}

// random word in the standard generators of GL2(Z); det is +-1
inline monogen::unimodular2 rand_unimodular2(std::mt19937_64& rng, int words = 8) {
    using monogen::unimodular2;
    unimodular2 g{1, 0, 0, 1};
    for (int i = 0; i < words; ++i) {
        switch (rand_long(rng, 0, 3)) {
        case 0: g = mul(g, unimodular2{1, 1, 0, 1}); break;
        case 1: g = mul(g, unimodular2{1, -1, 0, 1}); break;
        case 2: g = mul(g, unimodular2{0, -1, 1, 0}); break;
        default: g = mul(g, unimodular2{0, 1, 1, 0}); break;
        }
    }
    return g;
}

// random word in elementary row operations and swaps; det is +-1
inline monogen::unimodular3 rand_unimodular3(std::mt19937_64& rng, int words = 8) {
    monogen::mat3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int w = 0; w < words; ++w) {
        long i = rand_long(rng, 0, 2);
        long j = rand_long(rng, 0, 2);
        if (i == j) continue;
        if (rand_long(rng, 0, 3) == 0) {
            std::swap(m[i], m[j]);
        } else {
            monogen::Int k(rand_long(rng, -2, 2));
            for (int t = 0; t < 3; ++t) m[i][t] += k * m[j][t];
        }
    }
    return monogen::make_unimodular3(m);
}

inline monogen::binary_form rand_form(std::mt19937_64& rng, int degree, long bound,
                                      bool nonzero_lead = false) {
    std::vector<monogen::Int> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rand_int(rng, bound));
    if (nonzero_lead && c[0] == 0) c[0] = 1 + monogen::Int(rand_long(rng, 0, bound - 1));
    return monogen::make_form(std::move(c));
}

}

#endif
