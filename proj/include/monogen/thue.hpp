#ifndef MONOGEN_THUE_HPP
#define MONOGEN_THUE_HPP

#include <utility>
#include <vector>

#include "monogen/binary_form.hpp"
#include "monogen/numeric.hpp"

namespace monogen {

struct thue_target {
    Int value;
    bool absolute = false;   // match |F| = |value| instead of F = value

    static thue_target exact(Int m) { return thue_target{std::move(m), false}; }
    static thue_target plus_minus_one() { return thue_target{Int(1), true}; }
};

struct thue_solutions {
    binary_form form;
    thue_target target;
    long height = 0;
    bool sign_identified = false;
    std::vector<std::pair<Int, Int>> sols;   // ascending lexicographic
};

// all solutions of F(x,y) = target with |x|, |y| <= height; when
// sign_identified is set, only the representative of each {v, -v} pair
// whose first nonzero coordinate is positive is kept
thue_solutions solve_box(const binary_form& f, const thue_target& target, long height,
                         bool sign_identified);

}

#endif
