#ifndef MONOGEN_RESOLVENT_HPP
#define MONOGEN_RESOLVENT_HPP

#include <utility>
#include <vector>

#include "monogen/binary_form.hpp"
#include "monogen/errors.hpp"
#include "monogen/ternary.hpp"

namespace monogen {

// a quartic form (a,b,c,d,e) seen as a pair of ternary forms: the anchor
// together with the symmetric matrix built from the coefficients
ternary_pair pair_from_quartic(const binary_form& f);

// inverse of pair_from_quartic; needs the anchor in the first slot and a
// vanishing outer corner in the second
binary_form quartic_from_pair(const ternary_pair& p);

// shear the second member along the anchor until its outer corner vanishes
ternary_pair clear_corner(const ternary_pair& p);

// the change of variables on pairs induced by a 2x2 unimodular matrix;
// fixes the anchor, has determinant one, and intertwines the two actions
unimodular3 induced_transform(const unimodular2& g);

// x^3 - c x^2 + (bd - 4e) x + (4ce - d^2 - b^2 e), as a binary cubic
binary_form resolvent_of_monic(const monic_quartic& g);

struct count_branch {
    Int p, q;                                // cubic solution driving the branch
    unimodular2 completion;                  // (p q; u v) with p v - q u = 1
    bool reduced = false;
    binary_form h;                           // transported quartic, when reduced
    std::vector<std::pair<Int, Int>> reps;   // its unit values in the box
};

struct count_report {
    monic_quartic input;
    binary_form resolvent;
    long cubic_height = 0;
    long quartic_height = 0;
    int reduce_height = 0;
    std::vector<count_branch> branches;
    Int total = 0;
    bool complete = true;
    // advisory only: branches grouped by an obvious-equivalence key
    long distinct_transported = 0;
};

// thrown when some branch cannot be reduced within the search height;
// carries everything computed so far
struct reduction_incomplete : error {
    count_report partial;

    reduction_incomplete(std::string what, count_report r)
        : error(std::move(what)), partial(std::move(r)) {}
};

count_report count_monogenizations(const monic_quartic& g, long cubic_height = 200,
                                   long quartic_height = 200, int reduce_height = 50);

}

#endif
