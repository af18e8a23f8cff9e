#ifndef MONOGEN_BOUNDS_HPP
#define MONOGEN_BOUNDS_HPP

#include <optional>
#include <vector>

#include "monogen/binary_form.hpp"
#include "monogen/numeric.hpp"
#include "monogen/real.hpp"

namespace monogen {

struct bound_params {
    Rat C;
    Rat epsilon = Rat(1, 1000000000);
    int digits = 60;   // working decimal precision
};

// the fixed constant 7^12 / 16 entering every feasibility test
Rat d1();

Int dedekind_psi(long r);

// rigorous lower bound for 1 - log(d1)/log(r^12 C) - epsilon, computed with
// directed rounding throughout
real kappa(long r, const bound_params& params);

// psi(r) * floor(36 + 8/kappa), or nothing when r is infeasible for C
std::optional<Int> bound_for_r(long r, const bound_params& params);

struct bound_candidate {
    long r = 0;
    double kappa = 0;
    Int bound;
};

struct bound_report {
    Rat C;
    long r_star = 0;
    double kappa_star = 0;
    Int bound;
    std::vector<bound_candidate> candidates;   // every r actually evaluated
};

// smallest bound over r = 1..1000; r in {1,2,3,5} is always evaluated,
// every other r only when its floor psi(r)*44 undercuts the best so far
bound_report optimize(const bound_params& params);

// d1^(1/(1-kappa)) for an exact rational kappa in (0,1)
real corollary_threshold(const Rat& kappa_value, int digits = 60);

// index-r sublattice of Z^2 in Hermite form, rows (a b; 0 d)
struct sublattice {
    Int a, b, d;

    bool operator==(const sublattice&) const = default;
};

// the psi(r) primitive-quotient sublattices of index r, (a, then b) ascending
std::vector<sublattice> sublattices(long r);

bool sublattice_contains(const sublattice& l, const Int& x, const Int& y);

binary_form form_on_sublattice(const binary_form& f, const sublattice& l);

struct cover_result {
    bool covered = true;
    Int witness_x, witness_y;   // a point missed by every sublattice
};

// do the index-r sublattices cover every nonzero point of the box?
cover_result cover_check(long r, long box);

}

#endif
