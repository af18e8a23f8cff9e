#ifndef MONOGEN_RINGS_HPP
#define MONOGEN_RINGS_HPP

#include <vector>

#include "monogen/binary_form.hpp"
#include "monogen/numeric.hpp"

namespace monogen {

// commutative ring of rank n over the integers with basis (1, e_1, ..., e_{n-1}),
// closed under multiplication via
//   e_i e_j = m[i][j] + sum_k c[i][j][k] e_k        (i, j, k from 0 to n-2)
struct rank_ring {
    int rank = 0;
    std::vector<std::vector<Int>> m;
    std::vector<std::vector<std::vector<Int>>> c;

    bool operator==(const rank_ring&) const = default;
};

// coordinates on the basis (1, e_1, ..., e_{n-1})
struct ring_element {
    std::vector<Int> x;

    bool operator==(const ring_element&) const = default;
};

// validates shape, commutativity and associativity of the table
rank_ring make_ring(int rank, std::vector<std::vector<Int>> m,
                    std::vector<std::vector<std::vector<Int>>> c);

// the rank-3 ring attached to an integral binary cubic form
rank_ring cubic_ring_from_form(const binary_form& f);

// the rank-2 ring of discriminant D, for D congruent to 0 or 1 mod 4
rank_ring quadratic_ring(const Int& D);

// the subring generated by 1 and k e_1, ..., k e_{n-1}
rank_ring rescale(const rank_ring& r, const Int& k);

// multiplier table of the order canonically attached to an integral binary
// form of degree n with nonzero leading coefficient and nonzero discriminant
rank_ring invariant_order(const binary_form& f);

ring_element mul(const rank_ring& r, const ring_element& u, const ring_element& v);
ring_element basis_element(const rank_ring& r, int i);   // i = 0 gives 1

Int disc_ring(const rank_ring& r);

// largest k such that the ring is 1 + k * (a ring), i.e. Z + k R'
Int content_ring(const rank_ring& r);

// monic characteristic polynomial of multiplication by alpha, descending
std::vector<Int> char_poly(const rank_ring& r, const ring_element& alpha);

// index of Z[alpha] in the ring; 0 when alpha does not generate a
// finite-index subring
Int monogenizer_index(const rank_ring& r, const ring_element& alpha);

// canonical generators of index 1 inside the coordinate box |x_i| <= height,
// constant coordinate zero, first nonzero coordinate positive, listed in
// ascending lexicographic order
std::vector<ring_element> enumerate_monogenizers(const rank_ring& r, long height);

}

#endif
