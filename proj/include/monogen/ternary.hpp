#ifndef MONOGEN_TERNARY_HPP
#define MONOGEN_TERNARY_HPP

#include <array>
#include <optional>

#include "monogen/binary_form.hpp"
#include "monogen/numeric.hpp"

namespace monogen {

using mat3 = std::array<std::array<Int, 3>, 3>;

// integral ternary quadratic form stored as its doubled Gram matrix:
// symmetric with even diagonal, Q(v) = v^T g v / 2
struct ternary_form {
    mat3 g;

    bool operator==(const ternary_form&) const = default;
};

ternary_form make_ternary(mat3 g);

struct ternary_pair {
    ternary_form a, b;

    bool operator==(const ternary_pair&) const = default;
};

// 3x3 integer matrix with determinant +-1, stored by rows
struct unimodular3 {
    mat3 m;

    Int det() const;
    bool operator==(const unimodular3&) const = default;
};

unimodular3 make_unimodular3(mat3 m);
unimodular3 identity3();
unimodular3 mul(const unimodular3& g, const unimodular3& h);
unimodular3 transpose(const unimodular3& g);

Int det3(const mat3& m);

// the fixed anchor form x z - y^2 as a doubled Gram matrix
ternary_form anchor_form();

// determinant invariant scaled to stay integral: det(g)/2 = 4 Det(Q)
Int four_det(const ternary_form& q);

Int evaluate(const ternary_form& q, const std::array<Int, 3>& v);

// change of variables on both members: g G g^T
ternary_pair act3(const unimodular3& g, const ternary_pair& p);

// integral linear combinations (p A + q B, r A + s B)
ternary_pair act2(const unimodular2& g, const ternary_pair& p);

// the binary cubic 4 Det(A x + B y)
binary_form resolvent_cubic(const ternary_pair& p);

Int disc_pair(const ternary_pair& p);

// a change of variables carrying q (with 4 Det = 1) to the anchor form,
// found through isotropic vectors of sup norm at most search_height;
// empty when none exists within the bound
std::optional<unimodular3> reduce_to_anchor(const ternary_form& q, int search_height);

}

#endif
