#ifndef MONOGEN_BINARY_FORM_HPP
#define MONOGEN_BINARY_FORM_HPP

#include <vector>

#include "monogen/numeric.hpp"

namespace monogen {

// integral binary form of degree n, coefficients stored descending in x:
// f(x,y) = c[0] x^n + c[1] x^(n-1) y + ... + c[n] y^n
struct binary_form {
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;
};

binary_form make_form(std::vector<Int> coeffs);

// 2x2 integer matrix with determinant +-1, stored by rows
struct unimodular2 {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }
};

unimodular2 make_unimodular2(Int a, Int b, Int c, Int d);
unimodular2 mul(const unimodular2& g, const unimodular2& h);

enum class action_mode { plain, cubic_twist, quartic_twist };

// right substitution on row vectors: (act(g,f))(x,y) = f((x,y) g), i.e.
// f(a x + c y, b x + d y) for g = (a b; c d).  The twisted modes divide
// by det(g) once (cubics) or twice (quartics), keeping integrality.
binary_form act(const unimodular2& g, const binary_form& f, action_mode mode = action_mode::plain);

// f(p x + q y, r x + s y) for an arbitrary integer matrix (p q; r s)
binary_form substitute(const binary_form& f, const Int& p, const Int& q, const Int& r, const Int& s);

struct monic_quartic {
    Int b, c, d, e;   // x^4 + b x^3 + c x^2 + d x + e
};

binary_form homogenize(const monic_quartic& g);

Int evaluate(const binary_form& f, const Int& x, const Int& y);
Int content(const binary_form& f);

// classical form discriminant; degenerate leading coefficients are handled
// by an invertible shear, the zero form maps to 0
Int discriminant(const binary_form& f);

}

#endif
