#include "monogen/binary_form.hpp"

#include <algorithm>

#include "monogen/detail/linalg.hpp"
#include "monogen/errors.hpp"

namespace monogen {

bool binary_form::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

binary_form make_form(std::vector<Int> coeffs) {
    if (coeffs.size() < 2)
        throw precondition_failed("binary form needs degree >= 1");
    return binary_form{std::move(coeffs)};
}

unimodular2 make_unimodular2(Int a, Int b, Int c, Int d) {
    unimodular2 g{std::move(a), std::move(b), std::move(c), std::move(d)};
    Int dt = g.det();
    if (dt != 1 && dt != -1)
        throw precondition_failed("matrix must have determinant +-1");
    return g;
}

unimodular2 mul(const unimodular2& g, const unimodular2& h) {
    return unimodular2{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                       g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

namespace {

// multiply a homogeneous coefficient vector by the linear form p x + q y
std::vector<Int> mul_linear(const std::vector<Int>& in, const Int& p, const Int& q) {
    std::vector<Int> out(in.size() + 1, Int(0));
    for (std::size_t k = 0; k < in.size(); ++k) {
        out[k] += p * in[k];
        out[k + 1] += q * in[k];
    }
    return out;
}

}

binary_form substitute(const binary_form& f, const Int& p, const Int& q, const Int& r, const Int& s) {
    const int n = f.degree();
    std::vector<Int> acc(static_cast<std::size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        if (f.c[static_cast<std::size_t>(i)] == 0) continue;
        std::vector<Int> basis{Int(1)};
        for (int k = 0; k < n - i; ++k) basis = mul_linear(basis, p, q);
        for (int k = 0; k < i; ++k) basis = mul_linear(basis, r, s);
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] += f.c[static_cast<std::size_t>(i)] * basis[k];
    }
    return binary_form{std::move(acc)};
}

binary_form act(const unimodular2& g, const binary_form& f, action_mode mode) {
    binary_form out = substitute(f, g.a, g.c, g.b, g.d);
    Int dt = g.det();
    Int scale = 1;
    if (mode == action_mode::cubic_twist) scale = dt;           // 1/det, det = +-1
    else if (mode == action_mode::quartic_twist) scale = dt * dt;
    if (scale != 1)
        for (Int& v : out.c) v *= scale;
    return out;
}

binary_form homogenize(const monic_quartic& g) {
    return binary_form{{Int(1), g.b, g.c, g.d, g.e}};
}

Int evaluate(const binary_form& f, const Int& x, const Int& y) {
    const int n = f.degree();
    Int acc = 0;
    std::vector<Int> xp(static_cast<std::size_t>(n) + 1), yp(static_cast<std::size_t>(n) + 1);
    xp[0] = 1; yp[0] = 1;
    for (int i = 1; i <= n; ++i) {
        xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
        yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
    }
    for (int i = 0; i <= n; ++i)
        acc += f.c[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(n - i)] * yp[static_cast<std::size_t>(i)];
    return acc;
}

Int content(const binary_form& f) {
    return content_of(f.c);
}

namespace {

Int sylvester_resultant(const std::vector<Int>& p, const std::vector<Int>& dp) {
    // p has degree n (leading entry nonzero), dp degree n-1
    const std::size_t n = p.size() - 1;
    const std::size_t dim = 2 * n - 1;
    std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim, Int(0)));
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t j = 0; j < p.size(); ++j)
            m[r][r + j] = p[j];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < dp.size(); ++j)
            m[n - 1 + r][r + j] = dp[j];
    return detail::bareiss_det(std::move(m));
}

}

Int discriminant(const binary_form& f) {
    const int n = f.degree();
    if (n < 2)
        throw precondition_failed("discriminant needs degree >= 2");
    if (f.is_zero()) return 0;

    binary_form g = f;
    if (g.c[0] == 0) {
        // some shear (x, y) -> (x, kx + y) with 0 <= k <= n makes the
        // leading coefficient f(1,k) nonzero; shears have determinant 1
        // and leave the discriminant unchanged
        for (int k = 0; k <= n; ++k) {
            if (evaluate(f, 1, Int(k)) != 0) {
                g = substitute(f, 1, 0, Int(k), 1);
                break;
            }
        }
    }

    std::vector<Int> p = g.c;
    std::vector<Int> dp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        dp[static_cast<std::size_t>(i)] = Int(n - i) * p[static_cast<std::size_t>(i)];

    Int res = sylvester_resultant(p, dp);
    Int sign = ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    return sign * res / p[0];
}

}
