#include "monogen/rings.hpp"

#include <algorithm>
#include <array>

#include "monogen/detail/linalg.hpp"
#include "monogen/errors.hpp"

namespace monogen {

ring_element mul(const rank_ring& r, const ring_element& u, const ring_element& v) {
    const int n = r.rank;
    std::vector<Int> out(static_cast<std::size_t>(n), Int(0));
    out[0] += u.x[0] * v.x[0];
    for (int k = 1; k < n; ++k)
        out[static_cast<std::size_t>(k)] += u.x[0] * v.x[static_cast<std::size_t>(k)] + v.x[0] * u.x[static_cast<std::size_t>(k)];
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Int cij = u.x[static_cast<std::size_t>(i)] * v.x[static_cast<std::size_t>(j)];
            if (cij == 0) continue;
            out[0] += cij * r.m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (int k = 1; k < n; ++k)
                out[static_cast<std::size_t>(k)] += cij * r.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
        }
    return ring_element{std::move(out)};
}

ring_element basis_element(const rank_ring& r, int i) {
    std::vector<Int> x(static_cast<std::size_t>(r.rank), Int(0));
    x[static_cast<std::size_t>(i)] = 1;
    return ring_element{std::move(x)};
}

rank_ring make_ring(int rank, std::vector<std::vector<Int>> m,
                    std::vector<std::vector<std::vector<Int>>> c) {
    if (rank < 2 || rank > 4)
        throw precondition_failed("supported ranks are 2, 3 and 4");
    const std::size_t nb = static_cast<std::size_t>(rank - 1);
    if (m.size() != nb || c.size() != nb)
        throw precondition_failed("table shape does not match the rank");
    for (const auto& row : m)
        if (row.size() != nb)
            throw precondition_failed("table shape does not match the rank");
    for (const auto& plane : c) {
        if (plane.size() != nb)
            throw precondition_failed("table shape does not match the rank");
        for (const auto& row : plane)
            if (row.size() != nb)
                throw precondition_failed("table shape does not match the rank");
    }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (m[i][j] != m[j][i])
                throw precondition_failed("multiplication table must be commutative");
            for (std::size_t k = 0; k < nb; ++k)
                if (c[i][j][k] != c[j][i][k])
                    throw precondition_failed("multiplication table must be commutative");
        }

    rank_ring r{rank, std::move(m), std::move(c)};
    for (int i = 1; i < rank; ++i)
        for (int j = 1; j < rank; ++j)
            for (int k = 1; k < rank; ++k) {
                ring_element lhs = mul(r, mul(r, basis_element(r, i), basis_element(r, j)), basis_element(r, k));
                ring_element rhs = mul(r, basis_element(r, i), mul(r, basis_element(r, j), basis_element(r, k)));
                if (lhs != rhs)
                    throw precondition_failed("multiplication table is not associative");
            }
    return r;
}

rank_ring cubic_ring_from_form(const binary_form& f) {
    if (f.degree() != 3)
        throw precondition_failed("cubic ring construction needs a cubic form");
    const Int& a = f.c[0];
    const Int& b = f.c[1];
    const Int& cc = f.c[2];
    const Int& d = f.c[3];
    // basis (1, w, t) with w t = -a d, w^2 = -a c - b w + a t, t^2 = -b d - d w + c t
    std::vector<std::vector<Int>> m{{-a * cc, -a * d}, {-a * d, -b * d}};
    std::vector<std::vector<std::vector<Int>>> c{
        {{-b, a}, {Int(0), Int(0)}},
        {{Int(0), Int(0)}, {-d, cc}}};
    return make_ring(3, std::move(m), std::move(c));
}

rank_ring quadratic_ring(const Int& D) {
    Int r4 = ((D % 4) + 4) % 4;
    if (r4 != 0 && r4 != 1)
        throw precondition_failed("quadratic ring needs D congruent to 0 or 1 mod 4");
    Int m0 = -(D * D - D) / 4;
    return make_ring(2, {{m0}}, {{{D}}});
}

rank_ring rescale(const rank_ring& r, const Int& k) {
    if (k < 1)
        throw precondition_failed("rescaling factor must be positive");
    rank_ring out = r;
    const std::size_t nb = static_cast<std::size_t>(r.rank - 1);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            out.m[i][j] *= k * k;
            for (std::size_t l = 0; l < nb; ++l) out.c[i][j][l] *= k;
        }
    return out;
}

rank_ring invariant_order(const binary_form& f) {
    const int n = f.degree();
    if (n < 2 || n > 4)
        throw precondition_failed("invariant order supports degrees 2 to 4");
    if (f.c[0] == 0)
        throw precondition_failed("invariant order needs a nonzero leading coefficient");
    if (discriminant(f) == 0)
        throw precondition_failed("invariant order needs a nonzero discriminant");

    const std::size_t un = static_cast<std::size_t>(n);
    // theta^k on the power basis (1, theta, ..., theta^(n-1)), k up to 2n-2
    std::vector<std::vector<Rat>> pw(2 * un - 1, std::vector<Rat>(un, Rat(0)));
    for (std::size_t k = 0; k < un; ++k) pw[k][k] = 1;
    std::vector<Rat> red(un);
    for (std::size_t i = 0; i < un; ++i)
        red[i] = make_rat(-f.c[un - i], f.c[0]);
    for (std::size_t k = un; k < 2 * un - 1; ++k) {
        const std::vector<Rat>& prev = pw[k - 1];
        Rat carry = prev[un - 1];
        std::vector<Rat> row(un, Rat(0));
        for (std::size_t i = 1; i < un; ++i) row[i] = prev[i - 1];
        for (std::size_t i = 0; i < un; ++i) pw[k][i] = row[i] + carry * red[i];
    }

    // basis vectors z_i = sum_{j<i} a_j theta^(i-j), triangular with
    // leading power coefficient a_0
    std::vector<std::vector<Rat>> z(un - 1, std::vector<Rat>(un, Rat(0)));
    for (std::size_t i = 1; i < un; ++i)
        for (std::size_t j = 0; j < i; ++j)
            z[i - 1][i - j] += Rat(f.c[j]);

    auto mulpow = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        std::vector<Rat> out(un, Rat(0));
        for (std::size_t i = 0; i < un; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < un; ++j) {
                if (v[j] == 0) continue;
                Rat cij = u[i] * v[j];
                for (std::size_t k = 0; k < un; ++k) out[k] += cij * pw[i + j][k];
            }
        }
        return out;
    };

    const std::size_t nb = un - 1;
    std::vector<std::vector<Int>> m(nb, std::vector<Int>(nb));
    std::vector<std::vector<std::vector<Int>>> c(nb, std::vector<std::vector<Int>>(nb, std::vector<Int>(nb)));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            std::vector<Rat> w = mulpow(z[i], z[j]);
            std::vector<Rat> coords(un, Rat(0));
            for (std::size_t k = un - 1; k >= 1; --k) {
                Rat t = w[k] / z[k - 1][k];
                coords[k] = t;
                for (std::size_t q = 0; q < un; ++q) w[q] -= t * z[k - 1][q];
            }
            coords[0] = w[0];
            for (std::size_t q = 1; q < un; ++q)
                if (w[q] != 0)
                    throw non_integral_table("basis change left a residue");
            for (const Rat& v : coords)
                if (denominator(v) != 1)
                    throw non_integral_table("multiplier table has a fractional entry");
            m[i][j] = numerator(coords[0]);
            for (std::size_t k = 0; k < nb; ++k) c[i][j][k] = numerator(coords[k + 1]);
        }
    return make_ring(n, std::move(m), std::move(c));
}

namespace {

Int trace_of(const rank_ring& r, const ring_element& u) {
    Int tr = 0;
    for (int s = 0; s < r.rank; ++s)
        tr += mul(r, u, basis_element(r, s)).x[static_cast<std::size_t>(s)];
    return tr;
}

}

Int disc_ring(const rank_ring& r) {
    const std::size_t n = static_cast<std::size_t>(r.rank);
    std::vector<std::vector<Int>> t(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = trace_of(r, mul(r, basis_element(r, static_cast<int>(i)),
                                      basis_element(r, static_cast<int>(j))));
    return detail::bareiss_det(std::move(t));
}

Int content_ring(const rank_ring& r) {
    Int disc = disc_ring(r);
    if (disc == 0)
        throw degenerate_discriminant("ring content needs a nonzero discriminant");
    const int nb = r.rank - 1;
    const unsigned disc_power = 2 * static_cast<unsigned>(nb);
    Int adisc = abs(disc);

    Int kmax = 1;
    while (pow_int(kmax + 1, disc_power) <= adisc) ++kmax;

    for (Int k = kmax; k >= 2; --k) {
        if (adisc % pow_int(k, disc_power) != 0) continue;

        // look for integer shifts t with (e_i - t_i)/k closing over Z
        std::vector<Int> t(static_cast<std::size_t>(nb), Int(0));
        bool found = false;
        while (true) {
            bool ok = true;
            for (int i = 0; i < nb && ok; ++i)
                for (int j = 0; j < nb && ok; ++j) {
                    for (int l = 0; l < nb && ok; ++l) {
                        Int v = r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
                        if (l == i) v -= t[static_cast<std::size_t>(j)];
                        if (l == j) v -= t[static_cast<std::size_t>(i)];
                        if (v % k != 0) ok = false;
                    }
                    if (ok) {
                        Int v = r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
                        for (int l = 0; l < nb; ++l)
                            v += r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] * t[static_cast<std::size_t>(l)];
                        if (v % (k * k) != 0) ok = false;
                    }
                }
            if (ok) { found = true; break; }
            // odometer over t in [0,k)^nb
            int pos = 0;
            while (pos < nb) {
                t[static_cast<std::size_t>(pos)] += 1;
                if (t[static_cast<std::size_t>(pos)] < k) break;
                t[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == nb) break;
        }
        if (found) return k;
    }
    return 1;
}

std::vector<Int> char_poly(const rank_ring& r, const ring_element& alpha) {
    const int n = r.rank;
    if (static_cast<int>(alpha.x.size()) != n)
        throw precondition_failed("element size does not match the rank");
    // multiplication matrix, column j = coordinates of alpha * e_j
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        ring_element col = mul(r, alpha, basis_element(r, j));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.x[static_cast<std::size_t>(i)];
    }

    auto mat_mul = [&](const std::vector<std::vector<Int>>& p, const std::vector<std::vector<Int>>& q) {
        std::vector<std::vector<Int>> out(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s = 0;
                for (int k = 0; k < n; ++k)
                    s += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            }
        return out;
    };
    auto trace = [&](const std::vector<std::vector<Int>>& p) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        return s;
    };

    // Faddeev-LeVerrier; every division is exact
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    coeffs[0] = 1;
    std::vector<std::vector<Int>> mk = a;
    coeffs[1] = -trace(mk);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += coeffs[static_cast<std::size_t>(k - 1)];
        mk = mat_mul(a, mk);
        Int tr = trace(mk);
        if (tr % k != 0)
            throw sanity_violation("characteristic polynomial recursion lost integrality");
        coeffs[static_cast<std::size_t>(k)] = -tr / k;
    }
    return coeffs;
}

Int monogenizer_index(const rank_ring& r, const ring_element& alpha) {
    const int n = r.rank;
    if (static_cast<int>(alpha.x.size()) != n)
        throw precondition_failed("element size does not match the rank");
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n));
    ring_element p = basis_element(r, 0);
    for (int k = 0; k < n; ++k) {
        rows[static_cast<std::size_t>(k)] = p.x;
        if (k + 1 < n) p = mul(r, p, alpha);
    }
    return abs(detail::bareiss_det(std::move(rows)));
}

namespace {

// the index reduces to the minor over non-constant coordinates because the
// first power row is (1, 0, ..., 0)
template <typename T>
bool minor_is_unit(int nb, const std::vector<std::vector<T>>& rows) {
    if (nb == 1) {
        T d = rows[0][0];
        return d == 1 || d == -1;
    }
    if (nb == 2) {
        T d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
        return d == 1 || d == -1;
    }
    T d = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    return d == 1 || d == -1;
}

template <typename T>
void table_mul_flat(int n, const std::vector<T>& m, const std::vector<T>& c,
                    const std::vector<T>& u, const std::vector<T>& v, std::vector<T>& out) {
    const int nb = n - 1;
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = 0;
    out[0] += u[0] * v[0];
    for (int k = 1; k < n; ++k)
        out[static_cast<std::size_t>(k)] += u[0] * v[static_cast<std::size_t>(k)] + v[0] * u[static_cast<std::size_t>(k)];
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            T cij = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
            if (cij == 0) continue;
            out[0] += cij * m[static_cast<std::size_t>((i - 1) * nb + (j - 1))];
            for (int k = 1; k < n; ++k)
                out[static_cast<std::size_t>(k)] += cij * c[static_cast<std::size_t>(((i - 1) * nb + (j - 1)) * nb + (k - 1))];
        }
}

template <typename T>
std::vector<ring_element> enumerate_impl(const rank_ring& r, long height,
                                         const std::vector<T>& mflat, const std::vector<T>& cflat) {
    const int n = r.rank;
    const int nb = n - 1;
    std::vector<ring_element> found;

    std::vector<long> x(static_cast<std::size_t>(nb), -height);
    std::vector<T> el(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n)), p3(static_cast<std::size_t>(n));
    std::vector<std::vector<T>> rows(static_cast<std::size_t>(nb), std::vector<T>(static_cast<std::size_t>(nb)));
    while (true) {
        long first = 0;
        for (long v : x)
            if (v != 0) { first = v; break; }
        if (first > 0) {
            el[0] = 0;
            for (int i = 0; i < nb; ++i) el[static_cast<std::size_t>(i + 1)] = static_cast<T>(x[static_cast<std::size_t>(i)]);
            for (int i = 0; i < nb; ++i) rows[0][static_cast<std::size_t>(i)] = el[static_cast<std::size_t>(i + 1)];
            table_mul_flat(n, mflat, cflat, el, el, p2);
            if (nb >= 2)
                for (int i = 0; i < nb; ++i) rows[1][static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i + 1)];
            if (nb >= 3) {
                table_mul_flat(n, mflat, cflat, p2, el, p3);
                for (int i = 0; i < nb; ++i) rows[2][static_cast<std::size_t>(i)] = p3[static_cast<std::size_t>(i + 1)];
            }
            if (minor_is_unit(nb, rows)) {
                std::vector<Int> coords(static_cast<std::size_t>(n), Int(0));
                for (int i = 0; i < nb; ++i) coords[static_cast<std::size_t>(i + 1)] = x[static_cast<std::size_t>(i)];
                found.push_back(ring_element{std::move(coords)});
            }
        }
        // odometer, last coordinate fastest, so output is ascending lex
        int pos = nb - 1;
        while (pos >= 0) {
            if (x[static_cast<std::size_t>(pos)] < height) { x[static_cast<std::size_t>(pos)] += 1; break; }
            x[static_cast<std::size_t>(pos)] = -height;
            --pos;
        }
        if (pos < 0) break;
    }
    return found;
}

}

std::vector<ring_element> enumerate_monogenizers(const rank_ring& r, long height) {
    if (height < 0)
        throw precondition_failed("height must be nonnegative");
    const int nb = r.rank - 1;

    Int max_t = 1;
    for (const auto& row : r.m)
        for (const Int& v : row) max_t = std::max(max_t, Int(abs(v)));
    for (const auto& plane : r.c)
        for (const auto& row : plane)
            for (const Int& v : row) max_t = std::max(max_t, Int(abs(v)));

    // conservative growth bound for the power coordinates and the minor
    Int h(height);
    Int n2 = Int(nb) * nb * h * h * max_t + h * h;
    Int n3 = n2 * h * (1 + Int(nb) * nb * max_t) + n2 * h;
    Int det_bound = 6 * h * n2 * n3 + 6;
    bool fits = det_bound < (Int(1) << 61);

    if (fits) {
        std::vector<long long> mflat, cflat;
        for (const auto& row : r.m)
            for (const Int& v : row) mflat.push_back(static_cast<long long>(v));
        for (const auto& plane : r.c)
            for (const auto& row : plane)
                for (const Int& v : row) cflat.push_back(static_cast<long long>(v));
        return enumerate_impl<long long>(r, height, mflat, cflat);
    }
    std::vector<Int> mflat, cflat;
    for (const auto& row : r.m)
        for (const Int& v : row) mflat.push_back(v);
    for (const auto& plane : r.c)
        for (const auto& row : plane)
            for (const Int& v : row) cflat.push_back(v);
    return enumerate_impl<Int>(r, height, mflat, cflat);
}

}
