#include "monogen/ternary.hpp"

#include <algorithm>
#include <cstdlib>

#include "monogen/errors.hpp"

namespace monogen {

ternary_form make_ternary(mat3 g) {
    for (int i = 0; i < 3; ++i) {
        if (g[i][i] % 2 != 0)
            throw precondition_failed("doubled Gram matrix needs an even diagonal");
        for (int j = i + 1; j < 3; ++j)
            if (g[i][j] != g[j][i])
                throw precondition_failed("doubled Gram matrix must be symmetric");
    }
    return ternary_form{std::move(g)};
}

Int det3(const mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Int unimodular3::det() const { return det3(m); }

unimodular3 make_unimodular3(mat3 m) {
    Int dt = det3(m);
    if (dt != 1 && dt != -1)
        throw precondition_failed("matrix must have determinant +-1");
    return unimodular3{std::move(m)};
}

unimodular3 identity3() {
    return unimodular3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

unimodular3 mul(const unimodular3& g, const unimodular3& h) {
    mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += g.m[i][k] * h.m[k][j];
            out[i][j] = s;
        }
    return unimodular3{out};
}

unimodular3 transpose(const unimodular3& g) {
    mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = g.m[j][i];
    return unimodular3{out};
}

ternary_form anchor_form() {
    return ternary_form{{{{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}}};
}

Int four_det(const ternary_form& q) {
    Int d = det3(q.g);
    if (d % 2 != 0)
        throw precondition_failed("doubled Gram determinant must be even");
    return d / 2;
}

Int evaluate(const ternary_form& q, const std::array<Int, 3>& v) {
    Int s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += v[i] * q.g[i][j] * v[j];
    if (s % 2 != 0)
        throw precondition_failed("doubled Gram value must be even");
    return s / 2;
}

namespace {

mat3 congruence(const mat3& g, const mat3& q) {
    // g q g^T
    mat3 tmp{}, out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += g[i][k] * q[k][j];
            tmp[i][j] = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += tmp[i][k] * g[j][k];
            out[i][j] = s;
        }
    return out;
}

}

ternary_pair act3(const unimodular3& g, const ternary_pair& p) {
    return ternary_pair{ternary_form{congruence(g.m, p.a.g)},
                        ternary_form{congruence(g.m, p.b.g)}};
}

ternary_pair act2(const unimodular2& g, const ternary_pair& p) {
    mat3 na{}, nb{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            na[i][j] = g.a * p.a.g[i][j] + g.b * p.b.g[i][j];
            nb[i][j] = g.c * p.a.g[i][j] + g.d * p.b.g[i][j];
        }
    return ternary_pair{ternary_form{na}, ternary_form{nb}};
}

binary_form resolvent_cubic(const ternary_pair& p) {
    // det(A x + B y) with linear-form entries, expanded per permutation;
    // coefficients are stored as (x, y) pairs per matrix slot
    auto lin = [&](int i, int j) {
        return std::pair<Int, Int>{p.a.g[i][j], p.b.g[i][j]};
    };
    auto mul_ll = [](const std::pair<Int, Int>& u, const std::pair<Int, Int>& v) {
        // (u0 x + u1 y)(v0 x + v1 y)
        return std::array<Int, 3>{u.first * v.first,
                                  u.first * v.second + u.second * v.first,
                                  u.second * v.second};
    };
    auto mul_ql = [](const std::array<Int, 3>& q, const std::pair<Int, Int>& v) {
        return std::array<Int, 4>{q[0] * v.first,
                                  q[0] * v.second + q[1] * v.first,
                                  q[1] * v.second + q[2] * v.first,
                                  q[2] * v.second};
    };
    std::array<Int, 4> acc{Int(0), Int(0), Int(0), Int(0)};
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int t = 0; t < 6; ++t) {
        const int* s = perms[t];
        auto term = mul_ql(mul_ll(lin(0, s[0]), lin(1, s[1])), lin(2, s[2]));
        if (t < 3)
            for (int k = 0; k < 4; ++k) acc[k] += term[k];
        else
            for (int k = 0; k < 4; ++k) acc[k] -= term[k];
    }
    for (Int& v : acc)
        if (v % 2 != 0)
            throw precondition_failed("pair determinant cubic must have even coefficients");
    return binary_form{{acc[0] / 2, acc[1] / 2, acc[2] / 2, acc[3] / 2}};
}

Int disc_pair(const ternary_pair& p) {
    return discriminant(resolvent_cubic(p));
}

namespace {

std::array<Int, 3> mat_apply(const mat3& g, const std::array<Int, 3>& v) {
    std::array<Int, 3> out{Int(0), Int(0), Int(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += g[i][j] * v[j];
    return out;
}

std::array<Int, 3> cross(const std::array<Int, 3>& u, const std::array<Int, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

Int content3(const std::array<Int, 3>& v) {
    return gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
}

bool lex_less(const mat3& lhs, const mat3& rhs) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (lhs[i][j] != rhs[i][j]) return lhs[i][j] < rhs[i][j];
        }
    return false;
}

}

std::optional<unimodular3> reduce_to_anchor(const ternary_form& q, int search_height) {
    if (four_det(q) != 1)
        throw precondition_failed("reduction target requires 4 Det = 1");
    if (q == anchor_form()) return identity3();

    const mat3& G = q.g;

    // isotropic primitive vectors in the smallest nonempty sup-norm shell
    std::vector<std::array<Int, 3>> isotropic;
    for (int s = 1; s <= search_height && isotropic.empty(); ++s) {
        for (long x = -s; x <= s; ++x)
            for (long y = -s; y <= s; ++y)
                for (long z = -s; z <= s; ++z) {
                    if (std::max({std::labs(x), std::labs(y), std::labs(z)}) != s) continue;
                    std::array<Int, 3> v{Int(x), Int(y), Int(z)};
                    if (content3(v) != 1) continue;
                    if (evaluate(q, v) == 0) isotropic.push_back(v);
                }
    }
    if (isotropic.empty()) return std::nullopt;

    std::optional<mat3> best;
    for (const auto& v1 : isotropic) {
        std::array<Int, 3> P = mat_apply(G, v1);
        if (content3(P) != 1)
            throw sanity_violation("gradient of a primitive isotropic vector must be primitive here");

        // w with w . P = 1 via a two-stage extended gcd
        Int s0, s1, g01 = ext_gcd(P[0], P[1], s0, s1);
        Int t, u2;
        ext_gcd(g01, P[2], t, u2);
        std::array<Int, 3> w{t * s0, t * s1, u2};

        // slide w along v1 until it is isotropic too; the pairing with v1 stays 1
        Int qw = evaluate(q, w);
        for (int i = 0; i < 3; ++i) w[i] -= qw * v1[i];

        std::array<Int, 3> gv = mat_apply(G, v1);
        std::array<Int, 3> gw = mat_apply(G, w);
        std::array<Int, 3> u = cross(gv, gw);
        Int cu = content3(u);
        if (cu == 0)
            throw sanity_violation("isotropic plane collapsed during completion");
        for (int i = 0; i < 3; ++i) u[i] /= cu;

        for (int sign = 0; sign < 2; ++sign) {
            mat3 cand{};
            for (int j = 0; j < 3; ++j) {
                cand[0][j] = v1[j];
                cand[1][j] = sign == 0 ? u[j] : -u[j];
                cand[2][j] = w[j];
            }
            if (ternary_form{congruence(cand, G)} != anchor_form()) continue;
            if (!best || lex_less(cand, *best)) best = cand;
        }
    }
    if (!best)
        throw sanity_violation("isotropic vector found but completion failed");
    return make_unimodular3(*best);
}

}
