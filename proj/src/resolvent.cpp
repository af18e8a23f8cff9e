#include "monogen/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "monogen/thue.hpp"

namespace monogen {

ternary_pair pair_from_quartic(const binary_form& f) {
    if (f.degree() != 4)
        throw precondition_failed("pair construction needs a quartic form");
    const Int& a = f.c[0];
    const Int& b = f.c[1];
    const Int& c = f.c[2];
    const Int& d = f.c[3];
    const Int& e = f.c[4];
    mat3 gb{{{2 * a, b, 0}, {b, 2 * c, d}, {0, d, 2 * e}}};
    return ternary_pair{anchor_form(), make_ternary(gb)};
}

binary_form quartic_from_pair(const ternary_pair& p) {
    if (p.a != anchor_form())
        throw precondition_failed("pair inversion needs the anchor in the first slot");
    if (p.b.g[0][2] != 0)
        throw precondition_failed("pair inversion needs a vanishing outer corner");
    const mat3& gb = p.b.g;
    return binary_form{{gb[0][0] / 2, gb[0][1], gb[1][1] / 2, gb[1][2], gb[2][2] / 2}};
}

ternary_pair clear_corner(const ternary_pair& p) {
    if (p.a != anchor_form())
        throw precondition_failed("corner clearing needs the anchor in the first slot");
    Int t = p.b.g[0][2];
    mat3 gb = p.b.g;
    const mat3 ga = anchor_form().g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gb[i][j] -= t * ga[i][j];
    return ternary_pair{p.a, make_ternary(gb)};
}

unimodular3 induced_transform(const unimodular2& g) {
    const Int& a = g.a;
    const Int& b = g.b;
    const Int& c = g.c;
    const Int& d = g.d;
    Int dt = g.det();   // +-1, so dividing is multiplying
    mat3 m{{{a * a, a * b, b * b},
            {2 * a * c, a * d + b * c, 2 * b * d},
            {c * c, c * d, d * d}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] *= dt;
    return make_unimodular3(m);
}

binary_form resolvent_of_monic(const monic_quartic& g) {
    return binary_form{{Int(1), -g.c, g.b * g.d - 4 * g.e,
                        4 * g.c * g.e - g.d * g.d - g.b * g.b * g.e}};
}

namespace {

// (p q; u v) with p v - q u = 1 and (|u|, |v|, u, v) minimal
unimodular2 complete_row(const Int& p, const Int& q) {
    Int s, t;
    Int g = ext_gcd(p, q, s, t);
    if (g != 1)
        throw precondition_failed("row is not primitive");
    Int u0 = -t, v0 = s;

    std::vector<Int> ks;
    if (p == 0) {
        ks.push_back(0);
    } else {
        long long k0 = std::llround(static_cast<double>(-u0) / static_cast<double>(p));
        for (long long k = k0 - 2; k <= k0 + 2; ++k) ks.push_back(Int(k));
    }
    std::optional<std::array<Int, 4>> best;   // |u|, |v|, u, v
    Int bu = 0, bv = 0;
    for (const Int& k : ks) {
        Int u = u0 + k * p, v = v0 + k * q;
        std::array<Int, 4> key{abs(u), abs(v), u, v};
        if (!best || key < *best) {
            best = key;
            bu = u;
            bv = v;
        }
    }
    return make_unimodular2(p, q, bu, bv);
}

// obvious equivalences of a transported quartic: both variable sign flips
// act the same way on a quartic, so the orbit is {f(x,y), f(x,-y)} up to
// overall negation
std::vector<Int> equivalence_key(const binary_form& h) {
    std::vector<std::vector<Int>> variants;
    std::vector<Int> base = h.c;
    std::vector<Int> odd = base;
    for (std::size_t i = 1; i < odd.size(); i += 2) odd[i] = -odd[i];
    for (const auto& v : {base, odd}) {
        std::vector<Int> neg = v;
        for (Int& x : neg) x = -x;
        variants.push_back(v);
        variants.push_back(neg);
    }
    return *std::min_element(variants.begin(), variants.end());
}

}

count_report count_monogenizations(const monic_quartic& g, long cubic_height,
                                   long quartic_height, int reduce_height) {
    count_report rep;
    rep.input = g;
    rep.cubic_height = cubic_height;
    rep.quartic_height = quartic_height;
    rep.reduce_height = reduce_height;
    rep.resolvent = resolvent_of_monic(g);

    if (discriminant(rep.resolvent) == 0)
        throw degenerate_discriminant("resolvent cubic is degenerate");

    thue_solutions sols = solve_box(rep.resolvent, thue_target::exact(1), cubic_height, false);

    binary_form quartic = homogenize(g);
    ternary_pair base = pair_from_quartic(quartic);

    std::set<std::vector<Int>> classes;
    for (const auto& [p, q] : sols.sols) {
        count_branch br;
        br.p = p;
        br.q = q;
        br.completion = complete_row(p, q);
        ternary_pair moved = act2(br.completion, base);
        std::optional<unimodular3> r = reduce_to_anchor(moved.a, reduce_height);
        if (!r) {
            rep.complete = false;
            rep.branches.push_back(std::move(br));
            continue;
        }
        ternary_pair anchored = act3(*r, moved);
        if (anchored.a != anchor_form())
            throw sanity_violation("reduction did not land on the anchor");
        br.h = quartic_from_pair(clear_corner(anchored));
        br.reps = solve_box(br.h, thue_target::plus_minus_one(), quartic_height, true).sols;
        br.reduced = true;
        rep.total += static_cast<long>(br.reps.size());
        classes.insert(equivalence_key(br.h));
        rep.branches.push_back(std::move(br));
    }
    rep.distinct_transported = static_cast<long>(classes.size());
    if (rep.total > 2760)
        throw sanity_violation("branch total exceeded the proven ceiling of 2760");

    if (!rep.complete)
        throw reduction_incomplete("a branch resisted reduction within the search height", rep);
    return rep;
}

}
