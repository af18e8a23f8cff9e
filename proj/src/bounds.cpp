#include "monogen/bounds.hpp"

#include <array>

#include "monogen/errors.hpp"

namespace monogen {

Rat d1() {
    return Rat(pow_int(7, 12), Int(16));
}

Int dedekind_psi(long r) {
    if (r < 1)
        throw precondition_failed("psi needs a positive argument");
    Int out(r);
    long rest = r;
    for (long p = 2; static_cast<long long>(p) * p <= rest; ++p) {
        if (rest % p != 0) continue;
        out = out * (p + 1) / p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) out = out * (rest + 1) / rest;
    return out;
}

namespace {

Rat scaled_c(long r, const Rat& c) {
    return Rat(pow_int(Int(r), 12)) * c;
}

}

real kappa(long r, const bound_params& params) {
    if (r < 1)
        throw precondition_failed("kappa needs a positive r");
    if (params.C <= 0)
        throw precondition_failed("kappa needs a positive C");
    Rat x = scaled_c(r, params.C);
    if (x <= 1)
        throw precondition_failed("kappa needs r^12 C > 1");
    mpfr_prec_t prec = bits_for_digits(params.digits);

    // every step keeps the result a true lower bound of the exact value
    real log_num = log_of(real::of_rat(d1(), prec, MPFR_RNDU), MPFR_RNDU);
    real log_den = log_of(real::of_rat(x, prec, MPFR_RNDD), MPFR_RNDD);
    real quot = div(log_num, log_den, MPFR_RNDU);
    real head = sub(real::of_long(1, prec), quot, MPFR_RNDD);
    return sub(head, real::of_rat(params.epsilon, prec, MPFR_RNDU), MPFR_RNDD);
}

std::optional<Int> bound_for_r(long r, const bound_params& params) {
    if (r < 1)
        throw precondition_failed("bound needs a positive r");
    if (params.C <= 0)
        throw precondition_failed("bound needs a positive C");
    if (scaled_c(r, params.C) < d1()) return std::nullopt;   // exact rational test

    real k = kappa(r, params);
    if (k.sign() <= 0 || k.at_least(1)) return std::nullopt;

    mpfr_prec_t prec = bits_for_digits(params.digits);
    real inv = div(real::of_long(8, prec), k, MPFR_RNDU);
    real total = add(real::of_long(36, prec), inv, MPFR_RNDU);
    return Int(dedekind_psi(r) * total.floor_to_int());
}

bound_report optimize(const bound_params& params) {
    bound_report rep;
    rep.C = params.C;
    bool have_best = false;
    Int best_bound;

    for (long r = 1; r <= 1000; ++r) {
        bool always = (r == 1 || r == 2 || r == 3 || r == 5);
        if (!always && have_best && dedekind_psi(r) * 44 >= best_bound) continue;
        std::optional<Int> b = bound_for_r(r, params);
        if (!b) continue;
        double kd = kappa(r, params).to_double();
        rep.candidates.push_back(bound_candidate{r, kd, *b});
        if (!have_best || *b < best_bound) {
            have_best = true;
            best_bound = *b;
            rep.r_star = r;
            rep.kappa_star = kd;
            rep.bound = *b;
        }
    }
    if (!have_best)
        throw no_feasible_r("no r up to 1000 is feasible for this C");
    return rep;
}

real corollary_threshold(const Rat& kappa_value, int digits) {
    if (kappa_value <= 0 || kappa_value >= 1)
        throw precondition_failed("threshold needs kappa strictly between 0 and 1");
    mpfr_prec_t prec = bits_for_digits(digits);
    Rat expo = Rat(1) / (Rat(1) - kappa_value);
    real ln = log_of(real::of_rat(d1(), prec, MPFR_RNDN), MPFR_RNDN);
    real prod = mul(ln, real::of_rat(expo, prec, MPFR_RNDN), MPFR_RNDN);
    return exp_of(prod, MPFR_RNDN);
}

std::vector<sublattice> sublattices(long r) {
    if (r < 1)
        throw precondition_failed("sublattices need a positive index");
    std::vector<sublattice> out;
    for (long a = 1; a <= r; ++a) {
        if (r % a != 0) continue;
        long d = r / a;
        for (long b = 0; b < d; ++b) {
            Int g = gcd(Int(a), Int(b));
            g = gcd(g, Int(d));
            if (g == 1) out.push_back(sublattice{Int(a), Int(b), Int(d)});
        }
    }
    return out;
}

bool sublattice_contains(const sublattice& l, const Int& x, const Int& y) {
    if (x % l.a != 0) return false;
    return (y - (x / l.a) * l.b) % l.d == 0;
}

binary_form form_on_sublattice(const binary_form& f, const sublattice& l) {
    return substitute(f, l.a, l.b, 0, l.d);
}

cover_result cover_check(long r, long box) {
    if (box < 1)
        throw precondition_failed("cover check needs a positive box");
    std::vector<sublattice> ls = sublattices(r);
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y) {
            if (x == 0 && y == 0) continue;
            bool hit = false;
            for (const sublattice& l : ls)
                if (sublattice_contains(l, Int(x), Int(y))) { hit = true; break; }
            if (!hit) return cover_result{false, Int(x), Int(y)};
        }
    return cover_result{true, Int(0), Int(0)};
}

}
