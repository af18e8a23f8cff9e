#include "monogen/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <utility>

#include "monogen/errors.hpp"

namespace monogen {

real::real(mpfr_prec_t prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
}

real::real(const real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);   // same precision, exact
}

real::real(real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

real& real::operator=(real other) {
    mpfr_swap(v_, other.v_);
    return *this;
}

real::~real() {
    mpfr_clear(v_);
}

real real::of_long(long v, mpfr_prec_t prec_bits) {
    real r(prec_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

real real::of_int(const Int& v, mpfr_prec_t prec_bits, mpfr_rnd_t rnd) {
    real r(prec_bits);
    mpfr_set_str(r.v_, v.str().c_str(), 10, rnd);
    return r;
}

real real::of_rat(const Rat& q, mpfr_prec_t prec_bits, mpfr_rnd_t rnd) {
    Int num = numerator(q), den = denominator(q);   // den > 0 by normalization
    // compose numerator and denominator roundings so the quotient moves in
    // the requested direction: the quotient grows with the numerator, and
    // grows with the denominator exactly when the numerator is negative
    mpfr_rnd_t num_rnd = rnd, den_rnd = rnd;
    if (num >= 0) {
        if (rnd == MPFR_RNDU) den_rnd = MPFR_RNDD;
        else if (rnd == MPFR_RNDD) den_rnd = MPFR_RNDU;
    }
    real n = of_int(num, prec_bits, num_rnd);
    real d = of_int(den, prec_bits, den_rnd);
    return div(n, d, rnd);
}

mpfr_prec_t real::precision() const { return mpfr_get_prec(v_); }

int real::sign() const {
    int s = mpfr_sgn(v_);
    return (s > 0) - (s < 0);
}

bool real::less_than(long v) const { return mpfr_cmp_si(v_, v) < 0; }
bool real::at_least(long v) const { return mpfr_cmp_si(v_, v) >= 0; }

Int real::floor_to_int() const {
    if (!mpfr_number_p(v_))
        throw precondition_failed("cannot take the floor of a non-finite value");
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, v_, MPFR_RNDD);
    char* s = mpz_get_str(nullptr, 10, z);
    Int out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, std::strlen(s) + 1);
    mpz_clear(z);
    return out;
}

double real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string real::sci_string(int significant) const {
    if (significant < 1)
        throw precondition_failed("need at least one significant digit");
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", significant - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string real::truncated_string(int fractional) const {
    if (fractional < 0)
        throw precondition_failed("need a nonnegative digit count");
    // scale, floor, then re-insert the decimal point
    real scaled = *this;
    for (int i = 0; i < fractional; ++i)
        scaled = mul(scaled, of_long(10, precision()), MPFR_RNDZ);
    Int t = scaled.floor_to_int();
    std::string digits = t.str();
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits = digits.substr(1);
    }
    if (static_cast<int>(digits.size()) <= fractional)
        digits.insert(0, static_cast<std::size_t>(fractional) + 1 - digits.size(), '0');
    if (fractional > 0)
        digits.insert(digits.size() - static_cast<std::size_t>(fractional), ".");
    return neg ? "-" + digits : digits;
}

real add(const real& a, const real& b, mpfr_rnd_t rnd) {
    real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_add(r.v_, a.v_, b.v_, rnd);
    return r;
}

real sub(const real& a, const real& b, mpfr_rnd_t rnd) {
    real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
}

real mul(const real& a, const real& b, mpfr_rnd_t rnd) {
    real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
}

real div(const real& a, const real& b, mpfr_rnd_t rnd) {
    real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
}

real log_of(const real& a, mpfr_rnd_t rnd) {
    real r(mpfr_get_prec(a.v_));
    mpfr_log(r.v_, a.v_, rnd);
    return r;
}

real exp_of(const real& a, mpfr_rnd_t rnd) {
    real r(mpfr_get_prec(a.v_));
    mpfr_exp(r.v_, a.v_, rnd);
    return r;
}

mpfr_prec_t bits_for_digits(int decimal_digits) {
    if (decimal_digits < 1)
        throw precondition_failed("need at least one digit of precision");
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873626)) + 16;
}

}
