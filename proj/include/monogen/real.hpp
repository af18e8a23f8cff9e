#ifndef MONOGEN_REAL_HPP
#define MONOGEN_REAL_HPP

#include <mpfr.h>

#include <string>

#include "monogen/numeric.hpp"

namespace monogen {

// thin RAII wrapper over an mpfr value; every operation takes an explicit
// rounding mode so directed-rounding arguments stay visible at call sites
class real {
public:
    explicit real(mpfr_prec_t prec_bits);
    real(const real& other);
    real(real&& other) noexcept;
    real& operator=(real other);
    ~real();

    static real of_long(long v, mpfr_prec_t prec_bits);
    static real of_int(const Int& v, mpfr_prec_t prec_bits, mpfr_rnd_t rnd);
    // rounds the exact rational in the requested direction
    static real of_rat(const Rat& q, mpfr_prec_t prec_bits, mpfr_rnd_t rnd);

    mpfr_prec_t precision() const;
    int sign() const;                       // -1, 0, 1
    bool less_than(long v) const;
    bool at_least(long v) const;

    Int floor_to_int() const;
    double to_double() const;
    // scientific notation with the given number of significant digits,
    // e.g. "2.71336712e+80"
    std::string sci_string(int significant) const;
    // fixed-point decimal truncated (not rounded) to the given number of
    // fractional digits; only meaningful for nonnegative values
    std::string truncated_string(int fractional) const;

    friend real add(const real& a, const real& b, mpfr_rnd_t rnd);
    friend real sub(const real& a, const real& b, mpfr_rnd_t rnd);
    friend real mul(const real& a, const real& b, mpfr_rnd_t rnd);
    friend real div(const real& a, const real& b, mpfr_rnd_t rnd);
    friend real log_of(const real& a, mpfr_rnd_t rnd);
    friend real exp_of(const real& a, mpfr_rnd_t rnd);

private:
    mpfr_t v_;
};

mpfr_prec_t bits_for_digits(int decimal_digits);

}

#endif
