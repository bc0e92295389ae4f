// Arbitrary-precision real values with an explicit working precision.
//
// Thin value wrapper over MPFR. Every operation rounds to nearest and the
// result carries min(precision of operands); tolerances used by callers are
// expected to include guard bits over their stated targets.
#ifndef MODPI_BIGREAL_HPP
#define MODPI_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "modpi/numeric.hpp"

namespace modpi {

class BigReal {
public:
    BigReal() : prec_(64) { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
    explicit BigReal(long v, unsigned prec = 64) : prec_(prec) {
        mpfr_init2(x_, prec_);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigReal(const Int& v, unsigned prec) : prec_(prec) {
        mpfr_init2(x_, prec_);
        mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
    }
    BigReal(const Rat& v, unsigned prec) : prec_(prec) {
        mpfr_init2(x_, prec_);
        mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
    }
    BigReal(const BigReal& o) : prec_(o.prec_) {
        mpfr_init2(x_, prec_);
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(x_, prec_);
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(BigReal o) noexcept {
        prec_ = o.prec_;
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    unsigned precision_bits() const { return prec_; }
    mpfr_srcptr raw() const { return x_; }

    static BigReal pi(unsigned prec) {
        BigReal r = with_prec(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r = with_prec(join(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r = with_prec(join(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r = with_prec(join(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (mpfr_zero_p(b.x_)) throw std::domain_error("BigReal division by zero");
        BigReal r = with_prec(join(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r = with_prec(prec_);
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { *this = *this + o; return *this; }
    BigReal& operator-=(const BigReal& o) { *this = *this - o; return *this; }
    BigReal& operator*=(const BigReal& o) { *this = *this * o; return *this; }
    BigReal& operator/=(const BigReal& o) { *this = *this / o; return *this; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

    int sgn() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    BigReal abs() const {
        BigReal r = with_prec(prec_);
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigReal sqrt() const {
        if (sgn() < 0) throw std::domain_error("BigReal sqrt of negative value");
        BigReal r = with_prec(prec_);
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }
    // Real n-th root by MPFR's correctly rounded rootn (Newton internally).
    BigReal nth_root(unsigned long n) const {
        if (n == 0) throw std::domain_error("BigReal 0-th root");
        if (sgn() <= 0 && n % 2 == 0) throw std::domain_error("BigReal even root of non-positive value");
        if (sgn() <= 0) throw std::domain_error("BigReal root of non-positive value");
        BigReal r = with_prec(prec_);
        mpfr_rootn_ui(r.x_, x_, n, MPFR_RNDN);
        return r;
    }
    BigReal exp() const {
        BigReal r = with_prec(prec_);
        mpfr_exp(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigReal pow_si(long e) const {
        BigReal r = with_prec(prec_);
        mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
        return r;
    }
    BigReal round_to(unsigned prec) const {
        BigReal r = with_prec(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    // 2^-k at this value's precision; handy for tolerance constants.
    static BigReal pow2(long k, unsigned prec) {
        BigReal r = with_prec(prec);
        mpfr_set_ui_2exp(r.x_, 1, k, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Nearest integer as exact Int.
    Int to_int_nearest() const {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_round(t, x_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    // Exact value as a dyadic rational (MPFR values are m*2^e).
    Rat to_rational_exact() const;

    // Decimal string with the given number of fractional digits, truncated.
    std::string to_decimal(size_t frac_digits) const;

    std::string str(size_t digits = 30) const;

private:
    static unsigned join(const BigReal& a, const BigReal& b) {
        return a.prec_ < b.prec_ ? a.prec_ : b.prec_;
    }
    static BigReal with_prec(unsigned prec) {
        BigReal r;
        mpfr_set_prec(r.x_, prec);
        r.prec_ = prec;
        mpfr_set_zero(r.x_, 1);
        return r;
    }

    mpfr_t x_;
    unsigned prec_;
};

} // namespace modpi

#endif
