// Truncated Laurent series in the nome q with exact rational coefficients.
//
// A series knows its coefficients for all exponents e with e < trunc.
// Arithmetic propagates truncation conservatively:
//   add:  trunc = min(ta, tb)
//   mul:  trunc = min(ta + vb, tb + va)
//   inv:  trunc = ta - 2*va
// Stored coefficients start at the true valuation (leading coefficient is
// nonzero) unless the series is identically zero up to trunc.
#ifndef MODPI_SERIES_HPP
#define MODPI_SERIES_HPP

#include <optional>
#include <vector>

#include "modpi/numeric.hpp"

namespace modpi {

class LaurentSeries {
public:
    LaurentSeries() : val_(0), trunc_(0) {}

    static LaurentSeries zero(long trunc) {
        LaurentSeries s;
        s.val_ = trunc;
        s.trunc_ = trunc;
        return s;
    }
    static LaurentSeries one(long trunc) { return constant(Rat(1), trunc); }
    static LaurentSeries constant(const Rat& v, long trunc);
    // q^k known through trunc
    static LaurentSeries power_q(long k, long trunc);
    // Coefficients for exponents val, val+1, ..., given valid through trunc.
    static LaurentSeries from_coeffs(long val, std::vector<Rat> coeffs, long trunc);

    long valuation() const { return val_; }   // = trunc when zero-up-to-trunc
    long trunc() const { return trunc_; }
    bool is_zero_up_to_trunc() const { return c_.empty(); }

    const Rat& coeff(long e) const;           // e must satisfy e < trunc
    bool all_integer() const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    friend LaurentSeries operator*(const Rat& s, const LaurentSeries& a);

    LaurentSeries scalar_div(const Rat& s) const;
    LaurentSeries shifted(long k) const;      // multiply by q^k

    // Exact quotient a/b; leading coefficient of b must be nonzero.
    static LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries inverse() const { return div(one(trunc_ - val_), *this); }

    // Integer power; negative n via inverse.
    LaurentSeries pow(long n) const;

    // a^r for a unit series with constant term 1 (val == 0, c0 == 1), rational
    // exponent, via the first-order ODE recurrence. Result has constant term 1.
    LaurentSeries pow_rat_unit(const Rat& r) const;

    // q -> sign * q^k (k >= 1, sign in {+1, -1}).
    LaurentSeries substitute_signed_power(long k, int sgn) const;

    // Inverse reindex: all exponents must be multiples of k; e -> e/k.
    LaurentSeries reindex_div(long k) const;

    LaurentSeries truncated(long new_trunc) const;

    // First exponent e <= through where coefficients differ (both series must
    // know their coefficients through `through`).
    static std::optional<long> first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                                long through);

    std::string str(size_t max_terms = 12) const;

private:
    void normalize();
    long val_;
    long trunc_;
    std::vector<Rat> c_;
};

// q^shift * body, used for objects with fractional exponents (theta_2, eta
// powers). Only combinations whose total shift is an integer may be consumed
// as LaurentSeries.
class FracPrefixSeries {
public:
    FracPrefixSeries(Rat shift, LaurentSeries body) : shift_(std::move(shift)), body_(std::move(body)) {}

    const Rat& shift() const { return shift_; }
    const LaurentSeries& body() const { return body_; }

    friend FracPrefixSeries operator*(const FracPrefixSeries& a, const FracPrefixSeries& b) {
        return {a.shift_ + b.shift_, a.body_ * b.body_};
    }
    friend FracPrefixSeries div(const FracPrefixSeries& a, const FracPrefixSeries& b) {
        return {a.shift_ - b.shift_, LaurentSeries::div(a.body_, b.body_)};
    }
    FracPrefixSeries pow(long n) const { return {Rat(n) * shift_, body_.pow(n)}; }

    // Requires integral total shift.
    LaurentSeries to_laurent() const;

private:
    Rat shift_;
    LaurentSeries body_;
};

} // namespace modpi

#endif
