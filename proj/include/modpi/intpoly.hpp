// Dense univariate polynomials with exact integer coefficients, plus
// Sturm-sequence real-root isolation and certified refinement.
#ifndef MODPI_INTPOLY_HPP
#define MODPI_INTPOLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "modpi/bigreal.hpp"
#include "modpi/numeric.hpp"

namespace modpi {

class IntPoly {
public:
    IntPoly() = default;
    // Coefficients in ascending degree; trailing zeros are trimmed.
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }
    // x^k
    static IntPoly monomial(size_t k, const Int& v = Int(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& operator[](size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend IntPoly operator*(const Int& s, const IntPoly& p);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    BigReal eval(const BigReal& x) const;
    int sign_at(const Rat& x) const { return sign(eval(x)); }

    // gcd of all coefficients (non-negative); 0 for the zero polynomial.
    Int content() const;
    IntPoly primitive_part() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// All distinct real roots of a squarefree polynomial, as disjoint open
// rational intervals with a strict sign change of p at the endpoints.
// Throws std::domain_error when gcd(p, p') is non-constant (repeated root).
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p);

// Count of distinct real roots of p in (a, b] via Sturm sign variations.
int count_real_roots(const IntPoly& p, const Rat& a, const Rat& b);

// Refine the simple root of p isolated by [lo, hi] (p must change sign) to
// absolute error < 2^-prec_bits. Bisection outer loop with an exact sign
// certificate; the returned value carries prec_bits + 32 working bits.
BigReal refine_root(const IntPoly& p, const Rat& lo, const Rat& hi, unsigned prec_bits);

// Exact rational enclosure of width < 2^-prec_bits around the isolated root.
std::pair<Rat, Rat> refine_root_interval(const IntPoly& p, const Rat& lo, const Rat& hi,
                                         unsigned prec_bits);

// All integer roots with multiplicity (divisor candidates + deflation).
std::vector<Int> integer_roots(const IntPoly& p);

} // namespace modpi

#endif
