// Arithmetic in Q(u) = Q[x]/(m(x)) with a designated real root of m selected
// by an isolating rational interval.
#ifndef MODPI_ALGEBRAIC_HPP
#define MODPI_ALGEBRAIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "modpi/intpoly.hpp"

namespace modpi {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // m must change sign on [lo, hi] and have exactly one root there; both are
    // checked at construction.
    static FieldPtr create(IntPoly m, Rat lo, Rat hi);

    // Convenience: m with exactly one real root overall.
    static FieldPtr create_unique_real_root(IntPoly m);

    const IntPoly& modulus() const { return m_; }
    size_t degree() const { return static_cast<size_t>(m_.degree()); }
    Rat interval_lo() const { return lo_; }
    Rat interval_hi() const { return hi_; }

    // Designated real root refined to absolute error < 2^-prec.
    BigReal root(unsigned prec) const;

    bool same_field(const NumberField& o) const;

    // u^k reduced mod m for k in [0, 2*deg-2]; used by element multiplication.
    const std::vector<std::vector<Rat>>& power_table() const { return powers_; }

private:
    NumberField(IntPoly m, Rat lo, Rat hi);

    IntPoly m_;
    Rat lo_, hi_;
    std::vector<std::vector<Rat>> powers_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, std::pair<Rat, Rat>> refined_;
};

class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(FieldPtr field, std::vector<Rat> coords);

    static AlgebraicNumber from_rat(const FieldPtr& field, const Rat& v);
    static AlgebraicNumber generator(const FieldPtr& field);
    // Reduce an arbitrary-degree rational polynomial in u.
    static AlgebraicNumber from_poly(const FieldPtr& field, const std::vector<Rat>& poly);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // Valid only when is_rational().
    Rat rational_value() const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    AlgebraicNumber operator-() const;
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

    friend AlgebraicNumber operator*(const Rat& s, const AlgebraicNumber& a);

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(unsigned e) const;

    // Numeric value at the designated root, absolute error < 2^-prec.
    BigReal eval(unsigned prec) const;

    std::string str() const;

private:
    static void check_same(const AlgebraicNumber& a, const AlgebraicNumber& b);
    FieldPtr field_;
    std::vector<Rat> coords_;
};

// p evaluated at a, reduced in the field of a.
AlgebraicNumber poly_eval_alg(const IntPoly& p, const AlgebraicNumber& a);

} // namespace modpi

#endif
