// Arithmetic invariants of the quaternion algebra A(p), the eight lattice
// theta series, their linear independence, the Fricke numeric relation, and
// the Eisenstein span identity.
#ifndef MODPI_QUATFORMS_HPP
#define MODPI_QUATFORMS_HPP

#include <vector>

#include "modpi/bigreal.hpp"
#include "modpi/gram.hpp"
#include "modpi/qseries.hpp"

namespace modpi {

// Class number h(D) of the imaginary quadratic order of discriminant D < 0,
// by counting reduced primitive binary quadratic forms.
long class_number(long D);

// Genus of X0(p).
long genus_x0(long p);

// Type number T(p) = (1+g)/2 + 2^{-t_p-1} h(-p); integrality asserted.
long type_number(long p);

struct ArithInvariants {
    long p;
    long genus_g;
    int t_p;
    long class_number_h;
    long type_number_T;
};

ArithInvariants arith_invariants(long p);

// Exact rank over Q of the coefficient matrix (rows = series, columns =
// q-exponents 0..order).
size_t independence_rank(const std::vector<LaurentSeries>& series, long order);

// Eq.-span check: n P(q^n) - P(q) = 6 th_1 + 12 th_2 + 24 (th_3 + ... + th_8)
// coefficient-for-coefficient through q^order, n = p = 163.
SeriesCheck span_identity_check(const std::vector<LaurentSeries>& thetas, long p, long order);

// | theta_M(e^{-pi/(t sqrt p)}) - t^2 theta_M(e^{-pi t / sqrt p}) | < 2^{-prec/2}
SeriesCheck fricke_numeric_check(const GramMatrix& M, const Rat& t, long p, unsigned prec);

} // namespace modpi

#endif
