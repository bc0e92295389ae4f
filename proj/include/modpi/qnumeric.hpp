// Numeric evaluation of the defining series at a real nome 0 < q0 < 1.
//
// These sum the defining series directly (not the truncated formal objects)
// and stop only when a proven tail bound drops below 2^-(prec+8); results
// carry prec + 32 working bits.
#ifndef MODPI_QNUMERIC_HPP
#define MODPI_QNUMERIC_HPP

#include "modpi/bigreal.hpp"
#include "modpi/gram.hpp"

namespace modpi {

BigReal theta2_num(const BigReal& q0, unsigned prec);
BigReal theta3_num(const BigReal& q0, unsigned prec);
BigReal theta4_num(const BigReal& q0, unsigned prec);

// sum over Z^4 of q0^(x^T M x)
BigReal gram_theta_num(const GramMatrix& M, const BigReal& q0, unsigned prec);

// sum over Z^2 of q0^(a u^2 + b uv + c v^2), positive definite form
BigReal binform_theta_num(long a, long b, long c, const BigReal& q0, unsigned prec);

// prod_{n>=1} (1 - q0^{2n})
BigReal euler_even_num(const BigReal& q0, unsigned prec);

// P(q0) = 1 - 24 sum n q0^{2n} / (1 - q0^{2n})
BigReal eisenstein_P_num(const BigReal& q0, unsigned prec);

// 3F2(1/6, 5/6, 1/2; 1, 1; c), requires |c| < 1
BigReal clausen_3f2_num(const BigReal& c, unsigned prec);

struct EllipticModuli {
    BigReal k;
    BigReal kprime;
};

// k = theta2^2/theta3^2, k' = theta4^2/theta3^2 at the given nome.
EllipticModuli elliptic_moduli_num(const BigReal& q0, unsigned prec);

} // namespace modpi

#endif
