// Formal q-expansions: Jacobi thetas, Euler products, Eisenstein P, lattice
// theta series, the eta quotient on X0+(p), the j-expansion and its checks.
//
// Variable conventions: the base nome is q = e^{pi*i*tau}. Objects expanded
// in Q = q^2 = e^{2*pi*i*tau} (the j-invariant) say so explicitly.
#ifndef MODPI_QSERIES_HPP
#define MODPI_QSERIES_HPP

#include <string>

#include "modpi/gram.hpp"
#include "modpi/series.hpp"

namespace modpi {

// theta_3 = 1 + 2q + 2q^4 + 2q^9 + ..., exact through q^order.
LaurentSeries theta3_series(long order);
// theta_4 = 1 - 2q + 2q^4 - 2q^9 + ...
LaurentSeries theta4_series(long order);
// theta_2 = 2 q^{1/4} (1 + q^2 + q^6 + q^12 + ...); shift 1/4 carried aside.
FracPrefixSeries theta2_series(long order);

// prod_{n>=1} (1 - q^{step*n}) via the pentagonal number theorem.
LaurentSeries euler_product_series(long step, long order);

// P = 1 - 24 sum sigma_1(m) q^{2m}
LaurentSeries eisenstein_P_series(long order);

// Lattice theta sum_x q^{x^T M x}.
LaurentSeries theta_from_gram(const GramMatrix& M, long order);

// varphi = p^2 eta^4(p tau)/eta^4(tau) + eta^4(tau)/eta^4(p tau), valid for
// p = 7 (mod 12); leading term q^{-(p-1)/3}.
LaurentSeries eta4_quotient(long p, long order);

// j-expansion 1/Q + 744 + 196884 Q + ... in Q = q^2, assembled from
// 32 (theta2^8 + theta3^8 + theta4^8)^3 / (theta2 theta3 theta4)^8 with the
// integrality of all coefficients asserted.
LaurentSeries j_oracle(long order_in_Q);

// Independent cross-oracle E4^3 / Delta, natively in Q.
LaurentSeries j_from_e4_delta(long order_in_Q);

struct SeriesCheck {
    bool ok = false;
    std::string detail;
};

// Mechanized Lemma-1 chain: S(q) = 1728/c(k(q)) from theta series, the
// intermediate substituted identity for (2kk')^2, then S(-Q) compared with
// the j-expansion coefficient-wise through Q^order.
SeriesCheck lemma1_check(long order_in_Q);

// Formal Eq.-(Kexp) identity via the unit series U = kk'/(4 q^{1/2}):
// theta3^4 * U^{2/3} = prod(1-q^{2n})^4, checked through q^order.
SeriesCheck kexp_formal_check(long order);

} // namespace modpi

#endif
