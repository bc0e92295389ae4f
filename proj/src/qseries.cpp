#include "modpi/qseries.hpp"

#include <sstream>

namespace modpi {

LaurentSeries theta3_series(long order) {
    if (order < 1) throw std::domain_error("theta3_series: order must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    c[0] = 1;
    for (long n = 1; n * n <= order; ++n) c[static_cast<size_t>(n * n)] = 2;
    return LaurentSeries::from_coeffs(0, std::move(c), order + 1);
}

LaurentSeries theta4_series(long order) {
    if (order < 1) throw std::domain_error("theta4_series: order must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    c[0] = 1;
    for (long n = 1; n * n <= order; ++n) c[static_cast<size_t>(n * n)] = (n % 2 == 0) ? 2 : -2;
    return LaurentSeries::from_coeffs(0, std::move(c), order + 1);
}

FracPrefixSeries theta2_series(long order) {
    if (order < 1) throw std::domain_error("theta2_series: order must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    for (long n = 0; n * n + n <= order; ++n) c[static_cast<size_t>(n * n + n)] = 2;
    return FracPrefixSeries(rat(1, 4), LaurentSeries::from_coeffs(0, std::move(c), order + 1));
}

LaurentSeries euler_product_series(long step, long order) {
    if (step < 1 || order < 1) throw std::domain_error("euler_product_series: bad arguments");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    c[0] = 1;
    // Pentagonal number theorem: sum_k (-1)^k x^{k(3k-1)/2}, x = q^step.
    for (long k = 1;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (step * e1 > order && step * e2 > order) break;
        Rat s = (k % 2 == 0) ? 1 : -1;
        if (step * e1 <= order) c[static_cast<size_t>(step * e1)] += s;
        if (step * e2 <= order) c[static_cast<size_t>(step * e2)] += s;
    }
    return LaurentSeries::from_coeffs(0, std::move(c), order + 1);
}

LaurentSeries eisenstein_P_series(long order) {
    if (order < 2) throw std::domain_error("eisenstein_P_series: order must be >= 2");
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    c[0] = 1;
    // sigma_1 sieve: add d to every multiple of d.
    long mmax = order / 2;
    std::vector<Int> sigma(static_cast<size_t>(mmax) + 1, Int(0));
    for (long d = 1; d <= mmax; ++d)
        for (long m = d; m <= mmax; m += d) sigma[static_cast<size_t>(m)] += d;
    for (long m = 1; m <= mmax; ++m) c[static_cast<size_t>(2 * m)] = Rat(-24 * sigma[static_cast<size_t>(m)]);
    return LaurentSeries::from_coeffs(0, std::move(c), order + 1);
}

LaurentSeries theta_from_gram(const GramMatrix& M, long order) {
    if (order < 1) throw std::domain_error("theta_from_gram: order must be >= 1");
    if (!M.is_symmetric() || !M.is_positive_definite() || !M.has_even_diagonal())
        throw std::domain_error("theta_from_gram: matrix must be symmetric positive definite with even diagonal");
    auto counts = gram_counts(M, order);
    std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
    for (long m = 0; m <= order; ++m) c[static_cast<size_t>(m)] = Rat(counts[static_cast<size_t>(m)]);
    return LaurentSeries::from_coeffs(0, std::move(c), order + 1);
}

LaurentSeries eta4_quotient(long p, long order) {
    if (p % 12 != 7)
        throw std::domain_error("eta4_quotient: p must be 7 (mod 12) for Fricke invariance");
    if (order < 1) throw std::domain_error("eta4_quotient: order must be >= 1");
    long v = (p - 1) / 3; // eta^4(tau)/eta^4(p tau) has valuation -v
    long work = order + v;
    LaurentSeries e1 = euler_product_series(2, work).pow(4);      // prod (1-q^{2n})^4
    LaurentSeries ep = euler_product_series(2 * p, work).pow(4);  // prod (1-q^{2pn})^4
    LaurentSeries down = LaurentSeries::div(e1, ep).shifted(-v);
    LaurentSeries up = Rat(p * p) * LaurentSeries::div(ep, e1).shifted(v);
    return down + up;
}

LaurentSeries j_oracle(long order_in_Q) {
    if (order_in_Q < 1) throw std::domain_error("j_oracle: order must be >= 1");
    long order_q = 2 * order_in_Q + 4;
    LaurentSeries t3 = theta3_series(order_q);
    LaurentSeries t4 = theta4_series(order_q);
    LaurentSeries t2_4 = theta2_series(order_q).pow(4).to_laurent(); // shift 1/4 * 4 = 1
    LaurentSeries t2_8 = t2_4.pow(2);
    LaurentSeries t3_8 = t3.pow(8);
    LaurentSeries t4_8 = t4.pow(8);
    LaurentSeries num = (t2_8 + t3_8 + t4_8).pow(3);
    LaurentSeries den = t2_8 * t3_8 * t4_8;
    LaurentSeries j_q = Rat(32) * LaurentSeries::div(num, den);
    LaurentSeries j = j_q.reindex_div(2); // even exponents only (asserted inside)
    if (!j.all_integer()) throw std::logic_error("j_oracle: non-integer coefficient in j-expansion");
    return j.truncated(order_in_Q + 1);
}

LaurentSeries j_from_e4_delta(long order_in_Q) {
    long order = order_in_Q + 2;
    // E4 = 1 + 240 sum sigma_3(n) Q^n
    std::vector<Rat> e4c(static_cast<size_t>(order) + 1, Rat(0));
    e4c[0] = 1;
    std::vector<Int> sigma3(static_cast<size_t>(order) + 1, Int(0));
    for (long d = 1; d <= order; ++d) {
        Int d3 = Int(d) * d * d;
        for (long m = d; m <= order; m += d) sigma3[static_cast<size_t>(m)] += d3;
    }
    for (long n = 1; n <= order; ++n) e4c[static_cast<size_t>(n)] = Rat(240 * sigma3[static_cast<size_t>(n)]);
    LaurentSeries e4 = LaurentSeries::from_coeffs(0, std::move(e4c), order + 1);
    LaurentSeries delta = euler_product_series(1, order).pow(24).shifted(1);
    return LaurentSeries::div(e4.pow(3), delta).truncated(order_in_Q + 1);
}

namespace {

// w = (2 k k')^2 = 4 theta2^4 theta4^4 / theta3^8 as a q-series (valuation 1).
LaurentSeries w_series(long order) {
    LaurentSeries t2_4 = theta2_series(order + 2).pow(4).to_laurent(); // shift 1
    LaurentSeries t4_4 = theta4_series(order + 2).pow(4);
    LaurentSeries t3_8 = theta3_series(order + 2).pow(8);
    return Rat(4) * LaurentSeries::div(t2_4 * t4_4, t3_8);
}

} // namespace

SeriesCheck lemma1_check(long order_in_Q) {
    SeriesCheck res;
    if (order_in_Q < 3) throw std::domain_error("lemma1_check: order must be >= 3");
    long n = order_in_Q;

    // Intermediate identity: w(-q^2) = -(1/4) (theta2^4/(theta3^2 theta4^2))^2.
    {
        long ord = 2 * n + 6;
        LaurentSeries lhs = w_series(n + 3).substitute_signed_power(2, -1);
        LaurentSeries t2_4 = theta2_series(ord).pow(4).to_laurent();
        LaurentSeries t3_2t4_2 = theta3_series(ord).pow(2) * theta4_series(ord).pow(2);
        LaurentSeries ratio = LaurentSeries::div(t2_4, t3_2t4_2);
        LaurentSeries rhs = rat(-1, 4) * ratio * ratio;
        auto diff = LaurentSeries::first_difference(lhs, rhs, 2 * n);
        if (diff) {
            res.ok = false;
            res.detail = "substituted (2kk')^2 identity fails at q^" + std::to_string(*diff);
            return res;
        }
    }

    // S(q) = 1728/c(k(q)) = -64 (1-4w)^3 / w, then q -> -Q against j(Q).
    LaurentSeries w = w_series(n + 4);
    LaurentSeries one = LaurentSeries::one(w.trunc());
    LaurentSeries s = Rat(-64) * LaurentSeries::div((one - Rat(4) * w).pow(3), w);
    LaurentSeries s_subst = s.substitute_signed_power(1, -1);
    LaurentSeries j = j_oracle(n);
    auto diff = LaurentSeries::first_difference(s_subst, j, n);
    if (diff) {
        res.ok = false;
        std::ostringstream os;
        os << "S(-Q) != j(Q) first at Q^" << *diff << ": " << s_subst.coeff(*diff).get_str()
           << " vs " << j.coeff(*diff).get_str();
        res.detail = os.str();
        return res;
    }
    res.ok = true;
    std::ostringstream os;
    os << "S(-Q) = j(Q) through Q^" << n << " (constant " << j.coeff(0).get_str()
       << ", Q-coefficient " << j.coeff(1).get_str() << ")";
    res.detail = os.str();
    return res;
}

SeriesCheck kexp_formal_check(long order) {
    SeriesCheck res;
    if (order < 4) throw std::domain_error("kexp_formal_check: order must be >= 4");
    // U = k k' / (4 q^{1/2}) has constant term 1; identity
    // theta3^4 * U^{2/3} = prod (1-q^{2n})^4, all shifts integral.
    FracPrefixSeries t2 = theta2_series(order + 2);
    LaurentSeries t3 = theta3_series(order + 2);
    LaurentSeries t4 = theta4_series(order + 2);
    FracPrefixSeries kkp = div(t2.pow(2) * FracPrefixSeries(Rat(0), t4.pow(2)),
                               FracPrefixSeries(Rat(0), t3.pow(4)));
    FracPrefixSeries u_frac(kkp.shift() - rat(1, 2), kkp.body().scalar_div(Rat(4)));
    if (u_frac.shift() != 0) {
        res.ok = false;
        res.detail = "unit normalization of kk' has non-zero residual shift";
        return res;
    }
    LaurentSeries u = u_frac.to_laurent();
    LaurentSeries lhs = t3.pow(4) * u.pow_rat_unit(rat(2, 3));
    LaurentSeries rhs = euler_product_series(2, order + 2).pow(4);
    auto diff = LaurentSeries::first_difference(lhs, rhs, order);
    if (diff) {
        res.ok = false;
        res.detail = "Kexp formal identity fails at q^" + std::to_string(*diff);
        return res;
    }
    res.ok = true;
    res.detail = "theta3^4 (kk'/(4 sqrt q))^{2/3} = prod(1-q^{2n})^4 through q^" + std::to_string(order);
    return res;
}

} // namespace modpi
