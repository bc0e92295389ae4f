#include "modpi/qnumeric.hpp"

#include <algorithm>
#include <cmath>

namespace modpi {

namespace {

void check_nome(const BigReal& q0) {
    if (q0.sgn() <= 0 || q0 >= BigReal(1, q0.precision_bits()))
        throw std::domain_error("numeric evaluation requires 0 < q0 < 1");
}

// Sum of m^2 x^m over m > B, closed form upper pieces.
BigReal tail_sum_m2(const BigReal& x, long B, unsigned wp) {
    BigReal one(1, wp);
    BigReal omx = one - x;
    BigReal b1(B + 1, wp);
    BigReal xp = x.pow_si(B + 1);
    BigReal t = b1 * b1 / omx + BigReal(2, wp) * b1 * x / (omx * omx) +
                x * (one + x) / (omx * omx * omx);
    return xp * t;
}

// Sum of m x^m over m > B.
BigReal tail_sum_m1(const BigReal& x, long B, unsigned wp) {
    BigReal one(1, wp);
    BigReal omx = one - x;
    BigReal xp = x.pow_si(B + 1);
    return xp * (BigReal(B + 1, wp) - BigReal(B, wp) * x) / (omx * omx);
}

} // namespace

BigReal theta3_num(const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal q = q0.round_to(wp);
    BigReal q2 = q * q;
    BigReal sum(1, wp);
    BigReal p = q;        // q^{n^2}
    BigReal step = q * q2; // q^{2n+1} for the next increment
    for (long n = 1;; ++n) {
        sum += BigReal(2, wp) * p;
        // tail <= 2 q^{(n+1)^2} / (1 - q^{2n+3})
        BigReal nextp = p * step;
        BigReal denom = BigReal(1, wp) - step * q2;
        if (BigReal(2, wp) * nextp / denom < tol) break;
        p = nextp;
        step *= q2;
    }
    return sum;
}

BigReal theta4_num(const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal q = q0.round_to(wp);
    BigReal q2 = q * q;
    BigReal sum(1, wp);
    BigReal p = q;
    BigReal step = q * q2;
    for (long n = 1;; ++n) {
        BigReal term = BigReal(2, wp) * p;
        if (n % 2 == 1) sum -= term; else sum += term;
        BigReal nextp = p * step;
        BigReal denom = BigReal(1, wp) - step * q2;
        if (BigReal(2, wp) * nextp / denom < tol) break;
        p = nextp;
        step *= q2;
    }
    return sum;
}

BigReal theta2_num(const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal q = q0.round_to(wp);
    BigReal q2 = q * q;
    // 2 q^{1/4} sum_{n>=0} q^{n(n+1)}
    BigReal sum(1, wp); // n = 0 term
    BigReal p(1, wp);   // q^{n(n+1)}
    BigReal step = q2;  // q^{2(n+1)}
    for (long n = 1;; ++n) {
        p *= step;
        sum += p;
        step *= q2;
        BigReal denom = BigReal(1, wp) - step;
        if (p * step / denom < tol) break;
    }
    return BigReal(2, wp) * q.nth_root(4) * sum;
}

BigReal gram_theta_num(const GramMatrix& M, const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal q = q0.round_to(wp);

    // Lower bound on the minimal Cholesky pivot: det stepping gives pivots as
    // minor ratios; the crude bound lambda_min >= det(M)/||M||_trace^3 is far
    // too pessimistic, so use the smallest diagonal Rayleigh quotient bound
    // via Gershgorin: lambda_min >= min_i (M_ii - sum_{j != i} |M_ij|),
    // falling back to det/trace^3 when Gershgorin is non-positive.
    double lam = 1e300;
    for (int i = 0; i < 4; ++i) {
        double row = M.at(i, i);
        for (int j = 0; j < 4; ++j)
            if (j != i) row -= std::abs(static_cast<double>(M.at(i, j)));
        lam = std::min(lam, row);
    }
    if (lam <= 0) {
        double tr = 0;
        for (int i = 0; i < 4; ++i) tr += M.at(i, i);
        lam = M.determinant().get_d() / (tr * tr * tr);
    }
    BigReal lam_br(Rat(1), wp);
    {
        // store lam as a dyadic lower bound
        double l2 = lam * 0.999;
        mpq_class lr(l2);
        lam_br = BigReal(Rat(lr), wp);
    }

    long B = 64;
    for (;; B *= 2) {
        // r(m) <= (2 sqrt(m/lam) + 1)^4 <= 81 (m/lam)^2 for m >= lam
        BigReal bound = BigReal(81, wp) / (lam_br * lam_br) * tail_sum_m2(q, B, wp);
        if (bound < tol) break;
        if (B > (1L << 22)) throw std::runtime_error("gram_theta_num: tail bound does not close");
    }
    auto counts = gram_counts(M, B);
    BigReal sum(0, wp);
    for (long m = B; m >= 0; --m) {
        sum = sum * q + BigReal(counts[static_cast<size_t>(m)], wp);
    }
    return sum;
}

BigReal binform_theta_num(long a, long b, long c, const BigReal& q0, unsigned prec) {
    check_nome(q0);
    if (a <= 0 || 4 * a * c - b * b <= 0)
        throw std::domain_error("binform_theta_num: form must be positive definite");
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal q = q0.round_to(wp);

    // lambda_min >= det/trace for the 2x2 form matrix [[a, b/2], [b/2, c]].
    Rat lam_lb = (Rat(a) * Rat(c) - rat(b, 2) * rat(b, 2)) / Rat(a + c);
    BigReal lam_br(lam_lb, wp);

    long B = 64;
    for (;; B *= 2) {
        // r(m) <= (2 sqrt(m/lam) + 1)^2 <= 9 m/lam for m >= lam
        BigReal bound = BigReal(9, wp) / lam_br * tail_sum_m1(q, B, wp);
        if (bound < tol) break;
        if (B > (1L << 22)) throw std::runtime_error("binform_theta_num: tail bound does not close");
    }

    // 4a f(u,v) = (2au + bv)^2 + (4ac - b^2) v^2
    std::vector<long> counts(static_cast<size_t>(B) + 1, 0);
    long disc = 4 * a * c - b * b;
    double vmax_d = std::sqrt(4.0 * static_cast<double>(a) * static_cast<double>(B) / static_cast<double>(disc));
    long vmax = static_cast<long>(vmax_d) + 2;
    for (long v = -vmax; v <= vmax; ++v) {
        if (disc * v * v > 4 * a * B) continue;
        double rad = std::sqrt(std::max(0.0, (4.0 * a * B - static_cast<double>(disc) * v * v))) / (2.0 * a);
        double center = -static_cast<double>(b) * v / (2.0 * a);
        long ulo = static_cast<long>(std::floor(center - rad)) - 1;
        long uhi = static_cast<long>(std::ceil(center + rad)) + 1;
        for (long u = ulo; u <= uhi; ++u) {
            long m = a * u * u + b * u * v + c * v * v;
            if (m <= B) ++counts[static_cast<size_t>(m)];
        }
    }
    BigReal sum(0, wp);
    for (long m = B; m >= 0; --m) sum = sum * q + BigReal(counts[static_cast<size_t>(m)], wp);
    return sum;
}

BigReal euler_even_num(const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 9, wp);
    BigReal x = (q0 * q0).round_to(wp);
    BigReal prod(1, wp);
    BigReal xn = x;
    BigReal omx = BigReal(1, wp) - x;
    for (;;) {
        prod *= (BigReal(1, wp) - xn);
        xn *= x;
        // remaining factors differ from 1 by at most 2*sum_{k>n} x^k
        if (BigReal(2, wp) * xn / omx < tol) break;
    }
    return prod;
}

BigReal eisenstein_P_num(const BigReal& q0, unsigned prec) {
    check_nome(q0);
    unsigned wp = prec + 32;
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal x = (q0 * q0).round_to(wp);
    BigReal one(1, wp);
    BigReal omx = one - x;
    BigReal sum(0, wp);
    BigReal xn = x;
    for (long n = 1;; ++n) {
        sum += BigReal(n, wp) * xn / (one - xn);
        xn *= x;
        BigReal tail = tail_sum_m1(x, n, wp) / omx;
        if (BigReal(24, wp) * tail < tol) break;
    }
    return one - BigReal(24, wp) * sum;
}

BigReal clausen_3f2_num(const BigReal& c, unsigned prec) {
    unsigned wp = prec + 32;
    BigReal absc = c.abs();
    if (!(absc < BigReal(1, wp)))
        throw std::domain_error("clausen_3f2_num: |argument| must be < 1 for direct summation");
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) - 8, wp);
    BigReal cw = c.round_to(wp);
    BigReal sum(0, wp);
    BigReal term(1, wp);
    BigReal one_minus = BigReal(1, wp) - absc;
    for (long m = 0;; ++m) {
        sum += term;
        // t_{m+1} = t_m * c * (6m+1)(6m+5)(2m+1) / (72 (m+1)^3)
        Rat f = Rat(6 * m + 1) * Rat(6 * m + 5) * Rat(2 * m + 1) /
                (Rat(72) * pow_rat(Rat(m + 1), 3));
        term = term * cw * BigReal(f, wp);
        // ratio magnitude is < |c|, so remaining tail < |term|/(1-|c|)
        if (term.abs() / one_minus < tol) {
            sum += term;
            break;
        }
        if (m > 1000000) throw std::runtime_error("clausen_3f2_num: no convergence");
    }
    return sum;
}

EllipticModuli elliptic_moduli_num(const BigReal& q0, unsigned prec) {
    BigReal t2 = theta2_num(q0, prec + 16);
    BigReal t3 = theta3_num(q0, prec + 16);
    BigReal t4 = theta4_num(q0, prec + 16);
    BigReal t3sq = t3 * t3;
    return EllipticModuli{(t2 * t2) / t3sq, (t4 * t4) / t3sq};
}

} // namespace modpi
