#include "modpi/quatforms.hpp"

#include <numeric>
#include <sstream>

#include "modpi/linalg.hpp"
#include "modpi/qnumeric.hpp"

namespace modpi {

long class_number(long D) {
    if (D >= 0) throw std::domain_error("class_number: discriminant must be negative");
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::domain_error("class_number: D must be 0 or 1 (mod 4)");
    long h = 0;
    long absD = -D;
    for (long a = 1; 3 * a * a <= absD; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

long genus_x0(long p) {
    long g = (p + 1) / 12;
    if (p % 12 == 1) g -= 1;
    return g;
}

long type_number(long p) {
    long g = genus_x0(p);
    int t;
    if (p % 4 == 1) t = 1;
    else if (p % 8 == 3) t = -1;
    else t = 0; // p = 7 (mod 8)
    Rat T = rat(1 + g, 2) + pow_rat(Rat(2), -t - 1) * Rat(class_number(-p));
    if (!is_integer(T))
        throw std::domain_error("type_number: formula produced a non-integer (misapplied case table)");
    return static_cast<long>(T.get_num().get_si());
}

ArithInvariants arith_invariants(long p) {
    ArithInvariants inv;
    inv.p = p;
    inv.genus_g = genus_x0(p);
    inv.t_p = (p % 4 == 1) ? 1 : (p % 8 == 3 ? -1 : 0);
    inv.class_number_h = class_number(-p);
    inv.type_number_T = type_number(p);
    return inv;
}

size_t independence_rank(const std::vector<LaurentSeries>& series, long order) {
    IntMatrix m;
    for (const auto& s : series) {
        if (s.trunc() <= order)
            throw std::domain_error("independence_rank: series not known through requested order");
        std::vector<Rat> row;
        row.reserve(static_cast<size_t>(order) + 1);
        Int lcm(1);
        for (long e = 0; e <= order; ++e) {
            row.push_back(s.coeff(e));
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.back().get_den().get_mpz_t());
        }
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& v : row) irow.push_back(Int(v * Rat(lcm)));
        m.push_back(std::move(irow));
    }
    return matrix_rank(std::move(m));
}

SeriesCheck span_identity_check(const std::vector<LaurentSeries>& thetas, long p, long order) {
    SeriesCheck res;
    if (order < 10) throw std::domain_error("span_identity_check: order must be >= 10");
    if (thetas.size() != 8) throw std::domain_error("span_identity_check: expected 8 theta series");

    long inner = order / p + 2;
    LaurentSeries P = eisenstein_P_series(order);
    LaurentSeries P_sub = eisenstein_P_series(inner).substitute_signed_power(p, +1).truncated(order + 1);
    LaurentSeries lhs = Rat(p) * P_sub - P;

    LaurentSeries rhs = Rat(6) * thetas[0] + Rat(12) * thetas[1];
    for (size_t i = 2; i < 8; ++i) rhs = rhs + Rat(24) * thetas[i];

    auto diff = LaurentSeries::first_difference(lhs, rhs, order);
    if (diff) {
        std::ostringstream os;
        os << "span identity fails first at q^" << *diff << ": " << lhs.coeff(*diff).get_str()
           << " vs " << rhs.coeff(*diff).get_str();
        res.ok = false;
        res.detail = os.str();
        return res;
    }
    res.ok = true;
    res.detail = "p P(q^p) - P(q) matches the weighted theta span through q^" + std::to_string(order);
    return res;
}

SeriesCheck fricke_numeric_check(const GramMatrix& M, const Rat& t, long p, unsigned prec) {
    SeriesCheck res;
    if (sign(t) <= 0) throw std::domain_error("fricke_numeric_check: t must be positive");
    unsigned wp = prec + 64;
    BigReal pi = BigReal::pi(wp);
    BigReal sqrtp = BigReal(p, wp).sqrt();
    BigReal tb(t, wp);
    BigReal q_left = (-(pi / (tb * sqrtp))).exp();
    BigReal q_right = (-(pi * tb / sqrtp)).exp();
    BigReal lhs = gram_theta_num(M, q_left, prec + 32);
    BigReal rhs = tb * tb * gram_theta_num(M, q_right, prec + 32);
    BigReal residual = (lhs - rhs).abs();
    BigReal tol = BigReal::pow2(-static_cast<long>(prec) / 2, wp);
    res.ok = residual < tol;
    std::ostringstream os;
    os << M.label << " t=" << t.get_str() << " residual " << residual.str(6);
    res.detail = os.str();
    return res;
}

} // namespace modpi
