#include "modpi/bigreal.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace modpi {

Rat BigReal::to_rational_exact() const {
    if (is_zero()) return Rat(0);
    if (!mpfr_number_p(x_)) throw std::domain_error("BigReal: non-finite value");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
    Rat r(m);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num().get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den().get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

std::string BigReal::to_decimal(size_t frac_digits) const {
    // Truncated fixed-point rendering: floor(|x| * 10^d) formatted by hand.
    bool neg = sgn() < 0;
    mpfr_t t;
    mpfr_init2(t, prec_ + 16);
    mpfr_abs(t, x_, MPFR_RNDN);
    mpfr_t scale;
    mpfr_init2(scale, prec_ + 16);
    mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(frac_digits), MPFR_RNDN);
    mpfr_mul(t, t, scale, MPFR_RNDN);
    mpfr_floor(t, t);
    Int z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ);
    mpfr_clear(scale);
    mpfr_clear(t);

    std::string s = z.get_str();
    if (s.size() <= frac_digits) s.insert(0, frac_digits + 1 - s.size(), '0');
    s.insert(s.size() - frac_digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

std::string BigReal::str(size_t digits) const {
    char* raw = nullptr;
    int n = mpfr_asprintf(&raw, "%.*Rg", static_cast<int>(digits), x_);
    if (n < 0) return "<mpfr-format-error>";
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
}

} // namespace modpi
