#include "modpi/series.hpp"

#include <algorithm>
#include <sstream>

namespace modpi {

namespace {
const Rat kZero(0);
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = trunc_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

LaurentSeries LaurentSeries::constant(const Rat& v, long trunc) {
    LaurentSeries s;
    if (trunc <= 0) throw std::domain_error("constant series needs trunc > 0");
    s.val_ = 0;
    s.trunc_ = trunc;
    s.c_.assign(static_cast<size_t>(trunc), kZero);
    s.c_[0] = v;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::power_q(long k, long trunc) {
    if (trunc <= k) throw std::domain_error("power_q: trunc must exceed exponent");
    LaurentSeries s;
    s.val_ = k;
    s.trunc_ = trunc;
    s.c_.assign(static_cast<size_t>(trunc - k), kZero);
    s.c_[0] = 1;
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(long val, std::vector<Rat> coeffs, long trunc) {
    if (trunc != val + static_cast<long>(coeffs.size()))
        throw std::domain_error("from_coeffs: trunc must equal val + #coeffs");
    LaurentSeries s;
    s.val_ = val;
    s.trunc_ = trunc;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

const Rat& LaurentSeries::coeff(long e) const {
    if (e >= trunc_) throw std::domain_error("series coefficient beyond truncation");
    if (e < val_) return kZero;
    return c_[static_cast<size_t>(e - val_)];
}

bool LaurentSeries::all_integer() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    s.trunc_ = std::min(a.trunc_, b.trunc_);
    s.val_ = std::min(std::min(a.val_, b.val_), s.trunc_);
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.val_), kZero);
    for (long e = s.val_; e < s.trunc_; ++e) {
        Rat v(0);
        if (e >= a.val_ && e < a.trunc_) v += a.c_[static_cast<size_t>(e - a.val_)];
        if (e >= b.val_ && e < b.trunc_) v += b.c_[static_cast<size_t>(e - b.val_)];
        s.c_[static_cast<size_t>(e - s.val_)] = v;
    }
    s.normalize();
    return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(*this);
    for (auto& v : s.c_) v = -v;
    return s;
}

LaurentSeries operator*(const Rat& sc, const LaurentSeries& a) {
    if (sc == 0) return LaurentSeries::zero(a.trunc_);
    LaurentSeries s(a);
    for (auto& v : s.c_) v *= sc;
    return s;
}

LaurentSeries LaurentSeries::scalar_div(const Rat& sc) const {
    if (sc == 0) throw std::domain_error("series scalar division by zero");
    LaurentSeries s(*this);
    for (auto& v : s.c_) v /= sc;
    return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s(*this);
    s.val_ += k;
    s.trunc_ += k;
    return s;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    if (a.c_.empty() || b.c_.empty()) {
        // Zero up to trunc; valuation lower bound still adds.
        long ta = a.trunc_ + b.val_;
        long tb = b.trunc_ + a.val_;
        return LaurentSeries::zero(std::min(ta, tb));
    }
    s.val_ = a.val_ + b.val_;
    s.trunc_ = std::min(a.trunc_ + b.val_, b.trunc_ + a.val_);
    size_t n = static_cast<size_t>(s.trunc_ - s.val_);

    // All-integer operands take the mpz fast path (the common case here:
    // theta series, eta quotients and their combinations are integral).
    if (a.all_integer() && b.all_integer()) {
        std::vector<Int> acc(n, Int(0));
        for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
            if (a.c_[i] == 0) continue;
            const mpz_srcptr ai = a.c_[i].get_num().get_mpz_t();
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) {
                if (b.c_[j] == 0) continue;
                mpz_addmul(acc[i + j].get_mpz_t(), ai, b.c_[j].get_num().get_mpz_t());
            }
        }
        s.c_.resize(n);
        for (size_t k = 0; k < n; ++k) s.c_[k] = Rat(acc[k]);
    } else {
        s.c_.assign(n, kZero);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) {
                if (b.c_[j] == 0) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::div(const LaurentSeries& a, const LaurentSeries& b) {
    if (b.c_.empty() || b.c_[0] == 0)
        throw std::domain_error("series division by series with zero leading coefficient");
    long vq = a.val_ - b.val_;
    long tq = std::min(a.trunc_ - b.val_, a.val_ - 2 * b.val_ + b.trunc_);
    if (tq <= vq) throw std::domain_error("series division: no coefficients survive truncation");
    size_t n = static_cast<size_t>(tq - vq);
    std::vector<Rat> c(n, kZero);
    const Rat& b0 = b.c_[0];
    for (size_t i = 0; i < n; ++i) {
        Rat acc = (i < static_cast<size_t>(a.c_.size())) ? a.c_[i] : kZero;
        size_t jlo = 1;
        for (size_t j = jlo; j <= i && j < b.c_.size(); ++j) {
            if (b.c_[j] == 0 || c[i - j] == 0) continue;
            acc -= b.c_[j] * c[i - j];
        }
        c[i] = acc / b0;
    }
    return from_coeffs(vq, std::move(c), tq);
}

LaurentSeries LaurentSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return one(std::max<long>(1, trunc_ - val_));
    LaurentSeries base = *this;
    LaurentSeries r = base;
    // Iterative multiplication keeps truncation bookkeeping simple; the
    // exponents used here are small (<= 27).
    for (long i = 1; i < e; ++i) r = r * base;
    return r;
}

LaurentSeries LaurentSeries::pow_rat_unit(const Rat& r) const {
    if (val_ != 0 || c_.empty() || c_[0] != 1)
        throw std::domain_error("pow_rat_unit requires a unit series with constant term 1");
    size_t n = static_cast<size_t>(trunc_);
    std::vector<Rat> y(n, kZero);
    y[0] = 1;
    for (size_t m = 1; m < n; ++m) {
        Rat acc(0);
        for (size_t i = 1; i <= m; ++i) {
            const Rat& ai = (i < c_.size()) ? c_[i] : kZero;
            if (ai == 0 || y[m - i] == 0) continue;
            acc += (r * Rat(static_cast<long>(i)) - Rat(static_cast<long>(m - i))) * ai * y[m - i];
        }
        y[m] = acc / Rat(static_cast<long>(m));
    }
    return from_coeffs(0, std::move(y), trunc_);
}

LaurentSeries LaurentSeries::substitute_signed_power(long k, int sgn) const {
    if (k < 1) throw std::domain_error("substitute: power must be >= 1");
    LaurentSeries s;
    s.val_ = val_ * k;
    s.trunc_ = trunc_ * k;
    if (c_.empty()) return zero(s.trunc_);
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.val_), kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = val_ + static_cast<long>(i);
        Rat v = c_[i];
        if (sgn < 0 && (e % 2 != 0)) v = -v;
        s.c_[static_cast<size_t>(e * k - s.val_)] = v;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::reindex_div(long k) const {
    if (k < 1) throw std::domain_error("reindex_div: k must be >= 1");
    auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    // Known exponents e < trunc; surviving multiples give e' <= floor((trunc-1)/k).
    long new_trunc = floor_div(trunc_ - 1, k) + 1;
    LaurentSeries s;
    if (c_.empty()) return zero(new_trunc);
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = val_ + static_cast<long>(i);
        if (c_[i] != 0 && e % k != 0)
            throw std::domain_error("reindex_div: nonzero coefficient at non-multiple exponent");
    }
    // The leading coefficient is nonzero, so val_ is an exact multiple of k.
    long new_val = val_ / k;
    s.val_ = new_val;
    s.trunc_ = new_trunc;
    s.c_.assign(static_cast<size_t>(new_trunc - new_val), kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = (val_ + static_cast<long>(i)) / k;
        s.c_[static_cast<size_t>(e - new_val)] = c_[i];
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_) throw std::domain_error("truncated: cannot extend knowledge");
    LaurentSeries s;
    s.trunc_ = new_trunc;
    s.val_ = std::min(val_, new_trunc);
    if (val_ >= new_trunc) {
        s.val_ = new_trunc;
        return s;
    }
    s.c_.assign(c_.begin(), c_.begin() + static_cast<long>(new_trunc - val_));
    s.normalize();
    return s;
}

std::optional<long> LaurentSeries::first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                                    long through) {
    if (a.trunc_ <= through || b.trunc_ <= through)
        throw std::domain_error("first_difference: series not known through requested order");
    long lo = std::min(a.val_, b.val_);
    for (long e = lo; e <= through; ++e) {
        if (a.coeff(e) != b.coeff(e)) return e;
    }
    return std::nullopt;
}

std::string LaurentSeries::str(size_t max_terms) const {
    std::ostringstream os;
    size_t shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i] == 0) continue;
        long e = val_ + static_cast<long>(i);
        if (!first) os << (sign(c_[i]) > 0 ? " + " : " - ");
        else if (sign(c_[i]) < 0) os << "-";
        Rat a = abs(c_[i]);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << trunc_ << ")";
    return os.str();
}

LaurentSeries FracPrefixSeries::to_laurent() const {
    if (!is_integer(shift_))
        throw std::domain_error("FracPrefixSeries: total shift is not an integer");
    long k = static_cast<long>(shift_.get_num().get_si());
    return body_.shifted(k);
}

} // namespace modpi
