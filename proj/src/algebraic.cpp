#include "modpi/algebraic.hpp"

#include <cmath>
#include <sstream>

namespace modpi {

namespace {

std::vector<Rat> rat_poly_of(const IntPoly& p) {
    std::vector<Rat> r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
    return r;
}

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod b over Q, b nonzero.
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

std::vector<Rat> poly_sub_scaled(std::vector<Rat> a, const Rat& q, const std::vector<Rat>& b,
                                 size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
    return a;
}

} // namespace

NumberField::NumberField(IntPoly m, Rat lo, Rat hi)
    : m_(std::move(m)), lo_(std::move(lo)), hi_(std::move(hi)) {
    size_t d = degree();
    // Power table u^k mod m for k <= 2d-2.
    std::vector<Rat> mv = rat_poly_of(m_);
    powers_.resize(2 * d - 1);
    std::vector<Rat> cur{Rat(1)};
    for (size_t k = 0; k + 1 <= 2 * d - 1; ++k) {
        std::vector<Rat> padded = cur;
        padded.resize(d, Rat(0));
        powers_[k] = padded;
        cur.insert(cur.begin(), Rat(0)); // multiply by u
        cur = poly_mod(std::move(cur), mv);
    }
}

FieldPtr NumberField::create(IntPoly m, Rat lo, Rat hi) {
    if (m.degree() < 1) throw std::domain_error("NumberField: modulus must be non-constant");
    if (m.sign_at(lo) == 0 || m.sign_at(hi) == 0 || m.sign_at(lo) == m.sign_at(hi))
        throw std::domain_error("NumberField: interval endpoints must give opposite signs of m");
    if (count_real_roots(m, lo, hi) != 1)
        throw std::domain_error("NumberField: interval does not isolate a single root");
    return FieldPtr(new NumberField(std::move(m), std::move(lo), std::move(hi)));
}

FieldPtr NumberField::create_unique_real_root(IntPoly m) {
    auto ivs = isolate_real_roots(m);
    if (ivs.size() != 1)
        throw std::domain_error("NumberField: modulus does not have a unique real root");
    return create(std::move(m), ivs[0].first, ivs[0].second);
}

BigReal NumberField::root(unsigned prec) const {
    Rat lo = lo_, hi = hi_;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = refined_.lower_bound(prec);
        if (it != refined_.end()) {
            unsigned work = prec + 32;
            return (BigReal(it->second.first, work) + BigReal(it->second.second, work)) *
                   BigReal(Rat(1, 2), work);
        }
        if (!refined_.empty()) {
            // Resume from the tightest enclosure computed so far.
            lo = refined_.rbegin()->second.first;
            hi = refined_.rbegin()->second.second;
        }
    }
    if (lo == hi) return BigReal(lo, prec + 32);
    auto iv = refine_root_interval(m_, lo, hi, prec + 2);
    {
        std::lock_guard<std::mutex> lk(mu_);
        refined_[prec + 2] = iv;
    }
    unsigned work = prec + 32;
    return (BigReal(iv.first, work) + BigReal(iv.second, work)) * BigReal(Rat(1, 2), work);
}

bool NumberField::same_field(const NumberField& o) const {
    return m_ == o.m_ && lo_ == o.lo_ && hi_ == o.hi_;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != field_->degree())
        throw std::domain_error("AlgebraicNumber: coordinate length must equal field degree");
}

AlgebraicNumber AlgebraicNumber::from_rat(const FieldPtr& field, const Rat& v) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[0] = v;
    return AlgebraicNumber(field, std::move(c));
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    if (c.size() < 2) throw std::domain_error("generator of degree-1 field is rational");
    c[1] = 1;
    return AlgebraicNumber(field, std::move(c));
}

AlgebraicNumber AlgebraicNumber::from_poly(const FieldPtr& field, const std::vector<Rat>& poly) {
    std::vector<Rat> c(field->degree(), Rat(0));
    const auto& powers = field->power_table();
    for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        if (k < powers.size()) {
            for (size_t i = 0; i < c.size(); ++i) c[i] += poly[k] * powers[k][i];
        } else {
            // Beyond the table: reduce x^k mod m directly.
            std::vector<Rat> xk(k + 1, Rat(0));
            xk[k] = poly[k];
            std::vector<Rat> mv = rat_poly_of(field->modulus());
            auto r = poly_mod(std::move(xk), mv);
            for (size_t i = 0; i < r.size(); ++i) c[i] += r[i];
        }
    }
    return AlgebraicNumber(field, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
    for (const auto& v : coords_)
        if (v != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("AlgebraicNumber: not rational");
    return coords_[0];
}

void AlgebraicNumber::check_same(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.field_ || !b.field_) throw std::domain_error("AlgebraicNumber: uninitialized operand");
    if (a.field_ != b.field_ && !a.field_->same_field(*b.field_))
        throw std::domain_error("AlgebraicNumber: operands belong to different fields");
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same(a, b);
    std::vector<Rat> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same(a, b);
    std::vector<Rat> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    std::vector<Rat> c(coords_);
    for (auto& v : c) v = -v;
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber operator*(const Rat& s, const AlgebraicNumber& a) {
    std::vector<Rat> c(a.coords_);
    for (auto& v : c) v *= s;
    return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same(a, b);
    size_t d = a.field_->degree();
    std::vector<Rat> prod = poly_mul(a.coords_, b.coords_);
    std::vector<Rat> c(d, Rat(0));
    const auto& powers = a.field_->power_table();
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        for (size_t i = 0; i < d; ++i) c[i] += prod[k] * powers[k][i];
    }
    return AlgebraicNumber(a.field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("AlgebraicNumber: inverse of zero");
    // Extended Euclid over Q[x]: s*a + t*m = gcd = const.
    std::vector<Rat> r0 = rat_poly_of(field_->modulus());
    std::vector<Rat> r1 = coords_;
    trim(r1);
    std::vector<Rat> s0{}, s1{Rat(1)}; // coefficients of a
    while (!r1.empty() && r1.size() > 1) {
        // One full division step.
        std::vector<Rat> q;
        std::vector<Rat> rem = r0;
        trim(rem);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat qc = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = qc;
            rem = poly_sub_scaled(std::move(rem), qc, r1, shift);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        std::vector<Rat> s2 = s0;
        std::vector<Rat> qs1 = poly_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw std::domain_error("AlgebraicNumber: element shares a factor with the modulus");
    // r1 is a nonzero constant: a * s1 = r1 (mod m).
    Rat c = r1[0];
    std::vector<Rat> inv(field_->degree(), Rat(0));
    for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / c;
    if (s1.size() > inv.size()) {
        // Reduce if the Bezout coefficient exceeded field degree.
        std::vector<Rat> full(s1);
        for (auto& v : full) v /= c;
        return AlgebraicNumber::from_poly(field_, full);
    }
    return AlgebraicNumber(field_, std::move(inv));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a * b.inverse();
}

AlgebraicNumber AlgebraicNumber::pow(unsigned e) const {
    AlgebraicNumber r = from_rat(field_, Rat(1));
    AlgebraicNumber base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same(a, b);
    return a.coords_ == b.coords_;
}

BigReal AlgebraicNumber::eval(unsigned prec) const {
    // Coefficient sizes inflate the Horner error; pad the root precision.
    double growth = 0;
    for (const auto& v : coords_) {
        double n = mpz_sizeinbase(v.get_num().get_mpz_t(), 2);
        growth = std::max(growth, n);
    }
    unsigned work = prec + 64 + static_cast<unsigned>(growth);
    BigReal u = field_->root(work);
    BigReal acc(0, work);
    for (size_t i = coords_.size(); i-- > 0;) {
        acc = acc * u + BigReal(coords_[i], work);
    }
    return acc.round_to(prec + 32);
}

std::string AlgebraicNumber::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].get_str();
    }
    os << "]";
    return os.str();
}

AlgebraicNumber poly_eval_alg(const IntPoly& p, const AlgebraicNumber& a) {
    AlgebraicNumber acc = AlgebraicNumber::from_rat(a.field(), Rat(0));
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * a + AlgebraicNumber::from_rat(a.field(), Rat(p.coeffs()[i]));
    }
    return acc;
}

} // namespace modpi
