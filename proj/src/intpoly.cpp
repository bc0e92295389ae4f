#include "modpi/intpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modpi {

IntPoly IntPoly::monomial(size_t k, const Int& v) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = v;
    return IntPoly(std::move(c));
}

const Int& IntPoly::operator[](size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& p) {
    std::vector<Int> c(p.c_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += Rat(c_[i]);
    }
    return acc;
}

BigReal IntPoly::eval(const BigReal& x) const {
    BigReal acc(0, x.precision_bits());
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + BigReal(c_[i], x.precision_bits());
    }
    return acc;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Int> c(c_);
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << (sign(c_[i]) > 0 ? " + " : " - ");
        else if (sign(c_[i]) < 0) os << "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Rational polynomial scratch type for Sturm chains.
using RatPoly = std::vector<Rat>;

RatPoly to_rat(const IntPoly& p) {
    RatPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
    return r;
}

void rtrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), over Q.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    rtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        rtrim(a);
    }
    return a;
}

int rat_sign_at(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return sign(acc);
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(to_rat(p));
    chain.push_back(to_rat(p.derivative()));
    rtrim(chain[0]);
    rtrim(chain[1]);
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& v : r) v = -v;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.empty()) continue;
        int s = rat_sign_at(f, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int count_in(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const IntPoly& p) {
    Int m(0);
    for (long i = 0; i < p.degree(); ++i) {
        Int a = abs(p[static_cast<size_t>(i)]);
        if (a > m) m = a;
    }
    Rat b = Rat(m) / Rat(abs(p.leading()));
    return b + 1;
}

void isolate_rec(const IntPoly& p, const std::vector<RatPoly>& chain, const Rat& a, const Rat& b,
                 int nroots, std::vector<std::pair<Rat, Rat>>& out) {
    if (nroots == 0) return;
    if (nroots == 1 && p.sign_at(a) * p.sign_at(b) < 0) {
        out.emplace_back(a, b);
        return;
    }
    // A split point may hit a root; walk a deterministic sequence of interior
    // points until one misses (p has finitely many roots).
    Rat mid = (a + b) / 2;
    for (long k = 3; p.sign_at(mid) == 0; ++k) mid = a + (b - a) / k;
    int left = count_in(chain, a, mid);
    isolate_rec(p, chain, a, mid, left, out);
    isolate_rec(p, chain, mid, b, nroots - left, out);
}

} // namespace

int count_real_roots(const IntPoly& p, const Rat& a, const Rat& b) {
    auto chain = sturm_chain(p);
    return count_in(chain, a, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    auto chain = sturm_chain(p);
    // Squarefree iff the chain terminates in a nonzero constant.
    if (chain.back().size() != 1 || chain.back()[0] == 0) {
        if (p.degree() >= 1)
            throw std::domain_error("isolate_real_roots: polynomial has a repeated root (gcd(p,p') non-constant)");
    }
    if (p.degree() == 0) return {};
    Rat bound = root_bound(p);
    Rat a = -bound, b = bound;
    while (p.sign_at(a) == 0) a -= 1;
    while (p.sign_at(b) == 0) b += 1;
    std::vector<std::pair<Rat, Rat>> out;
    isolate_rec(p, chain, a, b, count_in(chain, a, b), out);
    return out;
}

std::pair<Rat, Rat> refine_root_interval(const IntPoly& p, const Rat& lo_in, const Rat& hi_in,
                                         unsigned prec_bits) {
    Rat lo = lo_in, hi = hi_in;
    int slo = p.sign_at(lo);
    int shi = p.sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::domain_error("refine_root: interval endpoints do not bracket a sign change");
    Rat width = hi - lo;
    Rat target = pow_rat(Rat(1, 2), static_cast<long>(prec_bits));
    while (width > target) {
        Rat mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) {
            // Exact rational root: shrink symmetrically around it.
            Rat eps = width / 1024;
            lo = mid - eps;
            hi = mid + eps;
            if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
                lo = mid;
                hi = mid;
                return {lo, hi};
            }
            slo = p.sign_at(lo);
        } else if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
        width = hi - lo;
    }
    return {lo, hi};
}

BigReal refine_root(const IntPoly& p, const Rat& lo, const Rat& hi, unsigned prec_bits) {
    auto [a, b] = refine_root_interval(p, lo, hi, prec_bits + 2);
    unsigned work = prec_bits + 32;
    BigReal mid = (BigReal(a, work) + BigReal(b, work)) * BigReal(Rat(1, 2), work);
    return mid;
}

std::vector<Int> integer_roots(const IntPoly& p_in) {
    std::vector<Int> roots;
    if (p_in.is_zero()) return roots;
    IntPoly p = p_in;
    // Strip powers of x.
    size_t k = 0;
    while (!p.is_zero() && p[0] == 0) {
        std::vector<Int> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = IntPoly(std::move(c));
        ++k;
    }
    for (size_t i = 0; i < k; ++i) roots.emplace_back(0);
    if (p.degree() < 1) return roots;

    // Candidates are divisors of the constant term.
    Int c0 = abs(p[0]);
    std::vector<Int> divs;
    for (Int d(1); d * d <= c0; ++d) {
        if (c0 % d == 0) {
            divs.push_back(d);
            divs.push_back(c0 / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());

    for (const Int& d : divs) {
        for (int s : {1, -1}) {
            Int r = s * d;
            while (p.degree() >= 1 && p.eval(r) == 0) {
                roots.push_back(r);
                // Deflate by (x - r) exactly.
                std::vector<Int> q(static_cast<size_t>(p.degree()), Int(0));
                Int carry(0);
                for (size_t i = p.coeffs().size(); i-- > 1;) {
                    carry = carry * r + p[i];
                    q[i - 1] = carry;
                }
                p = IntPoly(std::move(q));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace modpi
