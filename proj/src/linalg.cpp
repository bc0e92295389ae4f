#include "modpi/linalg.hpp"

#include <algorithm>

namespace modpi {

namespace {

void strip_content(std::vector<Int>& row) {
    Int g(0);
    for (const auto& v : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
    IntMatrix rows;                 // echelon rows, content-stripped
    std::vector<size_t> pivot_col;  // pivot column of each echelon row
    size_t ncols = 0;
};

Echelon echelonize(IntMatrix a) {
    Echelon e;
    if (a.empty()) return e;
    e.ncols = a[0].size();
    size_t r = 0;
    for (size_t col = 0; col < e.ncols && r < a.size(); ++col) {
        // Pick the nonzero pivot with the fewest bits to limit growth.
        size_t best = a.size();
        size_t best_bits = ~size_t{0};
        for (size_t i = r; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
            if (bits < best_bits) {
                best_bits = bits;
                best = i;
            }
        }
        if (best == a.size()) continue;
        std::swap(a[r], a[best]);
        strip_content(a[r]);
        const Int piv = a[r][col];
        for (size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const Int f = a[i][col];
            for (size_t j = col; j < e.ncols; ++j) {
                a[i][j] = piv * a[i][j] - f * a[r][j];
            }
            strip_content(a[i]);
        }
        e.pivot_col.push_back(col);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

} // namespace

size_t matrix_rank(IntMatrix a) { return echelonize(std::move(a)).pivot_col.size(); }

std::vector<std::vector<Rat>> nullspace(IntMatrix a) {
    if (a.empty()) return {};
    Echelon e = echelonize(std::move(a));
    size_t n = e.ncols;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(n, Rat(0));
        x[f] = 1;
        // Back-substitute pivot variables from the bottom row up.
        for (size_t ri = e.rows.size(); ri-- > 0;) {
            size_t pc = e.pivot_col[ri];
            Rat acc(0);
            for (size_t j = pc + 1; j < n; ++j) {
                if (e.rows[ri][j] == 0 || x[j] == 0) continue;
                acc += Rat(e.rows[ri][j]) * x[j];
            }
            x[pc] = -acc / Rat(e.rows[ri][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace modpi
