#include "modpi/gram.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace modpi {

Int GramMatrix::determinant() const {
    // Bareiss on a 4x4 integer copy.
    std::array<std::array<Int, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = Int(at(i, j));
    Int prev(1);
    int sign_flip = 1;
    for (int k = 0; k < 3; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < 4; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return Int(0);
            std::swap(a[k], a[p]);
            sign_flip = -sign_flip;
        }
        for (int i = k + 1; i < 4; ++i) {
            for (int j = k + 1; j < 4; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign_flip * a[3][3];
}

bool GramMatrix::is_symmetric() const {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool GramMatrix::has_even_diagonal() const {
    for (int i = 0; i < 4; ++i)
        if (at(i, i) % 2 != 0) return false;
    return true;
}

bool GramMatrix::is_positive_definite() const {
    // Leading principal minors via exact fraction-free elimination.
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Int(at(i, j));
        // Determinant by expansion for n <= 4 via Bareiss.
        Int prev(1);
        bool singular = false;
        for (int k = 0; k < n - 1 && !singular; ++k) {
            if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) { singular = true; break; }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        (a[static_cast<size_t>(k)][static_cast<size_t>(k)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                         a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                        prev;
            prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        }
        if (singular || sign(a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]) <= 0) return false;
    }
    return true;
}

namespace {

struct CholeskyData {
    std::array<Rat, 4> d;
    std::array<std::array<Rat, 4>, 4> u; // u[i][j], j > i
};

// Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 by symmetric elimination.
CholeskyData cholesky(const GramMatrix& M) {
    std::array<std::array<Rat, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(M.at(i, j));
    CholeskyData cd;
    for (int i = 0; i < 4; ++i) {
        Rat piv = a[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (sign(piv) <= 0) throw std::domain_error("gram_counts: matrix is not positive definite");
        cd.d[static_cast<size_t>(i)] = piv;
        for (int j = i + 1; j < 4; ++j)
            cd.u[static_cast<size_t>(i)][static_cast<size_t>(j)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)] / piv;
        for (int r = i + 1; r < 4; ++r)
            for (int c = i + 1; c < 4; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    a[static_cast<size_t>(i)][static_cast<size_t>(r)] * a[static_cast<size_t>(i)][static_cast<size_t>(c)] / piv;
    }
    return cd;
}

void enumerate_level(const CholeskyData& cd, int level, std::array<long, 4>& x, const Rat& acc,
                     long bound, std::vector<long>& counts) {
    if (level < 0) {
        if (!is_integer(acc)) throw std::logic_error("gram_counts: non-integer form value");
        long m = static_cast<long>(acc.get_num().get_si());
        ++counts[static_cast<size_t>(m)];
        return;
    }
    size_t li = static_cast<size_t>(level);
    Rat off(0);
    for (int j = level + 1; j < 4; ++j) off += cd.u[li][static_cast<size_t>(j)] * Rat(x[static_cast<size_t>(j)]);
    Rat budget = Rat(bound) - acc;
    if (sign(budget) < 0) return;
    double s = std::sqrt(budget.get_d() / cd.d[li].get_d());
    double o = off.get_d();
    long lo = static_cast<long>(std::floor(-s - o)) - 1;
    long hi = static_cast<long>(std::ceil(s - o)) + 1;
    for (long xi = lo; xi <= hi; ++xi) {
        Rat t = Rat(xi) + off;
        t = cd.d[li] * t * t;
        if (t > budget) continue;
        x[li] = xi;
        enumerate_level(cd, level - 1, x, acc + t, bound, counts);
    }
    x[li] = 0;
}

} // namespace

std::vector<long> gram_counts(const GramMatrix& M, long bound) {
    if (bound < 0) throw std::domain_error("gram_counts: negative bound");
    CholeskyData cd = cholesky(M);
    std::vector<long> counts(static_cast<size_t>(bound) + 1, 0);
    std::array<long, 4> x{0, 0, 0, 0};
    enumerate_level(cd, 3, x, Rat(0), bound, counts);
    return counts;
}

std::vector<GramMatrix> load_gram_file(const std::string& path, long expected_p) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gram data file: " + path);
    std::string word;
    long p = 0;
    size_t count = 0;
    in >> word >> p;
    if (word != "p") throw std::runtime_error("gram data: expected 'p' header");
    in >> word >> count;
    if (word != "count") throw std::runtime_error("gram data: expected 'count' header");
    if (p != expected_p) throw std::runtime_error("gram data: unexpected prime");

    std::vector<GramMatrix> out;
    for (size_t k = 0; k < count; ++k) {
        int idx = 0;
        in >> word >> idx;
        if (word != "I") throw std::runtime_error("gram data: expected matrix label");
        GramMatrix g;
        g.label = "I" + std::to_string(idx);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (!(in >> g.m[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                    throw std::runtime_error("gram data: truncated matrix entries");
            }
        if (!g.is_symmetric()) throw std::runtime_error("gram data: matrix not symmetric: " + g.label);
        if (!g.has_even_diagonal()) throw std::runtime_error("gram data: odd diagonal: " + g.label);
        if (!g.is_positive_definite())
            throw std::runtime_error("gram data: not positive definite: " + g.label);
        if (g.determinant() != Int(p) * Int(p))
            throw std::runtime_error("gram data: determinant != p^2: " + g.label);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace modpi
