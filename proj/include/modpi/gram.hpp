// 4x4 integer Gram matrices of the quaternary quadratic forms, with the
// validation applied when data is loaded.
#ifndef MODPI_GRAM_HPP
#define MODPI_GRAM_HPP

#include <array>
#include <string>
#include <vector>

#include "modpi/numeric.hpp"

namespace modpi {

struct GramMatrix {
    std::array<std::array<long, 4>, 4> m{};
    std::string label;

    long at(int i, int j) const { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    // x^T M x for an integer vector.
    long quad(const std::array<long, 4>& x) const {
        long s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += at(i, j) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
        return s;
    }

    Int determinant() const;
    bool is_symmetric() const;
    bool has_even_diagonal() const;
    // All leading principal minors positive.
    bool is_positive_definite() const;
};

// Representation counts r(m) = #{x : x^T M x = m} for 0 <= m <= bound.
// Exhaustive ellipsoid enumeration; exact.
std::vector<long> gram_counts(const GramMatrix& M, long bound);

// Data file format: first line "p <prime> count <k>", then per matrix a line
// "I <idx>" followed by four rows of four integers.
std::vector<GramMatrix> load_gram_file(const std::string& path, long expected_p);

} // namespace modpi

#endif
