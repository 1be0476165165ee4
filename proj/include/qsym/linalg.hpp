#pragma once

#include <cstddef>
#include <vector>

#include "qsym/ring.hpp"

namespace qsym {

/// Dense row-major matrix over the Laurent polynomial ring.
class RingMatrix {
public:
    RingMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return n_; }

    const LaurentPoly &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    LaurentPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, LaurentPoly value);

    /// Throws precondition_error naming the first offending pair.
    void check_skew_symmetric() const;

    friend bool operator==(const RingMatrix &, const RingMatrix &) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

// Both routines are division-free expansions memoised on index bitmasks,
// so sizes are limited to 63.

/// Laplace expansion along the rows.
LaurentPoly determinant(const RingMatrix &a);

/// First-row expansion Pf(A) = sum_j (-1)^j a_{1j} Pf(A without 1, j).
LaurentPoly pfaffian(const RingMatrix &a);

} // namespace qsym
