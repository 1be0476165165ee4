#include "qsym/linalg.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace qsym {

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), n_(nvars), entries_(rows * cols, LaurentPoly(nvars))
{
}

void RingMatrix::set(std::size_t i, std::size_t j, LaurentPoly value)
{
    if (value.nvars() != n_) {
        throw precondition_error("matrix entry has the wrong variable count");
    }
    (*this)(i, j) = std::move(value);
}

void RingMatrix::check_skew_symmetric() const
{
    if (rows_ != cols_) {
        throw precondition_error("matrix is not square");
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, i).is_zero()) {
            throw precondition_error("not skew-symmetric: nonzero diagonal entry at (" + std::to_string(i + 1)
                                     + "," + std::to_string(i + 1) + ")");
        }
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (!((*this)(i, j) + (*this)(j, i)).is_zero()) {
                throw precondition_error("not skew-symmetric at (" + std::to_string(i + 1) + ","
                                         + std::to_string(j + 1) + ")");
            }
        }
    }
}

namespace {

using Mask = std::uint64_t;

class DeterminantExpander {
public:
    explicit DeterminantExpander(const RingMatrix &a) : a_(a) {}

    // Minor on rows [row, size) and the columns in `cols`.
    const LaurentPoly &minor(std::size_t row, Mask cols)
    {
        if (auto it = memo_.find(cols); it != memo_.end()) {
            return it->second;
        }
        LaurentPoly value(a_.nvars());
        if (cols == 0) {
            value = LaurentPoly::one(a_.nvars());
        }
        else {
            int position = 0;
            for (Mask rest = cols; rest != 0; rest &= rest - 1) {
                const auto j = static_cast<std::size_t>(std::countr_zero(rest));
                const LaurentPoly &entry = a_(row, j);
                if (!entry.is_zero()) {
                    LaurentPoly t = entry * minor(row + 1, cols & ~(Mask{1} << j));
                    if (position % 2 == 0) {
                        value += t;
                    }
                    else {
                        value -= t;
                    }
                }
                ++position;
            }
        }
        return memo_.emplace(cols, std::move(value)).first->second;
    }

private:
    const RingMatrix &a_;
    std::unordered_map<Mask, LaurentPoly> memo_;
};

class PfaffianExpander {
public:
    explicit PfaffianExpander(const RingMatrix &a) : a_(a) {}

    const LaurentPoly &sub(Mask alive)
    {
        if (auto it = memo_.find(alive); it != memo_.end()) {
            return it->second;
        }
        LaurentPoly value(a_.nvars());
        if (alive == 0) {
            value = LaurentPoly::one(a_.nvars());
        }
        else {
            const auto first = static_cast<std::size_t>(std::countr_zero(alive));
            const Mask rest = alive & ~(Mask{1} << first);
            int position = 1;
            for (Mask r = rest; r != 0; r &= r - 1) {
                const auto j = static_cast<std::size_t>(std::countr_zero(r));
                const LaurentPoly &entry = a_(first, j);
                if (!entry.is_zero()) {
                    LaurentPoly t = entry * sub(rest & ~(Mask{1} << j));
                    // Sign (-1)^(position+1) with the first index at position 0.
                    if (position % 2 == 1) {
                        value += t;
                    }
                    else {
                        value -= t;
                    }
                }
                ++position;
            }
        }
        return memo_.emplace(alive, std::move(value)).first->second;
    }

private:
    const RingMatrix &a_;
    std::unordered_map<Mask, LaurentPoly> memo_;
};

Mask full_mask(std::size_t n) { return n == 0 ? 0 : (n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1); }

} // namespace

LaurentPoly determinant(const RingMatrix &a)
{
    if (a.rows() != a.cols()) {
        throw precondition_error("determinant of a non-square " + std::to_string(a.rows()) + "x"
                                 + std::to_string(a.cols()) + " matrix");
    }
    if (a.rows() > 63) {
        throw precondition_error("determinant size limited to 63");
    }
    DeterminantExpander ex(a);
    return ex.minor(0, full_mask(a.rows()));
}

LaurentPoly pfaffian(const RingMatrix &a)
{
    if (a.rows() != a.cols()) {
        throw precondition_error("Pfaffian of a non-square matrix");
    }
    if (a.rows() % 2 != 0) {
        throw precondition_error("Pfaffian of an odd-size matrix (" + std::to_string(a.rows()) + ")");
    }
    if (a.rows() > 63) {
        throw precondition_error("Pfaffian size limited to 63");
    }
    a.check_skew_symmetric();
    PfaffianExpander ex(a);
    return ex.sub(full_mask(a.rows()));
}

} // namespace qsym
