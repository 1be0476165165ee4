#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/ring.hpp"
#include "qsym/shapes.hpp"

namespace qsym {

/// k symplectic variable pairs followed by m type-A variables.
struct VariableSpec {
    int k = 0;
    int m = 0;

    int n() const { return k + m; }
    std::string to_string() const;
    friend auto operator<=>(const VariableSpec &, const VariableSpec &) = default;
};

/// A letter i, i', ibar or ibar'. Barred letters exist only for i <= k.
struct Letter {
    int index = 1;
    bool barred = false;
    bool primed = false;

    /// Debug form: "3", "3'", "3b", "3b'".
    std::string to_string() const;
    static Letter parse(std::string_view text);
    friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// Position in 1' < 1 < 1b' < 1b < ... < kb < (k+1)' < k+1 < ... < n' < n.
/// Throws precondition_error for letters outside the alphabet of spec.
int qt_rank(const Letter &a, const VariableSpec &spec);
/// Position in 1 < 1b < ... < k < kb < k+1 < ... < n (unprimed letters only).
int spt_rank(const Letter &a, const VariableSpec &spec);

/// Alphabets in increasing order.
std::vector<Letter> qt_alphabet(const VariableSpec &spec);
std::vector<Letter> spt_alphabet(const VariableSpec &spec);

/// Filling of a skew shifted shape; entries[i] sits in shape.cells[i].
struct PrimedTableau {
    SkewShiftedShape shape;
    std::vector<Letter> entries;

    const Letter &at(Cell c) const;
    /// One line per row, cells separated by spaces, removed cells as ".".
    std::string to_string() const;
    /// Inverse of to_string on the letters of rows ("3b'", "2 3b", ...),
    /// listing only the cells of S(outer/inner).
    static PrimedTableau from_rows(const StrictPartition &outer, const StrictPartition &inner,
                                   const std::vector<std::vector<Letter>> &rows);
    friend bool operator==(const PrimedTableau &a, const PrimedTableau &b)
    {
        return a.shape.cells == b.shape.cells && a.entries == b.entries;
    }
};

/// Filling of an ordinary skew diagram by unprimed letters.
struct SpTableau {
    SkewShape shape;
    std::vector<Letter> entries;

    std::string to_string() const;
};

enum class LengthCheck { enforce, skip };

/// Visits every primed shifted tableau of shape outer/inner over spec, once.
/// Nothing is visited when inner is not contained in outer. With
/// LengthCheck::enforce, l(outer) > n throws precondition_error.
void for_each_qt(const VariableSpec &spec, const StrictPartition &outer, const StrictPartition &inner,
                 const std::function<void(const PrimedTableau &)> &visit,
                 LengthCheck check = LengthCheck::enforce);
std::vector<PrimedTableau> enum_qt(const VariableSpec &spec, const StrictPartition &outer,
                                   const StrictPartition &inner);

bool is_valid_qt(const PrimedTableau &t, const VariableSpec &spec);
Monomial qt_weight(const PrimedTableau &t, const VariableSpec &spec);

/// Sum of x^T over all primed shifted tableaux, without materializing them.
LaurentPoly qt_weight_sum(const VariableSpec &spec, const StrictPartition &outer,
                          const StrictPartition &inner, LengthCheck check = LengthCheck::enforce);
std::uint64_t qt_count(const VariableSpec &spec, const StrictPartition &outer,
                       const StrictPartition &inner, LengthCheck check = LengthCheck::enforce);

/// Symplectic tableaux of an ordinary skew shape; entries in row i are at
/// least the letter i, counting rows from the top of the outer shape.
void for_each_spt(const VariableSpec &spec, const Partition &outer, const Partition &inner,
                  const std::function<void(const SpTableau &)> &visit);
std::vector<SpTableau> enum_spt(const VariableSpec &spec, const Partition &outer, const Partition &inner);

bool is_valid_spt(const SpTableau &t, const VariableSpec &spec);
Monomial spt_weight(const SpTableau &t, const VariableSpec &spec);
LaurentPoly spt_weight_sum(const VariableSpec &spec, const Partition &outer, const Partition &inner);

} // namespace qsym
