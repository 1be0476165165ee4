#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

/// Weakly decreasing list of positive parts; trailing zeros are dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based); zero past the length.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition transpose() const;
    bool contains(const Partition &mu) const;

    std::string to_string() const;
    /// Comma-separated descending integers; "" or "0" is the empty partition.
    static Partition parse(std::string_view text);

    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

/// Strictly decreasing list of positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// Componentwise containment; equivalent to S(mu) being a subset of S(this).
    bool contains(const StrictPartition &mu) const;
    Partition as_partition() const { return Partition(parts_); }

    std::string to_string() const { return as_partition().to_string(); }
    static StrictPartition parse(std::string_view text);

    friend auto operator<=>(const StrictPartition &, const StrictPartition &) = default;

private:
    std::vector<int> parts_;
};

/// 1-based (row, column) cell.
struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell &, const Cell &) = default;
};

/// S(outer) - S(inner), cells listed row by row, left to right.
struct SkewShiftedShape {
    StrictPartition outer;
    StrictPartition inner;
    std::vector<Cell> cells;

    bool contains(Cell c) const;
    /// First and one-past-last column of row r (1-based), empty if first == last.
    std::pair<int, int> row_span(int r) const;
};

/// Ordinary (unshifted) skew diagram outer/inner.
struct SkewShape {
    Partition outer;
    Partition inner;
    std::vector<Cell> cells;
};

/// Shifted diagram S(lambda) of a single strict partition.
std::vector<Cell> shifted_diagram(const StrictPartition &lambda);

/// Cells of S(lambda/mu); nullopt when mu is not contained in lambda.
std::optional<SkewShiftedShape> shifted_cells(const StrictPartition &lambda,
                                              const StrictPartition &mu);

/// Cells of the ordinary skew diagram lambda/mu; nullopt when mu is not contained.
std::optional<SkewShape> skew_cells(const Partition &lambda, const Partition &mu);

/// All strict nu with mu <= nu <= lambda, in increasing order.
std::vector<StrictPartition> enum_strict_between(const StrictPartition &mu,
                                                 const StrictPartition &lambda);

/// All partitions nu with mu <= nu <= lambda, in increasing order.
std::vector<Partition> partitions_between(const Partition &mu, const Partition &lambda);

/// All strict partitions with largest part <= max_part and length <= max_length.
std::vector<StrictPartition> strict_partitions_in_box(int max_part, int max_length);

/// All strict partitions of weight <= max_weight.
std::vector<StrictPartition> strict_partitions_up_to(int max_weight);

/// All partitions of weight <= max_weight.
std::vector<Partition> partitions_up_to(int max_weight);

/// Row parts for the Pfaffian matrices, padded with a zero so that
/// l + m is even. Without inner parts lambda receives the zero, otherwise mu.
std::pair<std::vector<int>, std::vector<int>> pad_for_pfaffian(const StrictPartition &lambda,
                                                               const StrictPartition &mu);

} // namespace qsym
