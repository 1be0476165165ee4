#include "qsym/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qsym {

namespace {

std::vector<int> strip_zeros(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return parts;
}

std::vector<int> parse_parts(std::string_view text)
{
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') {
            s.remove_prefix(1);
        }
        while (!s.empty() && s.back() == ' ') {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        return parts;
    }
    while (true) {
        const auto comma = text.find(',');
        const std::string_view field = trim(text.substr(0, comma));
        int value = 0;
        const auto *end = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(field.data(), end, value);
        if (field.empty() || ec != std::errc() || ptr != end) {
            throw parse_error("invalid partition part '" + std::string(field) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text = text.substr(comma + 1);
    }
    return parts;
}

template <typename P>
bool parts_contain(const P &lambda, const P &mu)
{
    if (mu.length() > lambda.length()) {
        return false;
    }
    for (int i = 0; i < mu.length(); ++i) {
        if (mu[i] > lambda[i]) {
            return false;
        }
    }
    return true;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(strip_zeros(std::move(parts)))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw precondition_error("partition parts must be nonnegative");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw precondition_error("partition parts must be weakly decreasing: " + to_string());
        }
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const
{
    std::vector<int> t(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++t[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(t));
}

bool Partition::contains(const Partition &mu) const { return parts_contain(*this, mu); }

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(strip_zeros(std::move(parts)))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw precondition_error("strict partition parts must be positive");
        }
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]) {
            throw precondition_error("partition is not strict: " + Partition(parts_).to_string());
        }
    }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StrictPartition::contains(const StrictPartition &mu) const { return parts_contain(*this, mu); }

StrictPartition StrictPartition::parse(std::string_view text)
{
    return StrictPartition(parse_parts(text));
}

bool SkewShiftedShape::contains(Cell c) const
{
    const auto [first, last] = row_span(c.row);
    return c.col >= first && c.col < last;
}

std::pair<int, int> SkewShiftedShape::row_span(int r) const
{
    if (r < 1 || r > outer.length()) {
        return {0, 0};
    }
    const int first = r + inner[r - 1];
    const int last = r + outer[r - 1];
    return {first, std::max(first, last)};
}

std::vector<Cell> shifted_diagram(const StrictPartition &lambda)
{
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = i; j <= lambda[i - 1] + i - 1; ++j) {
            cells.push_back({i, j});
        }
    }
    return cells;
}

std::optional<SkewShiftedShape> shifted_cells(const StrictPartition &lambda,
                                              const StrictPartition &mu)
{
    if (!lambda.contains(mu)) {
        return std::nullopt;
    }
    SkewShiftedShape shape{lambda, mu, {}};
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = i + mu[i - 1]; j <= lambda[i - 1] + i - 1; ++j) {
            shape.cells.push_back({i, j});
        }
    }
    return shape;
}

std::optional<SkewShape> skew_cells(const Partition &lambda, const Partition &mu)
{
    if (!lambda.contains(mu)) {
        return std::nullopt;
    }
    SkewShape shape{lambda, mu, {}};
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = mu[i - 1] + 1; j <= lambda[i - 1]; ++j) {
            shape.cells.push_back({i, j});
        }
    }
    return shape;
}

namespace {

// Depth-first generation of part lists between lower and upper bounds.
void between_rec(const std::vector<int> &lo, const std::vector<int> &hi, bool strict,
                 std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    const std::size_t i = cur.size();
    if (i == hi.size()) {
        out.push_back(cur);
        return;
    }
    const int lower = i < lo.size() ? lo[i] : 0;
    int upper = hi[i];
    if (i > 0) {
        upper = std::min(upper, strict ? cur.back() - 1 : cur.back());
    }
    for (int p = lower; p <= upper; ++p) {
        if (p == 0) {
            // Every later part must be zero too.
            if (lo.size() <= i) {
                out.push_back(cur);
            }
            continue;
        }
        cur.push_back(p);
        between_rec(lo, hi, strict, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<StrictPartition> enum_strict_between(const StrictPartition &mu,
                                                 const StrictPartition &lambda)
{
    std::vector<StrictPartition> result;
    if (!lambda.contains(mu)) {
        return result;
    }
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    between_rec(mu.parts(), lambda.parts(), true, cur, raw);
    for (auto &p : raw) {
        result.emplace_back(std::move(p));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Partition> partitions_between(const Partition &mu, const Partition &lambda)
{
    std::vector<Partition> result;
    if (!lambda.contains(mu)) {
        return result;
    }
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    between_rec(mu.parts(), lambda.parts(), false, cur, raw);
    for (auto &p : raw) {
        result.emplace_back(std::move(p));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<StrictPartition> strict_partitions_in_box(int max_part, int max_length)
{
    std::vector<StrictPartition> result;
    if (max_length <= 0 || max_part <= 0) {
        result.emplace_back();
        return result;
    }
    std::vector<int> top;
    for (int i = 0; i < max_length && max_part - i > 0; ++i) {
        top.push_back(max_part - i);
    }
    return enum_strict_between(StrictPartition(), StrictPartition(top));
}

std::vector<StrictPartition> strict_partitions_up_to(int max_weight)
{
    std::vector<StrictPartition> result;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int remaining, int below) -> void {
        result.emplace_back(cur);
        for (int p = std::min(remaining, below - 1); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, std::max(max_weight, 0), max_weight + 1);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Partition> partitions_up_to(int max_weight)
{
    std::vector<Partition> result;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int remaining, int below) -> void {
        result.emplace_back(cur);
        for (int p = std::min(remaining, below); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, std::max(max_weight, 0), max_weight);
    std::sort(result.begin(), result.end());
    return result;
}

std::pair<std::vector<int>, std::vector<int>> pad_for_pfaffian(const StrictPartition &lambda,
                                                               const StrictPartition &mu)
{
    std::vector<int> l = lambda.parts();
    std::vector<int> m = mu.parts();
    if ((l.size() + m.size()) % 2 != 0) {
        if (m.empty()) {
            l.push_back(0);
        }
        else {
            m.push_back(0);
        }
    }
    return {std::move(l), std::move(m)};
}

} // namespace qsym
