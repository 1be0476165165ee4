#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsym/ring.hpp"
#include "qsym/shapes.hpp"
#include "qsym/tableaux.hpp"

namespace qsym {

/// Lattice point with doubled height: y2 = 2y, so I-vertices at half-integer
/// heights have odd y2.
struct Vertex {
    int x = 0;
    int y2 = 0;

    std::string to_string() const;
    friend auto operator<=>(const Vertex &, const Vertex &) = default;
};

enum class EdgeKind { H, Hbar, Hprime, P, D, Dbar, Dprime, D0, Dbar0, D0prime };

struct Edge {
    Vertex from;
    Vertex to;
    EdgeKind kind;
    std::optional<Letter> label; // empty for P edges

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Implicit directed graph for spec (k, m) with top height T = 2k + m and
/// x-coordinates bounded by xmax.
class LGVGraph {
public:
    LGVGraph(const VariableSpec &spec, int xmax);

    const VariableSpec &spec() const { return spec_; }
    int top() const { return top_; }
    int xmax() const { return xmax_; }

    bool is_vertex(Vertex v) const;
    std::vector<Edge> successors(Vertex v) const;
    /// Letter carried by horizontal or diagonal steps arriving at height y.
    Letter letter_at(int y, bool primed) const;

private:
    VariableSpec spec_;
    int top_;
    int xmax_;
};

struct LatticePath {
    Vertex source;
    std::vector<Edge> edges;

    Vertex sink() const { return edges.empty() ? source : edges.back().to; }
    std::vector<Letter> letters() const;
};

struct PathFamily {
    std::vector<LatticePath> paths;

    /// One line per path: its vertex coordinates.
    std::string to_string() const;
};

/// Visits every non-intersecting family for lambda/mu once. Path i runs to
/// (lambda_i, T); it starts at (mu_i, 0) for i <= l(mu) and at an I-vertex
/// otherwise, with at most one I-start per symplectic band of heights.
void for_each_path_family(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec,
                          const std::function<void(const PathFamily &)> &visit);
std::vector<PathFamily> enum_path_families(const StrictPartition &lambda, const StrictPartition &mu,
                                           const VariableSpec &spec);

bool is_valid_family(const PathFamily &f, const StrictPartition &lambda, const StrictPartition &mu,
                     const VariableSpec &spec);
Monomial family_weight(const PathFamily &f, const VariableSpec &spec);
/// Row i of the tableau reads the letters of path i from left to right.
PrimedTableau family_to_tableau(const PathFamily &f, const StrictPartition &lambda, const StrictPartition &mu);

LaurentPoly lgv_weight_sum(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);
std::uint64_t lgv_count(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);

} // namespace qsym
