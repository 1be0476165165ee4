#include "qsym/lgv.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qsym {

std::string Vertex::to_string() const
{
    std::string y = std::to_string(y2 / 2);
    if (y2 % 2 != 0) {
        y += ".5";
    }
    return "(" + std::to_string(x) + "," + y + ")";
}

LGVGraph::LGVGraph(const VariableSpec &spec, int xmax) : spec_(spec), top_(2 * spec.k + spec.m), xmax_(xmax)
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
}

bool LGVGraph::is_vertex(Vertex v) const
{
    if (v.x < 0 || v.x > xmax_ || v.y2 < 0 || v.y2 > 2 * top_) {
        return false;
    }
    return v.x == 0 || v.y2 % 2 == 0;
}

Letter LGVGraph::letter_at(int y, bool primed) const
{
    if (y <= 2 * spec_.k) {
        return y % 2 != 0 ? Letter{(y + 1) / 2, false, primed} : Letter{y / 2, true, primed};
    }
    return Letter{y - spec_.k, false, primed};
}

namespace {

EdgeKind horizontal_kind(int y, int k)
{
    if (y > 2 * k) {
        return EdgeKind::Hprime;
    }
    return y % 2 != 0 ? EdgeKind::H : EdgeKind::Hbar;
}

EdgeKind diagonal_kind(int y, int k, bool from_i)
{
    if (y > 2 * k) {
        return from_i ? EdgeKind::D0prime : EdgeKind::Dprime;
    }
    if (y % 2 != 0) {
        return from_i ? EdgeKind::D0 : EdgeKind::D;
    }
    return from_i ? EdgeKind::Dbar0 : EdgeKind::Dbar;
}

} // namespace

std::vector<Edge> LGVGraph::successors(Vertex v) const
{
    std::vector<Edge> out;
    if (!is_vertex(v)) {
        return out;
    }
    if (v.x == 0) {
        if (xmax_ < 1) {
            return out;
        }
        if (v.y2 % 2 != 0) {
            const int h = (v.y2 + 1) / 2;
            out.push_back({v, {1, 2 * h}, diagonal_kind(h, spec_.k, true), letter_at(h, true)});
        }
        else if (v.y2 >= 2) {
            const int h = v.y2 / 2;
            out.push_back({v, {1, v.y2}, horizontal_kind(h, spec_.k), letter_at(h, false)});
        }
        return out;
    }
    const int y = v.y2 / 2;
    if (y + 1 <= top_) {
        out.push_back({v, {v.x, v.y2 + 2}, EdgeKind::P, std::nullopt});
    }
    if (v.x + 1 <= xmax_) {
        if (y >= 1) {
            out.push_back({v, {v.x + 1, v.y2}, horizontal_kind(y, spec_.k), letter_at(y, false)});
        }
        if (y + 1 <= top_) {
            out.push_back({v, {v.x + 1, v.y2 + 2}, diagonal_kind(y + 1, spec_.k, false), letter_at(y + 1, true)});
        }
    }
    return out;
}

std::vector<Letter> LatticePath::letters() const
{
    std::vector<Letter> out;
    for (const Edge &e : edges) {
        if (e.label) {
            out.push_back(*e.label);
        }
    }
    return out;
}

std::string PathFamily::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        out += "P" + std::to_string(i + 1) + ": " + paths[i].source.to_string();
        for (const Edge &e : paths[i].edges) {
            out += ' ' + e.to.to_string();
        }
        out += '\n';
    }
    return out;
}

namespace {

void require_length(const StrictPartition &lambda, const VariableSpec &spec)
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
    if (lambda.length() > spec.n()) {
        throw precondition_error("partition length " + std::to_string(lambda.length()) + " exceeds n = "
                                 + std::to_string(spec.n()));
    }
}

// Symplectic band of the first letter of a path leaving I, or 0 outside the bands.
int band_of(const Edge &first, int k)
{
    return first.label && first.label->index <= k ? first.label->index : 0;
}

// Path-by-path depth-first search over an occupancy grid.
template <typename Leaf>
class FamilySearch {
public:
    FamilySearch(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec, Leaf &leaf)
        : lambda_(lambda), mu_(mu), graph_(spec, std::max(lambda[0], mu[0])), leaf_(leaf),
          occupied_(static_cast<std::size_t>((graph_.xmax() + 1) * (2 * graph_.top() + 1)), 0),
          band_used_(static_cast<std::size_t>(spec.k) + 1, false), exps_(static_cast<std::size_t>(spec.n()), 0)
    {
        family_.paths.resize(static_cast<std::size_t>(lambda.length()));
    }

    void run()
    {
        if (mu_.length() > lambda_.length()) {
            return;
        }
        next_path(0);
    }

private:
    std::size_t cell(Vertex v) const
    {
        return static_cast<std::size_t>(v.x * (2 * graph_.top() + 1) + v.y2);
    }

    void next_path(int i)
    {
        if (i == lambda_.length()) {
            leaf_(family_, exps_);
            return;
        }
        if (i < mu_.length()) {
            start(i, {mu_[i], 0});
            return;
        }
        for (int y2 = 1; y2 <= 2 * graph_.top(); ++y2) {
            const Vertex source{0, y2};
            const auto out = graph_.successors(source);
            if (out.empty()) {
                continue;
            }
            const int band = band_of(out.front(), graph_.spec().k);
            if (band != 0 && band_used_[static_cast<std::size_t>(band)]) {
                continue;
            }
            band_used_[static_cast<std::size_t>(band)] = band != 0;
            start(i, source);
            band_used_[static_cast<std::size_t>(band)] = false;
        }
    }

    void start(int i, Vertex source)
    {
        if (occupied_[cell(source)] != 0) {
            return;
        }
        occupied_[cell(source)] = 1;
        auto &path = family_.paths[static_cast<std::size_t>(i)];
        path.source = source;
        path.edges.clear();
        walk(i, source, {lambda_[i], 2 * graph_.top()});
        occupied_[cell(source)] = 0;
    }

    void walk(int i, Vertex v, Vertex sink)
    {
        if (v == sink) {
            next_path(i + 1);
            return;
        }
        auto &path = family_.paths[static_cast<std::size_t>(i)];
        for (const Edge &e : graph_.successors(v)) {
            if (e.to.x > sink.x || occupied_[cell(e.to)] != 0) {
                continue;
            }
            occupied_[cell(e.to)] = 1;
            path.edges.push_back(e);
            const int var = e.label ? e.label->index - 1 : -1;
            const int sign = e.label && e.label->barred ? -1 : 1;
            if (var >= 0) {
                exps_[static_cast<std::size_t>(var)] += sign;
            }
            walk(i, e.to, sink);
            if (var >= 0) {
                exps_[static_cast<std::size_t>(var)] -= sign;
            }
            path.edges.pop_back();
            occupied_[cell(e.to)] = 0;
        }
    }

    const StrictPartition &lambda_;
    const StrictPartition &mu_;
    LGVGraph graph_;
    Leaf &leaf_;
    std::vector<char> occupied_;
    std::vector<bool> band_used_;
    std::vector<int> exps_;
    PathFamily family_;
};

template <typename Leaf>
void search(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec, Leaf &&leaf)
{
    require_length(lambda, spec);
    FamilySearch<Leaf> s(lambda, mu, spec, leaf);
    s.run();
}

} // namespace

void for_each_path_family(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec,
                          const std::function<void(const PathFamily &)> &visit)
{
    search(lambda, mu, spec, [&](const PathFamily &f, const std::vector<int> &) { visit(f); });
}

std::vector<PathFamily> enum_path_families(const StrictPartition &lambda, const StrictPartition &mu,
                                           const VariableSpec &spec)
{
    std::vector<PathFamily> out;
    for_each_path_family(lambda, mu, spec, [&](const PathFamily &f) { out.push_back(f); });
    return out;
}

bool is_valid_family(const PathFamily &f, const StrictPartition &lambda, const StrictPartition &mu,
                     const VariableSpec &spec)
{
    if (spec.k < 0 || spec.m < 0 || f.paths.size() != static_cast<std::size_t>(lambda.length())
        || mu.length() > lambda.length()) {
        return false;
    }
    const LGVGraph graph(spec, std::max(lambda[0], mu[0]));
    std::set<Vertex> seen;
    std::set<int> bands;
    for (int i = 0; i < lambda.length(); ++i) {
        const LatticePath &p = f.paths[static_cast<std::size_t>(i)];
        if (i < mu.length()) {
            if (p.source != Vertex{mu[i], 0}) {
                return false;
            }
        }
        else {
            if (p.source.x != 0 || !graph.is_vertex(p.source) || p.edges.empty()) {
                return false;
            }
            if (const int band = band_of(p.edges.front(), spec.k); band != 0 && !bands.insert(band).second) {
                return false;
            }
        }
        if (!seen.insert(p.source).second) {
            return false;
        }
        Vertex at = p.source;
        for (const Edge &e : p.edges) {
            const auto next = graph.successors(at);
            if (std::find(next.begin(), next.end(), e) == next.end() || !seen.insert(e.to).second) {
                return false;
            }
            at = e.to;
        }
        if (at != Vertex{lambda[i], 2 * graph.top()}) {
            return false;
        }
    }
    return true;
}

Monomial family_weight(const PathFamily &f, const VariableSpec &spec)
{
    Monomial w(static_cast<std::size_t>(spec.n()));
    for (const LatticePath &p : f.paths) {
        for (const Letter &a : p.letters()) {
            w[static_cast<std::size_t>(a.index - 1)] += a.barred ? -1 : 1;
        }
    }
    return w;
}

PrimedTableau family_to_tableau(const PathFamily &f, const StrictPartition &lambda, const StrictPartition &mu)
{
    std::vector<std::vector<Letter>> rows;
    for (const LatticePath &p : f.paths) {
        rows.push_back(p.letters());
    }
    return PrimedTableau::from_rows(lambda, mu, rows);
}

LaurentPoly lgv_weight_sum(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    const auto n = static_cast<std::size_t>(std::max(spec.n(), 0));
    std::map<std::vector<int>, std::uint64_t> counts;
    search(lambda, mu, spec, [&](const PathFamily &, const std::vector<int> &exps) { ++counts[exps]; });
    LaurentPoly p(n);
    for (const auto &[exps, count] : counts) {
        p.add_term(Monomial(exps), Integer(static_cast<unsigned long>(count)));
    }
    return p;
}

std::uint64_t lgv_count(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    std::uint64_t count = 0;
    search(lambda, mu, spec, [&](const PathFamily &, const std::vector<int> &) { ++count; });
    return count;
}

} // namespace qsym
