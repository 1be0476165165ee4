#include "qsym/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace qsym {

std::string VariableSpec::to_string() const { return "(" + std::to_string(k) + "," + std::to_string(m) + ")"; }

std::string Letter::to_string() const
{
    std::string out = std::to_string(index);
    if (barred) {
        out += 'b';
    }
    if (primed) {
        out += '\'';
    }
    return out;
}

Letter Letter::parse(std::string_view text)
{
    Letter a;
    std::size_t pos = 0;
    int value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == 0 || value == 0) {
        throw parse_error("invalid letter '" + std::string(text) + "'");
    }
    a.index = value;
    if (pos < text.size() && text[pos] == 'b') {
        a.barred = true;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '\'') {
        a.primed = true;
        ++pos;
    }
    if (pos != text.size()) {
        throw parse_error("invalid letter '" + std::string(text) + "'");
    }
    return a;
}

namespace {

void check_letter(const Letter &a, const VariableSpec &spec)
{
    if (a.index < 1 || a.index > spec.n() || (a.barred && a.index > spec.k)) {
        throw precondition_error("letter " + a.to_string() + " is not in the alphabet of spec "
                                 + spec.to_string());
    }
}

} // namespace

int qt_rank(const Letter &a, const VariableSpec &spec)
{
    check_letter(a, spec);
    const int plain = a.primed ? 0 : 1;
    if (a.index <= spec.k) {
        return 4 * (a.index - 1) + (a.barred ? 2 : 0) + plain;
    }
    return 4 * spec.k + 2 * (a.index - spec.k - 1) + plain;
}

int spt_rank(const Letter &a, const VariableSpec &spec)
{
    check_letter(a, spec);
    if (a.primed) {
        throw precondition_error("primed letter " + a.to_string() + " in a symplectic tableau");
    }
    if (a.index <= spec.k) {
        return 2 * (a.index - 1) + (a.barred ? 1 : 0);
    }
    return 2 * spec.k + (a.index - spec.k - 1);
}

std::vector<Letter> qt_alphabet(const VariableSpec &spec)
{
    std::vector<Letter> out;
    for (int i = 1; i <= spec.k; ++i) {
        out.push_back({i, false, true});
        out.push_back({i, false, false});
        out.push_back({i, true, true});
        out.push_back({i, true, false});
    }
    for (int i = spec.k + 1; i <= spec.n(); ++i) {
        out.push_back({i, false, true});
        out.push_back({i, false, false});
    }
    return out;
}

std::vector<Letter> spt_alphabet(const VariableSpec &spec)
{
    std::vector<Letter> out;
    for (int i = 1; i <= spec.k; ++i) {
        out.push_back({i, false, false});
        out.push_back({i, true, false});
    }
    for (int i = spec.k + 1; i <= spec.n(); ++i) {
        out.push_back({i, false, false});
    }
    return out;
}

namespace {

template <typename Shape>
std::string rows_to_string(const Shape &shape, const std::vector<Letter> &entries, bool shifted)
{
    std::string out;
    std::size_t next = 0;
    for (int r = 1; r <= shape.outer.length(); ++r) {
        const int first = shifted ? r : 1;
        const int last = first + shape.outer[r - 1];
        for (int c = first; c < last; ++c) {
            if (c != first) {
                out += ' ';
            }
            if (next < shape.cells.size() && shape.cells[next] == Cell{r, c}) {
                out += entries[next++].to_string();
            }
            else {
                out += '.';
            }
        }
        out += '\n';
    }
    return out;
}

// Neighbour positions for row-major filling; -1 where the cell is absent.
struct CellLinks {
    std::vector<int> left;
    std::vector<int> up;
    std::vector<int> prev_diag;
    std::vector<int> row;
};

CellLinks link_cells(const std::vector<Cell> &cells)
{
    CellLinks links;
    auto find = [&](Cell c) {
        const auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return it != cells.end() && *it == c ? static_cast<int>(it - cells.begin()) : -1;
    };
    for (const Cell &c : cells) {
        links.left.push_back(find({c.row, c.col - 1}));
        links.up.push_back(find({c.row - 1, c.col}));
        links.prev_diag.push_back(c.row == c.col ? find({c.row - 1, c.col - 1}) : -1);
        links.row.push_back(c.row);
    }
    return links;
}

struct LetterTable {
    std::vector<Letter> letters;
    std::vector<int> var;  // 0-based variable of the weight
    std::vector<int> sign; // exponent contribution
};

LetterTable make_table(std::vector<Letter> letters)
{
    LetterTable t;
    for (const Letter &a : letters) {
        t.var.push_back(a.index - 1);
        t.sign.push_back(a.barred ? -1 : 1);
    }
    t.letters = std::move(letters);
    return t;
}

struct QtRule {
    const CellLinks &links;
    const LetterTable &table;
    int k;

    bool fits(const std::vector<int> &ids, std::size_t pos, int id) const
    {
        if (const int l = links.left[pos]; l >= 0) {
            const int a = ids[static_cast<std::size_t>(l)];
            if (a > id || (a == id && table.letters[static_cast<std::size_t>(id)].primed)) {
                return false;
            }
        }
        if (const int u = links.up[pos]; u >= 0) {
            const int a = ids[static_cast<std::size_t>(u)];
            if (a > id || (a == id && !table.letters[static_cast<std::size_t>(id)].primed)) {
                return false;
            }
        }
        if (const int d = links.prev_diag[pos]; d >= 0) {
            const int index = table.letters[static_cast<std::size_t>(id)].index;
            if (index <= k && table.letters[static_cast<std::size_t>(ids[static_cast<std::size_t>(d)])].index == index) {
                return false;
            }
        }
        return true;
    }
};

struct SptRule {
    const CellLinks &links;
    std::vector<int> row_floor; // indexed by row, smallest admissible rank

    bool fits(const std::vector<int> &ids, std::size_t pos, int id) const
    {
        if (id < row_floor[static_cast<std::size_t>(links.row[pos])]) {
            return false;
        }
        if (const int l = links.left[pos]; l >= 0 && ids[static_cast<std::size_t>(l)] > id) {
            return false;
        }
        if (const int u = links.up[pos]; u >= 0 && ids[static_cast<std::size_t>(u)] >= id) {
            return false;
        }
        return true;
    }
};

std::vector<int> spt_row_floor(const VariableSpec &spec, int rows)
{
    std::vector<int> floor(static_cast<std::size_t>(rows) + 1, INT_MAX);
    for (int r = 1; r <= rows && r <= spec.n(); ++r) {
        floor[static_cast<std::size_t>(r)] = spt_rank({r, false, false}, spec);
    }
    return floor;
}

// Row-major backtracking with the running weight kept in `exps`.
template <typename Rule, typename Leaf>
void backtrack(const Rule &rule, const LetterTable &table, std::vector<int> &ids, std::vector<int> &exps,
               std::size_t pos, Leaf &leaf)
{
    if (pos == ids.size()) {
        leaf(ids, exps);
        return;
    }
    const int size = static_cast<int>(table.letters.size());
    // Letters only grow to the right and downwards, so start at the left or upper value.
    int start = 0;
    if (const int l = rule.links.left[pos]; l >= 0) {
        start = ids[static_cast<std::size_t>(l)];
    }
    if (const int u = rule.links.up[pos]; u >= 0) {
        start = std::max(start, ids[static_cast<std::size_t>(u)]);
    }
    for (int id = start; id < size; ++id) {
        if (!rule.fits(ids, pos, id)) {
            continue;
        }
        const auto v = static_cast<std::size_t>(table.var[static_cast<std::size_t>(id)]);
        const int s = table.sign[static_cast<std::size_t>(id)];
        ids[pos] = id;
        exps[v] += s;
        backtrack(rule, table, ids, exps, pos + 1, leaf);
        exps[v] -= s;
    }
    ids[pos] = -1;
}

struct VectorHash {
    std::size_t operator()(const std::vector<int> &v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int e : v) {
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(e))) * 0x100000001b3ULL;
        }
        return h;
    }
};

class WeightTally {
public:
    explicit WeightTally(std::size_t n) : n_(n) {}

    void add(const std::vector<int> &exps) { ++counts_[exps]; }

    LaurentPoly result() const
    {
        LaurentPoly p(n_);
        for (const auto &[exps, count] : counts_) {
            p.add_term(Monomial(exps), Integer(static_cast<unsigned long>(count)));
        }
        return p;
    }

private:
    std::size_t n_;
    std::unordered_map<std::vector<int>, std::uint64_t, VectorHash> counts_;
};

void require_length(int length, const VariableSpec &spec)
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
    if (length > spec.n()) {
        throw precondition_error("partition length " + std::to_string(length) + " exceeds n = "
                                 + std::to_string(spec.n()));
    }
}

template <typename Leaf>
void run_qt(const VariableSpec &spec, const StrictPartition &outer, const StrictPartition &inner, LengthCheck check,
            Leaf &&leaf)
{
    if (check == LengthCheck::enforce) {
        require_length(outer.length(), spec);
    }
    const auto shape = shifted_cells(outer, inner);
    if (!shape) {
        return;
    }
    const CellLinks links = link_cells(shape->cells);
    const LetterTable table = make_table(qt_alphabet(spec));
    const QtRule rule{links, table, spec.k};
    std::vector<int> ids(shape->cells.size(), -1);
    std::vector<int> exps(static_cast<std::size_t>(spec.n()), 0);
    auto wrapped = [&](const std::vector<int> &i, const std::vector<int> &e) { leaf(*shape, table, i, e); };
    backtrack(rule, table, ids, exps, 0, wrapped);
}

template <typename Leaf>
void run_spt(const VariableSpec &spec, const Partition &outer, const Partition &inner, Leaf &&leaf)
{
    require_length(outer.length(), spec);
    const auto shape = skew_cells(outer, inner);
    if (!shape) {
        return;
    }
    const CellLinks links = link_cells(shape->cells);
    const LetterTable table = make_table(spt_alphabet(spec));
    const SptRule rule{links, spt_row_floor(spec, outer.length())};
    std::vector<int> ids(shape->cells.size(), -1);
    std::vector<int> exps(static_cast<std::size_t>(spec.n()), 0);
    auto wrapped = [&](const std::vector<int> &i, const std::vector<int> &e) { leaf(*shape, table, i, e); };
    backtrack(rule, table, ids, exps, 0, wrapped);
}

template <typename Tableau>
Monomial weight_of(const Tableau &t, const VariableSpec &spec)
{
    Monomial w(static_cast<std::size_t>(spec.n()));
    for (const Letter &a : t.entries) {
        check_letter(a, spec);
        w[static_cast<std::size_t>(a.index - 1)] += a.barred ? -1 : 1;
    }
    return w;
}

} // namespace

const Letter &PrimedTableau::at(Cell c) const
{
    const auto it = std::find(shape.cells.begin(), shape.cells.end(), c);
    if (it == shape.cells.end()) {
        throw precondition_error("cell (" + std::to_string(c.row) + "," + std::to_string(c.col)
                                 + ") is not in the shape");
    }
    return entries[static_cast<std::size_t>(it - shape.cells.begin())];
}

std::string PrimedTableau::to_string() const { return rows_to_string(shape, entries, true); }

PrimedTableau PrimedTableau::from_rows(const StrictPartition &outer, const StrictPartition &inner,
                                       const std::vector<std::vector<Letter>> &rows)
{
    auto shape = shifted_cells(outer, inner);
    if (!shape) {
        throw precondition_error("inner shape not contained in outer shape");
    }
    PrimedTableau t{*shape, {}};
    if (rows.size() != static_cast<std::size_t>(outer.length())) {
        throw precondition_error("row count does not match the shape");
    }
    for (int r = 1; r <= outer.length(); ++r) {
        const auto &row = rows[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) != outer[r - 1] - inner[r - 1]) {
            throw precondition_error("row " + std::to_string(r) + " has the wrong number of letters");
        }
        t.entries.insert(t.entries.end(), row.begin(), row.end());
    }
    return t;
}

std::string SpTableau::to_string() const { return rows_to_string(shape, entries, false); }

void for_each_qt(const VariableSpec &spec, const StrictPartition &outer, const StrictPartition &inner,
                 const std::function<void(const PrimedTableau &)> &visit, LengthCheck check)
{
    PrimedTableau t;
    bool fresh = true;
    run_qt(spec, outer, inner, check,
           [&](const SkewShiftedShape &shape, const LetterTable &table, const std::vector<int> &ids,
               const std::vector<int> &) {
               if (fresh) {
                   t.shape = shape;
                   t.entries.resize(ids.size());
                   fresh = false;
               }
               for (std::size_t i = 0; i < ids.size(); ++i) {
                   t.entries[i] = table.letters[static_cast<std::size_t>(ids[i])];
               }
               visit(t);
           });
}

std::vector<PrimedTableau> enum_qt(const VariableSpec &spec, const StrictPartition &outer,
                                   const StrictPartition &inner)
{
    std::vector<PrimedTableau> out;
    for_each_qt(spec, outer, inner, [&](const PrimedTableau &t) { out.push_back(t); });
    return out;
}

bool is_valid_qt(const PrimedTableau &t, const VariableSpec &spec)
{
    const auto shape = shifted_cells(t.shape.outer, t.shape.inner);
    if (!shape || shape->cells != t.shape.cells || t.entries.size() != t.shape.cells.size()) {
        return false;
    }
    std::vector<int> ids;
    try {
        for (const Letter &a : t.entries) {
            ids.push_back(qt_rank(a, spec));
        }
    }
    catch (const precondition_error &) {
        return false;
    }
    const CellLinks links = link_cells(t.shape.cells);
    const LetterTable table = make_table(qt_alphabet(spec));
    const QtRule rule{links, table, spec.k};
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        if (!rule.fits(ids, pos, ids[pos])) {
            return false;
        }
    }
    return true;
}

Monomial qt_weight(const PrimedTableau &t, const VariableSpec &spec) { return weight_of(t, spec); }

LaurentPoly qt_weight_sum(const VariableSpec &spec, const StrictPartition &outer, const StrictPartition &inner,
                          LengthCheck check)
{
    WeightTally tally(static_cast<std::size_t>(std::max(spec.n(), 0)));
    run_qt(spec, outer, inner, check,
           [&](const SkewShiftedShape &, const LetterTable &, const std::vector<int> &,
               const std::vector<int> &exps) { tally.add(exps); });
    return tally.result();
}

std::uint64_t qt_count(const VariableSpec &spec, const StrictPartition &outer, const StrictPartition &inner,
                       LengthCheck check)
{
    std::uint64_t count = 0;
    run_qt(spec, outer, inner, check,
           [&](const SkewShiftedShape &, const LetterTable &, const std::vector<int> &, const std::vector<int> &) {
               ++count;
           });
    return count;
}

void for_each_spt(const VariableSpec &spec, const Partition &outer, const Partition &inner,
                  const std::function<void(const SpTableau &)> &visit)
{
    SpTableau t;
    bool fresh = true;
    run_spt(spec, outer, inner,
            [&](const SkewShape &shape, const LetterTable &table, const std::vector<int> &ids,
                const std::vector<int> &) {
                if (fresh) {
                    t.shape = shape;
                    t.entries.resize(ids.size());
                    fresh = false;
                }
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    t.entries[i] = table.letters[static_cast<std::size_t>(ids[i])];
                }
                visit(t);
            });
}

std::vector<SpTableau> enum_spt(const VariableSpec &spec, const Partition &outer, const Partition &inner)
{
    std::vector<SpTableau> out;
    for_each_spt(spec, outer, inner, [&](const SpTableau &t) { out.push_back(t); });
    return out;
}

bool is_valid_spt(const SpTableau &t, const VariableSpec &spec)
{
    const auto shape = skew_cells(t.shape.outer, t.shape.inner);
    if (!shape || shape->cells != t.shape.cells || t.entries.size() != t.shape.cells.size()) {
        return false;
    }
    std::vector<int> ids;
    try {
        for (const Letter &a : t.entries) {
            ids.push_back(spt_rank(a, spec));
        }
    }
    catch (const precondition_error &) {
        return false;
    }
    const CellLinks links = link_cells(t.shape.cells);
    const SptRule rule{links, spt_row_floor(spec, t.shape.outer.length())};
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        if (!rule.fits(ids, pos, ids[pos])) {
            return false;
        }
    }
    return true;
}

Monomial spt_weight(const SpTableau &t, const VariableSpec &spec) { return weight_of(t, spec); }

LaurentPoly spt_weight_sum(const VariableSpec &spec, const Partition &outer, const Partition &inner)
{
    WeightTally tally(static_cast<std::size_t>(std::max(spec.n(), 0)));
    run_spt(spec, outer, inner,
            [&](const SkewShape &, const LetterTable &, const std::vector<int> &, const std::vector<int> &exps) {
                tally.add(exps);
            });
    return tally.result();
}

} // namespace qsym
