#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "qsym/lgv.hpp"
#include "qsym/qfun.hpp"
#include "qsym/verify.hpp"

using namespace qsym;

namespace {

StrictPartition S(const char *text) { return StrictPartition::parse(text); }
LaurentPoly P(const char *text, std::size_t n) { return LaurentPoly::from_string(text, n); }

// Follows moves from a source: P up, H right, D up-right.
LatticePath walk(const LGVGraph &g, Vertex source, const std::string &moves)
{
    LatticePath path{source, {}};
    Vertex at = source;
    for (char c : moves) {
        const auto next = g.successors(at);
        const auto it = std::find_if(next.begin(), next.end(), [&](const Edge &e) {
            switch (c) {
            case 'P': return e.to.x == at.x;
            case 'H': return e.to.x == at.x + 1 && e.to.y2 == at.y2;
            default: return e.to.x == at.x + 1 && e.to.y2 > at.y2;
            }
        });
        if (it == next.end()) {
            ADD_FAILURE() << "no " << c << " edge from " << at.to_string();
            return path;
        }
        path.edges.push_back(*it);
        at = it->to;
    }
    return path;
}

const VariableSpec fig_spec{3, 2};

PathFamily figure_family()
{
    const LGVGraph g(fig_spec, 7);
    return PathFamily{{walk(g, {6, 0}, "PPPPPDPP"), walk(g, {4, 0}, "PPPHPPPHPP"), walk(g, {1, 0}, "DPPPPHHPPPH"),
                       walk(g, {0, 3}, "DPPPPDP"), walk(g, {0, 14}, "HP")}};
}

} // namespace

TEST(Graph, Shape)
{
    const LGVGraph g(fig_spec, 7);
    EXPECT_EQ(g.top(), 8);
    EXPECT_TRUE(g.is_vertex({0, 3}));
    EXPECT_TRUE(g.is_vertex({3, 16}));
    EXPECT_FALSE(g.is_vertex({3, 3}));
    EXPECT_FALSE(g.is_vertex({8, 2}));
    EXPECT_FALSE(g.is_vertex({2, 18}));
    EXPECT_EQ(g.letter_at(1, false), Letter::parse("1"));
    EXPECT_EQ(g.letter_at(2, true), Letter::parse("1b'"));
    EXPECT_EQ(g.letter_at(7, true), Letter::parse("4'"));
    for (const Edge &e : g.successors({2, 4})) {
        EXPECT_TRUE(e.to.x > e.from.x || e.to.y2 > e.from.y2);
        EXPECT_EQ(e.label.has_value(), e.kind != EdgeKind::P);
    }
}

TEST(Families, SingleSymplecticCell)
{
    const auto all = enum_path_families(S("1"), S(""), {1, 0});
    EXPECT_EQ(all.size(), 4u);
    EXPECT_EQ(lgv_weight_sum(S("1"), S(""), {1, 0}), P("2*x1 + 2*x1^-1", 1));
}

TEST(Families, TypeAStraight)
{
    EXPECT_EQ(lgv_weight_sum(S("2,1"), S(""), {0, 2}), P("4*x1^2*x2 + 4*x1*x2^2", 2));
}

TEST(Families, NotContainedIsEmpty)
{
    EXPECT_TRUE(enum_path_families(S("1"), S("2"), {1, 1}).empty());
    EXPECT_TRUE(enum_path_families(S("3"), S("2,1"), {1, 1}).empty());
}

TEST(Families, EqualShapesGiveTheVerticalFamily)
{
    const auto all = enum_path_families(S("3,1"), S("3,1"), {1, 1});
    ASSERT_EQ(all.size(), 1u);
    for (const auto &p : all.front().paths) {
        EXPECT_TRUE(std::all_of(p.edges.begin(), p.edges.end(), [](const Edge &e) { return e.kind == EdgeKind::P; }));
    }
    EXPECT_EQ(family_weight(all.front(), {1, 1}), Monomial(2));
    EXPECT_EQ(lgv_weight_sum(S("3,1"), S("3,1"), {1, 1}), LaurentPoly::one(2));
}

TEST(Families, FirstTypeAHorizontalStep)
{
    const VariableSpec spec{1, 1};
    const LGVGraph g(spec, 2);
    const PathFamily f{{walk(g, {1, 0}, "PPPH")}};
    ASSERT_EQ(f.paths.front().edges[3].kind, EdgeKind::Hprime);
    EXPECT_TRUE(is_valid_family(f, S("2"), S("1"), spec));
    EXPECT_EQ(family_weight(f, spec), Monomial::variable(2, 1));
}

TEST(Families, FigureFamily)
{
    const auto f = figure_family();
    const auto lambda = S("7,6,5,2,1");
    const auto mu = S("6,4,1");
    EXPECT_TRUE(is_valid_family(f, lambda, mu, fig_spec));
    EXPECT_EQ(family_weight(f, fig_spec), Monomial(std::vector<int>{0, 1, 0, 2, 1}));
    const auto t = family_to_tableau(f, lambda, mu);
    EXPECT_TRUE(is_valid_qt(t, fig_spec));
    EXPECT_EQ(t.to_string(), ". . . . . . 3b'\n. . . . 2 3b\n. 1' 3 3 5\n1b' 4'\n4\n");
    EXPECT_EQ(qt_weight(t, fig_spec), family_weight(f, fig_spec));
}

TEST(Families, IntersectingFamilyRejected)
{
    const auto lambda = S("7,6,5,2,1");
    const auto mu = S("6,4,1");
    auto f = figure_family();
    std::swap(f.paths[0], f.paths[1]);
    EXPECT_FALSE(is_valid_family(f, lambda, mu, fig_spec));
    const LGVGraph g(fig_spec, 7);
    f = figure_family();
    f.paths[3] = walk(g, {0, 4}, "HPPPPDP");
    f.paths[4] = walk(g, {0, 3}, "DPPPPPP");
    EXPECT_FALSE(is_valid_family(f, lambda, mu, fig_spec));
}

TEST(Families, DumpFormat)
{
    const auto dump = figure_family().to_string();
    EXPECT_EQ(dump.substr(0, dump.find('\n')), "P1: (6,0) (6,1) (6,2) (6,3) (6,4) (6,5) (7,6) (7,7) (7,8)");
    EXPECT_NE(dump.find("P4: (0,1.5) (1,2)"), std::string::npos);
}

TEST(Families, WeightSumMatchesTableaux)
{
    for (const auto &spec : specs_up_to(3)) {
        for (const auto &l : strict_partitions_in_box(4, 3)) {
            if (l.length() > spec.n()) {
                continue;
            }
            for (const auto &mu : enum_strict_between(StrictPartition(), l)) {
                EXPECT_EQ(lgv_weight_sum(l, mu, spec), qI_tableau(l, mu, spec))
                    << spec.to_string() << " " << l.to_string() << "/" << mu.to_string();
                EXPECT_EQ(lgv_count(l, mu, spec), qt_count(spec, l, mu));
            }
        }
    }
}

TEST(Families, TableauMapIsBijective)
{
    const VariableSpec spec{2, 1};
    const auto lambda = S("3,1");
    std::map<std::string, int> mapped;
    for (const auto &f : enum_path_families(lambda, StrictPartition(), spec)) {
        const auto t = family_to_tableau(f, lambda, StrictPartition());
        EXPECT_EQ(qt_weight(t, spec), family_weight(f, spec));
        ++mapped[t.to_string()];
    }
    std::map<std::string, int> direct;
    for (const auto &t : enum_qt(spec, lambda, StrictPartition())) {
        ++direct[t.to_string()];
    }
    EXPECT_EQ(mapped, direct);
}
