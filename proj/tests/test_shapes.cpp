#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qsym/shapes.hpp"

using namespace qsym;

namespace {

StrictPartition S(const char *text) { return StrictPartition::parse(text); }

std::set<Cell> cell_set(const std::vector<Cell> &cells) { return {cells.begin(), cells.end()}; }

} // namespace

TEST(Shapes, ParseAndPrint)
{
    EXPECT_EQ(Partition::parse("7,6,5,2,1").to_string(), "7,6,5,2,1");
    EXPECT_EQ(Partition::parse("3, 1, 0").to_string(), "3,1");
    EXPECT_TRUE(Partition::parse("").empty());
    EXPECT_TRUE(Partition::parse("0").empty());
    EXPECT_THROW(Partition::parse("3,a"), parse_error);
    EXPECT_THROW(Partition::parse("1,,1"), parse_error);
    EXPECT_THROW(Partition::parse("1,2"), precondition_error);
    EXPECT_THROW(S("2,2"), precondition_error);
}

TEST(Shapes, TransposeAndWeight)
{
    const auto l = Partition::parse("4,2,1");
    EXPECT_EQ(l.transpose().to_string(), "3,2,1,1");
    EXPECT_EQ(l.transpose().transpose(), l);
    EXPECT_EQ(l.weight(), 7);
}

TEST(Shapes, ShiftedCellsStraight)
{
    const auto s = shifted_cells(S("2,1"), S(""));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->cells, (std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}}));
}

TEST(Shapes, ShiftedCellsSkew)
{
    const auto s = shifted_cells(S("3,1"), S("2"));
    ASSERT_TRUE(s);
    EXPECT_EQ(cell_set(s->cells), (std::set<Cell>{{1, 3}, {2, 2}}));
}

TEST(Shapes, ShiftedCellsNotContained) { EXPECT_FALSE(shifted_cells(S("1"), S("2"))); }

TEST(Shapes, ShiftedDiagramRows)
{
    for (const auto &l : strict_partitions_up_to(8)) {
        const auto cells = shifted_diagram(l);
        EXPECT_EQ(static_cast<int>(cells.size()), l.weight());
        for (int i = 1; i <= l.length(); ++i) {
            const auto n = std::count_if(cells.begin(), cells.end(), [&](Cell c) { return c.row == i; });
            EXPECT_EQ(n, l[i - 1]);
            EXPECT_TRUE(std::find(cells.begin(), cells.end(), Cell{i, i}) != cells.end());
        }
    }
}

TEST(Shapes, ContainmentMatchesDiagramInclusion)
{
    const auto all = strict_partitions_up_to(7);
    for (const auto &l : all) {
        const auto big = cell_set(shifted_diagram(l));
        for (const auto &m : all) {
            const auto small = cell_set(shifted_diagram(m));
            const bool inside = std::includes(big.begin(), big.end(), small.begin(), small.end());
            EXPECT_EQ(l.contains(m), inside) << l.to_string() << " / " << m.to_string();
            if (l.contains(m)) {
                const auto skew = shifted_cells(l, m);
                ASSERT_TRUE(skew);
                EXPECT_EQ(skew->cells.size(), big.size() - small.size());
            }
        }
    }
}

TEST(Shapes, EnumStrictBetween)
{
    EXPECT_EQ(enum_strict_between(S(""), S("2,1")), (std::vector<StrictPartition>{S(""), S("1"), S("2"), S("2,1")}));
    EXPECT_EQ(enum_strict_between(S("3,1"), S("3,1")), (std::vector<StrictPartition>{S("3,1")}));
    EXPECT_TRUE(enum_strict_between(S("2"), S("1")).empty());
}

TEST(Shapes, EnumStrictBetweenMatchesFiltration)
{
    for (const auto &l : strict_partitions_up_to(8)) {
        std::size_t expected = 0;
        for (const auto &nu : strict_partitions_in_box(l[0], l.length())) {
            expected += l.contains(nu) ? 1 : 0;
        }
        const auto between = enum_strict_between(StrictPartition(), l);
        EXPECT_EQ(between.size(), expected) << l.to_string();
        EXPECT_EQ(std::set<StrictPartition>(between.begin(), between.end()).size(), between.size());
    }
}

TEST(Shapes, ContainmentIsTransitiveAndAntisymmetric)
{
    const auto all = strict_partitions_up_to(6);
    for (const auto &a : all) {
        for (const auto &b : all) {
            if (a.contains(b) && b.contains(a)) {
                EXPECT_EQ(a, b);
            }
            for (const auto &c : all) {
                if (a.contains(b) && b.contains(c)) {
                    EXPECT_TRUE(a.contains(c));
                }
            }
        }
    }
}

TEST(Shapes, PartitionsBetween)
{
    const auto between = partitions_between(Partition(), Partition::parse("2,1"));
    EXPECT_EQ(between.size(), 5u); // empty, 1, 2, 11, 21
    EXPECT_EQ(partitions_up_to(5).size(), 1u + 1 + 2 + 3 + 5 + 7);
    EXPECT_EQ(strict_partitions_up_to(6).size(), 1u + 1 + 1 + 2 + 2 + 3 + 4);
}

TEST(Shapes, PadForPfaffian)
{
    EXPECT_EQ(pad_for_pfaffian(S("3,1"), S("2")), (std::pair<std::vector<int>, std::vector<int>>{{3, 1}, {2, 0}}));
    EXPECT_EQ(pad_for_pfaffian(S("3,2,1"), S("")), (std::pair<std::vector<int>, std::vector<int>>{{3, 2, 1, 0}, {}}));
    EXPECT_EQ(pad_for_pfaffian(S("2,1"), S("")), (std::pair<std::vector<int>, std::vector<int>>{{2, 1}, {}}));
}
