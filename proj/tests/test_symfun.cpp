#include <gtest/gtest.h>

#include "qsym/symfun.hpp"
#include "qsym/verify.hpp"

using namespace qsym;

namespace {

LaurentPoly P(const char *text, std::size_t n) { return LaurentPoly::from_string(text, n); }
Partition Pt(const char *text) { return Partition::parse(text); }

} // namespace

TEST(Symfun, CompleteHomogeneous)
{
    const auto sym = Alphabet::symplectic({1, 0});
    EXPECT_TRUE(complete_h(-1, sym).is_zero());
    EXPECT_EQ(complete_h(0, sym), LaurentPoly::one(1));
    EXPECT_EQ(complete_h(1, sym), P("x1 + x1^-1", 1));
    EXPECT_EQ(complete_h(2, Alphabet::plain(2)), P("x1^2 + x1*x2 + x2^2", 2));
}

TEST(Symfun, Elementary)
{
    const auto a = Alphabet::plain(3);
    EXPECT_EQ(elementary_e(2, a), P("x1*x2 + x1*x3 + x2*x3", 3));
    EXPECT_TRUE(elementary_e(4, a).is_zero());
    EXPECT_TRUE(elementary_e(-1, a).is_zero());
}

TEST(Symfun, AlphabetLayout)
{
    const VariableSpec spec{2, 1};
    EXPECT_EQ(Alphabet::symplectic(spec).monomials.size(), 4u);
    EXPECT_EQ(Alphabet::type_a(spec).monomials, (std::vector<Monomial>{Monomial::variable(3, 2)}));
    EXPECT_EQ(Alphabet::combined(spec).monomials.size(), 5u);
    EXPECT_EQ(Alphabet::combined(spec).nvars, 3u);
}

TEST(Symfun, SchurExamples)
{
    const auto a = Alphabet::plain(2);
    EXPECT_EQ(schur_skew(Pt("1"), Pt(""), a), P("x1 + x2", 2));
    EXPECT_EQ(schur_skew(Pt("2,1"), Pt(""), a), P("x1^2*x2 + x1*x2^2", 2));
    EXPECT_TRUE(schur_skew(Pt("1"), Pt("2"), a).is_zero());
    EXPECT_TRUE(schur_skew(Pt("1,1,1"), Pt(""), a).is_zero());
}

TEST(Symfun, SchurMatchesSemistandardTableaux)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const VariableSpec spec{0, static_cast<int>(n)};
        for (const auto &l : partitions_up_to(5)) {
            if (l.length() > spec.n()) {
                continue;
            }
            EXPECT_EQ(schur_skew(l, Partition(), Alphabet::plain(n)), spt_weight_sum(spec, l, Partition()))
                << n << " " << l.to_string();
        }
    }
}

TEST(Symfun, JacobiTrudiDualForms)
{
    for (const auto &spec : specs_up_to(3)) {
        const auto a = Alphabet::combined(spec);
        for (const auto &l : partitions_up_to(6)) {
            for (const auto &mu : partitions_between(Partition(), l)) {
                EXPECT_EQ(schur_skew(l, mu, a), schur_skew_e(l, mu, a)) << l.to_string() << "/" << mu.to_string();
            }
        }
    }
}

TEST(Symfun, SymplecticSchurExamples)
{
    EXPECT_EQ(symp_schur(Pt("1"), 1), P("x1 + x1^-1", 1));
    EXPECT_EQ(symp_schur(Pt("1,1"), 2), P("x1 + x1^-1", 2) * P("x2 + x2^-1", 2) + LaurentPoly::one(2));
    EXPECT_EQ(symp_schur(Pt(""), 3), LaurentPoly::one(3));
    EXPECT_THROW(symp_schur(Pt("1,1"), 1), precondition_error);
}

TEST(Symfun, SymplecticSchurMatchesKingTableaux)
{
    for (int k = 1; k <= 3; ++k) {
        for (const auto &l : partitions_up_to(5)) {
            if (l.length() > k) {
                continue;
            }
            EXPECT_EQ(symp_schur(l, k), spt_weight_sum({k, 0}, l, Partition())) << k << " " << l.to_string();
        }
    }
}

TEST(Symfun, InterSchurExamples)
{
    EXPECT_EQ(inter_schur(Pt("1"), {1, 1}), P("x1 + x1^-1 + x2", 2));
    for (const auto &l : partitions_up_to(4)) {
        if (l.length() <= 3) {
            EXPECT_EQ(inter_schur(l, {0, 3}), schur_skew(l, Partition(), Alphabet::plain(3)));
        }
        if (l.length() <= 2) {
            EXPECT_EQ(inter_schur(l, {2, 0}), symp_schur(l, 2));
        }
    }
}

TEST(Symfun, InterSchurRoutesAgree)
{
    for (const auto &spec : specs_up_to(4)) {
        for (const auto &l : partitions_up_to(5)) {
            if (l.length() > spec.n()) {
                continue;
            }
            const auto def = inter_schur(l, spec, SchurMethod::definition);
            EXPECT_EQ(def, inter_schur(l, spec, SchurMethod::tableau)) << spec.to_string() << " " << l.to_string();
            EXPECT_TRUE(is_w_invariant(def, spec));
        }
    }
}

TEST(Symfun, UnionIdentity)
{
    EXPECT_TRUE(check_union_identity(Pt("1"), {1, 1}));
    EXPECT_TRUE(check_union_identity(Pt("2"), {1, 2}));
    EXPECT_TRUE(check_union_identity(Pt(""), {2, 1}));
    for (const auto &spec : specs_up_to(4)) {
        for (const auto &l : partitions_up_to(5)) {
            if (l.length() <= spec.k + 1 && l.length() <= spec.n()) {
                EXPECT_TRUE(check_union_identity(l, spec)) << spec.to_string() << " " << l.to_string();
            }
        }
    }
    EXPECT_THROW(check_union_identity(Pt("1,1,1"), {1, 2}), precondition_error);
}
