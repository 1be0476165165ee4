#include <gtest/gtest.h>

#include <random>

#include "qsym/ring.hpp"
#include "qsym/verify.hpp"

using namespace qsym;

namespace {

LaurentPoly P(const char *text, std::size_t n) { return LaurentPoly::from_string(text, n); }

} // namespace

TEST(Ring, DifferenceOfSquares)
{
    EXPECT_EQ(P("x1 + x1^-1", 1) * P("x1 - x1^-1", 1), P("x1^2 - x1^-2", 1));
}

TEST(Ring, AdditiveIdentity)
{
    const auto p = P("3*x1*x2^-1 + 7", 2);
    EXPECT_EQ(p + LaurentPoly(2), p);
}

TEST(Ring, HandProduct)
{
    EXPECT_EQ(P("2*x1*x2", 2) * P("2*x1*x2^-1", 2), P("4*x1^2", 2));
}

TEST(Ring, CancellationLeavesNoZeroTerms)
{
    const auto p = P("x1 + 1", 1) - P("x1", 1);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).to_string(), "0");
}

TEST(Ring, VariableCountMismatchThrows)
{
    EXPECT_THROW(P("x1", 1) + P("x1", 2), precondition_error);
    EXPECT_THROW(P("x1", 1) * P("x1", 2), precondition_error);
}

TEST(Ring, SubstituteInverseCancels)
{
    const std::vector<LaurentPoly> images{LaurentPoly::variable(2, 0), LaurentPoly::variable(2, 0, -1)};
    EXPECT_EQ(P("x1*x2", 2).substitute(images), LaurentPoly::one(2));
}

TEST(Ring, SubstituteTruncation)
{
    const std::vector<LaurentPoly> images{LaurentPoly::variable(2, 0), LaurentPoly(2)};
    EXPECT_EQ(P("x1 + x2", 2).substitute(images), P("x1", 2));
}

TEST(Ring, SubstituteNonUnitIntoInverseThrows)
{
    EXPECT_THROW(P("x1^-1", 1).substitute(std::vector<LaurentPoly>{LaurentPoly(1)}), precondition_error);
    EXPECT_THROW(P("x1^-1", 2).substitute(std::vector<LaurentPoly>{P("x1 + x2", 2), LaurentPoly::variable(2, 1)}),
                 precondition_error);
}

TEST(Ring, SubstituteIdentity)
{
    std::mt19937 rng(3);
    const std::vector<LaurentPoly> id{LaurentPoly::variable(3, 0), LaurentPoly::variable(3, 1),
                                      LaurentPoly::variable(3, 2)};
    for (int i = 0; i < 20; ++i) {
        const auto p = random_laurent(rng, 3, 5);
        EXPECT_EQ(p.substitute(id), p);
    }
}

TEST(Ring, SeriesSingleFactor)
{
    const std::vector<Monomial> x{Monomial::variable(1, 0)};
    const auto s = TruncatedSeries::from_linear_factors(x, x, 2, 1);
    EXPECT_EQ(s[0], P("1", 1));
    EXPECT_EQ(s[1], P("2*x1", 1));
    EXPECT_EQ(s[2], P("2*x1^2", 1));
}

TEST(Ring, SeriesEmptyProduct)
{
    const auto s = TruncatedSeries::from_linear_factors({}, {}, 3, 1);
    ASSERT_EQ(s.degree(), 3u);
    EXPECT_EQ(s[0], LaurentPoly::one(1));
    for (std::size_t d = 1; d <= 3; ++d) {
        EXPECT_TRUE(s[d].is_zero());
    }
}

TEST(Ring, SeriesSymplecticPair)
{
    const std::vector<Monomial> u{Monomial::variable(1, 0), Monomial::variable(1, 0, -1)};
    const auto s = TruncatedSeries::from_linear_factors(u, u, 1, 1);
    EXPECT_EQ(s[1], P("2*x1 + 2*x1^-1", 1));
}

TEST(Ring, SeriesTimesDenominatorsRecoversNumerators)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int t = 0; t < 20; ++t) {
        std::vector<Monomial> nums;
        std::vector<Monomial> dens;
        for (int i = 0; i < 3; ++i) {
            nums.push_back(Monomial(std::vector<int>{e(rng), e(rng)}));
            dens.push_back(Monomial(std::vector<int>{e(rng), e(rng)}));
        }
        auto s = TruncatedSeries::from_linear_factors(nums, dens, 5, 2);
        for (const auto &v : dens) {
            s.mul_linear(v, -1);
        }
        EXPECT_EQ(s, TruncatedSeries::from_linear_factors(nums, {}, 5, 2));
    }
}

TEST(Ring, TextFormat)
{
    const auto p = P("2*x2 + 2*x1^-1 + 2*x1", 2);
    EXPECT_EQ(p.to_string(), "2*x1 + 2*x1^-1 + 2*x2");
    EXPECT_EQ(P("x1*x2 - 1", 2).to_string(), "x1*x2 + -1");
    EXPECT_EQ(P("-x1^2*x3", 3).to_string(), "-x1^2*x3");
    EXPECT_EQ(LaurentPoly(4).to_string(), "0");
}

TEST(Ring, TermOrderRanksExponents)
{
    // x^2 < x < x^-1 < x^-2 < 1 in the first variable decides first.
    EXPECT_EQ(P("1 + x1^-2 + x1^-1 + x1 + x1^2", 1).to_string(), "x1^2 + x1 + x1^-1 + x1^-2 + 1");
}

TEST(Ring, TextRoundTrip)
{
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_laurent(rng, 3, 6);
        EXPECT_EQ(P(p.to_string().c_str(), 3).to_string(), p.to_string());
    }
}

TEST(Ring, JsonRoundTrip)
{
    const auto p = P("123456789012345678901234567890*x1*x2^-3 + -5", 2);
    EXPECT_EQ(p.to_json(),
              R"({"n":2,"terms":[{"coeff":"123456789012345678901234567890","exps":[1,-3]},{"coeff":"-5","exps":[0,0]}]})");
    EXPECT_EQ(LaurentPoly::from_json(p.to_json()), p);
}

TEST(Ring, ParseErrors)
{
    EXPECT_THROW(P("x3", 2), parse_error);
    EXPECT_THROW(P("2**x1", 1), parse_error);
    EXPECT_THROW(LaurentPoly::from_json("{\"n\":1}"), parse_error);
    EXPECT_THROW(LaurentPoly::from_json("not json"), parse_error);
}

TEST(Ring, BigCoefficients)
{
    auto p = P("2*x1 + 1", 1).pow(100);
    EXPECT_EQ(p.coeff(Monomial(std::vector<int>{100})), Integer("1267650600228229401496703205376"));
    EXPECT_EQ(p.coefficient_sum(), Integer("515377520732011331036461129765621272702107522001"));
}

TEST(Ring, TermLimit)
{
    set_max_terms(3);
    EXPECT_THROW(P("1 + x1", 1).pow(5), term_limit_error);
    set_max_terms(0);
    EXPECT_EQ(P("1 + x1", 1).pow(5).size(), 6u);
}

TEST(Ring, RingAxiomsOnRandomPolynomials)
{
    std::mt19937 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_laurent(rng, 2, 4);
        const auto b = random_laurent(rng, 2, 4);
        const auto c = random_laurent(rng, 2, 4);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + (-a), LaurentPoly(2));
    }
}
