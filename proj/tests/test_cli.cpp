#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "qsym/cli.hpp"
#include "qsym/ring.hpp"

using namespace qsym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ComputeAllRoutes)
{
    const auto r = run({"compute", "--family", "qI", "--lambda", "1", "--k", "1", "--m", "1", "--method", "all"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "2*x1 + 2*x1^-1 + 2*x2\n");
    for (const char *route : {"definition: ", "tableau: ", "pfaffian: ", "branch: ", "lgv: "}) {
        EXPECT_NE(r.err.find(route), std::string::npos) << route;
    }
}

TEST(Cli, ComputeNotContained)
{
    const auto r = run({"compute", "--family", "qI", "--lambda", "2,1", "--mu", "3", "--k", "1", "--m", "1"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, NotStrictIsPrecondition)
{
    EXPECT_EQ(run({"compute", "--family", "qA", "--lambda", "2,2", "--k", "0", "--m", "2"}).code, exit_precondition);
}

TEST(Cli, TooLongIsPrecondition)
{
    EXPECT_EQ(run({"compute", "--lambda", "3,2,1", "--k", "1", "--m", "1"}).code, exit_precondition);
}

TEST(Cli, ParseErrors)
{
    EXPECT_EQ(run({"compute", "--lambda", "2,x"}).code, exit_parse);
    EXPECT_EQ(run({"compute", "--lambda", "1", "--family", "qZ"}).code, exit_parse);
    EXPECT_EQ(run({"compute"}).code, exit_parse);
    EXPECT_EQ(run({"bogus"}).code, exit_parse);
    EXPECT_EQ(run({"compute", "--family", "schur", "--lambda", "1", "--mu", "0", "--m", "1", "--method", "lgv"}).code,
              exit_parse);
}

TEST(Cli, SingleMethods)
{
    const auto r = run({"compute", "--family", "qA", "--lambda", "2,1", "--m", "2", "--method", "pfaffian"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "4*x1^2*x2 + 4*x1*x2^2\n");
    EXPECT_TRUE(r.err.empty());

    const auto c = run({"compute", "--family", "qC", "--lambda", "1", "--k", "1"});
    EXPECT_EQ(c.out, "2*x1 + 2*x1^-1\n");
    EXPECT_EQ(run({"compute", "--family", "qC", "--lambda", "1", "--k", "1", "--m", "1"}).code, exit_precondition);
}

TEST(Cli, SchurFamilies)
{
    EXPECT_EQ(run({"compute", "--family", "schur", "--lambda", "2,1", "--m", "2"}).out, "x1^2*x2 + x1*x2^2\n");
    EXPECT_EQ(run({"compute", "--family", "symp-schur", "--lambda", "1", "--k", "1", "--method", "all"}).out,
              "x1 + x1^-1\n");
    EXPECT_EQ(run({"compute", "--family", "inter-schur", "--lambda", "1", "--k", "1", "--m", "1"}).out,
              "x1 + x1^-1 + x2\n");
}

TEST(Cli, JsonRoundTrip)
{
    const auto text = run({"compute", "--lambda", "2,1", "--mu", "1", "--k", "1", "--m", "1"});
    const auto json = run({"compute", "--lambda", "2,1", "--mu", "1", "--k", "1", "--m", "1", "--json"});
    ASSERT_EQ(json.code, exit_ok);
    const auto parsed = LaurentPoly::from_json(json.out);
    EXPECT_EQ(parsed.to_string() + "\n", text.out);
    EXPECT_EQ(parsed.to_json() + "\n", json.out);
}

TEST(Cli, Series)
{
    EXPECT_EQ(run({"series", "--k", "1", "--m", "0", "--degree", "1"}).out, "1\n2*x1 + 2*x1^-1\n");
    EXPECT_EQ(run({"series", "--k", "0", "--m", "0", "--degree", "3"}).out, "1\n0\n0\n0\n");
    const auto r = run({"series", "--k", "0", "--m", "1", "--degree", "2"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "1\n2*x1\n2*x1^2\n");
    EXPECT_EQ(run({"series", "--degree", "-1"}).code, exit_precondition);
}

TEST(Cli, Verify)
{
    const auto r = run({"verify", "--suite", "qfun", "--max-weight", "3", "--max-vars", "2"});
    EXPECT_EQ(r.code, exit_ok) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run({"verify", "--suite", "all", "--max-weight", "0"}).code, exit_ok);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, exit_parse);
}

TEST(Cli, TermLimit)
{
    ::setenv("QSYM_MAX_TERMS", "2", 1);
    EXPECT_EQ(run({"compute", "--lambda", "3,1", "--k", "1", "--m", "1"}).code, exit_term_limit);
    ::setenv("QSYM_MAX_TERMS", "abc", 1);
    EXPECT_EQ(run({"compute", "--lambda", "1", "--k", "1", "--m", "1"}).code, exit_parse);
    ::unsetenv("QSYM_MAX_TERMS");
    EXPECT_EQ(run({"compute", "--lambda", "3,1", "--k", "1", "--m", "1"}).code, exit_ok);
}

TEST(Cli, Help)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("compute"), std::string::npos);
}
