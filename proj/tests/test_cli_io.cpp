#include <gtest/gtest.h>

#include "hypnet/generators.hpp"
#include "hypnet/report.hpp"

using namespace hypnet;

TEST(Report, RationalRoundTrip)
{
    for (const Rational& r : {Rational(0), Rational(7), Rational(-3, 4), Rational(5, 2), Rational(1, 3)}) {
        const Json j = to_json(r);
        EXPECT_EQ(rational_from_json(j), r);
        EXPECT_EQ(rational_from_json(Json::parse(j.dump())), r);
        EXPECT_NEAR(j["approx"].get<double>(), to_double(r), 1e-15);
    }
    EXPECT_EQ(to_json(HalfInt::from_twice(5))["exact"], "5/2");
    EXPECT_EQ(to_json(HalfInt(3))["exact"], "3");
    EXPECT_EQ(rational_from_json(Json("2/4")), Rational(1, 2));
}

TEST(Report, BadRationals)
{
    EXPECT_THROW(parse_rational("x"), InputError);
    EXPECT_THROW(parse_rational("1/"), InputError);
    EXPECT_THROW(parse_rational("1/0"), InputError);
}

TEST(Report, DigestIsStable)
{
    EXPECT_EQ(input_digest(""), "crc32:00000000");
    EXPECT_EQ(input_digest("123456789"), "crc32:cbf43926");
    EXPECT_NE(input_digest("0 1\n"), input_digest("0 1\n1 2\n"));
}

TEST(Report, HeaderFieldOrder)
{
    const Graph g = path(4);
    const Json h = report_header(g, "0 1\n1 2\n2 3\n");
    std::vector<std::string> keys;
    for (auto it = h.begin(); it != h.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "input"}));
    EXPECT_EQ(h["input"]["n"], 4);
    EXPECT_EQ(h["input"]["m"], 3);
    EXPECT_EQ(h.dump(), report_header(g, "0 1\n1 2\n2 3\n").dump());
    EXPECT_EQ(labels_json(g, {2, 0}).dump(), "[2,0]");
}
