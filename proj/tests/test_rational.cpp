#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "l2v/rational.hpp"

using namespace l2v;

TEST_CASE("parsing accepts integers and fractions in canonical and raw form") {
    CHECK(rat_parse("3") == Rat(3));
    CHECK(rat_parse("-3") == Rat(-3));
    CHECK(rat_parse("0") == Rat(0));
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-3/4") == Rat(-3, 4));
    CHECK(rat_parse("4/6") == Rat(2, 3));
    CHECK(rat_parse("-10/5") == Rat(-2));
    CHECK(rat_parse("007") == Rat(7));
    // Leading zeros must still read as decimal, not octal.
    CHECK(rat_parse("010") == Rat(10));
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("3/"), std::invalid_argument);
}

TEST_CASE("rendering is canonical") {
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK(rat_str(Rat(-7)) == "-7");
    CHECK(rat_str(Rat(-3, 2)) == "-3/2");
    CHECK(rat_str(Rat(4, 6)) == "2/3");
}

TEST_CASE("string round trips") {
    for (const char* s : {"0", "1", "-1", "7", "-3/2", "2/3", "-123456789/1024", "41/7"}) {
        CHECK(rat_str(rat_parse(s)) == s);
    }
}

TEST_CASE("arithmetic is exact") {
    Rat third(1, 3), sixth(1, 6);
    CHECK(third + sixth == Rat(1, 2));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rat(1, 18));
    CHECK(third / sixth == Rat(2));
    // A sum that floating point cannot represent exactly.
    Rat acc(0);
    for (int i = 0; i < 10; ++i) acc += Rat(1, 10);
    CHECK(acc == Rat(1));
    CHECK(rat_int(5) == Rat(5));
}
