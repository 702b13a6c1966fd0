#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "talex/io.hpp"

using namespace talex;

TEST_CASE("poly text parsing") {
    auto p = parse_poly("t^10+t^9-t^7-t^6-t^5-t^4-t^3+t+1");
    CHECK(p.vars() == 1);
    CHECK(p.term_count() == 9);
    CHECK(p.coefficient({10}) == 1);
    CHECK(p.coefficient({7}) == -1);

    auto q = parse_poly("2*t1^-2*t2 - 3 + t2^4");
    CHECK(q.vars() == 2);
    CHECK(q.coefficient({-2, 1}) == 2);
    CHECK(q.coefficient({0, 0}) == -3);
    CHECK(q.coefficient({0, 4}) == 1);

    CHECK(parse_poly("t1*t1*t1").coefficient({3}) == 1);
    CHECK(parse_poly("0*t + 1").is_one());

    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("t1 t2"), ParseError);
    CHECK_THROWS_AS(parse_poly("q+1"), ParseError);
}

TEST_CASE("poly text round trip through to_string") {
    for (const char* s : {"t^2 - t + 1", "t1*t2 + 1", "2*t1^2*t2^-1 - t2 + 5"}) {
        auto p = parse_poly(s);
        auto back = parse_poly(to_string(p), p.vars());
        CHECK(back == p);
    }
}

TEST_CASE("poly json round trip") {
    auto p = parse_poly("3*t1^2*t2^-5 - 77*t2 + 1");
    auto j = poly_to_json(p);
    auto back = poly_from_json(j);
    CHECK(back == p);
    CHECK_THROWS_AS(poly_from_json("{"), ParseError);
    CHECK_THROWS_AS(poly_from_json("{\"a\":1}"), ParseError);
}

TEST_CASE("big coefficients survive the json round trip") {
    LaurentPoly p(1);
    Int big = 1;
    for (int i = 0; i < 30; ++i) big *= 1000003;
    p.add_term({2}, big);
    p.add_term({0}, -big - 1);
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("word text") {
    auto w = parse_word("x0 x3^-1 x2");
    CHECK(w.letters() == std::vector<Word::Letter>{{0, 1}, {3, -1}, {2, 1}});
    CHECK(to_string(w) == "x0 x3^-1 x2");
    CHECK(to_string(parse_word("x1 x1 x1")) == "x1^3");
    CHECK(to_string(Word()) == "1");
    CHECK_THROWS_AS(parse_word("y1"), ParseError);
}
