#include <doctest.h>

#include <tslice/error.hpp>
#include <tslice/permutation.hpp>

using tslice::Permutation;
using tslice::ParseError;

TEST_CASE("identity and application") {
    Permutation id = Permutation::identity(4);
    CHECK(id.degree() == 4);
    CHECK(id.is_identity());
    for (int i = 0; i < 4; ++i) CHECK(id(i) == i);
}

TEST_CASE("compose applies the right factor first") {
    // p = (0 1), q = (1 2); (p*q)(1) = p(q(1)) = p(2) = 2
    Permutation p({1, 0, 2});
    Permutation q({0, 2, 1});
    Permutation pq = tslice::compose(p, q);
    CHECK(pq(0) == 1);
    CHECK(pq(1) == 2);
    CHECK(pq(2) == 0);
    Permutation qp = tslice::compose(q, p);
    CHECK_FALSE(pq == qp);
}

TEST_CASE("inverse") {
    Permutation p({2, 0, 3, 1});
    Permutation inv = tslice::inverse(p);
    CHECK(tslice::compose(p, inv).is_identity());
    CHECK(tslice::compose(inv, p).is_identity());
}

TEST_CASE("validation rejects non-bijections") {
    CHECK_THROWS_AS(tslice::validate_permutation(Permutation({0, 0, 1})), tslice::Error);
    CHECK_THROWS_AS(tslice::validate_permutation(Permutation({0, 3, 1})), tslice::Error);
}

TEST_CASE("cycle strings are canonical") {
    CHECK(tslice::cycle_string(Permutation::identity(5)) == "()");
    CHECK(tslice::cycle_string(Permutation({1, 2, 3, 0})) == "(0 1 2 3)");
    // fixed points omitted, cycles start at their smallest point
    CHECK(tslice::cycle_string(Permutation({0, 2, 1, 3})) == "(1 2)");
    CHECK(tslice::cycle_string(Permutation({1, 0, 3, 2})) == "(0 1)(2 3)");
}

TEST_CASE("parsing cycle lists") {
    auto perms = tslice::parse_permutation_list("(0 1 2 3), (0 2)");
    REQUIRE(perms.size() == 2);
    CHECK(perms[0].degree() == 4);
    CHECK(perms[1].degree() == 4);
    CHECK(tslice::cycle_string(perms[0]) == "(0 1 2 3)");
    CHECK(tslice::cycle_string(perms[1]) == "(0 2)");

    // juxtaposed cycles multiply with the rightmost applied first
    auto prod = tslice::parse_permutation_list("(0 1)(1 2)");
    REQUIRE(prod.size() == 1);
    CHECK(tslice::cycle_string(prod[0]) == "(0 1 2)");

    // disjoint cycles commute, same convention
    auto two = tslice::parse_permutation_list("(0 1)(2 3)");
    REQUIRE(two.size() == 1);
    CHECK(tslice::cycle_string(two[0]) == "(0 1)(2 3)");

    // all perms in a list share a degree
    auto padded = tslice::parse_permutation_list("(0 1), (2 3)");
    REQUIRE(padded.size() == 2);
    CHECK(padded[0].degree() == 4);
    CHECK(padded[1].degree() == 4);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(tslice::parse_permutation_list("(0 0)"), ParseError);
    CHECK_THROWS_AS(tslice::parse_permutation_list("(0 1"), ParseError);
    CHECK_THROWS_AS(tslice::parse_permutation_list("nope"), ParseError);
    CHECK_THROWS_AS(tslice::parse_permutation_list(""), ParseError);
    try {
        tslice::parse_permutation_list("(0 1) x");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position >= 0);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}
