#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrgen/partition.hpp"
#include "lrgen/verify.hpp"

using lrgen::Partition;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

// deterministic partitions for the property checks
Partition random_partition(lrgen::TableauGen& gen, int max_weight) {
    return gen.next(max_weight).beta();
}

} // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK(p({3, 2, 0, 0}) == p({3, 2}));
    CHECK(p({}) == Partition::zero());
    CHECK(p({1}).length() == 1);
    CHECK_THROWS_AS(p({1, 2}), lrgen::Error);
    CHECK_THROWS_AS(p({2, -1}), lrgen::Error);
    CHECK(p({5, 3}).part(1) == 5);
    CHECK(p({5, 3}).part(3) == 0);
}

TEST_CASE("dual") {
    CHECK(dual(p({5, 4, 3, 3, 1})) == p({5, 4, 4, 2, 1}));
    CHECK(dual(Partition::zero()) == Partition::zero());
    CHECK(dual(p({8, 7, 5, 4, 2, 2, 1})) == p({7, 6, 4, 4, 3, 2, 2, 1}));
}

TEST_CASE("sum") {
    CHECK(sum(p({4, 4, 2, 2}), p({3, 3, 2, 1, 1, 1})) == p({7, 7, 4, 3, 1, 1}));
    CHECK(sum(p({5, 2}), Partition::zero()) == p({5, 2}));
    CHECK(sum(p({1}), p({1})) == p({2}));
}

TEST_CASE("union") {
    CHECK(union_parts(p({8, 7, 5, 4, 2, 2}), p({1})) == p({8, 7, 5, 4, 2, 2, 1}));
    CHECK(union_parts(p({3, 1}), Partition::zero()) == p({3, 1}));
    CHECK(union_parts(p({3, 1}), p({3, 2})) == p({3, 3, 2, 1}));
}

TEST_CASE("weight") {
    CHECK(weight(p({5, 4, 3, 3, 1})) == 16);
    CHECK(weight(Partition::zero()) == 0);
    CHECK(weight(p({7, 7, 4, 3, 1, 1})) == 23);
}

TEST_CASE("contains") {
    CHECK(contains(p({4, 4, 3, 2, 1}), p({4, 4, 2, 2})));
    CHECK(contains(p({3, 2}), p({3, 2})));
    CHECK_FALSE(contains(p({2}), p({1, 1})));
}

TEST_CASE("parse and print") {
    CHECK(lrgen::parse_partition("5,4,3,3,1") == p({5, 4, 3, 3, 1}));
    CHECK(lrgen::parse_partition("0") == Partition::zero());
    CHECK(lrgen::parse_partition("") == Partition::zero());
    CHECK(lrgen::parse_partition(" 3 , 2 ") == p({3, 2}));
    CHECK(lrgen::to_string(p({5, 4})) == "5,4");
    CHECK(lrgen::to_string(Partition::zero()) == "0");
    CHECK_THROWS_AS(lrgen::parse_partition("3,4"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_partition("3,,2"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_partition("2,0"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_partition("1000001"), lrgen::ParseError);
    CHECK_NOTHROW(lrgen::parse_partition("1000001", 2000000));
}

TEST_CASE("parse round-trips") {
    lrgen::TableauGen gen(7);
    for (int i = 0; i < 200; ++i) {
        Partition a = random_partition(gen, 30);
        CHECK(lrgen::parse_partition(lrgen::to_string(a)) == a);
    }
}

TEST_CASE("dual is an involution and preserves weight") {
    lrgen::TableauGen gen(11);
    for (int i = 0; i < 200; ++i) {
        Partition a = random_partition(gen, 40);
        CHECK(dual(dual(a)) == a);
        CHECK(weight(dual(a)) == weight(a));
    }
}

TEST_CASE("weight is additive over sum and union") {
    lrgen::TableauGen gen(13);
    for (int i = 0; i < 200; ++i) {
        Partition a = random_partition(gen, 25);
        Partition b = random_partition(gen, 25);
        CHECK(weight(sum(a, b)) == weight(a) + weight(b));
        CHECK(weight(union_parts(a, b)) == weight(a) + weight(b));
    }
}

TEST_CASE("dual swaps union and sum") {
    lrgen::TableauGen gen(17);
    for (int i = 0; i < 200; ++i) {
        Partition a = random_partition(gen, 25);
        Partition b = random_partition(gen, 25);
        CHECK(dual(union_parts(a, b)) == sum(dual(a), dual(b)));
    }
}

TEST_CASE("contains is a partial order") {
    lrgen::TableauGen gen(19);
    std::vector<Partition> sample;
    for (int i = 0; i < 40; ++i)
        sample.push_back(random_partition(gen, 10));
    for (const Partition& a : sample) {
        CHECK(contains(a, a));
        for (const Partition& b : sample) {
            if (contains(a, b) && contains(b, a))
                CHECK(a == b);
            for (const Partition& c : sample)
                if (contains(a, b) && contains(b, c))
                    CHECK(contains(a, c));
        }
    }
}
