#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrgen/tableau.hpp"
#include "lrgen/verify.hpp"

using lrgen::ExtTableau;
using lrgen::LRTableau;
using lrgen::Partition;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("make validates both invariants") {
    CHECK_NOTHROW(lrgen::make(p({7, 6, 4, 1, 1, 1}), p({7, 7, 5, 2, 2, 1})));
    CHECK_NOTHROW(lrgen::make(Partition::zero(), Partition::zero()));
    CHECK_THROWS_AS(lrgen::make(p({1}), p({3})), lrgen::NotHorizontalStrip);
    CHECK_THROWS_AS(lrgen::make(p({2}), p({1})), lrgen::NotContained);
    CHECK_THROWS_AS(lrgen::make(p({1, 1}), p({2})), lrgen::NotContained);
}

TEST_CASE("make succeeds exactly when the invariants hold") {
    lrgen::TableauGen gen(23);
    int valid = 0;
    for (int i = 0; i < 400; ++i) {
        Partition beta = gen.next(12).beta();
        Partition gamma = gen.next(12).beta();
        bool ok_contains = contains(beta, gamma);
        bool ok_strip = true;
        for (int r = 1; r <= beta.length(); ++r)
            if (beta.part(r) > gamma.part(r) + 1)
                ok_strip = false;
        if (gamma.length() > beta.length())
            ok_contains = false;
        if (ok_contains && ok_strip) {
            CHECK_NOTHROW(lrgen::make(gamma, beta));
            ++valid;
        } else {
            CHECK_THROWS_AS(lrgen::make(gamma, beta), lrgen::Error);
        }
    }
    CHECK(valid > 0);
}

TEST_CASE("entry and empty rows") {
    LRTableau t = lrgen::make(p({4, 4, 3, 2, 1}), p({5, 4, 3, 3, 1}));
    CHECK(entry_rows(t) == std::vector<int>{1, 4});
    CHECK(empty_rows(t) == std::vector<int>{2, 3, 5});

    CHECK(entry_rows(LRTableau{}).empty());
    CHECK(empty_rows(LRTableau{}).empty());

    LRTableau x = lrgen::make(p({7, 6, 4, 1, 1, 1}), p({7, 7, 5, 2, 2, 1}));
    CHECK(entry_rows(x) == std::vector<int>{2, 3, 4, 5});
    CHECK(empty_rows(x) == std::vector<int>{1, 6});

    LRTableau single = lrgen::make(p({4}), p({5}));
    CHECK(entry_rows(single) == std::vector<int>{1});
    CHECK(empty_rows(single).empty());
}

TEST_CASE("entry and empty rows partition the row set") {
    lrgen::TableauGen gen(29);
    for (int i = 0; i < 200; ++i) {
        LRTableau t = gen.next(15);
        auto entries = entry_rows(t);
        auto empties = empty_rows(t);
        std::vector<int> all = entries;
        all.insert(all.end(), empties.begin(), empties.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expected;
        for (int r = 1; r <= t.beta().length(); ++r)
            expected.push_back(r);
        CHECK(all == expected);
        CHECK(static_cast<std::int64_t>(entries.size()) == t.entry_count());
    }
}

TEST_CASE("render in the definition convention") {
    LRTableau t = lrgen::make(p({1, 1}), p({2, 1}));
    CHECK(lrgen::render(t, lrgen::RenderConvention::Definition) == ".1\n.\n");
    CHECK(lrgen::render(LRTableau{}, lrgen::RenderConvention::Definition).empty());
    CHECK(lrgen::render(LRTableau{}, lrgen::RenderConvention::Paper).empty());
}

TEST_CASE("render in the paper convention transposes the shapes") {
    // the drawn outer shape is the conjugate of beta
    LRTableau x = lrgen::make(p({7, 6, 4, 1, 1, 1}), p({7, 7, 5, 2, 2, 1}));
    std::string drawing = lrgen::render(x, lrgen::RenderConvention::Paper);
    CHECK(drawing ==
          "......\n"
          "...11\n"
          "...\n"
          "...\n"
          "..1\n"
          "..\n"
          ".1\n");

    lrgen::TableauGen gen(31);
    for (int i = 0; i < 100; ++i) {
        LRTableau t = gen.next(15);
        std::string text = lrgen::render(t, lrgen::RenderConvention::Paper);
        Partition cols = dual(t.beta());
        int row = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            ++row;
            CHECK(static_cast<int>(eol - pos) == cols.part(row));
            pos = eol + 1;
        }
        CHECK(row == cols.length());
    }
}

TEST_CASE("parse") {
    ExtTableau x = lrgen::parse_tableau("beta=5,4,3,3,1;gamma=4,4,2,2");
    CHECK(x.tab.beta() == p({5, 4, 3, 3, 1}));
    CHECK(x.tab.gamma() == p({4, 4, 2, 2}));
    CHECK(x.free == 0);

    ExtTableau e = lrgen::parse_tableau("beta=0;gamma=0;free=1");
    CHECK(e.tab.empty());
    CHECK(e.free == 1);

    CHECK(lrgen::parse_tableau(" beta = 2,1 ; gamma = 1 ").tab.beta() == p({2, 1}));

    CHECK_THROWS_AS(lrgen::parse_tableau("beta=1;gamma=2"), lrgen::NotContained);
    CHECK_THROWS_AS(lrgen::parse_tableau("gamma=1;beta=2"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_tableau("beta=1"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_tableau("beta=1;gamma=1;free=1;x=2"), lrgen::ParseError);
    CHECK_THROWS_AS(lrgen::parse_tableau("beta=3,x;gamma=1"), lrgen::ParseError);

    CHECK(lrgen::has_free_field("beta=0;gamma=0;free=2"));
    CHECK_FALSE(lrgen::has_free_field("beta=0;gamma=0"));
}

TEST_CASE("parse errors report a position") {
    try {
        lrgen::parse_tableau("beta=3,x;gamma=1");
        FAIL("expected ParseError");
    } catch (const lrgen::ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("serialize round-trips") {
    lrgen::TableauGen gen(37);
    for (int i = 0; i < 200; ++i) {
        ExtTableau t(gen.next(15), static_cast<int>(gen.next_raw() % 4));
        CHECK(lrgen::parse_tableau(lrgen::to_string(t)) == t);
    }
    CHECK(lrgen::to_string(ExtTableau(LRTableau{}, 0)) == "beta=0;gamma=0");
    CHECK(lrgen::to_string(ExtTableau(LRTableau{}, 2)) == "beta=0;gamma=0;free=2");
}
