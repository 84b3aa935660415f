#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "satfarey/fraction.hpp"
#include "satfarey/saturated.hpp"

using namespace satfarey;

namespace {

std::vector<Fraction> fr(std::initializer_list<std::pair<int64_t, int64_t>> xs) {
    std::vector<Fraction> out;
    for (auto [n, d] : xs) out.push_back(Fraction{n, d});
    return out;
}

// Definitional reference: walk the whole Farey sequence and keep what saturates.
std::vector<Fraction> brute_sequence(int64_t Q) {
    std::vector<Fraction> out = {Fraction{0, 1}};
    Fraction prev{0, 1}, cur{1, Q};
    while (true) {
        if (is_saturated(cur, Q)) out.push_back(cur);
        if (cur == Fraction{1, 1}) break;
        Fraction nxt = next_farey(Q, prev, cur);
        prev = cur;
        cur = nxt;
    }
    return out;
}

} // namespace

TEST_CASE("small saturated sequences are exactly known") {
    CHECK(generate_by_filter(3).elems == fr({{0, 1}, {1, 1}}));
    CHECK(generate_by_filter(4).elems == fr({{0, 1}, {1, 2}, {1, 1}}));
    CHECK(generate_by_filter(5).elems == fr({{0, 1}, {1, 3}, {1, 2}, {1, 1}}));
    CHECK(generate_by_filter(6).elems == fr({{0, 1}, {1, 4}, {1, 3}, {1, 2}, {1, 1}}));
    CHECK(generate_by_filter(7).elems ==
          fr({{0, 1}, {1, 5}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {1, 1}}));
}

TEST_CASE("order six already contains 1/4") {
    // h(1/4) = 4 + 1 + 1 = 6, so 1/4 enters between 0/1 and 1/3 at order 6.
    SaturatedSequence s = generate_by_filter(6);
    CHECK(std::find(s.elems.begin(), s.elems.end(), Fraction{1, 4}) != s.elems.end());
    CHECK(h_value(Fraction{1, 4}) == 6);
}

TEST_CASE("filter and insertion agree with the definitional walk") {
    for (int64_t Q = 3; Q <= 80; ++Q) {
        std::vector<Fraction> expect = brute_sequence(Q);
        CHECK(generate_by_filter(Q).elems == expect);
        CHECK(generate_by_insertion(Q).elems == expect);
    }
}

TEST_CASE("generators reject orders below three") {
    CHECK_THROWS_AS(generate_by_filter(2), std::invalid_argument);
    CHECK_THROWS_AS(generate_by_insertion(2), std::invalid_argument);
}

TEST_CASE("unimodular verification accepts generated sequences") {
    for (int64_t Q : {3, 7, 20, 100}) {
        UnimodularReport rep = verify_unimodular(generate_by_filter(Q));
        CHECK(rep.ok);
    }
}

TEST_CASE("unimodular verification locates the first bad pair") {
    std::vector<Fraction> bad = fr({{0, 1}, {2, 5}, {1, 1}});
    UnimodularReport rep = verify_unimodular(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_violation == 0);
    // the second pair is broken too: 1*5 - 2*1 = 3
    CHECK_FALSE(unimodular_pair(bad[1], bad[2]));
}

TEST_CASE("insertion tree smallest cases") {
    std::vector<InsertionRecord> t4 = insertion_tree(4);
    REQUIRE(t4.size() == 1);
    CHECK(t4[0].fraction == Fraction{1, 2});
    CHECK(t4[0].birth == 4);
    CHECK(t4[0].left_parent == Fraction{0, 1});
    CHECK(t4[0].right_parent == Fraction{1, 1});

    std::vector<InsertionRecord> t7 = insertion_tree(7);
    REQUIRE(t7.size() == 5);
    CHECK(t7[0].fraction == Fraction{1, 2});
    CHECK(t7[1].fraction == Fraction{1, 3});
    CHECK(t7[2].fraction == Fraction{1, 4});
    CHECK(t7[3].fraction == Fraction{1, 5});
    CHECK(t7[4].fraction == Fraction{2, 3});
    CHECK(t7[3].birth == 7);
    CHECK(t7[4].birth == 7);
    CHECK(t7[4].left_parent == Fraction{1, 2});
    CHECK(t7[4].right_parent == Fraction{1, 1});

    CHECK_THROWS_AS(insertion_tree(3), std::invalid_argument);
}

TEST_CASE("insertion records are mediants born at their height") {
    std::vector<InsertionRecord> recs = insertion_tree(60);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const InsertionRecord& rec = recs[i];
        CHECK(rec.fraction == mediant(rec.left_parent, rec.right_parent));
        CHECK(rec.birth == h_value(rec.fraction));
        CHECK(rec.birth > h_value(rec.left_parent));
        CHECK(rec.birth > h_value(rec.right_parent));
        if (i > 0) {
            bool ordered = recs[i - 1].birth < rec.birth ||
                           (recs[i - 1].birth == rec.birth && recs[i - 1].fraction < rec.fraction);
            CHECK(ordered);
        }
    }
}

TEST_CASE("parents of known fractions") {
    CHECK(parent_pair(Fraction{1, 2}) == std::pair(Fraction{0, 1}, Fraction{1, 1}));
    CHECK(parent_pair(Fraction{2, 5}) == std::pair(Fraction{1, 3}, Fraction{1, 2}));
    CHECK(parent_pair(Fraction{1, 5}) == std::pair(Fraction{0, 1}, Fraction{1, 4}));
    CHECK_THROWS_AS(parent_pair(Fraction{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parent_pair(Fraction{1, 1}), std::invalid_argument);
}

TEST_CASE("every fraction is the mediant of its parents and outlives them") {
    for (int64_t q = 2; q <= 150; ++q)
        for (int64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            Fraction f{a, q};
            auto [l, r] = parent_pair(f);
            CHECK(mediant(l, r) == f);
            CHECK(unimodular_pair(l, f));
            CHECK(unimodular_pair(f, r));
            CHECK(h_value(f) > h_value(l));
            CHECK(h_value(f) > h_value(r));
        }
}

TEST_CASE("the height-annotated scan covers the whole Farey sequence") {
    std::vector<Fraction> elems;
    std::vector<int64_t> hs;
    scan_farey_with_h(10, [&](const Fraction& f, int64_t h) {
        elems.push_back(f);
        hs.push_back(h);
    });
    CHECK(elems.size() == 33);
    CHECK(elems.front() == Fraction{0, 1});
    CHECK(elems.back() == Fraction{1, 1});
    for (std::size_t i = 0; i < elems.size(); ++i) CHECK(hs[i] == h_value(elems[i]));
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) CHECK(unimodular_pair(elems[i], elems[i + 1]));
}
