#include <catch2/catch_amalgamated.hpp>

#include "qspieri/composition.hpp"

using namespace qspieri;

TEST_CASE("composition basics and ordering") {
    CHECK_THROWS_AS(Composition({0, 1}), std::invalid_argument);
    CHECK(Composition().weight() == 0);
    CHECK(Composition({2, 1}).weight() == 3);
    CHECK(Composition({2, 1}).str() == "(2,1)");
    CHECK(Composition().str() == "()");
    // length-lexicographic: fewer parts first, then lexicographic
    CHECK(Composition({3}) < Composition({1, 1}));
    CHECK(Composition({1, 2}) < Composition({2, 1}));
    CHECK(Composition({2, 1}).concat(Composition({3})) == Composition({2, 1, 3}));
    CHECK(Composition({2, 1}).plus_last() == Composition({2, 2}));
    CHECK(Composition().plus_last() == Composition({1}));
    CHECK(Composition({2}).append_one() == Composition({2, 1}));
}

TEST_CASE("subset correspondence") {
    CHECK(composition_from_subset(4, {1, 3}) == Composition({1, 2, 1}));
    CHECK(composition_from_subset(3, {}) == Composition({3}));
    CHECK(composition_from_subset(0, {}) == Composition());
    for (const Composition& alpha : compositions_of(6))
        CHECK(composition_from_subset(6, subset_of_composition(alpha)) == alpha);
}

TEST_CASE("refinement order") {
    CHECK(refines(Composition({1, 1}), Composition({2})));
    CHECK_FALSE(refines(Composition({2}), Composition({1, 1})));
    CHECK(refines(Composition({1, 2, 1}), Composition({3, 1})));
    CHECK_FALSE(refines(Composition({2, 1, 1}), Composition({1, 3})));
    CHECK_FALSE(refines(Composition({1, 1}), Composition({3})));

    for (int n = 1; n <= 10; ++n)
        CHECK(static_cast<long long>(compositions_of(n).size()) == (1LL << (n - 1)));

    // partial order on compositions of fixed n
    for (int n = 1; n <= 6; ++n) {
        std::vector<Composition> all = compositions_of(n);
        for (const Composition& a : all) {
            CHECK(refines(a, a));
            for (const Composition& b : all) {
                if (refines(a, b) && refines(b, a)) CHECK(a == b);
                for (const Composition& c : all)
                    if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
            }
        }
    }
}

TEST_CASE("refinements and coarsenings enumerate the order") {
    for (int n = 0; n <= 6; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            for (const Composition& beta : refinements_of(alpha)) CHECK(refines(beta, alpha));
            for (const Composition& gamma : coarsenings_of(alpha)) CHECK(refines(alpha, gamma));
            long long cnt = 0;
            for (const Composition& beta : compositions_of(n))
                if (refines(beta, alpha)) ++cnt;
            CHECK(cnt == static_cast<long long>(refinements_of(alpha).size()));
        }
}

TEST_CASE("star refinement") {
    CHECK(star(Composition({3})) == Composition({3}));
    CHECK(star(Composition({1, 3, 2})) == Composition({1, 1, 2, 1, 1}));
    CHECK(star(Composition()) == Composition());
    CHECK(star(Composition({2, 2})) == Composition({2, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const Composition& beta : compositions_of(n)) {
            CHECK(star(beta).weight() == beta.weight());
            CHECK(refines(star(beta), beta));
        }
}

TEST_CASE("descent composition") {
    CHECK(descent_composition({1, 2, 3}) == Composition({3}));
    CHECK(descent_composition({1, 2, 1}) == Composition({2, 1}));
    CHECK(descent_composition({2, 1, 2}) == Composition({1, 2}));
    CHECK(descent_composition({}) == Composition());
}

TEST_CASE("modified descent composition") {
    CHECK(modified_descent_composition({-1, -1}) == Composition({1, 1}));
    CHECK(modified_descent_composition({1, 1}) == Composition({2}));
    CHECK(modified_descent_composition({1, -2, -1}) == Composition({1, 2}));
    CHECK_THROWS_AS(modified_descent_composition({1, 0}), std::invalid_argument);
}

TEST_CASE("peak composition") {
    CHECK(peak_composition({1, 2, 1}) == Composition({2, 1}));
    CHECK(peak_composition({3, 2, 1}) == Composition({3}));
    CHECK(peak_composition({1, 3, 2, 4, 1}) == Composition({2, 2, 1}));
    CHECK(peak_composition({5}) == Composition({1}));
    CHECK(peak_composition({2, 7}) == Composition({2}));
}

TEST_CASE("peak sets avoid the boundary and consecutive positions") {
    // exhaustive words of length <= 7 over {1,2,3}
    for (int len = 1; len <= 7; ++len) {
        std::vector<int> word(static_cast<size_t>(len), 1);
        while (true) {
            std::vector<int> ps = peak_set(word);
            for (size_t i = 0; i < ps.size(); ++i) {
                CHECK(ps[i] >= 2);
                CHECK(ps[i] <= len - 1);
                if (i) CHECK(ps[i] > ps[i - 1] + 1);
            }
            CHECK(peak_composition(word).weight() == len);
            CHECK(descent_composition(word).weight() == len);
            int pos = 0;
            while (pos < len && word[static_cast<size_t>(pos)] == 3) word[static_cast<size_t>(pos++)] = 1;
            if (pos == len) break;
            ++word[static_cast<size_t>(pos)];
        }
    }
}

TEST_CASE("peak compositions recognized") {
    CHECK(is_peak_composition(Composition({2, 2, 1})));
    CHECK(is_peak_composition(Composition({3})));
    CHECK(is_peak_composition(Composition()));
    CHECK_FALSE(is_peak_composition(Composition({1, 2})));
}

TEST_CASE("partitions") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition({3, 1}).contains(Partition({2, 1})));
    CHECK_FALSE(Partition({2, 2}).contains(Partition({3})));
    CHECK(partitions_of(5).size() == 7);
    CHECK(partition_of(Composition({1, 3, 1})) == Partition({3, 1, 1}));
}
