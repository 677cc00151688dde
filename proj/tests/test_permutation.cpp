#include <catch2/catch_amalgamated.hpp>

#include "qspieri/permutation.hpp"

using namespace qspieri;

TEST_CASE("permutations") {
    Permutation w({2, 3, 1});
    CHECK(w.length() == 2);
    CHECK(w.inverse().compose(w) == Permutation::identity(3));
    CHECK(w.compose(Permutation::transposition(3, 1, 2)).window() == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("signed permutations") {
    SignedPermutation w({-2, 1});
    CHECK(w(1) == -2);
    CHECK(w(-1) == 2);
    CHECK(w.inverse().compose(w) == SignedPermutation::identity(2));
    CHECK_THROWS_AS(SignedPermutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({3, 1}), std::invalid_argument);
    CHECK(sign_changes(SignedPermutation::identity(3)) == 0);
    CHECK(sign_changes(SignedPermutation({-1, 2})) == 1);
    CHECK(sign_changes(SignedPermutation({-2, -1})) == 2);
    CHECK(parse_window("(-2,1)") == std::vector<int>{-2, 1});
    CHECK(parse_window(SignedPermutation({-2, 1}).str()) == std::vector<int>{-2, 1});
}

TEST_CASE("type B length by breadth-first search") {
    CHECK(bn_length(SignedPermutation::identity(3)) == 0);
    CHECK(bn_length(SignedPermutation({-1, 2, 3})) == 1);
    CHECK(bn_length(SignedPermutation({-2, -1})) == 3);
    // closed form: inversions plus the sum of the absolute negative entries
    for (const SignedPermutation& w : all_signed_permutations(3)) {
        int inv = 0;
        const auto& win = w.window();
        for (size_t i = 0; i < win.size(); ++i)
            for (size_t j = i + 1; j < win.size(); ++j)
                if (win[i] > win[j]) ++inv;
        int neg = 0;
        for (int v : win)
            if (v < 0) neg += -v;
        CHECK(bn_length(w) == inv + neg);
    }
}

TEST_CASE("type D length and parity") {
    CHECK(dn_length(SignedPermutation::identity(3)) == 0);
    CHECK(dn_length(SignedPermutation({-2, -1, 3})) == 1);
    // closed form: inversions plus sum of (|w(i)| - 1) over negative entries
    for (const SignedPermutation& w : all_even_signed_permutations(3)) {
        int inv = 0;
        const auto& win = w.window();
        for (size_t i = 0; i < win.size(); ++i)
            for (size_t j = i + 1; j < win.size(); ++j)
                if (win[i] > win[j]) ++inv;
        int neg = 0;
        for (int v : win)
            if (v < 0) neg += -v - 1;
        CHECK(dn_length(w) == inv + neg);
    }
    CHECK(all_even_signed_permutations(3).size() == 24);
    CHECK_THROWS_AS(dn_length(SignedPermutation({-1, 2, 3})), std::invalid_argument);
    // the two fork generators commute
    SignedPermutation s1 = dn_simple_reflection(2, 1);
    SignedPermutation s1h = dn_simple_reflection(2, 0);
    CHECK(s1.compose(s1h) == s1h.compose(s1));
    CHECK(dn_length(s1.compose(s1h)) == 2);
}

TEST_CASE("zero-Bruhat reflections") {
    std::vector<SignedPermutation> refl = zero_bruhat_reflections(3);
    CHECK(refl.size() == 6);  // 3 sign changes + 3 rotations
    LeftReflection sc = classify_left_reflection(SignedPermutation({1, -2, 3}));
    CHECK(sc.is_sign_change);
    CHECK(sc.label == 2);
    LeftReflection tr = classify_left_reflection(SignedPermutation({3, 2, 1}));
    CHECK_FALSE(tr.is_sign_change);
    CHECK(tr.label == 3);
    CHECK_THROWS_AS(classify_left_reflection(SignedPermutation({-2, -1})),
                    std::invalid_argument);
}
