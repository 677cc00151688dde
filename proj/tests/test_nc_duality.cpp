#include <catch2/catch_amalgamated.hpp>

#include "qspieri/duality.hpp"
#include "qspieri/ideal.hpp"
#include "qspieri/nc.hpp"

using namespace qspieri;

namespace {

NCElem S(std::initializer_list<int> parts, Rational c = 1) {
    return complete(Composition(parts), c);
}

NCElem nsum(std::initializer_list<NCElem> xs) {
    NCElem out = nc_zero();
    for (const NCElem& x : xs) out = nc_add(out, x);
    return out;
}

}  // namespace

TEST_CASE("concatenation product") {
    CHECK(nc_product(S({2}), S({1, 1})) == S({2, 1, 1}));
    CHECK(nc_product(nc_one(), S({3})) == S({3}));
    CHECK(nc_product(ribbon(Composition{1}), ribbon(Composition{1})) == S({1, 1}));
}

TEST_CASE("coproduct from the generator coproducts") {
    Lin2<Composition> d = nc_coproduct(S({2}));
    Lin2<Composition> want{
        {{Composition(), Composition{2}}, 1},
        {{Composition{1}, Composition{1}}, 1},
        {{Composition{2}, Composition()}, 1},
    };
    CHECK(d == want);
    CHECK(nc_coproduct(nc_one()) == Lin2<Composition>{{{Composition(), Composition()}, 1}});
    Lin2<Composition> d11 = nc_coproduct(S({1, 1}));
    CHECK(d11.at({Composition{1}, Composition{1}}) == 2);
    CHECK(d11.size() == 3);
}

TEST_CASE("ribbon basis is dual to the fundamental basis") {
    NCElem r11 = to_complete(ribbon(Composition{1, 1}));
    CHECK(r11 == nsum({S({1, 1}), S({2}, -1)}));
    for (int n = 1; n <= 6; ++n)
        CHECK(to_complete(ribbon(Composition{n})) == complete(Composition{n}));
    NCElem s11 = to_ribbon(S({1, 1}));
    CHECK(s11 == NCElem{NBasis::R, {{Composition{1, 1}, 1}, {Composition{2}, 1}}});
    // round trip and the defining pairing
    for (int n = 0; n <= 6; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            CHECK(to_ribbon(to_complete(ribbon(alpha))) == ribbon(alpha));
            for (const Composition& beta : compositions_of(n))
                CHECK(pairing(ribbon(alpha), fundamental(beta)) ==
                      (alpha == beta ? Rational(1) : Rational(0)));
        }
}

TEST_CASE("euler elements") {
    CHECK(euler_element(1) == nsum({S({2}, 2), S({1, 1}, -1)}));
    CHECK(euler_element(2) ==
          nsum({S({4}, 2), S({1, 3}, -1), S({2, 2}), S({3, 1}, -1)}));
    CHECK_THROWS_AS(euler_element(0), std::invalid_argument);
    CHECK(pairing(euler_element(1), theta(Composition{2})) == 0);
    // X_2 is primitive
    Lin2<Composition> d = nc_coproduct(euler_element(1));
    Lin2<Composition> want;
    for (const auto& [k, c] : euler_element(1).coeffs) {
        add_term(want, std::make_pair(Composition(), k), c);
        add_term(want, std::make_pair(k, Composition()), c);
    }
    CHECK(d == want);
}

TEST_CASE("antipode and axioms") {
    CHECK(nc_antipode(S({1})) == S({1}, -1));
    CHECK(nc_antipode(nc_one()) == nc_one());
    for (int n = 0; n <= 5; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            CHECK(check_antipode_law<CompleteHopf>(alpha));
            CHECK(check_coassociative<CompleteHopf>(alpha));
            CHECK(check_counit<CompleteHopf>(alpha));
        }
}

TEST_CASE("nc antipode is an algebra antihomomorphism") {
    for (int wa = 0; wa <= 3; ++wa)
        for (const Composition& alpha : compositions_of(wa))
            for (int wb = 0; wb <= 3; ++wb)
                for (const Composition& beta : compositions_of(wb)) {
                    NCElem lhs = nc_antipode(nc_product(complete(alpha), complete(beta)));
                    NCElem rhs =
                        nc_product(nc_antipode(complete(beta)), nc_antipode(complete(alpha)));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("pairing") {
    CHECK(pairing(S({2, 1}), monomial(Composition{2, 1})) == 1);
    CHECK(pairing(S({2, 1}), monomial(Composition{1, 2})) == 0);
    CHECK(pairing(S({2}), monomial(Composition{1, 1})) == 0);
    CHECK(pairing(euler_element(1), theta(Composition{2})) == 0);
}

TEST_CASE("ideal slices") {
    std::vector<NCElem> x2{euler_element(1)};
    std::vector<NCElem> slice2 = ideal_degree_basis(x2, 2);
    REQUIRE(slice2.size() == 1);
    CHECK(slice2[0] == euler_element(1));
    std::vector<NCElem> slice3 = ideal_degree_basis(x2, 3);
    REQUIRE(slice3.size() == 2);
    CHECK(slice3[0] == nc_product(euler_element(1), S({1})));
    CHECK(slice3[1] == nc_product(S({1}), euler_element(1)));

    std::vector<long long> fib = fibonacci_sequence(6);
    std::vector<long long> pi = pi_sequence(6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(quotient_dimension(euler_generators_upto(n), n) == fib[static_cast<size_t>(n)]);
        CHECK(quotient_dimension(x2, n) == pi[static_cast<size_t>(n)]);
        CHECK(theta_span_dimension(n, ThetaIndexSet::Peak) == fib[static_cast<size_t>(n)]);
        CHECK(theta_span_dimension(n, ThetaIndexSet::FirstPartLarge) == pi[static_cast<size_t>(n)]);
    }
}

TEST_CASE("theta expansion solver") {
    auto e = expand_in_theta(theta(Composition{2, 1}));
    REQUIRE(e.has_value());
    CHECK(*e == Lin<Composition>{{Composition{2, 1}, 1}});
    CHECK_FALSE(expand_in_theta(monomial(Composition{2})).has_value());
}
