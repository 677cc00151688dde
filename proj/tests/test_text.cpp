#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qspieri/text.hpp"

using namespace qspieri;

TEST_CASE("rendering") {
    CHECK(render(qsym_add(monomial(Composition{2}), monomial(Composition{1, 1}, 2))) ==
          "1*M(2) + 2*M(1,1)");
    CHECK(render(qsym_zero()) == "0");
    CHECK(render(qsym_one()) == "1*M()");
    CHECK(render(monomial(Composition{1}, Rational(-1, 2))) == "-1/2*M(1)");
    CHECK(render(qsym_add(monomial(Composition{2}), monomial(Composition{1, 1}, -3))) ==
          "1*M(2) - 3*M(1,1)");
    CHECK(render(euler_element(1)) == "2*S(2) - 1*S(1,1)");
    CHECK(render(SymExpansion{SymBasis::s, {{Partition{2, 1}, 1}}}) == "1*s(2,1)");
    CHECK(render_theta({{Composition{1}, 1}}) == "1*theta(1)");
}

TEST_CASE("parsing") {
    CHECK(parse_qsym("1*M(2) + 2*M(1,1)") ==
          qsym_add(monomial(Composition{2}), monomial(Composition{1, 1}, 2)));
    CHECK(parse_qsym("0") == qsym_zero());
    CHECK(parse_qsym("1*theta(2)") == theta(Composition{2}));
    CHECK(parse_qsym("1*F(2)") == to_monomial(fundamental(Composition{2})));
    CHECK(parse_nc("2*S(2) - 1*S(1,1)") == euler_element(1));
    CHECK(parse_nc("1*R(1,1)") == to_complete(ribbon(Composition{1, 1})));
    CHECK(parse_sym("1*s(2,1)").basis == SymBasis::s);
    CHECK_THROWS_AS(parse_qsym("1*Q(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qsym("1*M(2) 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qsym(""), std::invalid_argument);
}

TEST_CASE("round trips on random elements") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> nterms(1, 5), wt(0, 5), num(-6, 6), den(1, 4);
    for (int t = 0; t < 200; ++t) {
        QSymElem x = qsym_zero();
        for (int i = 0; i < nterms(rng); ++i) {
            std::vector<Composition> cs = compositions_of(wt(rng));
            std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
            int n = num(rng);
            if (n == 0) n = 1;
            x = qsym_add(x, monomial(cs[pick(rng)], Rational(n, den(rng))));
        }
        CHECK(parse_qsym(render(x)) == x);
        QSymElem f = to_fundamental(x);
        CHECK(to_fundamental(parse_qsym(render(f))) == f);
    }
}
