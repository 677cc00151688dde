#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qspieri/catalog.hpp"
#include "qspieri/interval_hopf.hpp"
#include "qspieri/reseau.hpp"
#include "qspieri/reseau_io.hpp"

using namespace qspieri;

TEST_CASE("builder validation") {
    LabelledReseau::Builder b;
    b.add_vertex("a", 0);
    CHECK_THROWS_AS(b.add_vertex("a", 1), std::invalid_argument);
    b.add_vertex("b", 2);
    CHECK_THROWS_AS(b.add_edge("a", "zz", 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge("a", "b", 1, 0), std::invalid_argument);
    b.add_edge("a", "b", 1);
    CHECK_THROWS_AS(std::move(b).build(), std::invalid_argument);  // rank jump

    LabelledReseau::Builder ok;
    ok.add_vertex("a", 0).add_vertex("b", 1);
    ok.add_edge("a", "b", 3).add_edge("a", "b", 3).add_edge("a", "b", -3);
    LabelledReseau g = std::move(ok).build();
    CHECK(g.edges().size() == 2);  // duplicates merged
    CHECK(g.incidence(0, 1) == 3);
}

TEST_CASE("chains and path counts") {
    LabelledReseau b2 = boolean_lattice(2);
    int bot = b2.vertex_checked("{}");
    int top = b2.vertex_checked("{1,2}");
    CHECK(chains(b2, bot, top, 2).size() == 2);
    CHECK(chains(b2, bot, bot, 0).size() == 1);
    CHECK(chains(b2, bot, bot, 0)[0].length() == 0);
    CHECK(chains(b2, bot, top, 1).empty());
    CHECK_THROWS_AS(chains(b2, bot, top, -1), std::invalid_argument);

    // sum of chain multiplicities equals the incidence power, on random
    // multigraphs
    std::mt19937 rng(7u);
    for (int t = 0; t < 10; ++t) {
        LabelledReseau::Builder b;
        for (int v = 0; v < 8; ++v) b.add_vertex("v" + std::to_string(v));
        std::uniform_int_distribution<int> coin(0, 2), lab(1, 3), mul(1, 2);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (coin(rng) == 0) b.add_edge("v" + std::to_string(u), "v" + std::to_string(v),
                                               lab(rng), mul(rng));
        LabelledReseau g = std::move(b).build();
        for (int r = 0; r <= 5; ++r)
            for (int x = 0; x < g.size(); ++x)
                for (int y = 0; y < g.size(); ++y) {
                    long long total = 0;
                    for (const Chain& ch : chains(g, x, y, r)) total += ch.mult();
                    CHECK(total == g.count_paths(x, y, r));
                }
    }
}

TEST_CASE("doubling") {
    LabelledReseau::Builder b;
    b.add_vertex("x", 0).add_vertex("y", 1);
    b.add_edge("x", "y", 3);
    LabelledReseau g = std::move(b).build();
    LabelledReseau d = double_reseau(g);
    CHECK(d.edges().size() == 2);
    CHECK(chains(d, 0, 1, 1).size() == 2);
    std::set<int> labels;
    for (const ReseauEdge& e : d.edges()) labels.insert(e.label);
    CHECK(labels == std::set<int>{-3, 3});

    LabelledReseau::Builder neg;
    neg.add_vertex("x", 0).add_vertex("y", 1);
    neg.add_edge("x", "y", -1);
    LabelledReseau gneg = std::move(neg).build();
    CHECK_THROWS_AS(double_reseau(gneg), std::invalid_argument);

    LabelledReseau::Builder empty;
    empty.add_vertex("x", 0);
    CHECK(double_reseau(std::move(empty).build()).edges().empty());
}

TEST_CASE("erasing negative twins") {
    LabelledReseau g = double_reseau(chain_poset(3));
    LabelledReseau same = erase_negative(
        g, [](const LabelledReseau&, const ReseauEdge&) { return false; });
    CHECK(same.edges().size() == g.edges().size());
    LabelledReseau erased = erase_negative(
        g, [](const LabelledReseau&, const ReseauEdge& e) { return e.label == 1; });
    CHECK(erased.edges().size() == g.edges().size() - 1);
    CHECK_THROWS_AS(erase_negative(chain_poset(3),
                                   [](const LabelledReseau&, const ReseauEdge&) { return false; }),
                    std::invalid_argument);
}

TEST_CASE("file format round trip") {
    LabelledReseau g = boolean_lattice(2);
    std::string text = write_reseau(g);
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    LabelledReseau h = parse_reseau(text);
    CHECK(write_reseau(h) == text);
    CHECK(h.size() == g.size());
    for (int v = 0; v < g.size(); ++v) CHECK(h.id(v) == g.id(v));
    CHECK(h.edges().size() == g.edges().size());

    // duplicate edge entries accumulate multiplicity
    LabelledReseau dup = parse_reseau(R"({
      "vertices": [{"id": "x"}, {"id": "y"}],
      "edges": [{"from": "x", "to": "y", "label": 2},
                {"from": "x", "to": "y", "label": 2, "mult": 2}]
    })");
    CHECK(dup.edges().size() == 1);
    CHECK(dup.incidence(0, 1) == 3);
    CHECK_FALSE(dup.ranked());
    CHECK_THROWS_AS(parse_reseau("{}"), std::invalid_argument);
}

TEST_CASE("interval algebra structure") {
    LabelledReseau b2 = boolean_lattice(2);
    int bot = b2.vertex_checked("{}");
    int top = b2.vertex_checked("{1,2}");
    int a = b2.vertex_checked("{1}");
    int b = b2.vertex_checked("{2}");

    CHECK(hp_interval(b2, bot, bot, 0) == lin_unit(IntervalProduct()));
    CHECK(hp_interval(b2, bot, top, 1).empty());  // no length-1 chains: zero

    HPElem whole = hp_interval(b2, bot, top, 2);
    Lin2<IntervalProduct> d = hp_coproduct(whole);
    Lin2<IntervalProduct> want;
    auto iv = [&](int x, int y, int r) { return IntervalProduct({IntervalFactor{&b2, x, y, r}}); };
    add_term(want, std::make_pair(IntervalProduct(), iv(bot, top, 2)), Rational(1));
    add_term(want, std::make_pair(iv(bot, a, 1), iv(a, top, 1)), Rational(1));
    add_term(want, std::make_pair(iv(bot, b, 1), iv(b, top, 1)), Rational(1));
    add_term(want, std::make_pair(iv(bot, top, 2), IntervalProduct()), Rational(1));
    CHECK(d == want);

    // graded multigraph interval with E(x,y) = 2, r = 1: only trivial splits
    LabelledReseau::Builder mb;
    mb.add_vertex("x").add_vertex("y");
    mb.add_edge("x", "y", 1, 2);
    LabelledReseau m = std::move(mb).build();
    HPElem e = hp_interval(m, 0, 1, 1);
    Lin2<IntervalProduct> dm = hp_coproduct(e);
    CHECK(dm.size() == 2);
    for (const auto& [kk, c] : dm)
        CHECK((kk.first.is_unit() || kk.second.is_unit()));

    // product is the sorted concatenation of factor lists
    HPElem prod = hp_product(hp_interval(b2, bot, a, 1), hp_interval(b2, b, top, 1));
    REQUIRE(prod.size() == 1);
    CHECK(prod.begin()->first.degree() == 2);
    CHECK(hp_product(prod, lin_unit(IntervalProduct())) == prod);

    // antipode of the unit and the axioms on small intervals
    CHECK(hp_antipode(lin_unit(IntervalProduct())) == lin_unit(IntervalProduct()));
    for (int x = 0; x < b2.size(); ++x)
        for (int y = 0; y < b2.size(); ++y) {
            int r = b2.rank(y) - b2.rank(x);
            if (r < 0 || b2.count_paths(x, y, r) == 0) continue;
            IntervalProduct key({IntervalFactor{&b2, x, y, r}});
            CHECK(check_coassociative<IntervalHopf>(key));
            CHECK(check_counit<IntervalHopf>(key));
            CHECK(check_antipode_law<IntervalHopf>(key));
        }
}
