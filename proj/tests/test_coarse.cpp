#include <doctest.h>

#include "test_support.hpp"

using namespace coarsebox;
using testsupport::Rng;

namespace {

// 5-cycle shift action
PermutationAction cycle_action(int n) {
    std::vector<int> shift(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<size_t>(i)] = (i + 1) % n;
    return PermutationAction(testsupport::line_ground(n), {shift});
}

} // namespace

TEST_CASE("GroundSet validation") {
    CHECK_THROWS_AS(GroundSet({}), InvalidInputError);
    CHECK_THROWS_AS(GroundSet({"a", "a"}), InvalidInputError);
    GroundSet g({"a", "b"});
    CHECK(g.require_index("b") == 1);
    CHECK_THROWS_AS(g.require_index("c"), InvalidInputError);
}

TEST_CASE("entourages are reflexive and symmetric by construction") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        GroundSet g = testsupport::line_ground(4 + rng.below(12));
        Entourage e = testsupport::random_entourage(g, rng, 1, 3);
        for (int x = 0; x < g.size(); ++x) {
            CHECK(e.contains(x, x));
            for (int y = 0; y < g.size(); ++y)
                CHECK(e.contains(x, y) == e.contains(y, x));
        }
    }
}

TEST_CASE("ball examples") {
    GroundSet ten = testsupport::line_ground(10);
    CHECK(ball(Entourage::diagonal(ten), 3) == std::vector<int>{3});
    Entourage line1 = testsupport::line_entourage(10, 1);
    CHECK(ball(line1, 5) == std::vector<int>{4, 5, 6});
    // group form: 5-cycle with the +1 shift
    Entourage cyc = group_entourage(cycle_action(5), {0});
    CHECK(ball(cyc, 0) == std::vector<int>{0, 1, 4});
    CHECK_THROWS_AS(ball(line1, 10), InvalidInputError);
}

TEST_CASE("compose identity and metric containment") {
    GroundSet ten = testsupport::line_ground(10);
    Entourage e = testsupport::line_entourage(10, 2);
    CHECK(compose(Entourage::diagonal(ten), e) == e);

    Entourage r1 = testsupport::line_entourage(10, 1);
    Entourage r3 = testsupport::line_entourage(10, 3);
    Entourage c = compose(r1, e);
    for (auto [x, y] : c.pairs()) CHECK(r3.contains(x, y));
    for (auto [x, y] : e.pairs()) CHECK(c.contains(x, y)); // contains max(r1,r2)
}

TEST_CASE("compose matches the triple-loop oracle") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        GroundSet g = testsupport::line_ground(3 + rng.below(14));
        Entourage e = testsupport::random_entourage(g, rng, 1, 4);
        Entourage f = testsupport::random_entourage(g, rng, 1, 4);
        CHECK(compose(e, f).pairs() == testsupport::naive_compose(e, f));
        CHECK_THROWS_AS(compose(e, testsupport::line_entourage(g.size() + 1, 1)),
                        InvalidInputError);
    }
}

TEST_CASE("product entourage: diagonal, max metric, brute force") {
    GroundSet three = testsupport::line_ground(3);
    Entourage d = Entourage::diagonal(three);
    Entourage dd = product_entourage({d, d});
    CHECK(dd == Entourage::diagonal(dd.ground()));

    // product of radius-1 lines on {0..2} is Chebyshev-1 adjacency on 3x3
    Entourage r1 = testsupport::line_entourage(3, 1);
    Entourage grid = product_entourage({r1, r1});
    BoxShape s({3, 3});
    for (const Cell& a : all_cells(s))
        for (const Cell& b : all_cells(s)) {
            int ia = static_cast<int>(s.index_of(a)), ib = static_cast<int>(s.index_of(b));
            CHECK(grid.contains(ia, ib) == (cheb_dist(a, b) <= 1));
        }

    Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        GroundSet g1 = testsupport::line_ground(2 + rng.below(4));
        GroundSet g2 = testsupport::line_ground(2 + rng.below(4));
        Entourage e1 = testsupport::random_entourage(g1, rng, 1, 3);
        Entourage e2 = testsupport::random_entourage(g2, rng, 1, 3);
        Entourage p = product_entourage({e1, e2});
        for (int x1 = 0; x1 < g1.size(); ++x1)
            for (int x2 = 0; x2 < g2.size(); ++x2)
                for (int y1 = 0; y1 < g1.size(); ++y1)
                    for (int y2 = 0; y2 < g2.size(); ++y2)
                        CHECK(p.contains(x1 * g2.size() + x2, y1 * g2.size() + y2) ==
                              (e1.contains(x1, y1) && e2.contains(x2, y2)));
    }
}

TEST_CASE("product ball is the product of factor balls") {
    Entourage e1 = testsupport::line_entourage(4, 1);
    Entourage e2 = testsupport::line_entourage(3, 2);
    Entourage p = product_entourage({e1, e2});
    for (int x1 = 0; x1 < 4; ++x1)
        for (int x2 = 0; x2 < 3; ++x2) {
            auto b1 = ball(e1, x1);
            auto b2 = ball(e2, x2);
            std::vector<int> expected;
            for (int y1 : b1)
                for (int y2 : b2) expected.push_back(y1 * 3 + y2);
            std::sort(expected.begin(), expected.end());
            CHECK(ball(p, x1 * 3 + x2) == expected);
        }
}

TEST_CASE("group entourage examples") {
    auto act = cycle_action(5);
    CHECK(group_entourage(act, {}) == Entourage::diagonal(act.ground()));
    Entourage cyc = group_entourage(act, {0});
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            int d = std::min((x - y + 5) % 5, (y - x + 5) % 5);
            CHECK(cyc.contains(x, y) == (d <= 1));
        }
    // word length 2 realizes cyclic distance <= 2
    Entourage cyc2 = group_entourage(act, {0}, 2);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(cyc2.contains(x, y));
}

TEST_CASE("torus Z6^2 with {-1,0,1}^2 images is Chebyshev-1 adjacency") {
    const int N = 6;
    BoxShape torus({N, N});
    std::vector<std::string> labels;
    for (const Cell& c : all_cells(torus)) labels.push_back(to_string(c));
    GroundSet g(labels);

    auto shift = [&](int dx, int dy) {
        std::vector<int> table;
        for (const Cell& c : all_cells(torus))
            table.push_back(static_cast<int>(
                torus.index_of(Cell{(c[0] + dx + N) % N, (c[1] + dy + N) % N})));
        return table;
    };
    std::vector<std::vector<int>> gens;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
            if (dx || dy) gens.push_back(shift(dx, dy));
    PermutationAction act(g, gens);
    std::vector<int> all_gens;
    for (int i = 0; i < act.generator_count(); ++i) all_gens.push_back(i);
    Entourage e = group_entourage(act, all_gens);

    auto tor_dist = [&](int a, int b) {
        Cell ca = torus.cell_at(static_cast<std::uint64_t>(a));
        Cell cb = torus.cell_at(static_cast<std::uint64_t>(b));
        int d = 0;
        for (int i = 0; i < 2; ++i) {
            int diff = std::abs(ca[i] - cb[i]);
            d = std::max(d, std::min(diff, N - diff));
        }
        return d;
    };
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            CHECK(e.contains(x, y) == (tor_dist(x, y) <= 1));
    CHECK(finitary_bound(e) == 9);
}

TEST_CASE("is_e_chain") {
    Entourage line1 = testsupport::line_entourage(5, 1);
    CHECK(is_e_chain(line1, {}));
    CHECK(is_e_chain(line1, {2}));
    CHECK(is_e_chain(line1, {0, 1, 2, 3}));
    CHECK_FALSE(is_e_chain(line1, {0, 2}));
    CHECK_THROWS_AS(is_e_chain(line1, {0, 9}), InvalidInputError);

    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        GroundSet g = testsupport::line_ground(8);
        Entourage e = testsupport::random_entourage(g, rng, 1, 3);
        std::vector<int> seq;
        for (int i = 0; i < 5; ++i) seq.push_back(rng.below(8));
        bool expected = true;
        for (size_t i = 1; i < seq.size(); ++i)
            if (!e.contains(seq[i - 1], seq[i])) expected = false;
        CHECK(is_e_chain(e, seq) == expected);
    }
}

TEST_CASE("chain_component examples and partition property") {
    GroundSet ten = testsupport::line_ground(10);
    CHECK(chain_component(Entourage::diagonal(ten), 4) == std::vector<int>{4});
    Entourage line1 = testsupport::line_entourage(10, 1);
    CHECK(chain_component(line1, 0).size() == 10);

    auto [g, coords] = testsupport::cluster_points(2, 2, 7);
    Entourage e = testsupport::coords_entourage(g, coords, 1);
    CHECK(chain_component(e, 0) == std::vector<int>{0, 1, 2});

    Rng rng(7);
    for (int t = 0; t < 15; ++t) {
        GroundSet gr = testsupport::line_ground(12);
        Entourage er = testsupport::random_entourage(gr, rng, 1, 6);
        for (int x = 0; x < gr.size(); ++x) {
            auto comp = chain_component(er, x);
            CHECK(std::binary_search(comp.begin(), comp.end(), x));
            for (int y : comp) CHECK(chain_component(er, y) == comp);
        }
    }
}

TEST_CASE("cover_multiplicity examples and oracle") {
    GroundSet five = testsupport::line_ground(5);
    std::vector<std::pair<std::string, std::vector<int>>> singles;
    for (int i = 0; i < 5; ++i) singles.emplace_back("s" + std::to_string(i), std::vector<int>{i});
    AbstractCover singletons(five, std::move(singles));
    Entourage line1 = testsupport::line_entourage(5, 1);
    CHECK(cover_multiplicity(line1, singletons).count == 3);
    CHECK(cover_multiplicity(Entourage::diagonal(five), singletons).count == 1);

    Rng rng(43);
    for (int t = 0; t < 25; ++t) {
        GroundSet g = testsupport::line_ground(5 + rng.below(10));
        Entourage e = testsupport::random_entourage(g, rng, 1, 4);
        AbstractCover cov = testsupport::random_abstract_cover(g, 2 + rng.below(3), rng);
        CHECK(cover_multiplicity(e, cov).count == testsupport::naive_cover_multiplicity(e, cov));
    }
}

TEST_CASE("is_uniformly_bounded") {
    GroundSet six = testsupport::line_ground(6);
    Entourage line1 = testsupport::line_entourage(6, 1);
    AbstractCover singles(six, {{"a", {0}}, {"b", {1}}, {"c", {2}},
                                {"d", {3}}, {"e", {4}}, {"f", {5}}});
    CHECK(is_uniformly_bounded(singles, line1));
    AbstractCover wide(six, {{"a", {0, 5}}, {"b", {1, 2, 3, 4}}});
    CHECK_FALSE(is_uniformly_bounded(wide, line1));
    CHECK(is_uniformly_bounded(wide, testsupport::line_entourage(6, 5)));
}

TEST_CASE("finitary_bound") {
    GroundSet ten = testsupport::line_ground(10);
    CHECK(finitary_bound(Entourage::diagonal(ten)) == 1);
    CHECK(finitary_bound(testsupport::line_entourage(10, 1)) == 3);
}

TEST_CASE("ball monotone under relation inclusion; E o E contains E") {
    Rng rng(53);
    for (int t = 0; t < 15; ++t) {
        GroundSet g = testsupport::line_ground(10);
        Entourage e = testsupport::random_entourage(g, rng, 1, 4);
        Entourage ee = compose(e, e);
        for (int x = 0; x < g.size(); ++x) {
            auto b = ball(e, x);
            auto bb = ball(ee, x);
            for (int y : b) CHECK(std::binary_search(bb.begin(), bb.end(), y));
        }
    }
}

TEST_CASE("transitive full generator set gives one chain component") {
    auto act = cycle_action(7);
    Entourage e = group_entourage(act, {0});
    CHECK(all_chain_components(e).size() == 1);
    CHECK(chain_component(e, 3).size() == 7);
}

TEST_CASE("almost_free_witness") {
    auto act = cycle_action(5);
    // nonzero shifts of a cycle have no fixed points
    CHECK(almost_free_witness(act.ground(), {act.generator(0)}) == 0);
    // identity fixes everything
    std::vector<int> ident{0, 1, 2, 3, 4};
    CHECK_FALSE(almost_free_witness(act.ground(), {ident}).has_value());
}
