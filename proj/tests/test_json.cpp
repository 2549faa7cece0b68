#include <doctest.h>

#include "coarsebox/json_io.hpp"
#include "test_support.hpp"

using namespace coarsebox;
using coarsebox::io::json;
using testsupport::Rng;

TEST_CASE("shape, cell set and cover round-trip canonically") {
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        BoxShape s = t % 2 ? BoxShape({4, 3}) : BoxShape({2, 2, 3});
        CellSet a = testsupport::random_subset(s, rng, 2, 3);
        json ja = io::to_json(a);
        CHECK(io::cellset_from_json(ja, "t") == a);
        // canonical: re-serialization is byte-identical
        CHECK(io::to_json(io::cellset_from_json(ja, "t")).dump() == ja.dump());

        Cover cov = testsupport::random_cover(s, 3, rng);
        json jc = io::to_json(cov);
        Cover back = io::cover_from_json(jc, "t");
        CHECK(io::to_json(back).dump() == jc.dump());
    }
}

TEST_CASE("certificates round-trip through JSON and still verify") {
    Rng rng(103);
    BoxShape s({4, 4});
    for (int t = 0; t < 20; ++t) {
        Cover cov = testsupport::random_cover(s, 2 + rng.below(4), rng);
        auto cert = dichotomy(cov);
        json j = io::to_json(cert);
        auto back = io::certificate_from_json(j, s, "t");
        CHECK(io::to_json(back).dump() == j.dump());
        CHECK(verify_certificate(cov, back).ok);
    }
}

TEST_CASE("certificate JSON carries the kind discriminator") {
    json cr = io::to_json(DichotomyCertificate(Crossing{"a", 1, {Cell{0}}}));
    CHECK(cr.at("kind") == "crossing");
    BoxShape s({2});
    json w = io::to_json(
        DichotomyCertificate(Witness{CellSet(s, {Cell{0}, Cell{1}}), {"a", "b"}}));
    CHECK(w.at("kind") == "witness");
    CHECK_THROWS_AS(io::certificate_from_json(json{{"kind", "other"}}, s, "t"),
                    InvalidInputError);
}

TEST_CASE("entourage JSON: all three kinds round-trip to equal relations") {
    Rng rng(107);
    GroundSet g = testsupport::line_ground(7);

    Entourage pairs = testsupport::random_entourage(g, rng, 1, 3);
    Entourage pairs_back = io::entourage_from_json(io::to_json(pairs), "t");
    CHECK(pairs_back == pairs);

    Entourage metric = testsupport::line_entourage(7, 2);
    Entourage metric_back = io::entourage_from_json(io::to_json(metric), "t");
    CHECK(metric_back == metric);
    CHECK(metric_back.kind() == Entourage::Kind::Metric);

    std::vector<int> shift{1, 2, 3, 4, 5, 6, 0};
    PermutationAction act(g, {shift});
    Entourage group = group_entourage(act, {0}, 2);
    Entourage group_back = io::entourage_from_json(io::to_json(group), "t");
    CHECK(group_back == group);
}

TEST_CASE("abstract cover JSON round-trip") {
    Rng rng(109);
    GroundSet g = testsupport::line_ground(9);
    AbstractCover cov = testsupport::random_abstract_cover(g, 3, rng);
    json j = io::to_json(cov);
    AbstractCover back = io::abstract_cover_from_json(j, g, "t");
    CHECK(io::to_json(back).dump() == j.dump());
}

TEST_CASE("malformed input reports its location") {
    CHECK_THROWS_WITH_AS(io::shape_from_json(json::object(), "shape"),
                         "shape: missing field 'dims'", InvalidInputError);
    CHECK_THROWS_AS(io::cover_from_json(json{{"shape", {{"dims", {2}}}},
                                             {"members", json::array()}},
                                        "cover"),
                    InvalidInputError);
    CHECK_THROWS_AS(io::entourage_from_json(json{{"ground", {"a"}}, {"kind", "nope"}}, "e"),
                    InvalidInputError);
}
