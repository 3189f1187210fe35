#include <doctest.h>

#include "orbtop/construction.hpp"
#include "orbtop/orbifold_json.hpp"

using namespace orbtop;

namespace {

const char* kMinimalModel = R"({
  "schema": 1,
  "basis": [{"label": "e1", "integral": true}],
  "gram": [["1"]],
  "surfaces": [],
  "points": [],
  "flags": {"b1_zero": true, "w2_zero": true, "canonical_class": null},
  "c1B": ["1"]
})";

}  // namespace

TEST_CASE("minimal model parses") {
    SeifertBundle bundle = parse_orbifold(kMinimalModel);
    CHECK(bundle.base.b2() == 1);
    CHECK(bundle.base.b1_zero);
    CHECK(bundle.base.surfaces.empty());
    CHECK(bundle.background_class == RatVec{Rat(1)});
    CHECK(h2_total_space(bundle).is_trivial());
}

TEST_CASE("serialization round-trips the construction model") {
    for (std::size_t n : {std::size_t(0), std::size_t(2)}) {
        ConstructionModel c = assemble_orbifold(n);
        std::string text = orbifold_to_json_text(c.bundle);
        SeifertBundle reloaded = parse_orbifold(text);
        CHECK(orbifold_to_json_text(reloaded) == text);
        CHECK(h2_total_space(reloaded) == h2_total_space(c.bundle));
        CHECK(reloaded.base.surfaces.size() == c.bundle.base.surfaces.size());
        CHECK(reloaded.base.intersection == c.bundle.base.intersection);
    }
}

TEST_CASE("schema errors name the offending field") {
    CHECK_THROWS_AS(parse_orbifold("{"), ParseError);
    CHECK_THROWS_AS(parse_orbifold("[]"), SchemaError);
    CHECK_THROWS_AS(parse_orbifold(R"({"schema": 2})"), SchemaError);
    CHECK_THROWS_WITH_AS(parse_orbifold(R"({"schema": 1, "gram": []})"),
                         doctest::Contains("basis"), SchemaError);
    const char* bad_gram = R"({
      "schema": 1,
      "basis": [{"label": "e1", "integral": true}],
      "gram": [["1", "2"]],
      "surfaces": [], "points": [],
      "flags": {"b1_zero": true, "w2_zero": true}
    })";
    CHECK_THROWS_WITH_AS(parse_orbifold(bad_gram), doctest::Contains("gram"), SchemaError);
}

TEST_CASE("invariant violations surface the violated rule") {
    // Two intersecting surfaces with non-coprime multiplicities.
    const char* bad = R"({
      "schema": 1,
      "basis": [{"label": "e1", "integral": true}],
      "gram": [["1"]],
      "surfaces": [
        {"label": "S1", "genus": "1", "m": "6", "j": "1", "b": "1", "class": ["1"]},
        {"label": "S2", "genus": "1", "m": "10", "j": "1", "b": "1", "class": ["1"]}
      ],
      "points": [],
      "flags": {"b1_zero": true, "w2_zero": true}
    })";
    CHECK_THROWS_WITH_AS(parse_orbifold(bad), doctest::Contains("coprime"), InvariantViolation);
}
