#include <doctest.h>

#include "gcat/catalog.hpp"
#include "gcat/json_io.hpp"
#include "gcat/sset.hpp"

using namespace gcat;

TEST_CASE("category payload round trip at id level") {
  for (const auto& [name, c] : small_bases()) {
    auto back = category_from_payload(category_payload(*c));
    REQUIRE_MESSAGE(back.ok(), name);
    CHECK_MESSAGE(back.value() == *c, name);
  }
}

TEST_CASE("category round trip preserves nonstandard identity ids") {
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"one_x", "x", "x"}};
  raw.identities = {{"x", "one_x"}};
  raw.composites = {{"one_x", "one_x", "one_x"}};
  FinCat c = FinCat::validate(raw).take();
  Json p = category_payload(c);
  CHECK(p.contains("identities"));
  auto back = category_from_payload(p);
  REQUIRE(back.ok());
  CHECK(back.value() == c);
}

TEST_CASE("compose entries may name identities") {
  Json p = category_payload(iso_pair());
  auto back = category_from_payload(p);
  REQUIRE(back.ok());
  CHECK(back.value() == iso_pair());
}

TEST_CASE("group payload round trip") {
  for (const auto& [name, g] : fixture_groups()) {
    auto back = group_from_payload(group_payload(*g));
    REQUIRE_MESSAGE(back.ok(), name);
    CHECK_MESSAGE(back.value() == *g, name);
  }
}

TEST_CASE("gaction payload round trip") {
  GroupPtr c2 = share(cyclic_group(2));
  for (const auto& [name, x] : gcat_catalog(c2)) {
    auto back = gaction_from_payload(gaction_payload(x));
    REQUIRE_MESSAGE(back.ok(), name);
    CHECK(*back.value().base == *x.base);
    for (int g = 0; g < 2; ++g) {
      CHECK(back.value().sigma[g].object_map() == x.sigma[g].object_map());
      CHECK(back.value().sigma[g].morphism_map() == x.sigma[g].morphism_map());
    }
  }
}

TEST_CASE("sset payload round trip") {
  std::vector<TruncSSet> xs{nerve(chain_poset(2), 3), nerve(iso_pair(), 3),
                            sd(standard_complex(StdKind::Delta, 2)),
                            standard_complex(StdKind::Horn, 2, 1)};
  for (const auto& x : xs) {
    auto back = sset_from_payload(sset_payload(x));
    REQUIRE(back.ok());
    CHECK(back.value() == x);
  }
}

TEST_CASE("ogdiagram payload round trip") {
  GroupPtr c2 = share(cyclic_group(2));
  CatPtr two = share(antichain(2));
  std::map<std::string, std::string> ob{{"d0", "d1"}, {"d1", "d0"}};
  std::map<std::string, std::string> mo{{"id_d0", "id_d1"}, {"id_d1", "id_d0"}};
  FinFunctor swap = validate_functor(two, two, ob, mo).take();
  GCategory x = validate_gcategory(c2, two, {FinFunctor::identity(two), swap}).take();
  OGDiagram y = phi(x);
  auto back = ogdiagram_from_payload(ogdiagram_payload(y));
  REQUIRE(back.ok());
  for (std::size_t i = 0; i < y.values.size(); ++i) CHECK(*back.value().values[i] == *y.values[i]);
  for (std::size_t i = 0; i < y.restrictions.size(); ++i) {
    CHECK(back.value().restrictions[i].object_map() == y.restrictions[i].object_map());
    CHECK(back.value().restrictions[i].morphism_map() == y.restrictions[i].morphism_map());
  }
}

TEST_CASE("functor payload round trip") {
  GeneratingCell cell = generating_cell(1);
  auto back = functor_from_payload(functor_payload(cell.inclusion));
  REQUIRE(back.ok());
  CHECK(*back.value().source() == *cell.source);
  CHECK(*back.value().target() == *cell.target);
  CHECK(back.value().object_map() == cell.inclusion.object_map());
}

TEST_CASE("manifest envelope is enforced") {
  CHECK_THROWS_AS(read_manifest("/nonexistent/path.json"), Error);
}

TEST_CASE("subgroup parsing") {
  FinGroup s3 = symmetric3();
  auto h = parse_subgroup(s3, "{e,r,rr}");
  REQUIRE(h.ok());
  CHECK(h.value().size() == 3);
  CHECK(parse_subgroup(s3, "e,r,rr").ok());
  CHECK(!parse_subgroup(s3, "{e,r}").ok());   // not closed
  CHECK(!parse_subgroup(s3, "{bogus}").ok());
}

TEST_CASE("malformed payloads are rejected") {
  auto r = category_from_payload(Json::parse(R"({"objects": ["x", "x"]})"));
  CHECK(!r.ok());
  auto r2 = group_from_payload(Json::parse(R"({"elements": ["e"], "table": []})"));
  CHECK(!r2.ok());
  auto r3 = sset_from_payload(Json::parse(R"({"dims": {"1": [{"id": "f", "faces": []}]}})"));
  CHECK(!r3.ok());
}
