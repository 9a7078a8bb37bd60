#include <doctest.h>

#include "gcat/catalog.hpp"
#include "gcat/fincat.hpp"

using namespace gcat;

namespace {

RawCategory iso_raw() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}, {"g", "y", "x"}};
  raw.identities = {{"x", "id_x"}, {"y", "id_y"}};
  raw.composites = {{"id_x", "id_x", "id_x"}, {"id_y", "id_y", "id_y"}, {"f", "id_x", "f"},
                    {"id_y", "f", "f"},       {"g", "id_y", "g"},       {"id_x", "g", "g"},
                    {"g", "f", "id_x"},       {"f", "g", "id_y"}};
  return raw;
}

}  // namespace

TEST_CASE("terminal category validates") {
  CatBuilder b;
  b.add_object("*");
  auto r = b.build();
  REQUIRE(r.ok());
  CHECK(r.value().object_count() == 1);
  CHECK(r.value().morphism_count() == 1);
}

TEST_CASE("isomorphism category validates") {
  auto r = FinCat::validate(iso_raw());
  REQUIRE(r.ok());
  CHECK(r.value().morphism_count() == 4);
}

TEST_CASE("missing composite is reported") {
  RawCategory raw = iso_raw();
  raw.composites.erase(
      std::remove_if(raw.composites.begin(), raw.composites.end(),
                     [](const auto& c) { return c[0] == "g" && c[1] == "f"; }),
      raw.composites.end());
  auto r = FinCat::validate(raw);
  REQUIRE(!r.ok());
  bool found = false;
  for (const auto& v : r.violations()) found |= v.code == "MissingComposite";
  CHECK(found);
}

TEST_CASE("empty category is valid and re-validation is idempotent") {
  FinCat e = FinCat::empty();
  auto again = FinCat::validate(e.to_raw());
  REQUIRE(again.ok());
  CHECK(again.value() == e);
}

TEST_CASE("re-validation is idempotent on fixtures") {
  for (const auto& [name, c] : small_bases()) {
    auto again = FinCat::validate(c->to_raw());
    REQUIRE_MESSAGE(again.ok(), name);
    CHECK_MESSAGE(again.value() == *c, name);
  }
}

TEST_CASE("poset_to_category basics") {
  auto chain = poset_to_category({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "1"}});
  REQUIRE(chain.ok());
  CHECK(chain.value().object_count() == 2);
  CHECK(chain.value().morphism_count() == 3);
  CHECK(is_poset(chain.value()));

  auto anti = poset_to_category({"a", "b"}, {});
  REQUIRE(anti.ok());
  CHECK(anti.value().morphism_count() == 2);

  auto cyc = poset_to_category({"0", "1"}, {{"0", "1"}, {"1", "0"}});
  REQUIRE(!cyc.ok());
  CHECK(cyc.violations()[0].code == "NotAPartialOrder");
}

TEST_CASE("is_poset rejects parallel morphisms and isomorphisms") {
  CHECK(!is_poset(parallel_pair()));
  CHECK(!is_poset(iso_pair()));
  CHECK(is_poset(chain_poset(2)));
}

TEST_CASE("validate_functor identity and constant") {
  CatPtr c = share(chain_poset(1));
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : c->objects()) ob[o] = o;
  for (const auto& m : c->morphisms()) mo[m.id] = m.id;
  auto idf = validate_functor(c, c, ob, mo);
  REQUIRE(idf.ok());

  CatPtr pt = share(FinCat::terminal("*"));
  std::map<std::string, std::string> ob2, mo2;
  for (const auto& o : c->objects()) ob2[o] = "*";
  for (const auto& m : c->morphisms()) mo2[m.id] = "id_*";
  REQUIRE(validate_functor(c, pt, ob2, mo2).ok());

  // wrong endpoint
  std::map<std::string, std::string> bad = mo;
  bad["0->1"] = "id_0";
  auto r = validate_functor(c, c, ob, bad);
  REQUIRE(!r.ok());
  CHECK(r.violations()[0].code == "EndpointMismatch");
}

TEST_CASE("find_isomorphism on chains and antichains") {
  auto chain_ab = poset_to_category({"a", "b"}, {{"a", "b"}}).take();
  auto iso = find_isomorphism(share(chain_poset(1)), share(std::move(chain_ab)));
  REQUIRE(iso.has_value());
  CHECK(iso->obj_image("0") == "a");

  CHECK(!find_isomorphism(share(chain_poset(1)), share(antichain(2))).has_value());
}

TEST_CASE("self isomorphism inverts") {
  for (const auto& [name, c] : small_bases()) {
    auto iso = find_isomorphism(c, c);
    REQUIRE_MESSAGE(iso.has_value(), name);
    FinFunctor inv = invert(*iso);
    CHECK_MESSAGE(inv.check().empty(), name);
  }
}

TEST_CASE("automorphism counts of small categories") {
  CHECK(automorphisms(share(chain_poset(1))).size() == 1);
  CHECK(automorphisms(share(antichain(2))).size() == 2);
  CHECK(automorphisms(share(antichain(3))).size() == 6);
  CHECK(automorphisms(share(parallel_pair())).size() == 2);
  CHECK(automorphisms(share(iso_pair())).size() == 2);
}

TEST_CASE("pullback over the terminal category is the product") {
  CatPtr c = share(chain_poset(1));
  CatPtr pt = share(FinCat::terminal("*"));
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : c->objects()) ob[o] = "*";
  for (const auto& m : c->morphisms()) mo[m.id] = "id_*";
  FinFunctor f = validate_functor(c, pt, ob, mo).take();
  PullbackResult p = pullback(f, f);
  CHECK(p.cat->object_count() == 4);
  CHECK(p.cat->morphism_count() == 9);
  CHECK(p.p1.check().empty());
  CHECK(p.p2.check().empty());
  // projections agree over the terminal category trivially
}

TEST_CASE("pullback along the identity is the other source") {
  CatPtr c = share(chain_poset(2));
  FinFunctor idc = FinFunctor::identity(c);
  PullbackResult p = pullback(idc, idc);
  auto iso = find_isomorphism(p.cat, c);
  CHECK(iso.has_value());
}

TEST_CASE("pullback of subcategory inclusions is the intersection") {
  CatPtr b = share(chain_poset(2));  // 0 < 1 < 2
  CatPtr a1 = share(subcategory(*b, full_subcat(*b, {"0", "1"})).take());
  CatPtr a2 = share(subcategory(*b, full_subcat(*b, {"1", "2"})).take());
  PullbackResult p = pullback(inclusion_functor(a1, b), inclusion_functor(a2, b));
  CHECK(p.cat->object_count() == 1);
  CHECK(p.cat->morphism_count() == 1);
}

TEST_CASE("pullback mediating functor exists uniquely for small cones") {
  CatPtr c = share(chain_poset(1));
  CatPtr pt = share(FinCat::terminal("*"));
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : c->objects()) ob[o] = "*";
  for (const auto& m : c->morphisms()) mo[m.id] = "id_*";
  FinFunctor f = validate_functor(c, pt, ob, mo).take();
  PullbackResult p = pullback(f, f);

  for (const auto& [tname, t] : small_bases()) {
    if (t->object_count() > 4 || t->object_count() == 0) continue;
    auto us = enumerate_functors(t, c);
    for (const auto& u : us)
      for (const auto& v : us) {
        // over the terminal category every pair agrees
        int mediating = 0;
        for (const auto& m : enumerate_functors(t, p.cat)) {
          FinFunctor p1m = compose_functors(p.p1, m);
          FinFunctor p2m = compose_functors(p.p2, m);
          if (p1m.object_map() == u.object_map() && p1m.morphism_map() == u.morphism_map() &&
              p2m.object_map() == v.object_map() && p2m.morphism_map() == v.morphism_map())
            ++mediating;
        }
        CHECK_MESSAGE(mediating == 1, tname);
      }
  }
}

TEST_CASE("search budget is enforced") {
  // two large discrete categories force a wide search
  CatPtr a = share(antichain(9));
  CHECK_THROWS_AS((void)find_isomorphism(a, a, 5), Error);
}

TEST_CASE("dangling endpoints and broken associativity are reported") {
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"id_x", "x", "x"}, {"f", "x", "nowhere"}};
  raw.identities = {{"x", "id_x"}};
  auto r = FinCat::validate(raw);
  REQUIRE(!r.ok());
  CHECK(r.violations()[0].code == "DanglingEndpoint");

  // three parallel endomorphisms with a deliberately non-associative table
  RawCategory bad;
  bad.objects = {"x"};
  bad.morphisms = {{"id_x", "x", "x"}, {"f", "x", "x"}, {"g", "x", "x"}};
  bad.identities = {{"x", "id_x"}};
  auto ent = [&](std::string a, std::string b, std::string c) {
    bad.composites.push_back({a, b, c});
  };
  ent("id_x", "id_x", "id_x");
  for (std::string m : {"f", "g"}) {
    ent(m, "id_x", m);
    ent("id_x", m, m);
  }
  ent("f", "f", "g");
  ent("f", "g", "f");
  ent("g", "f", "f");
  ent("g", "g", "f");
  auto r2 = FinCat::validate(bad);
  REQUIRE(!r2.ok());
  bool nonassoc = false;
  for (const auto& v : r2.violations()) nonassoc |= v.code == "NonAssociative";
  CHECK(nonassoc);
}

TEST_CASE("pullback projections agree over a nontrivial cospan") {
  // E = chain [1]; F: [1] -> E identity, G: pt -> E at the top
  CatPtr e = share(chain_poset(1));
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = FinFunctor::identity(e);
  std::map<std::string, std::string> ob{{"*", "1"}}, mo{{"id_*", "id_1"}};
  FinFunctor gg = validate_functor(pt, e, ob, mo).take();
  PullbackResult p = pullback(f, gg);
  CHECK(p.cat->object_count() == 1);  // only (1, *)
  FinFunctor left = compose_functors(f, p.p1);
  FinFunctor right = compose_functors(gg, p.p2);
  CHECK(left.object_map() == right.object_map());
  CHECK(left.morphism_map() == right.morphism_map());
}
