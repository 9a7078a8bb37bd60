#include <doctest.h>

#include <set>

#include "gcat/catalog.hpp"
#include "gcat/group.hpp"

using namespace gcat;

namespace {

// Independent subgroup oracle: every nonempty subset closed under the product
// (finiteness makes closure under product enough).
std::set<Subgroup> subgroup_oracle(const FinGroup& g) {
  std::set<Subgroup> out;
  const int n = g.size();
  REQUIRE(n <= 12);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    bool closed = true;
    std::set<int> s(subset.begin(), subset.end());
    for (int a : subset)
      for (int b : subset)
        if (!s.count(g.mul(a, b))) closed = false;
    if (closed) out.insert(subset);
  }
  return out;
}

}  // namespace

TEST_CASE("group validation") {
  CHECK(cyclic_group(2).size() == 2);
  CHECK(symmetric3().size() == 6);
  // a non-invertible row: constant table
  auto bad = FinGroup::validate({"e", "a"}, {{"e", "a"}, {"a", "a"}});
  REQUIRE(!bad.ok());
}

TEST_CASE("subgroup counts against the exhaustive oracle") {
  auto check = [](const FinGroup& g, std::size_t expect) {
    auto ours = subgroups(g);
    auto oracle = subgroup_oracle(g);
    CHECK(ours.size() == expect);
    CHECK(ours.size() == oracle.size());
    for (const auto& h : ours) CHECK(oracle.count(h) == 1);
  };
  check(cyclic_group(2), 2);
  check(symmetric3(), 6);
  check(cyclic_group(4), 3);
  check(klein_four(), 5);
  check(quaternion8(), 6);
  check(dihedral8(), 10);
}

TEST_CASE("subgroups are closed under conjugation") {
  for (const auto& [name, g] : fixture_groups()) {
    auto subs = subgroups(*g);
    std::set<Subgroup> present(subs.begin(), subs.end());
    for (const auto& h : subs)
      for (int x = 0; x < g->size(); ++x)
        CHECK_MESSAGE(present.count(conjugate_subgroup(*g, h, x)) == 1, name);
  }
}

TEST_CASE("coset G-sets") {
  GroupPtr c2 = share(cyclic_group(2));
  GSet free = coset_gset(c2, trivial_subgroup(*c2));
  CHECK(free.points().size() == 2);
  CHECK(gset_fixed_points(free, full_subgroup(*c2)).empty());

  GroupPtr s3 = share(symmetric3());
  auto subs = subgroups(*s3);
  // order-2 subgroups have index 3
  int seen = 0;
  for (const auto& h : subs)
    if (h.size() == 2) {
      CHECK(coset_gset(s3, h).points().size() == 3);
      ++seen;
    }
  CHECK(seen == 3);

  GSet one = coset_gset(s3, full_subgroup(*s3));
  CHECK(one.points().size() == 1);
  CHECK(gset_fixed_points(one, full_subgroup(*s3)).size() == 1);

  // nonsubgroup input is rejected
  CHECK_THROWS_AS(coset_gset(s3, Subgroup{1, 2}), Error);
}

TEST_CASE("fixed points of the trivial subgroup are everything") {
  GroupPtr s3 = share(symmetric3());
  for (const auto& k : subgroups(*s3)) {
    GSet x = coset_gset(s3, k);
    CHECK(gset_fixed_points(x, trivial_subgroup(*s3)).size() == x.points().size());
  }
}

TEST_CASE("orbit category of C2 has the expected hom sets") {
  GroupPtr c2 = share(cyclic_group(2));
  OrbitCategory og = orbit_category(c2);
  REQUIRE(og.subs.size() == 2);
  int e = og.object_of(0), g = og.object_of(1);  // {e} first, then C2
  CHECK(og.cat->hom(e, e).size() == 2);
  CHECK(og.cat->hom(e, g).size() == 1);
  CHECK(og.cat->hom(g, e).size() == 0);
  CHECK(og.cat->hom(g, g).size() == 1);
}

TEST_CASE("Aut(G/e) has |G| elements") {
  for (const auto& name : {"C2", "S3", "C4"}) {
    for (const auto& [n, g] : fixture_groups())
      if (n == name) {
        OrbitCategory og = orbit_category(g);
        int triv = og.subgroup_index(trivial_subgroup(*g));
        int obj = og.object_of(triv);
        CHECK(static_cast<int>(og.cat->hom(obj, obj).size()) == g->size());
      }
  }
}

TEST_CASE("orbit hom sets count fixed points, exhaustively for |G| <= 8") {
  for (const auto& [name, g] : fixture_groups()) {
    if (g->size() > 8) continue;
    OrbitCategory og = orbit_category(g);
    auto subs = og.subs;
    for (std::size_t hi = 0; hi < subs.size(); ++hi)
      for (std::size_t ki = 0; ki < subs.size(); ++ki) {
        GSet gk = coset_gset(g, subs[ki]);
        std::size_t fixed = gset_fixed_points(gk, subs[hi]).size();
        std::size_t homs = og.cat->hom(og.object_of(hi), og.object_of(ki)).size();
        CHECK_MESSAGE(fixed == homs, name);
      }
  }
}

TEST_CASE("orbit category re-validates") {
  for (const auto& [name, g] : fixture_groups()) {
    if (g->size() > 8) continue;
    OrbitCategory og = orbit_category(g);
    auto again = FinCat::validate(og.cat->to_raw());
    CHECK_MESSAGE(again.ok(), name);
  }
}

TEST_CASE("Hom(G/G, G/H) counts G-fixed cosets") {
  GroupPtr c2 = share(cyclic_group(2));
  OrbitCategory og = orbit_category(c2);
  int full = og.subgroup_index(full_subgroup(*c2));
  int triv = og.subgroup_index(trivial_subgroup(*c2));
  CHECK(og.cat->hom(og.object_of(full), og.object_of(triv)).empty());
  CHECK(og.cat->hom(og.object_of(full), og.object_of(full)).size() == 1);
}

TEST_CASE("group error codes") {
  // the constant magma is associative but has no identity
  auto no_id = FinGroup::validate({"a", "b"}, {{"a", "a"}, {"a", "a"}});
  REQUIRE(!no_id.ok());
  CHECK(no_id.violations()[0].code == "NoIdentity");

  auto assoc = FinGroup::validate(
      {"e", "a", "b"},
      {{"e", "a", "b"}, {"a", "e", "a"}, {"b", "b", "e"}});
  REQUIRE(!assoc.ok());
  CHECK(assoc.violations()[0].code == "NonAssociative");
}
