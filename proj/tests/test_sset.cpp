#include <doctest.h>

#include <set>

#include "gcat/catalog.hpp"
#include "gcat/sset.hpp"

using namespace gcat;

namespace {

// Independent face-poset oracle: order the nondegenerate simplices of X by
// the iterated-face relation and return the poset as a category. Stays away
// from sd()'s flag machinery on purpose.
FinCat face_poset_oracle(const TruncSSet& x) {
  std::vector<std::pair<int, int>> els;
  for (int n = 0; n <= x.dim_bound(); ++n)
    for (int i = 0; i < x.count(n); ++i) els.push_back({n, i});
  auto name = [&](std::pair<int, int> e) {
    return std::to_string(e.first) + ":" + x.id_of(e.first, e.second);
  };
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
  for (const auto& e : els) rel.insert({e, e});
  bool grew = true;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> direct;
  for (const auto& e : els) {
    auto [n, i] = e;
    if (n == 0) continue;
    for (const auto& f : x.faces_of(n, i)) {
      REQUIRE(!f.degenerate());
      direct.push_back({{f.base_dim, f.base_index}, e});
    }
  }
  for (const auto& d : direct) rel.insert(d);
  while (grew) {
    grew = false;
    for (const auto& [a, b] : std::vector(rel.begin(), rel.end()))
      for (const auto& d : direct)
        if (d.first == b && !rel.count({a, d.second})) {
          rel.insert({a, d.second});
          grew = true;
        }
  }
  std::vector<std::string> elems;
  for (const auto& e : els) elems.push_back(name(e));
  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& [a, b] : rel) leq.push_back({name(a), name(b)});
  return poset_to_category(elems, leq).take();
}

}  // namespace

TEST_CASE("nerve of the terminal category") {
  TruncSSet n = nerve(FinCat::terminal("*"), 2);
  CHECK(n.count(0) == 1);
  CHECK(n.count(1) == 0);
  CHECK(n.count(2) == 0);
}

TEST_CASE("nerve of the chain poset [2]") {
  TruncSSet n = nerve(chain_poset(2), 3);
  CHECK(n.count(0) == 3);
  CHECK(n.count(1) == 3);
  CHECK(n.count(2) == 1);
  CHECK(n.count(3) == 0);
}

TEST_CASE("nerve handles composites that hit identities") {
  // the isomorphism category: d1 of the chain (f, g) is degenerate
  TruncSSet n = nerve(iso_pair(), 3);
  CHECK(n.count(0) == 2);
  CHECK(n.count(1) == 2);
  CHECK(n.count(2) == 2);  // (f,g) and (g,f)
  int fg = n.index_of(2, "f*g");
  REQUIRE(fg >= 0);
  CHECK(n.faces_of(2, fg)[1].degenerate());
}

TEST_CASE("standard complexes") {
  TruncSSet d0 = standard_complex(StdKind::Delta, 0);
  CHECK(d0.count(0) == 1);

  TruncSSet bd2 = standard_complex(StdKind::Boundary, 2);
  CHECK(bd2.count(0) == 3);
  CHECK(bd2.count(1) == 3);
  CHECK(bd2.count(2) == 0);

  TruncSSet horn = standard_complex(StdKind::Horn, 2, 0);
  CHECK(horn.count(0) == 3);
  CHECK(horn.count(1) == 2);

  CHECK_THROWS_AS(standard_complex(StdKind::Horn, 0, 0), Error);
  CHECK_THROWS_AS(standard_complex(StdKind::Horn, 2, 3), Error);
}

TEST_CASE("sd of a point and of standard simplices") {
  TruncSSet pt = sd(standard_complex(StdKind::Delta, 0));
  CHECK(pt.count(0) == 1);

  TruncSSet s1 = sd(standard_complex(StdKind::Delta, 1));
  CHECK(s1.count(0) == 3);
  CHECK(s1.count(1) == 2);

  TruncSSet s2 = sd(standard_complex(StdKind::Delta, 2));
  CHECK(s2.count(0) == 7);
  CHECK(s2.count(1) == 12);
  CHECK(s2.count(2) == 6);
}

TEST_CASE("sd rejects irregular input") {
  CHECK_THROWS_WITH_AS(sd(nerve(iso_pair(), 2)), doctest::Contains("NotRegular"), Error);
}

TEST_CASE("sd of the empty simplicial set") {
  TruncSSet e = sd(standard_complex(StdKind::Boundary, 0));
  CHECK(e.count(0) == 0);
  FinCat c = categorify(e);
  CHECK(c.object_count() == 0);
}

TEST_CASE("categorify recovers categories from nerves") {
  for (const auto& [name, c] : small_bases()) {
    if (name == "iso2") continue;  // cyclic one-skeleton
    FinCat cn = categorify(nerve(*c, 2));
    auto iso = find_isomorphism(share(std::move(cn)), c);
    CHECK_MESSAGE(iso.has_value(), name);
  }
}

TEST_CASE("categorify rejects cyclic one-skeleta") {
  CHECK_THROWS_WITH_AS(categorify(nerve(iso_pair(), 2)), doctest::Contains("CyclicOneSkeleton"), Error);
}

TEST_CASE("c(Sd N[1]) is the face poset of the interval") {
  TruncSSet sdn = sd(nerve(chain_poset(1), 2));
  FinCat c = categorify(sdn);
  FinCat oracle =
      poset_to_category({"{0}", "{1}", "{0,1}"}, {{"{0}", "{0,1}"}, {"{1}", "{0,1}"}}).take();
  CHECK(find_isomorphism(share(std::move(c)), share(std::move(oracle))).has_value());
}

TEST_CASE("c(Delta[2]) is the chain poset [2]") {
  FinCat c = categorify(standard_complex(StdKind::Delta, 2));
  CHECK(find_isomorphism(share(std::move(c)), share(chain_poset(2))).has_value());
}

TEST_CASE("c Sd N(P) is the face poset of N(P) for small posets") {
  std::vector<FinCat> posets{chain_poset(1), chain_poset(2), chain_poset(3), antichain(3),
                             poset_to_category({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}).take()};
  for (const auto& p : posets) {
    TruncSSet n = nerve(p, 4);
    FinCat lhs = categorify(sd(n));
    FinCat rhs = face_poset_oracle(n);
    CHECK(find_isomorphism(share(std::move(lhs)), share(std::move(rhs))).has_value());
  }
}

TEST_CASE("cSd² of catalog complexes is a poset") {
  for (int m = 0; m <= 2; ++m) {
    CHECK(is_poset(categorify(sd(sd(standard_complex(StdKind::Delta, m))))));
    CHECK(is_poset(categorify(sd(sd(standard_complex(StdKind::Boundary, m))))));
  }
  CHECK(is_poset(categorify(sd(sd(nerve(chain_poset(2), 3))))));
}

TEST_CASE("generating cells") {
  GeneratingCell m0 = generating_cell(0);
  CHECK(m0.source->object_count() == 0);
  CHECK(m0.target->object_count() == 1);

  GeneratingCell m1 = generating_cell(1);
  CHECK(m1.source->object_count() == 2);
  CHECK(m1.target->object_count() == 5);
  int covers = 0;
  for (int mm = 0; mm < m1.target->morphism_count(); ++mm)
    if (!m1.target->is_identity(mm)) ++covers;
  CHECK(covers == 4);

  GeneratingCell horn = generating_cell(2, 0);
  CHECK(is_poset(*horn.source));
  CHECK(is_poset(*horn.target));
  CHECK(horn.inclusion.check().empty());
  CHECK(horn.inclusion.injective());
}

TEST_CASE("Ex level zero is the vertex set") {
  for (const auto& [name, c] : small_bases()) {
    TruncSSet n = nerve(*c, 2);
    TruncSSet e = ex(n, 1);
    CHECK_MESSAGE(e.count(0) == n.count(0), name);
  }
}

TEST_CASE("Ex(Delta[1]) has five 1-simplices") {
  TruncSSet d1 = standard_complex(StdKind::Delta, 1);
  TruncSSet e = ex(d1, 1);
  CHECK(e.all_simplices(1).size() == 5);
  CHECK(e.count(0) == 2);
}

TEST_CASE("Sd -| Ex on the interval, both sides have five maps") {
  TruncSSet d1 = standard_complex(StdKind::Delta, 1);
  TruncSSet sd1 = sd(d1);
  CHECK(enumerate_sset_maps(sd1, d1).size() == 5);
  TruncSSet e = ex(d1, 1);
  CHECK(enumerate_sset_maps(d1, e).size() == 5);
}

TEST_CASE("Sd -| Ex hom counts agree on a tiny catalog") {
  std::vector<TruncSSet> as{standard_complex(StdKind::Delta, 1), standard_complex(StdKind::Horn, 2, 0),
                            standard_complex(StdKind::Boundary, 2)};
  std::vector<TruncSSet> xs{standard_complex(StdKind::Delta, 1), standard_complex(StdKind::Delta, 2)};
  for (const auto& a : as)
    for (const auto& x : xs) {
      std::size_t lhs = enumerate_sset_maps(sd(a), x).size();
      TruncSSet ex_x = ex(x, a.dim_bound());
      std::size_t rhs = enumerate_sset_maps(a, ex_x).size();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("ex2_nerve runs at small truncation") {
  // Ex(Y)_0 = Y_0 at every stage, so the vertex count is stable
  TruncSSet e = ex2_nerve(chain_poset(1), 1);
  CHECK(e.count(0) == 2);
}

TEST_CASE("nerve fixed points agree with the nerve of the fixed category") {
  GroupPtr c2 = share(cyclic_group(2));
  for (const auto& [name, x] : gcat_catalog(c2)) {
    for (const auto& h : subgroups(*c2)) {
      TruncSSet lhs = nerve(fixed_category(x, h), 3);
      TruncSSet rhs = nerve_fixed_points(x, h, 3);
      CHECK_MESSAGE(lhs == rhs, name);
    }
  }
}

TEST_CASE("truncated sset equality detects face differences") {
  TruncSSet a = standard_complex(StdKind::Delta, 1);
  TruncSSet b = standard_complex(StdKind::Boundary, 2);
  CHECK(a != b);
  CHECK(a == standard_complex(StdKind::Delta, 1));
}

TEST_CASE("sset round trip through raw data") {
  TruncSSet n = nerve(iso_pair(), 3);
  auto again = TruncSSet::validate(n.to_raw());
  REQUIRE(again.ok());
  CHECK(again.value() == n);
}

TEST_CASE("budgets are enforced in categorify and ex") {
  CHECK_THROWS_WITH_AS(categorify(nerve(chain_poset(3), 3), 2), doctest::Contains("Budget"), Error);
  CHECK_THROWS_WITH_AS(ex(standard_complex(StdKind::Delta, 1), 1, 3),
                       doctest::Contains("EnumerationBudgetExceeded"), Error);
}
