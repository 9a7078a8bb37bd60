#include <doctest.h>

#include <numeric>

#include "gcat/catalog.hpp"
#include "gcat/homology.hpp"

using namespace gcat;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  CHECK(s.u.mul(m).mul(s.v) == s.d);
  CHECK(abs(s.u.determinant()) == 1);
  CHECK(abs(s.v.determinant()) == 1);
  for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
  for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

// Independent oracle for a 2x2 matrix: d1 = gcd of entries, d1*d2 = |det|.
std::pair<BigInt, BigInt> two_by_two_divisors(const IntMatrix& m) {
  BigInt g = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g = boost::multiprecision::gcd(g, m.at(i, j));
  BigInt det = m.determinant();
  if (det < 0) det = -det;
  return {g, det / g};
}

}  // namespace

TEST_CASE("smith normal form of simple matrices") {
  {
    SmithResult s = smith_normal_form(from_rows({{1, 0}, {0, 2}}));
    CHECK(s.rank == 2);
    CHECK(s.divisors == std::vector<BigInt>{1, 2});
    check_snf(from_rows({{1, 0}, {0, 2}}));
  }
  {
    SmithResult s = smith_normal_form(from_rows({{0}}));
    CHECK(s.rank == 0);
    CHECK(s.divisors.empty());
  }
  {
    IntMatrix m = from_rows({{2, 4}, {6, 8}});
    SmithResult s = smith_normal_form(m);
    auto [d1, d2] = two_by_two_divisors(m);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == d1);
    CHECK(s.divisors[1] == d2);
    CHECK(d1 == 2);
    CHECK(d2 == 4);
    check_snf(m);
  }
}

TEST_CASE("smith normal form properties on seeded random matrices") {
  Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    int r = rng.range(1, 5), c = rng.range(1, 5);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng.range(-9, 9));
    check_snf(m);
  }
}

TEST_CASE("chain complex of a point is trivial") {
  auto mats = chain_complex(nerve(FinCat::terminal("*"), 2));
  for (const auto& m : mats) CHECK(m.cols() == 0);
}

TEST_CASE("boundary of the triangle boundary has zero column sums") {
  auto mats = chain_complex(standard_complex(StdKind::Boundary, 2));
  REQUIRE(!mats.empty());
  const IntMatrix& d1 = mats[0];
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  for (int j = 0; j < 3; ++j) {
    BigInt sum = 0;
    for (int i = 0; i < 3; ++i) sum += d1.at(i, j);
    CHECK(sum == 0);
  }
}

TEST_CASE("boundary squared vanishes on the nerve of [2]") {
  auto mats = chain_complex(nerve(chain_poset(2), 3));
  REQUIRE(mats.size() >= 2);
  CHECK(mats[0].mul(mats[1]).is_zero());
}

TEST_CASE("homology of the full triangle is contractible") {
  auto h = homology(standard_complex(StdKind::Delta, 2));
  REQUIRE(h.size() >= 2);
  CHECK(h[0].betti == 1);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].betti == 0);
  CHECK(h[1].torsion.empty());
}

TEST_CASE("homology of the circle and sphere models") {
  FinCat circle = categorify(sd(sd(standard_complex(StdKind::Boundary, 2))));
  auto hc = homology(nerve(circle, 2));
  CHECK(hc[0].betti == 1);
  CHECK(hc[1].betti == 1);

  FinCat sphere = categorify(sd(sd(standard_complex(StdKind::Boundary, 3))));
  auto hs = homology(nerve(sphere, 3));
  CHECK(hs[0].betti == 1);
  CHECK(hs[1].betti == 0);
  CHECK(hs[2].betti == 1);
  for (const auto& g : hs) CHECK(g.torsion.empty());
}

TEST_CASE("subdivision preserves homology for small posets") {
  std::vector<FinCat> posets{chain_poset(2), antichain(3),
                             poset_to_category({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}).take(),
                             poset_to_category({"a", "b", "c", "d"},
                                               {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}})
                                 .take()};
  for (const auto& p : posets) {
    TruncSSet n = nerve(p, 3);
    auto direct = homology(n);
    FinCat subdivided = categorify(sd(n));
    auto after = homology(nerve(subdivided, 3));
    CHECK(direct == after);
  }
}

TEST_CASE("fixed-point homology computed two ways agrees") {
  GroupPtr c2 = share(cyclic_group(2));
  for (const auto& [name, x] : gcat_catalog(c2)) {
    for (const auto& h : subgroups(*c2)) {
      auto via_cat = homology(nerve(fixed_category(x, h), 3));
      auto via_sset = homology(nerve_fixed_points(x, h, 3));
      CHECK_MESSAGE(via_cat == via_sset, name);
    }
  }
}

TEST_CASE("homology comparison flags the circle inclusion") {
  GeneratingCell cof = generating_cell(2);
  HomologyComparison cmp = compare_homology(cof.inclusion, 3);
  CHECK(!cmp.equal);
  CHECK(cmp.verdict.find("not a weak equivalence") != std::string::npos);
  REQUIRE(cmp.source.size() >= 2);
  CHECK(cmp.source[1].betti == 1);
  CHECK(cmp.target[1].betti == 0);

  GeneratingCell acyc = generating_cell(1, 0);
  HomologyComparison cmp2 = compare_homology(acyc.inclusion, 2);
  CHECK(cmp2.equal);
  CHECK(cmp2.verdict.find("never sufficient") != std::string::npos);

  FinFunctor idf = FinFunctor::identity(share(chain_poset(1)));
  CHECK(compare_homology(idf, 2).equal);
}
