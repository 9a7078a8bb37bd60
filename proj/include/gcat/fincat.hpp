#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gcat/error.hpp"

namespace gcat {

struct Morphism {
  std::string id;
  std::string src;
  std::string tgt;
};

// Unvalidated category description, mirroring the file schema plus explicit
// identities. `composites` holds triples {g, f, g∘f} for composable (g, f),
// i.e. g after f.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identities;  // object -> identity morphism id
  std::vector<std::array<std::string, 3>> composites;
};

// A finite category: objects, morphisms, identities and a total composition
// table over composable pairs. Immutable once validated; all ids are opaque
// strings and comparisons are by id.
class FinCat {
 public:
  static Result<FinCat> validate(const RawCategory& raw);

  static FinCat empty();
  static FinCat terminal(const std::string& obj = "*");

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  int object_index(std::string_view id) const;    // -1 if absent
  int morphism_index(std::string_view id) const;  // -1 if absent

  int identity_of(int obj) const { return identity_[obj]; }
  bool is_identity(int mor) const { return is_id_[mor]; }
  int src_of(int mor) const { return mor_src_[mor]; }
  int tgt_of(int mor) const { return mor_tgt_[mor]; }

  // g∘f (g after f); -1 when tgt(f) != src(g).
  int compose(int g, int f) const { return comp_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }

  const std::vector<int>& hom(int x, int y) const { return hom_[static_cast<std::size_t>(x) * objects_.size() + y]; }
  const std::vector<int>& out_of(int x) const { return out_[x]; }
  const std::vector<int>& into(int y) const { return in_[y]; }

  RawCategory to_raw() const;

  // Structural equality at id level (object set, morphism set, composition).
  bool operator==(const FinCat& other) const;
  bool operator!=(const FinCat& other) const { return !(*this == other); }

 public:
  FinCat() = default;  // the empty category; nontrivial values come from validate()

 private:
  friend class CatBuilder;

  void index();  // rebuild lookup structures from objects_/morphisms_/comp_

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;  // object -> morphism
  std::vector<char> is_id_;
  std::vector<int> mor_src_, mor_tgt_;
  std::vector<int> comp_;  // m*m, -1 where undefined
  std::unordered_map<std::string, int> obj_ix_, mor_ix_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::vector<int>> hom_;  // n*n hom sets, precomputed; values immutable after validation
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat&& c) { return std::make_shared<const FinCat>(std::move(c)); }
inline CatPtr share(const FinCat& c) { return std::make_shared<const FinCat>(c); }

// Incremental construction helper. Identity morphisms are synthesized as
// `id_<object>` together with their composition entries; callers add only
// non-identity morphisms and composites among them (a composite may still
// *name* an identity as its value).
class CatBuilder {
 public:
  CatBuilder& add_object(const std::string& id);
  CatBuilder& add_morphism(const std::string& id, const std::string& src, const std::string& tgt);
  CatBuilder& set_composite(const std::string& g, const std::string& f, const std::string& gf);
  static std::string identity_id(const std::string& obj) { return "id_" + obj; }

  RawCategory raw() const;
  Result<FinCat> build() const;
  FinCat build_or_throw() const;

 private:
  RawCategory raw_;
};

// A functor between validated finite categories.
class FinFunctor {
 public:
  FinFunctor() = default;
  FinFunctor(CatPtr src, CatPtr tgt, std::vector<int> ob_map, std::vector<int> mor_map)
      : src_(std::move(src)), tgt_(std::move(tgt)), ob_(std::move(ob_map)), mor_(std::move(mor_map)) {}

  static FinFunctor identity(CatPtr c);

  const CatPtr& source() const { return src_; }
  const CatPtr& target() const { return tgt_; }
  int apply_obj(int x) const { return ob_[x]; }
  int apply_mor(int f) const { return mor_[f]; }
  const std::string& obj_image(const std::string& id) const;
  const std::string& mor_image(const std::string& id) const;
  const std::vector<int>& object_map() const { return ob_; }
  const std::vector<int>& morphism_map() const { return mor_; }

  bool injective() const;
  bool bijective() const;

  // Functor laws against the stored endpoint categories.
  std::vector<Violation> check() const;

  // Same endpoints (structurally) and same maps.
  bool operator==(const FinFunctor& other) const;
  bool operator!=(const FinFunctor& other) const { return !(*this == other); }

 private:
  CatPtr src_, tgt_;
  std::vector<int> ob_, mor_;
};

Result<FinFunctor> validate_functor(CatPtr src, CatPtr tgt,
                                    const std::map<std::string, std::string>& obj_map,
                                    const std::map<std::string, std::string>& mor_map);

// g after f; requires f.target() == g.source() structurally.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// Posets as categories.
Result<FinCat> poset_to_category(const std::vector<std::string>& elements,
                                 const std::vector<std::pair<std::string, std::string>>& leq);
bool is_poset(const FinCat& c);

// Exhaustive isomorphism search with degree-signature pruning. Returns the
// isomorphism if one exists. Throws Error("SearchBudgetExceeded") past the
// node budget.
std::optional<FinFunctor> find_isomorphism(CatPtr c, CatPtr d, std::int64_t budget = 1'000'000);

FinFunctor invert(const FinFunctor& iso);

std::vector<FinFunctor> automorphisms(CatPtr c, std::int64_t budget = 1'000'000);

// All functors C -> D, optionally filtered as they are produced. Throws
// Error("SearchBudgetExceeded") past the node budget.
std::vector<FinFunctor> enumerate_functors(CatPtr c, CatPtr d, std::int64_t budget = 4'000'000);

struct PullbackResult {
  CatPtr cat;
  FinFunctor p1;  // cat -> C
  FinFunctor p2;  // cat -> D
};

// Pullback of F: C -> E and G: D -> E: pairs agreeing in E.
PullbackResult pullback(const FinFunctor& f, const FinFunctor& g);

// Full subcategory on an object subset (keeps ids); requires closure of the
// given morphism set under composition and identities.
struct Subcat {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
};

Result<FinCat> subcategory(const FinCat& whole, const Subcat& part);
Subcat full_subcat(const FinCat& whole, const std::vector<std::string>& objects);
FinFunctor inclusion_functor(CatPtr sub, CatPtr whole);

}  // namespace gcat
