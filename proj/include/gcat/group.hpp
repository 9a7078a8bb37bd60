#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcat/error.hpp"
#include "gcat/fincat.hpp"

namespace gcat {

// A finite group given by a total Cayley table.
class FinGroup {
 public:
  static Result<FinGroup> validate(const std::vector<std::string>& elements,
                                   const std::vector<std::vector<std::string>>& table);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  int element_index(const std::string& id) const;
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * elements_.size() + h]; }
  int inv(int g) const { return inverse_[g]; }
  int identity() const { return identity_; }

  bool operator==(const FinGroup& other) const;

 private:
  FinGroup() = default;
  std::vector<std::string> elements_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

inline GroupPtr share(FinGroup&& g) { return std::make_shared<const FinGroup>(std::move(g)); }

// A subgroup as a sorted list of element indices.
using Subgroup = std::vector<int>;

bool is_subgroup(const FinGroup& g, const Subgroup& h);
Subgroup subgroup_closure(const FinGroup& g, std::vector<int> gens);
Subgroup conjugate_subgroup(const FinGroup& g, const Subgroup& h, int by);

// Every subgroup, in canonical order (by size, then element indices).
std::vector<Subgroup> subgroups(const FinGroup& g);

std::string subgroup_name(const FinGroup& g, const Subgroup& h);  // "{e,a}"
Subgroup trivial_subgroup(const FinGroup& g);
Subgroup full_subgroup(const FinGroup& g);

// A finite left G-set with a total action table.
class GSet {
 public:
  static Result<GSet> validate(GroupPtr group, const std::vector<std::string>& points,
                               const std::vector<std::vector<std::string>>& action);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::string>& points() const { return points_; }
  int point_index(const std::string& id) const;
  int act(int g, int x) const { return action_[static_cast<std::size_t>(g) * points_.size() + x]; }

  GSet() = default;

 private:
  GroupPtr group_;
  std::vector<std::string> points_;
  std::vector<int> action_;
};

// Left cosets gK with action h·(gK) = (hg)K. Point ids are the canonical
// (minimum-index) coset representatives.
GSet coset_gset(GroupPtr g, const Subgroup& k);

// { x : h·x = x for all h in H }, as point indices.
std::vector<int> gset_fixed_points(const GSet& x, const Subgroup& h);

// The orbit category O_G. Objects are G/H for every subgroup H; a morphism
// G/H -> G/K is the coset gK with g⁻¹Hg ⊆ K, acting by xH ↦ xgK. For that
// convention compose(named f, named g) is named g·f, so Aut(G/e) is G with
// opposite multiplication.
struct OrbitMorphism {
  int src_sub;  // subgroup index of the source object G/H
  int tgt_sub;
  int rep;  // canonical coset representative in G
};

struct OrbitCategory {
  GroupPtr group;
  std::vector<Subgroup> subs;
  CatPtr cat;
  std::vector<OrbitMorphism> mor_data;  // parallel to cat->morphisms()

  int object_of(int sub_index) const;
  int subgroup_index_of_object(int obj_index) const;
  int subgroup_index(const Subgroup& h) const;
  // Morphism index of the coset containing `rep` as a map G/H -> G/K.
  int morphism_of(int src_sub, int tgt_sub, int rep) const;
};

OrbitCategory orbit_category(GroupPtr g);

}  // namespace gcat
