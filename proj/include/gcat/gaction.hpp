#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcat/fincat.hpp"
#include "gcat/group.hpp"

namespace gcat {

// A strict action of a finite group on a finite category: one invertible
// endofunctor per group element with σ_e = id and σ_g∘σ_h = σ_{gh}.
struct GCategory {
  GroupPtr group;
  CatPtr base;
  std::vector<FinFunctor> sigma;  // indexed by group element

  const FinFunctor& action_of(int g) const { return sigma[g]; }
};

Result<GCategory> validate_gcategory(GroupPtr group, CatPtr base, std::vector<FinFunctor> sigma);
Result<GCategory> validate_gcategory(GroupPtr group, CatPtr base,
                                     const std::map<std::string, std::map<std::string, std::string>>& obj_maps,
                                     const std::map<std::string, std::map<std::string, std::string>>& mor_maps);

GCategory trivial_action(GroupPtr group, CatPtr base);

// The subcategory of objects and morphisms fixed by every element of H.
// Keeps the original ids.
FinCat fixed_category(const GCategory& x, const Subgroup& h);

// An equivariant functor between G-categories over the same group.
struct GFunctor {
  GCategory src, tgt;
  FinFunctor base;

  std::vector<Violation> check() const;
};

GFunctor make_gfunctor(GCategory src, GCategory tgt, FinFunctor base);

// Restriction of an equivariant functor to H-fixed subcategories.
FinFunctor fixed_functor(const GFunctor& f, const Subgroup& h);
FinFunctor fixed_functor(const GCategory& src, const GCategory& tgt, const FinFunctor& base, const Subgroup& h);

// A contravariant diagram on the orbit category with values in FinCat:
// one category per subgroup and one restriction functor per orbit morphism
// (for α: G/H -> G/K the functor value(K) -> value(H)).
struct OGDiagram {
  GroupPtr group;
  OrbitCategory og;
  std::vector<CatPtr> values;            // per subgroup index
  std::vector<FinFunctor> restrictions;  // per orbit-category morphism index

  const CatPtr& value_at(int sub_index) const { return values[sub_index]; }
};

std::vector<Violation> check_ogdiagram(const OGDiagram& y);

// Constant diagram with identity-like restrictions.
OGDiagram constant_diagram(GroupPtr group, CatPtr value);

// Φ: fixed points levelwise; restriction along gK: G/H -> G/K is x ↦ σ_g(x).
OGDiagram phi(const GCategory& x);

// Λ: evaluate at G/e, with σ_g the restriction along the automorphism of G/e
// named by the coset g{e}. With this artifact's composition convention no
// inversion is needed for σ_g σ_h = σ_{gh}; validate_gcategory enforces it.
GCategory lambda(const OGDiagram& y);

// Natural transformation between diagrams over the same orbit category.
struct OGNatTrans {
  std::vector<FinFunctor> components;  // per subgroup index
};

std::vector<Violation> check_nat_trans(const OGDiagram& y, const OGDiagram& z, const OGNatTrans& t);

// Hom-set enumerations for the adjunction check.
std::vector<FinFunctor> equivariant_functors(const GCategory& x, const GCategory& y,
                                             std::int64_t budget = 4'000'000);
std::vector<OGNatTrans> nat_transformations(const OGDiagram& y, const OGDiagram& z,
                                            std::int64_t budget = 4'000'000);

// Adjoint transposition Λ(Y) -> X  <->  Y -> Φ(X).
OGNatTrans transpose_to_nat(const OGDiagram& y, const GCategory& x, const FinFunctor& u);
FinFunctor transpose_to_equivariant(const OGDiagram& y, const GCategory& x, const OGNatTrans& nu);

// Unit Y -> ΦΛ(Y) and counit ΛΦ(X) -> X of the adjunction.
OGNatTrans adjunction_unit(const OGDiagram& y);
FinFunctor adjunction_counit(const GCategory& x);

struct AdjunctionReport {
  int hom_equivariant = 0;
  int hom_natural = 0;
  bool bijection = false;
  bool triangle_lambda = false;
  bool triangle_phi = false;
  std::string detail;

  bool pass() const { return bijection && triangle_lambda && triangle_phi; }
};

// Enumerates both hom-sets, checks the transposition is a mutually inverse
// bijection and that the triangle identities hold. Throws
// Error("TranspositionMismatch") only on internal convention bugs.
AdjunctionReport verify_adjunction(const OGDiagram& y, const GCategory& x, std::int64_t budget = 4'000'000);

// Coproduct of |points| copies of A, object ids "<point>|<obj>".
FinCat discrete_tensor(const std::vector<std::string>& points, const FinCat& a);

// G-set tensor: G permutes the copies and is the identity within each copy.
GCategory tensor(const GSet& s, CatPtr a);

struct TensorFixedReport {
  FinCat lhs;  // (G/K)^H ⊗ A
  FinCat rhs;  // (G/K ⊗ A)^H
  bool iso = false;
  std::string detail;
};

// Builds both sides of the comparison (G/K)^H ⊗ A -> (G/K ⊗ A)^H and checks
// the canonical functor is an isomorphism.
TensorFixedReport fixed_tensor_compare(GroupPtr g, const Subgroup& k, const Subgroup& h, const FinCat& a);

}  // namespace gcat
