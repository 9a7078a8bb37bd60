#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcat/fincat.hpp"
#include "gcat/gaction.hpp"
#include "gcat/group.hpp"
#include "gcat/presentation.hpp"

namespace gcat {

// Sieve: every morphism of B with target in A lies in A. Cosieve dually.
// Both require `part` to be an honest subcategory; throws
// Error("NotASubcategory") otherwise.
bool is_sieve(const FinCat& b, const Subcat& part);
bool is_cosieve(const FinCat& b, const Subcat& part);

// A sieve inclusion A -> B with a cosieve W ⊇ A and a right-adjoint
// retraction r: W -> A with ri = id and identity unit; ε_w: r(w) -> w is the
// counit.
struct DwyerMap {
  CatPtr total;  // B
  Subcat sieve;
  CatPtr sub;  // A, same ids
  FinFunctor inclusion;
  Subcat cosieve;
  std::map<std::string, std::string> retraction_obj;  // W object -> A object
  std::map<std::string, std::string> retraction_mor;  // W morphism -> A morphism
  std::map<std::string, std::string> counit;          // W object w -> id of ε_w in B
};

std::vector<Violation> check_dwyer(const DwyerMap& d);

// Searches the minimal cosieve generated by ob(A); by cosieve minimality a
// failure there is a failure everywhere. Throws Error("NotASieve") when A is
// not a sieve.
std::optional<DwyerMap> dwyer_witness(CatPtr b, const Subcat& a);

struct PushoutResult {
  CatPtr cat;
  FinFunctor from_c;  // C -> D
  FinFunctor from_b;  // B -> D
  std::shared_ptr<const Presented> pres;  // set by the oracle route only
};

// Explicit pushout of a Dwyer map of posets along any functor F: A -> C,
// built from the four-case hom description with (ε_b, γ) normal forms.
// Object ids are "c:<id>" and "b:<id>"; mixed morphisms are "p:<b>|<γ>".
PushoutResult pushout_along_dwyer(const DwyerMap& i, const FinFunctor& f);

// Mediating functor out of the explicit pushout for a commuting cocone
// (uc: C -> E, ub: B -> E).
FinFunctor pushout_mediating(const PushoutResult& po, const DwyerMap& i, const FinFunctor& f,
                             const FinFunctor& uc, const FinFunctor& ub);

// Independent oracle: the pushout presented by generators and relations,
// exact for acyclic glued graphs. `i` must be injective; morphism and object
// ids of B outside the image are prefixed "b:", those of C "c:".
PushoutResult pushout_oracle(const FinFunctor& i, const FinFunctor& f, std::int64_t budget = 2'000'000);

struct IsoReport {
  bool iso = false;
  std::string detail;
};

// Canonical comparison explicit-vs-other via the mediating functor; checks
// functor laws, bijectivity and cocone compatibility.
IsoReport compare_pushouts(const PushoutResult& explicit_po, const DwyerMap& i, const FinFunctor& f,
                           const PushoutResult& other);

struct ColimitResult {
  CatPtr cat;
  std::vector<FinFunctor> cocone;  // X_i -> colim
};

// Finite sequential colimit of injective functors, ids relabeled to the
// earliest stage. Throws Error("NotMono") if some functor is not injective.
ColimitResult sequential_colimit(const std::vector<FinFunctor>& chain);

// ---------------------------------------------------------------------------
// Equivariant constructions

// G/K ⊗ (A -> B) with the product Dwyer witness.
struct TensorCell {
  GSet s;
  DwyerMap plain;
  GCategory ga, gb;
  GFunctor inclusion;
  DwyerMap tensored;
};

TensorCell tensor_cell(GroupPtr g, const Subgroup& k, const DwyerMap& cell);

struct GPushout {
  GCategory d;
  GFunctor from_c;
  GFunctor from_b;
  PushoutResult underlying;
};

// Pushout in G-categories: underlying explicit pushout plus the induced
// action permuting the b-copies and acting on C.
GPushout gcat_pushout_dwyer(const TensorCell& cell, const GFunctor& f);

// Oracle pushout of equivariant functors with the induced action on the
// presented category.
GPushout gcat_pushout_oracle(const GFunctor& i, const GFunctor& f, std::int64_t budget = 2'000'000);

struct FixedPushoutReport {
  bool objects_bijective = false;
  bool morphisms_bijective = false;
  bool functorial = false;
  std::string detail;
  bool pass() const { return objects_bijective && morphisms_bijective && functorial; }
};

// Builds D = pushout(G/K⊗A -> G/K⊗B, F), its H-fixed points, the pushout P
// of the H-fixed legs, and checks the canonical comparison P -> D^H is an
// isomorphism.
FixedPushoutReport verify_fixed_point_pushout(const TensorCell& cell, const GFunctor& f, const Subgroup& h);

struct GChain {
  std::vector<GCategory> objects;
  std::vector<GFunctor> maps;  // maps[i]: objects[i] -> objects[i+1]
};

struct GColimit {
  GCategory colim;
  std::vector<GFunctor> cocone;
};

GColimit gcat_sequential_colimit(const GChain& chain);

struct FilteredMonoReport {
  bool pass = false;
  std::string detail;
};

// colim(X_i^H) vs (colim X_i)^H, compared at id level.
FilteredMonoReport verify_filtered_mono(const GChain& chain, const Subgroup& h);

}  // namespace gcat
