#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcat/error.hpp"
#include "gcat/fincat.hpp"
#include "gcat/gaction.hpp"

namespace gcat {

// A possibly-degenerate simplex: a nondegenerate base together with the
// monotone surjection applied to it (Eilenberg-Zilber normal form). The
// surjection is stored by its values; it is the identity iff dim() equals
// base_dim.
struct SimplexRef {
  int base_dim = 0;
  int base_index = 0;
  std::vector<int> eta;  // size dim()+1, monotone, onto [base_dim]

  int dim() const { return static_cast<int>(eta.size()) - 1; }
  bool degenerate() const { return dim() != base_dim; }
  bool operator==(const SimplexRef& o) const {
    return base_dim == o.base_dim && base_index == o.base_index && eta == o.eta;
  }
  bool operator!=(const SimplexRef& o) const { return !(*this == o); }
};

SimplexRef nondeg_ref(int dim, int index);

// Degeneracy words encode the surjection by its collapse positions:
// j appears iff eta(j) == eta(j+1).
std::vector<int> eta_to_word(const std::vector<int>& eta);
std::vector<int> word_to_eta(int dim, const std::vector<int>& word);  // dim of the degenerate simplex

struct RawSSet {
  struct FaceData {
    std::string ref;              // nondegenerate simplex id one or more dims down
    std::vector<int> degeneracy;  // collapse positions, ascending
  };
  struct SimplexData {
    std::string id;
    std::vector<FaceData> faces;  // d_0 .. d_n
  };
  int dim = 0;
  std::vector<std::vector<SimplexData>> simplices;  // per dimension 0..dim
};

// A simplicial set truncated at a dimension bound, stored by nondegenerate
// simplices with face data. Face and degeneracy operators work on arbitrary
// SimplexRefs, so degenerate simplices never need storing.
class TruncSSet {
 public:
  static Result<TruncSSet> validate(const RawSSet& raw);

  int dim_bound() const { return dim_; }
  int count(int n) const {
    return (n < 0 || n > dim_) ? 0 : static_cast<int>(ids_[n].size());
  }
  const std::string& id_of(int n, int i) const { return ids_[n][i]; }
  int index_of(int n, const std::string& id) const;
  const std::vector<SimplexRef>& faces_of(int n, int i) const { return faces_[n][i]; }

  SimplexRef face(const SimplexRef& s, int i) const;
  SimplexRef degeneracy(const SimplexRef& s, int j) const;
  // j-th vertex, as a base index at dimension 0.
  int vertex_of(const SimplexRef& s, int j) const;

  // All dimension-k simplices, degenerate ones included.
  std::vector<SimplexRef> all_simplices(int k) const;

  RawSSet to_raw() const;
  bool operator==(const TruncSSet& o) const;
  bool operator!=(const TruncSSet& o) const { return !(*this == o); }

 private:
  TruncSSet() = default;
  int dim_ = 0;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::map<std::string, int>> ix_;
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;
  std::vector<std::vector<std::vector<int>>> verts_;  // vertices of nondeg simplices
};

// Nerve truncated at dimension d: n-simplices are composable chains of
// non-identity morphisms; the i-th inner face composes, which may hit an
// identity and hence a degenerate simplex.
TruncSSet nerve(const FinCat& c, int d);

enum class StdKind { Delta, Boundary, Horn };

// Δ[m], ∂Δ[m] or Λ^k[m], truncated at m. Throws Error("BadIndices") on bad
// (m, k).
TruncSSet standard_complex(StdKind kind, int m, int k = -1);

// Barycentric subdivision in the flag model: nondegenerate n-simplices are
// chains x_0 < ... < x_n of nondegenerate simplices under the iterated-face
// relation. Requires a regular input (all faces of nondegenerate simplices
// nondegenerate, vertices distinct); throws Error("NotRegular") otherwise.
TruncSSet sd(const TruncSSet& x);

// Left adjoint of the nerve: the category presented by vertices and edges
// modulo the relations d1σ = d0σ ∘ d2σ. Requires an acyclic 1-skeleton;
// throws Error("CyclicOneSkeleton") otherwise.
FinCat categorify(const TruncSSet& x, std::int64_t budget = 100'000);

// Inclusion c(Sd²(source)) -> c(Sd²(Δ[m])) for the boundary inclusion (no k)
// or the horn inclusion (with k). Both endpoints must be posets.
struct GeneratingCell {
  CatPtr source;
  CatPtr target;
  FinFunctor inclusion;
};

GeneratingCell generating_cell(int m, std::optional<int> horn = std::nullopt,
                               std::int64_t budget = 2'000'000);

// Same construction against the boundary as the target, for the horn cells.
GeneratingCell horn_into_boundary_cell(int m, int k, std::int64_t budget = 2'000'000);

// A simplicial map, stored by the images of nondegenerate simplices.
struct SSetMap {
  std::vector<std::vector<SimplexRef>> image;  // per dim, per nondeg simplex

  SimplexRef apply(const SimplexRef& s) const;
  std::string key() const;
  bool operator==(const SSetMap& o) const { return image == o.image; }
};

// All simplicial maps a -> x on simplices of dimension <= max_dim (defaults
// to a's bound). Throws Error("EnumerationBudgetExceeded") past the budget.
std::vector<SSetMap> enumerate_sset_maps(const TruncSSet& a, const TruncSSet& x,
                                         std::int64_t budget = 5'000'000);

// Ex(X) truncated at n_max: n-simplices are simplicial maps Sd Δ[n] -> X.
TruncSSet ex(const TruncSSet& x, int n_max, std::int64_t budget = 5'000'000);

// Ex²N(C) truncated at n_max.
TruncSSet ex2_nerve(const FinCat& c, int n_max, std::int64_t budget = 5'000'000);

// H-fixed simplicial subset of the nerve of a G-category, computed from the
// induced action on chains (independent of nerve∘fixed_category).
TruncSSet nerve_fixed_points(const GCategory& x, const Subgroup& h, int d);

}  // namespace gcat
