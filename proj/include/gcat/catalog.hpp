#pragma once

#include <string>
#include <vector>

#include "gcat/colimits.hpp"
#include "gcat/fincat.hpp"
#include "gcat/gaction.hpp"
#include "gcat/group.hpp"
#include "gcat/util.hpp"

namespace gcat {

// Fixture groups.
FinGroup trivial_group();
FinGroup cyclic_group(int n);
FinGroup klein_four();
FinGroup symmetric3();
FinGroup dihedral8();    // symmetries of the square
FinGroup quaternion8();

// Named fixture set of groups with |G| <= 8.
std::vector<std::pair<std::string, GroupPtr>> fixture_groups();

// Small categories.
FinCat chain_poset(int n);  // the poset [n]
FinCat antichain(int n);
FinCat parallel_pair();
FinCat iso_pair();

// Named bases for action and diagram catalogs (3 objects or fewer).
std::vector<std::pair<std::string, CatPtr>> small_bases();

// Every strict action of G on the given base.
std::vector<GCategory> all_actions(GroupPtr g, CatPtr base);

// Catalog of G-categories on the small bases.
std::vector<std::pair<std::string, GCategory>> gcat_catalog(GroupPtr g);

// Catalog of orbit diagrams: Φ of the catalog actions plus constants.
std::vector<std::pair<std::string, OGDiagram>> ogdiagram_catalog(GroupPtr g);

// Seeded random constructions. The name prefix keeps ids fresh when several
// random pieces end up in one colimit.
FinCat random_poset(Rng& rng, int max_objects = 8, double edge_p = 0.3,
                    const std::string& name_prefix = "p");
Subcat random_sieve(Rng& rng, const FinCat& poset);
DwyerMap random_dwyer_map(Rng& rng, int max_objects = 8, const std::string& name_prefix = "p");
FinFunctor random_monotone_functor(Rng& rng, CatPtr a, CatPtr c);

// Disjoint union of G-categories over one group, ids prefixed "<prefix><i>:".
GCategory gdisjoint_union(const std::vector<GCategory>& parts, const std::string& prefix = "u");

// A G-poset assembled from a trivial part and tensored copies.
GCategory random_gposet(Rng& rng, GroupPtr g, int max_piece = 4, const std::string& tag = "");

// Equivariant functor G/K⊗A -> C determined by a random monotone functor
// A -> C^K; retries with fresh C from `fresh` when C^K is empty.
GFunctor random_equivariant_functor(Rng& rng, const TensorCell& cell, const GCategory& c);

// Random equivariant functor out of an arbitrary G-poset: identity, collapse
// to a point, or inclusion into a disjoint union, selected by the rng.
GFunctor random_outgoing_equivariant(Rng& rng, const GCategory& x);

}  // namespace gcat
