#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcat/fincat.hpp"

namespace gcat {

// A finite presentation of a category: a directed graph plus path relations.
// Exact only for acyclic graphs, where the path set is finite and congruence
// closure terminates.
struct Presentation {
  struct Edge {
    std::string id;
    int src;
    int tgt;
  };
  struct Relation {
    std::vector<int> lhs;  // edge index sequences in diagram order: [e1, e2] means e2 after e1
    std::vector<int> rhs;  // an empty side is the identity at `src`
    int src;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Relation> relations;
};

// The category presented: objects are vertices, morphisms are congruence
// classes of paths. Identities are the empty-path classes.
struct Presented {
  CatPtr cat;
  // morphism index in `cat` for a path (must be a path of the graph)
  int class_of_path(const std::vector<int>& path, int src_vertex) const;
  int class_of_edge(int e) const;

  std::vector<std::string> vertices;
  std::vector<Presentation::Edge> edges;  // copy of the input edges
  std::unordered_map<std::string, int> path_class;  // path key -> morphism index
  std::vector<int> identity_class;                  // vertex -> morphism index
  std::vector<std::vector<int>> rep_path;           // morphism index -> canonical representative
  std::vector<int> rep_src;                         // morphism index -> source vertex

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
};

// Throws Error("CyclicPresentation") if the edge graph has a cycle and
// Error("ClosureBudgetExceeded") if the path set or worklist exceeds budget.
Presented present_acyclic(const Presentation& p, std::int64_t budget = 2'000'000);

}  // namespace gcat
