#include "gcat/presentation.hpp"

#include "gcat/util.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gcat {

namespace {

std::string path_key(const std::vector<int>& path, int src_vertex) {
  if (path.empty()) return "@" + std::to_string(src_vertex);
  std::string k;
  for (int e : path) k += std::to_string(e) + ",";
  return k;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int Presented::class_of_path(const std::vector<int>& path, int src_vertex) const {
  auto it = path_class.find(path_key(path, src_vertex));
  if (it == path_class.end()) throw Error("Internal", "path not in the presented path set");
  return it->second;
}

int Presented::class_of_edge(int e) const { return class_of_path({e}, edges[e].src); }

int Presented::vertex_index(const std::string& id) const {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
    if (vertices[v] == id) return v;
  return -1;
}

int Presented::edge_index(const std::string& id) const {
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].id == id) return e;
  return -1;
}

Presented present_acyclic(const Presentation& p, std::int64_t budget) {
  const int nv = static_cast<int>(p.vertices.size());
  const int ne = static_cast<int>(p.edges.size());

  // topological order; rejects cycles
  {
    std::vector<int> indeg(nv, 0);
    for (const auto& e : p.edges) ++indeg[e.tgt];
    std::deque<int> q;
    for (int v = 0; v < nv; ++v)
      if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    std::vector<std::vector<int>> out(nv);
    for (int e = 0; e < ne; ++e) out[p.edges[e].src].push_back(e);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      ++seen;
      for (int e : out[v])
        if (--indeg[p.edges[e].tgt] == 0) q.push_back(p.edges[e].tgt);
    }
    if (seen != nv) throw Error("CyclicPresentation", "edge graph contains a directed cycle");
  }

  // enumerate every path (the set is finite by acyclicity)
  struct Path {
    std::vector<int> edges;
    int src, tgt;
  };
  std::vector<Path> paths;
  std::unordered_map<std::string, int> index;
  auto add_path = [&](Path pa) -> int {
    std::string k = path_key(pa.edges, pa.src);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(paths.size());
    index.emplace(std::move(k), id);
    paths.push_back(std::move(pa));
    if (static_cast<std::int64_t>(paths.size()) > budget)
      throw Error("ClosureBudgetExceeded", "path enumeration exceeded budget");
    return id;
  };

  for (int v = 0; v < nv; ++v) add_path({{}, v, v});
  // breadth-first extension: every prefix of a path is a path, so the
  // frontier loop below enumerates all of them
  {
    std::vector<std::vector<int>> out(nv);
    for (int e = 0; e < ne; ++e) out[p.edges[e].src].push_back(e);
    std::deque<int> frontier;
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) frontier.push_back(i);
    while (!frontier.empty()) {
      int pi = frontier.front();
      frontier.pop_front();
      Path base = paths[pi];
      for (int e : out[base.tgt]) {
        Path ext = base;
        ext.edges.push_back(e);
        ext.tgt = p.edges[e].tgt;
        std::size_t before = paths.size();
        int id = add_path(std::move(ext));
        if (paths.size() > before) frontier.push_back(id);
      }
    }
  }

  auto lookup = [&](const std::vector<int>& edges, int src) -> int {
    auto it = index.find(path_key(edges, src));
    if (it == index.end()) throw Error("Internal", "relation names a non-path");
    return it->second;
  };

  // congruence closure over the path set
  UnionFind uf(paths.size());
  std::deque<std::pair<int, int>> work;
  for (const auto& rel : p.relations) {
    int li = lookup(rel.lhs, rel.src);
    int ri = lookup(rel.rhs, rel.src);
    if (paths[li].src != paths[ri].src || paths[li].tgt != paths[ri].tgt)
      throw Error("Internal", "relation sides have different endpoints");
    work.push_back({li, ri});
  }
  std::vector<std::vector<int>> out(nv), in(nv);
  for (int e = 0; e < ne; ++e) {
    out[p.edges[e].src].push_back(e);
    in[p.edges[e].tgt].push_back(e);
  }
  std::int64_t processed = 0;
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    if (++processed > budget) throw Error("ClosureBudgetExceeded", "congruence closure exceeded budget");
    const Path& pa = paths[a];
    const Path& pb = paths[b];
    for (int e : out[pa.tgt]) {
      std::vector<int> ea = pa.edges, eb = pb.edges;
      ea.push_back(e);
      eb.push_back(e);
      work.push_back({lookup(ea, pa.src), lookup(eb, pb.src)});
    }
    for (int e : in[pa.src]) {
      std::vector<int> ea = {e}, eb = {e};
      ea.insert(ea.end(), pa.edges.begin(), pa.edges.end());
      eb.insert(eb.end(), pb.edges.begin(), pb.edges.end());
      work.push_back({lookup(ea, p.edges[e].src), lookup(eb, p.edges[e].src)});
    }
  }

  // canonical representative per class: shortest, then lexicographically
  // smallest edge-id sequence
  std::vector<int> rep(paths.size(), -1);
  auto better = [&](int cand, int cur) {
    if (cur < 0) return true;
    const auto &pc = paths[cand], &pr = paths[cur];
    if (pc.edges.size() != pr.edges.size()) return pc.edges.size() < pr.edges.size();
    std::vector<std::string> ic, ir;
    for (int e : pc.edges) ic.push_back(p.edges[e].id);
    for (int e : pr.edges) ir.push_back(p.edges[e].id);
    return ic < ir;
  };
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    int r = uf.find(i);
    if (better(i, rep[r])) rep[r] = i;
  }

  // assemble the category
  CatBuilder bld;
  for (const auto& v : p.vertices) bld.add_object(v);
  auto class_name = [&](int root) -> std::string {
    const Path& r = paths[rep[root]];
    if (r.edges.empty()) return CatBuilder::identity_id(p.vertices[r.src]);
    std::vector<std::string> ids;
    for (int e : r.edges) ids.push_back(p.edges[e].id);
    return join(ids, "*");
  };
  std::vector<int> roots;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    if (uf.find(i) == i) roots.push_back(i);
  for (int r : roots) {
    const Path& pr = paths[rep[r]];
    if (pr.edges.empty()) continue;  // identity, synthesized by the builder
    bld.add_morphism(class_name(r), p.vertices[pr.src], p.vertices[pr.tgt]);
  }
  for (int ra : roots) {
    const Path& a = paths[rep[ra]];
    if (a.edges.empty()) continue;
    for (int rb : roots) {
      const Path& b = paths[rep[rb]];
      if (b.edges.empty() || b.src != a.tgt) continue;
      std::vector<int> cat_path = a.edges;
      cat_path.insert(cat_path.end(), b.edges.begin(), b.edges.end());
      int rc = uf.find(lookup(cat_path, a.src));
      bld.set_composite(class_name(rb), class_name(ra), class_name(rc));
    }
  }

  Presented out_p;
  out_p.cat = share(bld.build_or_throw());
  out_p.vertices = p.vertices;
  out_p.edges = p.edges;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    int m = out_p.cat->morphism_index(class_name(uf.find(i)));
    out_p.path_class[path_key(paths[i].edges, paths[i].src)] = m;
  }
  out_p.identity_class.assign(nv, -1);
  for (int v = 0; v < nv; ++v)
    out_p.identity_class[v] = out_p.cat->identity_of(out_p.cat->object_index(p.vertices[v]));
  out_p.rep_path.assign(out_p.cat->morphism_count(), {});
  out_p.rep_src.assign(out_p.cat->morphism_count(), -1);
  for (int r : roots) {
    const Path& pr = paths[rep[r]];
    int m = out_p.cat->morphism_index(class_name(r));
    out_p.rep_path[m] = pr.edges;
    out_p.rep_src[m] = pr.src;
  }
  return out_p;
}

}  // namespace gcat
