#include "gcat/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gcat {

// ---------------------------------------------------------------------------
// FinGroup

int FinGroup::element_index(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == id) return i;
  return -1;
}

Result<FinGroup> FinGroup::validate(const std::vector<std::string>& elements,
                                    const std::vector<std::vector<std::string>>& table) {
  std::vector<Violation> errs;
  FinGroup g;
  g.elements_ = elements;
  const int n = g.size();
  {
    std::set<std::string> seen(elements.begin(), elements.end());
    if (static_cast<int>(seen.size()) != n)
      return Result<FinGroup>::failure("DuplicateId", "element ids are not unique");
  }
  if (static_cast<int>(table.size()) != n)
    return Result<FinGroup>::failure("BadTable", "table must have one row per element");
  g.table_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      return Result<FinGroup>::failure("BadTable", "row " + elements[i] + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = g.element_index(table[i][j]);
      if (v < 0) return Result<FinGroup>::failure("BadTable", "unknown product id " + table[i][j]);
      g.table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }

  for (int i = 0; i < n && errs.size() < 8; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
          errs.push_back({"NonAssociative", "(" + elements[i] + elements[j] + ")" + elements[k]});
          break;
        }
  if (!errs.empty()) return Result<FinGroup>::failure(std::move(errs));

  g.identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (g.mul(e, i) != i || g.mul(i, e) != i) ok = false;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0) return Result<FinGroup>::failure("NoIdentity", "no two-sided identity");

  g.inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) == g.identity_ && g.mul(j, i) == g.identity_) g.inverse_[i] = j;
    if (g.inverse_[i] < 0) errs.push_back({"NoInverse", "element " + elements[i] + " has no inverse"});
  }
  if (!errs.empty()) return Result<FinGroup>::failure(std::move(errs));

  return Result<FinGroup>::success(std::move(g));
}

bool FinGroup::operator==(const FinGroup& other) const {
  return elements_ == other.elements_ && table_ == other.table_;
}

// ---------------------------------------------------------------------------
// Subgroups

bool is_subgroup(const FinGroup& g, const Subgroup& h) {
  if (h.empty()) return false;
  std::set<int> s(h.begin(), h.end());
  if (!s.count(g.identity())) return false;
  for (int a : h)
    for (int b : h)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

Subgroup subgroup_closure(const FinGroup& g, std::vector<int> gens) {
  std::set<int> s{g.identity()};
  std::vector<int> work{g.identity()};
  for (int x : gens)
    if (s.insert(x).second) work.push_back(x);
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    std::vector<int> cur(s.begin(), s.end());
    for (int b : cur) {
      for (int p : {g.mul(a, b), g.mul(b, a)})
        if (s.insert(p).second) work.push_back(p);
    }
  }
  return Subgroup(s.begin(), s.end());
}

Subgroup conjugate_subgroup(const FinGroup& g, const Subgroup& h, int by) {
  Subgroup out;
  for (int x : h) out.push_back(g.mul(g.mul(by, x), g.inv(by)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups(const FinGroup& g) {
  std::set<Subgroup> seen;
  std::vector<Subgroup> work;
  Subgroup triv{g.identity()};
  seen.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    Subgroup h = work.back();
    work.pop_back();
    std::set<int> hs(h.begin(), h.end());
    for (int x = 0; x < g.size(); ++x) {
      if (hs.count(x)) continue;
      Subgroup gens = h;
      gens.push_back(x);
      Subgroup h2 = subgroup_closure(g, gens);
      if (seen.insert(h2).second) work.push_back(h2);
    }
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string subgroup_name(const FinGroup& g, const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += g.elements()[h[i]];
  }
  return s + "}";
}

Subgroup trivial_subgroup(const FinGroup& g) { return {g.identity()}; }

Subgroup full_subgroup(const FinGroup& g) {
  Subgroup h(g.size());
  for (int i = 0; i < g.size(); ++i) h[i] = i;
  return h;
}

// ---------------------------------------------------------------------------
// GSet

int GSet::point_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (points_[i] == id) return i;
  return -1;
}

Result<GSet> GSet::validate(GroupPtr group, const std::vector<std::string>& points,
                            const std::vector<std::vector<std::string>>& action) {
  std::vector<Violation> errs;
  GSet x;
  x.group_ = std::move(group);
  x.points_ = points;
  const int n = x.group_->size(), m = static_cast<int>(points.size());
  {
    std::set<std::string> seen(points.begin(), points.end());
    if (static_cast<int>(seen.size()) != m)
      return Result<GSet>::failure("DuplicateId", "point ids are not unique");
  }
  if (static_cast<int>(action.size()) != n)
    return Result<GSet>::failure("BadTable", "action must have one row per group element");
  x.action_.assign(static_cast<std::size_t>(n) * m, -1);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(action[g].size()) != m)
      return Result<GSet>::failure("BadTable", "action row has wrong length");
    for (int p = 0; p < m; ++p) {
      int v = x.point_index(action[g][p]);
      if (v < 0) return Result<GSet>::failure("BadTable", "unknown point " + action[g][p]);
      x.action_[static_cast<std::size_t>(g) * m + p] = v;
    }
  }
  for (int p = 0; p < m; ++p)
    if (x.act(x.group_->identity(), p) != p)
      errs.push_back({"BadAction", "identity moves point " + points[p]});
  for (int g = 0; g < n && errs.size() < 8; ++g)
    for (int h = 0; h < n; ++h)
      for (int p = 0; p < m; ++p)
        if (x.act(g, x.act(h, p)) != x.act(x.group_->mul(g, h), p)) {
          errs.push_back({"BadAction", "g·(h·x) != (gh)·x at " + points[p]});
          break;
        }
  if (!errs.empty()) return Result<GSet>::failure(std::move(errs));
  return Result<GSet>::success(std::move(x));
}

namespace {

int coset_rep(const FinGroup& g, const Subgroup& k, int x) {
  int best = -1;
  for (int h : k) {
    int y = g.mul(x, h);
    if (best < 0 || y < best) best = y;
  }
  return best;
}

}  // namespace

GSet coset_gset(GroupPtr gp, const Subgroup& k) {
  const FinGroup& g = *gp;
  if (!is_subgroup(g, k)) throw Error("NotASubgroup", "coset_gset: K is not a subgroup");
  std::vector<int> reps;
  std::set<int> seen;
  for (int x = 0; x < g.size(); ++x) {
    int r = coset_rep(g, k, x);
    if (seen.insert(r).second) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<std::string> points;
  for (int r : reps) points.push_back(g.elements()[r]);
  std::vector<std::vector<std::string>> action(g.size(), std::vector<std::string>(reps.size()));
  for (int a = 0; a < g.size(); ++a)
    for (std::size_t p = 0; p < reps.size(); ++p)
      action[a][p] = g.elements()[coset_rep(g, k, g.mul(a, reps[p]))];
  return GSet::validate(gp, points, action).take();
}

std::vector<int> gset_fixed_points(const GSet& x, const Subgroup& h) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(x.points().size()); ++p) {
    bool fixed = true;
    for (int g : h)
      if (x.act(g, p) != p) fixed = false;
    if (fixed) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit category

int OrbitCategory::object_of(int sub_index) const {
  return cat->object_index("G/" + subgroup_name(*group, subs[sub_index]));
}

int OrbitCategory::subgroup_index_of_object(int obj_index) const {
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    if (object_of(i) == obj_index) return i;
  return -1;
}

int OrbitCategory::subgroup_index(const Subgroup& h) const {
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    if (subs[i] == h) return i;
  return -1;
}

int OrbitCategory::morphism_of(int src_sub, int tgt_sub, int rep) const {
  int r = coset_rep(*group, subs[tgt_sub], rep);
  for (int m = 0; m < static_cast<int>(mor_data.size()); ++m)
    if (mor_data[m].src_sub == src_sub && mor_data[m].tgt_sub == tgt_sub && mor_data[m].rep == r) return m;
  return -1;
}

OrbitCategory orbit_category(GroupPtr gp) {
  const FinGroup& g = *gp;
  OrbitCategory og;
  og.group = gp;
  og.subs = subgroups(g);
  const int ns = static_cast<int>(og.subs.size());

  RawCategory raw;
  std::vector<std::string> obj_name(ns);
  for (int i = 0; i < ns; ++i) {
    obj_name[i] = "G/" + subgroup_name(g, og.subs[i]);
    raw.objects.push_back(obj_name[i]);
  }

  auto mor_id = [&](int i, int j, int rep) {
    return "(" + g.elements()[rep] + ")" + obj_name[i] + ">" + obj_name[j];
  };

  std::vector<OrbitMorphism> data;
  std::map<std::tuple<int, int, int>, int> lookup;
  for (int i = 0; i < ns; ++i) {
    const Subgroup& h = og.subs[i];
    for (int j = 0; j < ns; ++j) {
      const Subgroup& k = og.subs[j];
      std::set<int> kset(k.begin(), k.end());
      std::set<int> reps_seen;
      for (int x = 0; x < g.size(); ++x) {
        int r = coset_rep(g, k, x);
        if (!reps_seen.insert(r).second) continue;
        // gK is a map G/H -> G/K iff g⁻¹Hg ⊆ K
        bool ok = true;
        for (int hh : h)
          if (!kset.count(g.mul(g.mul(g.inv(r), hh), r))) ok = false;
        if (!ok) continue;
        lookup[{i, j, r}] = static_cast<int>(data.size());
        raw.morphisms.push_back({mor_id(i, j, r), obj_name[i], obj_name[j]});
        data.push_back({i, j, r});
      }
    }
  }

  for (int i = 0; i < ns; ++i) {
    // identity of G/H is the coset eH
    int r = coset_rep(g, og.subs[i], g.identity());
    raw.identities[obj_name[i]] = mor_id(i, i, r);
  }

  // compose(β: G/K -> G/L named f, α: G/H -> G/K named r) = (r·f)L
  for (std::size_t a = 0; a < data.size(); ++a)
    for (std::size_t b = 0; b < data.size(); ++b) {
      if (data[a].tgt_sub != data[b].src_sub) continue;
      int l = data[b].tgt_sub;
      int rep = coset_rep(g, og.subs[l], g.mul(data[a].rep, data[b].rep));
      auto it = lookup.find({data[a].src_sub, l, rep});
      if (it == lookup.end()) throw Error("Internal", "orbit category composition left the hom set");
      raw.composites.push_back({raw.morphisms[b].id, raw.morphisms[a].id, raw.morphisms[it->second].id});
    }

  og.cat = share(FinCat::validate(raw).take());
  og.mor_data = std::move(data);
  return og;
}

}  // namespace gcat
