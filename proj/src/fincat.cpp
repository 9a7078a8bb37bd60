#include "gcat/fincat.hpp"

#include <algorithm>
#include <set>

namespace gcat {

namespace {

std::string mor_str(const Morphism& m) { return m.id + ":" + m.src + "->" + m.tgt; }

}  // namespace

// ---------------------------------------------------------------------------
// FinCat

void FinCat::index() {
  obj_ix_.clear();
  mor_ix_.clear();
  for (int i = 0; i < object_count(); ++i) obj_ix_[objects_[i]] = i;
  for (int i = 0; i < morphism_count(); ++i) mor_ix_[morphisms_[i].id] = i;
  mor_src_.assign(morphisms_.size(), -1);
  mor_tgt_.assign(morphisms_.size(), -1);
  out_.assign(objects_.size(), {});
  in_.assign(objects_.size(), {});
  for (int i = 0; i < morphism_count(); ++i) {
    mor_src_[i] = object_index(morphisms_[i].src);
    mor_tgt_[i] = object_index(morphisms_[i].tgt);
    if (mor_src_[i] >= 0) out_[mor_src_[i]].push_back(i);
    if (mor_tgt_[i] >= 0) in_[mor_tgt_[i]].push_back(i);
  }
  hom_.assign(objects_.size() * objects_.size(), {});
  for (int f = 0; f < morphism_count(); ++f)
    if (mor_src_[f] >= 0 && mor_tgt_[f] >= 0)
      hom_[static_cast<std::size_t>(mor_src_[f]) * objects_.size() + mor_tgt_[f]].push_back(f);
}

int FinCat::object_index(std::string_view id) const {
  auto it = obj_ix_.find(std::string(id));
  return it == obj_ix_.end() ? -1 : it->second;
}

int FinCat::morphism_index(std::string_view id) const {
  auto it = mor_ix_.find(std::string(id));
  return it == mor_ix_.end() ? -1 : it->second;
}

FinCat FinCat::empty() {
  RawCategory raw;
  return FinCat::validate(raw).take();
}

FinCat FinCat::terminal(const std::string& obj) {
  CatBuilder b;
  b.add_object(obj);
  return b.build_or_throw();
}

Result<FinCat> FinCat::validate(const RawCategory& raw) {
  std::vector<Violation> errs;
  auto fail = [&](const std::string& code, const std::string& detail) {
    errs.push_back({code, detail});
  };

  FinCat c;
  c.objects_ = raw.objects;
  c.morphisms_ = raw.morphisms;

  {
    std::set<std::string> seen;
    for (const auto& o : c.objects_)
      if (!seen.insert(o).second) fail("DuplicateId", "object id repeated: " + o);
    seen.clear();
    for (const auto& m : c.morphisms_)
      if (!seen.insert(m.id).second) fail("DuplicateId", "morphism id repeated: " + m.id);
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  c.index();

  for (const auto& m : c.morphisms_) {
    if (c.object_index(m.src) < 0) fail("DanglingEndpoint", mor_str(m) + " has unknown source");
    if (c.object_index(m.tgt) < 0) fail("DanglingEndpoint", mor_str(m) + " has unknown target");
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  // Identities: one per object, endpoints on that object.
  const int n = c.object_count(), m = c.morphism_count();
  c.identity_.assign(n, -1);
  c.is_id_.assign(m, 0);
  for (int i = 0; i < n; ++i) {
    auto it = raw.identities.find(c.objects_[i]);
    if (it == raw.identities.end()) {
      fail("IdentityLawViolation", "no identity assigned to object " + c.objects_[i]);
      continue;
    }
    int mi = c.morphism_index(it->second);
    if (mi < 0) {
      fail("IdentityLawViolation", "identity of " + c.objects_[i] + " names unknown morphism " + it->second);
      continue;
    }
    if (c.mor_src_[mi] != i || c.mor_tgt_[mi] != i) {
      fail("IdentityLawViolation", "identity of " + c.objects_[i] + " is not an endomorphism of it");
      continue;
    }
    c.identity_[i] = mi;
    c.is_id_[mi] = 1;
  }
  for (const auto& [obj, mid] : raw.identities)
    if (c.object_index(obj) < 0) fail("DanglingEndpoint", "identity entry for unknown object " + obj + " -> " + mid);
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  // Composition table.
  c.comp_.assign(static_cast<std::size_t>(m) * m, -1);
  for (const auto& [gid, fid, gfid] : raw.composites) {
    int g = c.morphism_index(gid), f = c.morphism_index(fid), gf = c.morphism_index(gfid);
    if (g < 0 || f < 0 || gf < 0) {
      fail("DanglingEndpoint", "composite entry (" + gid + ", " + fid + ") -> " + gfid + " names unknown morphisms");
      continue;
    }
    if (c.mor_tgt_[f] != c.mor_src_[g]) {
      fail("SpuriousComposite", "entry for non-composable pair (" + gid + " after " + fid + ")");
      continue;
    }
    int& slot = c.comp_[static_cast<std::size_t>(g) * m + f];
    if (slot >= 0 && slot != gf) {
      fail("DuplicateId", "conflicting composite entries for (" + gid + ", " + fid + ")");
      continue;
    }
    slot = gf;
    if (c.mor_src_[gf] != c.mor_src_[f] || c.mor_tgt_[gf] != c.mor_tgt_[g])
      fail("CompositeEndpointMismatch", gid + " after " + fid + " = " + gfid + " has wrong endpoints");
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  for (int f = 0; f < m; ++f)
    for (int g : c.out_[c.mor_tgt_[f]])
      if (c.compose(g, f) < 0)
        fail("MissingComposite",
             "no entry for " + c.morphisms_[g].id + " after " + c.morphisms_[f].id);
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  // Identity laws.
  for (int f = 0; f < m && errs.size() < 64; ++f) {
    int il = c.identity_[c.mor_tgt_[f]], ir = c.identity_[c.mor_src_[f]];
    if (c.compose(il, f) != f)
      fail("IdentityLawViolation", "id after " + c.morphisms_[f].id + " != " + c.morphisms_[f].id);
    if (c.compose(f, ir) != f)
      fail("IdentityLawViolation", c.morphisms_[f].id + " after id != " + c.morphisms_[f].id);
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  // Associativity over composable triples.
  for (int f = 0; f < m && errs.size() < 16; ++f)
    for (int g : c.out_[c.mor_tgt_[f]]) {
      int gf = c.compose(g, f);
      for (int h : c.out_[c.mor_tgt_[g]]) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          fail("NonAssociative", "h∘(g∘f) != (h∘g)∘f for f=" + c.morphisms_[f].id + " g=" +
                                     c.morphisms_[g].id + " h=" + c.morphisms_[h].id);
          break;
        }
      }
    }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  return Result<FinCat>::success(std::move(c));
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  raw.morphisms = morphisms_;
  for (int i = 0; i < object_count(); ++i) raw.identities[objects_[i]] = morphisms_[identity_[i]].id;
  const int m = morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = compose(g, f);
      if (gf >= 0) raw.composites.push_back({morphisms_[g].id, morphisms_[f].id, morphisms_[gf].id});
    }
  return raw;
}

bool FinCat::operator==(const FinCat& other) const {
  if (object_count() != other.object_count() || morphism_count() != other.morphism_count()) return false;
  for (const auto& o : objects_)
    if (other.object_index(o) < 0) return false;
  for (const auto& m : morphisms_) {
    int j = other.morphism_index(m.id);
    if (j < 0) return false;
    const auto& om = other.morphisms_[j];
    if (om.src != m.src || om.tgt != m.tgt) return false;
  }
  for (int i = 0; i < object_count(); ++i) {
    int j = other.object_index(objects_[i]);
    if (other.morphisms_[other.identity_[j]].id != morphisms_[identity_[i]].id) return false;
  }
  const int m = morphism_count();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = compose(g, f);
      if (gf < 0) continue;
      int og = other.morphism_index(morphisms_[g].id), of = other.morphism_index(morphisms_[f].id);
      int ogf = other.compose(og, of);
      if (ogf < 0 || other.morphisms_[ogf].id != morphisms_[gf].id) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// CatBuilder

CatBuilder& CatBuilder::add_object(const std::string& id) {
  raw_.objects.push_back(id);
  return *this;
}

CatBuilder& CatBuilder::add_morphism(const std::string& id, const std::string& src, const std::string& tgt) {
  raw_.morphisms.push_back({id, src, tgt});
  return *this;
}

CatBuilder& CatBuilder::set_composite(const std::string& g, const std::string& f, const std::string& gf) {
  raw_.composites.push_back({g, f, gf});
  return *this;
}

RawCategory CatBuilder::raw() const {
  RawCategory raw = raw_;
  // Synthesize identities and the composition entries that involve them.
  for (const auto& o : raw_.objects) {
    std::string iid = identity_id(o);
    raw.morphisms.push_back({iid, o, o});
    raw.identities[o] = iid;
    raw.composites.push_back({iid, iid, iid});
  }
  for (const auto& m : raw_.morphisms) {
    raw.composites.push_back({identity_id(m.tgt), m.id, m.id});
    raw.composites.push_back({m.id, identity_id(m.src), m.id});
  }
  return raw;
}

Result<FinCat> CatBuilder::build() const { return FinCat::validate(raw()); }

FinCat CatBuilder::build_or_throw() const {
  auto r = build();
  if (!r.ok()) throw Error("ValidationFailed", "\n" + describe(r.violations()));
  return std::move(r).take();
}

// ---------------------------------------------------------------------------
// FinFunctor

FinFunctor FinFunctor::identity(CatPtr c) {
  std::vector<int> ob(c->object_count()), mo(c->morphism_count());
  for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < mo.size(); ++i) mo[i] = static_cast<int>(i);
  return FinFunctor(c, c, std::move(ob), std::move(mo));
}

const std::string& FinFunctor::obj_image(const std::string& id) const {
  return tgt_->objects()[ob_[src_->object_index(id)]];
}

const std::string& FinFunctor::mor_image(const std::string& id) const {
  return tgt_->morphisms()[mor_[src_->morphism_index(id)]].id;
}

bool FinFunctor::injective() const {
  std::set<int> so(ob_.begin(), ob_.end()), sm(mor_.begin(), mor_.end());
  return so.size() == ob_.size() && sm.size() == mor_.size();
}

bool FinFunctor::bijective() const {
  return injective() && static_cast<int>(ob_.size()) == tgt_->object_count() &&
         static_cast<int>(mor_.size()) == tgt_->morphism_count();
}

std::vector<Violation> FinFunctor::check() const {
  std::vector<Violation> errs;
  const FinCat &c = *src_, &d = *tgt_;
  if (static_cast<int>(ob_.size()) != c.object_count() || static_cast<int>(mor_.size()) != c.morphism_count()) {
    errs.push_back({"EndpointMismatch", "object/morphism map not total on the source"});
    return errs;
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    int ff = mor_[f];
    if (d.src_of(ff) != ob_[c.src_of(f)] || d.tgt_of(ff) != ob_[c.tgt_of(f)]) {
      errs.push_back({"EndpointMismatch", "image of " + c.morphisms()[f].id + " has wrong endpoints"});
    }
  }
  if (!errs.empty()) return errs;
  for (int x = 0; x < c.object_count(); ++x)
    if (mor_[c.identity_of(x)] != d.identity_of(ob_[x]))
      errs.push_back({"IdentityNotPreserved", "identity of " + c.objects()[x] + " not sent to an identity"});
  for (int f = 0; f < c.morphism_count() && errs.size() < 16; ++f)
    for (int g : c.out_of(c.tgt_of(f))) {
      int gf = c.compose(g, f);
      if (d.compose(mor_[g], mor_[f]) != mor_[gf]) {
        errs.push_back({"CompositionNotPreserved",
                        "F(g∘f) != F(g)∘F(f) for f=" + c.morphisms()[f].id + " g=" + c.morphisms()[g].id});
        break;
      }
    }
  return errs;
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  if (ob_ != other.ob_ || mor_ != other.mor_) return false;
  return *src_ == *other.src_ && *tgt_ == *other.tgt_;
}

Result<FinFunctor> validate_functor(CatPtr src, CatPtr tgt,
                                    const std::map<std::string, std::string>& obj_map,
                                    const std::map<std::string, std::string>& mor_map) {
  std::vector<Violation> errs;
  std::vector<int> ob(src->object_count(), -1), mo(src->morphism_count(), -1);
  for (int i = 0; i < src->object_count(); ++i) {
    auto it = obj_map.find(src->objects()[i]);
    if (it == obj_map.end()) {
      errs.push_back({"EndpointMismatch", "object map missing " + src->objects()[i]});
      continue;
    }
    ob[i] = tgt->object_index(it->second);
    if (ob[i] < 0) errs.push_back({"EndpointMismatch", "object image unknown: " + it->second});
  }
  for (int i = 0; i < src->morphism_count(); ++i) {
    const auto& id = src->morphisms()[i].id;
    auto it = mor_map.find(id);
    if (it == mor_map.end()) {
      errs.push_back({"EndpointMismatch", "morphism map missing " + id});
      continue;
    }
    mo[i] = tgt->morphism_index(it->second);
    if (mo[i] < 0) errs.push_back({"EndpointMismatch", "morphism image unknown: " + it->second});
  }
  if (!errs.empty()) return Result<FinFunctor>::failure(std::move(errs));
  FinFunctor f(std::move(src), std::move(tgt), std::move(ob), std::move(mo));
  errs = f.check();
  if (!errs.empty()) return Result<FinFunctor>::failure(std::move(errs));
  return Result<FinFunctor>::success(std::move(f));
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (*f.target() != *g.source()) throw Error("EndpointMismatch", "functors not composable");
  std::vector<int> ob(f.source()->object_count()), mo(f.source()->morphism_count());
  for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = g.apply_obj(f.apply_obj(static_cast<int>(i)));
  for (std::size_t i = 0; i < mo.size(); ++i) mo[i] = g.apply_mor(f.apply_mor(static_cast<int>(i)));
  return FinFunctor(f.source(), g.target(), std::move(ob), std::move(mo));
}

FinFunctor invert(const FinFunctor& iso) {
  if (!iso.bijective()) throw Error("NotInvertible", "functor is not bijective");
  std::vector<int> ob(iso.target()->object_count()), mo(iso.target()->morphism_count());
  for (int i = 0; i < iso.source()->object_count(); ++i) ob[iso.apply_obj(i)] = i;
  for (int i = 0; i < iso.source()->morphism_count(); ++i) mo[iso.apply_mor(i)] = i;
  return FinFunctor(iso.target(), iso.source(), std::move(ob), std::move(mo));
}

// ---------------------------------------------------------------------------
// Posets

Result<FinCat> poset_to_category(const std::vector<std::string>& elements,
                                 const std::vector<std::pair<std::string, std::string>>& leq) {
  std::vector<Violation> errs;
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!ix.emplace(elements[i], static_cast<int>(i)).second)
      errs.push_back({"DuplicateId", "element repeated: " + elements[i]});
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));
  const int n = static_cast<int>(elements.size());
  std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> char& { return le[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) at(i, i) = 1;
  for (const auto& [a, b] : leq) {
    auto ia = ix.find(a), ib = ix.find(b);
    if (ia == ix.end() || ib == ix.end()) {
      errs.push_back({"DanglingEndpoint", "relation names unknown element: " + a + " <= " + b});
      continue;
    }
    at(ia->second, ib->second) = 1;
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  // Require the given relation to already be a partial order.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!at(a, b)) continue;
      if (a != b && at(b, a))
        errs.push_back({"NotAPartialOrder", "antisymmetry fails: " + elements[a] + " and " + elements[b]});
      for (int c = 0; c < n; ++c)
        if (at(b, c) && !at(a, c))
          errs.push_back({"NotAPartialOrder", "transitivity fails: " + elements[a] + " <= " + elements[b] +
                                                  " <= " + elements[c]});
    }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));

  CatBuilder bld;
  for (const auto& e : elements) bld.add_object(e);
  auto mid = [&](int a, int b) { return elements[a] + "->" + elements[b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && at(a, b)) bld.add_morphism(mid(a, b), elements[a], elements[b]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!at(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!at(b, c)) continue;
        // compose (b->c) after (a->b) = a->c, with identity cases handled by the builder
        if (a != b && b != c && a != c) bld.set_composite(mid(b, c), mid(a, b), mid(a, c));
      }
    }
  return bld.build();
}

bool is_poset(const FinCat& c) {
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      const auto& h = c.hom(x, y);
      if (h.size() > 1) return false;
      if (x != y && !h.empty() && !c.hom(y, x).empty()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// Per-object invariant used to prune the object bijection search.
std::vector<std::string> object_signatures(const FinCat& c) {
  std::vector<std::string> sig(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) {
    std::vector<int> outs, ins;
    for (int y = 0; y < c.object_count(); ++y) {
      outs.push_back(static_cast<int>(c.hom(x, y).size()));
      ins.push_back(static_cast<int>(c.hom(y, x).size()));
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    std::string s = std::to_string(c.hom(x, x).size()) + ";";
    for (int v : outs) s += std::to_string(v) + ",";
    s += ";";
    for (int v : ins) s += std::to_string(v) + ",";
    sig[x] = s;
  }
  return sig;
}

struct IsoSearch {
  const FinCat& c;
  const FinCat& d;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<int> ob, mor;        // partial maps, -1 unassigned
  std::vector<char> used_obj, used_mor;
  std::vector<std::vector<int>> candidates;  // per object of c
  bool collect_all = false;
  std::vector<FinFunctor> found;
  CatPtr cp, dp;

  IsoSearch(CatPtr cc, CatPtr dd, std::int64_t b) : c(*cc), d(*dd), budget(b), cp(cc), dp(dd) {}

  void tick() {
    if (++nodes > budget) throw Error("SearchBudgetExceeded", "isomorphism search exceeded node budget");
  }

  bool mor_consistent(int f, int ff) {
    if (ob[c.src_of(f)] != d.src_of(ff) || ob[c.tgt_of(f)] != d.tgt_of(ff)) return false;
    if (c.is_identity(f) != d.is_identity(ff)) return false;
    // composition against already-assigned morphisms
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (mor[g] < 0) continue;
      int gf = c.compose(g, f);
      if (gf >= 0 && mor[gf] >= 0 && d.compose(mor[g], ff) != mor[gf]) return false;
      int fg = c.compose(f, g);
      if (fg >= 0 && mor[fg] >= 0 && d.compose(ff, mor[g]) != mor[fg]) return false;
    }
    int ff2 = c.compose(f, f);
    if (ff2 >= 0 && mor[ff2] >= 0 && d.compose(ff, ff) != mor[ff2]) return false;
    return true;
  }

  bool assign_morphisms(int f) {
    if (f == c.morphism_count()) return emit();
    if (c.is_identity(f)) {
      int ff = d.identity_of(ob[c.src_of(f)]);
      if (used_mor[ff]) return false;
      mor[f] = ff;
      used_mor[ff] = 1;
      bool r = assign_morphisms(f + 1);
      used_mor[ff] = 0;
      mor[f] = -1;
      if (r && !collect_all) return true;
      return false;
    }
    for (int ff : d.hom(ob[c.src_of(f)], ob[c.tgt_of(f)])) {
      if (used_mor[ff]) continue;
      tick();
      if (!mor_consistent(f, ff)) continue;
      mor[f] = ff;
      used_mor[ff] = 1;
      bool r = assign_morphisms(f + 1);
      used_mor[ff] = 0;
      mor[f] = -1;
      if (r && !collect_all) return true;
    }
    return false;
  }

  bool emit() {
    FinFunctor cand(cp, dp, ob, mor);
    if (!cand.check().empty()) return false;
    found.push_back(std::move(cand));
    return true;
  }

  bool assign_objects(int x) {
    if (x == c.object_count()) {
      mor.assign(c.morphism_count(), -1);
      used_mor.assign(d.morphism_count(), 0);
      return assign_morphisms(0);
    }
    for (int y : candidates[x]) {
      if (used_obj[y]) continue;
      tick();
      // hom-size profile against already-placed objects
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        if (c.hom(x, z).size() != d.hom(y, ob[z]).size()) ok = false;
        if (c.hom(z, x).size() != d.hom(ob[z], y).size()) ok = false;
      }
      if (c.hom(x, x).size() != d.hom(y, y).size()) ok = false;
      if (!ok) continue;
      ob[x] = y;
      used_obj[y] = 1;
      bool r = assign_objects(x + 1);
      used_obj[y] = 0;
      ob[x] = -1;
      if (r && !collect_all) return true;
    }
    return false;
  }

  bool run() {
    if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) return false;
    auto sc = object_signatures(c), sd = object_signatures(d);
    {
      auto a = sc, b = sd;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    candidates.assign(c.object_count(), {});
    for (int x = 0; x < c.object_count(); ++x)
      for (int y = 0; y < d.object_count(); ++y)
        if (sc[x] == sd[y]) candidates[x].push_back(y);
    ob.assign(c.object_count(), -1);
    used_obj.assign(d.object_count(), 0);
    assign_objects(0);
    return !found.empty();
  }
};

}  // namespace

std::optional<FinFunctor> find_isomorphism(CatPtr c, CatPtr d, std::int64_t budget) {
  IsoSearch s(c, d, budget);
  if (!s.run()) return std::nullopt;
  return s.found.front();
}

std::vector<FinFunctor> automorphisms(CatPtr c, std::int64_t budget) {
  IsoSearch s(c, c, budget);
  s.collect_all = true;
  s.run();
  return s.found;
}

// ---------------------------------------------------------------------------
// Functor enumeration

namespace {

struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<int> ob, mor;
  CatPtr cp, dp;
  std::vector<FinFunctor> found;

  FunctorSearch(CatPtr cc, CatPtr dd, std::int64_t b) : c(*cc), d(*dd), budget(b), cp(cc), dp(dd) {}

  void tick() {
    if (++nodes > budget) throw Error("SearchBudgetExceeded", "functor enumeration exceeded node budget");
  }

  bool mor_consistent(int f, int ff) {
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (mor[g] < 0) continue;
      int gf = c.compose(g, f);
      if (gf >= 0 && mor[gf] >= 0 && d.compose(mor[g], ff) != mor[gf]) return false;
      int fg = c.compose(f, g);
      if (fg >= 0 && mor[fg] >= 0 && d.compose(ff, mor[g]) != mor[fg]) return false;
    }
    int ff2 = c.compose(f, f);
    if (ff2 >= 0 && mor[ff2] >= 0 && d.compose(ff, ff) != mor[ff2]) return false;
    return true;
  }

  void assign_morphisms(int f) {
    if (f == c.morphism_count()) {
      FinFunctor cand(cp, dp, ob, mor);
      if (cand.check().empty()) found.push_back(std::move(cand));
      return;
    }
    if (c.is_identity(f)) {
      mor[f] = d.identity_of(ob[c.src_of(f)]);
      assign_morphisms(f + 1);
      mor[f] = -1;
      return;
    }
    for (int ff : d.hom(ob[c.src_of(f)], ob[c.tgt_of(f)])) {
      tick();
      if (!mor_consistent(f, ff)) continue;
      mor[f] = ff;
      assign_morphisms(f + 1);
      mor[f] = -1;
    }
  }

  void assign_objects(int x) {
    if (x == c.object_count()) {
      mor.assign(c.morphism_count(), -1);
      assign_morphisms(0);
      return;
    }
    for (int y = 0; y < d.object_count(); ++y) {
      tick();
      // prune object maps that leave some morphism without a possible image
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        if (!c.hom(x, z).empty() && d.hom(y, ob[z]).empty()) ok = false;
        if (!c.hom(z, x).empty() && d.hom(ob[z], y).empty()) ok = false;
      }
      if (!c.hom(x, x).empty() && d.hom(y, y).empty()) ok = false;
      if (!ok) continue;
      ob[x] = y;
      assign_objects(x + 1);
      ob[x] = -1;
    }
  }

  void run() {
    ob.assign(c.object_count(), -1);
    assign_objects(0);
  }
};

}  // namespace

std::vector<FinFunctor> enumerate_functors(CatPtr c, CatPtr d, std::int64_t budget) {
  if (c->object_count() > 0 && d->object_count() == 0) return {};
  FunctorSearch s(c, d, budget);
  s.run();
  return s.found;
}

// ---------------------------------------------------------------------------
// Pullback

PullbackResult pullback(const FinFunctor& f, const FinFunctor& g) {
  if (*f.target() != *g.target()) throw Error("EndpointMismatch", "pullback legs have different targets");
  const FinCat &c = *f.source(), &d = *g.source();
  CatBuilder bld;
  auto oid = [&](int x, int y) { return "(" + c.objects()[x] + "," + d.objects()[y] + ")"; };
  auto mid = [&](int p, int q) { return "(" + c.morphisms()[p].id + "," + d.morphisms()[q].id + ")"; };
  std::vector<std::pair<int, int>> objs, mors;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < d.object_count(); ++y)
      if (f.apply_obj(x) == g.apply_obj(y)) {
        bld.add_object(oid(x, y));
        objs.push_back({x, y});
      }
  for (int p = 0; p < c.morphism_count(); ++p)
    for (int q = 0; q < d.morphism_count(); ++q)
      if (f.apply_mor(p) == g.apply_mor(q) && !(c.is_identity(p) && d.is_identity(q))) {
        bld.add_morphism(mid(p, q), oid(c.src_of(p), d.src_of(q)), oid(c.tgt_of(p), d.tgt_of(q)));
        mors.push_back({p, q});
      }
  auto name = [&](int p, int q) {
    return (c.is_identity(p) && d.is_identity(q)) ? CatBuilder::identity_id(oid(c.src_of(p), d.src_of(q)))
                                                  : mid(p, q);
  };
  for (auto [p, q] : mors)
    for (auto [p2, q2] : mors) {
      if (c.tgt_of(p) != c.src_of(p2) || d.tgt_of(q) != d.src_of(q2)) continue;
      int pc = c.compose(p2, p), qc = d.compose(q2, q);
      bld.set_composite(mid(p2, q2), mid(p, q), name(pc, qc));
    }
  auto cat = share(bld.build_or_throw());

  std::map<std::string, std::string> ob1, ob2, mo1, mo2;
  for (auto [x, y] : objs) {
    ob1[oid(x, y)] = c.objects()[x];
    ob2[oid(x, y)] = d.objects()[y];
  }
  for (int i = 0; i < cat->morphism_count(); ++i) {
    const auto& m = cat->morphisms()[i];
    if (cat->is_identity(i)) {
      int oi = cat->src_of(i);
      const auto& oid_s = cat->objects()[oi];
      mo1[m.id] = c.morphisms()[c.identity_of(c.object_index(ob1[oid_s]))].id;
      mo2[m.id] = d.morphisms()[d.identity_of(d.object_index(ob2[oid_s]))].id;
    }
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    auto [p, q] = mors[i];
    mo1[mid(p, q)] = c.morphisms()[p].id;
    mo2[mid(p, q)] = d.morphisms()[q].id;
  }
  auto p1 = Result<FinFunctor>(validate_functor(cat, f.source(), ob1, mo1)).take();
  auto p2 = Result<FinFunctor>(validate_functor(cat, g.source(), ob2, mo2)).take();
  return {cat, std::move(p1), std::move(p2)};
}

// ---------------------------------------------------------------------------
// Subcategories

Result<FinCat> subcategory(const FinCat& whole, const Subcat& part) {
  std::vector<Violation> errs;
  std::set<std::string> objs(part.objects.begin(), part.objects.end());
  std::set<std::string> mors(part.morphisms.begin(), part.morphisms.end());
  RawCategory raw;
  for (const auto& o : part.objects) {
    if (whole.object_index(o) < 0) {
      errs.push_back({"NotASubcategory", "unknown object " + o});
      continue;
    }
    raw.objects.push_back(o);
    raw.identities[o] = whole.morphisms()[whole.identity_of(whole.object_index(o))].id;
    if (!mors.count(raw.identities[o])) mors.insert(raw.identities[o]);
  }
  for (const auto& mid : mors) {
    int i = whole.morphism_index(mid);
    if (i < 0) {
      errs.push_back({"NotASubcategory", "unknown morphism " + mid});
      continue;
    }
    const auto& m = whole.morphisms()[i];
    if (!objs.count(m.src) || !objs.count(m.tgt))
      errs.push_back({"NotASubcategory", "morphism " + mid + " has endpoint outside the object set"});
    raw.morphisms.push_back(m);
  }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));
  for (const auto& f : raw.morphisms)
    for (const auto& g : raw.morphisms) {
      if (f.tgt != g.src) continue;
      int gf = whole.compose(whole.morphism_index(g.id), whole.morphism_index(f.id));
      const auto& gfid = whole.morphisms()[gf].id;
      if (!mors.count(gfid)) {
        errs.push_back({"NotASubcategory", "not closed under composition: " + g.id + " after " + f.id});
        continue;
      }
      raw.composites.push_back({g.id, f.id, gfid});
    }
  if (!errs.empty()) return Result<FinCat>::failure(std::move(errs));
  return FinCat::validate(raw);
}

Subcat full_subcat(const FinCat& whole, const std::vector<std::string>& objects) {
  Subcat s;
  s.objects = objects;
  std::set<std::string> objs(objects.begin(), objects.end());
  for (const auto& m : whole.morphisms())
    if (objs.count(m.src) && objs.count(m.tgt)) s.morphisms.push_back(m.id);
  return s;
}

FinFunctor inclusion_functor(CatPtr sub, CatPtr whole) {
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : sub->objects()) ob[o] = o;
  for (const auto& m : sub->morphisms()) mo[m.id] = m.id;
  return Result<FinFunctor>(validate_functor(sub, whole, ob, mo)).take();
}

}  // namespace gcat
