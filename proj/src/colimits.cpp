#include "gcat/colimits.hpp"

#include <algorithm>
#include <set>

namespace gcat {

// ---------------------------------------------------------------------------
// Sieves and cosieves

namespace {

void require_subcategory(const FinCat& b, const Subcat& part) {
  auto r = subcategory(b, part);
  if (!r.ok()) throw Error("NotASubcategory", "\n" + describe(r.violations()));
}

}  // namespace

bool is_sieve(const FinCat& b, const Subcat& part) {
  require_subcategory(b, part);
  std::set<std::string> objs(part.objects.begin(), part.objects.end());
  std::set<std::string> mors(part.morphisms.begin(), part.morphisms.end());
  for (const auto& m : b.morphisms()) {
    if (!objs.count(m.tgt)) continue;
    if (b.is_identity(b.morphism_index(m.id))) continue;  // implicitly in the subcategory
    if (!mors.count(m.id) || !objs.count(m.src)) return false;
  }
  return true;
}

bool is_cosieve(const FinCat& b, const Subcat& part) {
  require_subcategory(b, part);
  std::set<std::string> objs(part.objects.begin(), part.objects.end());
  std::set<std::string> mors(part.morphisms.begin(), part.morphisms.end());
  for (const auto& m : b.morphisms()) {
    if (!objs.count(m.src)) continue;
    if (b.is_identity(b.morphism_index(m.id))) continue;
    if (!mors.count(m.id) || !objs.count(m.tgt)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dwyer witnesses

std::vector<Violation> check_dwyer(const DwyerMap& d) {
  std::vector<Violation> errs;
  const FinCat& b = *d.total;
  if (!is_sieve(b, d.sieve)) errs.push_back({"NotASieve", "A is not a sieve in B"});
  if (!is_cosieve(b, d.cosieve)) errs.push_back({"NotACosieve", "W is not a cosieve in B"});
  std::set<std::string> aobj(d.sieve.objects.begin(), d.sieve.objects.end());
  std::set<std::string> wobj(d.cosieve.objects.begin(), d.cosieve.objects.end());
  for (const auto& o : aobj)
    if (!wobj.count(o)) errs.push_back({"NotDwyer", "W does not contain A (object " + o + ")"});
  if (!errs.empty()) return errs;

  auto wsub = subcategory(b, d.cosieve);
  auto asub = subcategory(b, d.sieve);
  if (!wsub.ok() || !asub.ok()) {
    errs.push_back({"NotASubcategory", "cosieve or sieve does not induce a subcategory"});
    return errs;
  }
  const FinCat& w = wsub.value();
  const FinCat& a = asub.value();

  // retraction is a functor W -> A with r∘i = id
  std::map<std::string, std::string> ro = d.retraction_obj, rm = d.retraction_mor;
  auto rfun = validate_functor(share(w), share(a), ro, rm);
  if (!rfun.ok()) {
    for (const auto& v : rfun.violations()) errs.push_back({"NotDwyer", "retraction: " + v.detail});
    return errs;
  }
  const FinFunctor& r = rfun.value();
  for (const auto& o : d.sieve.objects)
    if (r.obj_image(o) != o) errs.push_back({"NotDwyer", "r∘i != id on object " + o});
  for (const auto& mid : a.morphisms())
    if (r.mor_image(mid.id) != mid.id) errs.push_back({"NotDwyer", "r∘i != id on morphism " + mid.id});

  // counit ε_w: r(w) -> w, identity on A, natural, with r(ε_w) = id
  for (const auto& o : d.cosieve.objects) {
    auto it = d.counit.find(o);
    if (it == d.counit.end()) {
      errs.push_back({"NotDwyer", "missing counit at " + o});
      continue;
    }
    int e = b.morphism_index(it->second);
    if (e < 0) {
      errs.push_back({"NotDwyer", "counit at " + o + " names unknown morphism"});
      continue;
    }
    if (b.objects()[b.src_of(e)] != r.obj_image(o) || b.objects()[b.tgt_of(e)] != o)
      errs.push_back({"NotDwyer", "counit at " + o + " has wrong endpoints"});
    if (aobj.count(o) && !b.is_identity(e))
      errs.push_back({"NotDwyer", "counit must be the identity on A at " + o});
    auto rit = d.retraction_mor.find(it->second);
    if (rit == d.retraction_mor.end() ||
        a.morphism_index(rit->second) != a.identity_of(a.object_index(r.obj_image(o))))
      errs.push_back({"NotDwyer", "r(ε_w) is not the identity at " + o});
  }
  if (!errs.empty()) return errs;
  for (const auto& m : w.morphisms()) {  // naturality: ε_{w'} ∘ r(f) = f ∘ ε_w
    int fb = b.morphism_index(m.id);
    int rf = b.morphism_index(d.retraction_mor.at(m.id));
    int ew = b.morphism_index(d.counit.at(m.src));
    int ew2 = b.morphism_index(d.counit.at(m.tgt));
    if (b.compose(ew2, rf) != b.compose(fb, ew))
      errs.push_back({"NotDwyer", "counit not natural at " + m.id});
  }
  return errs;
}

std::optional<DwyerMap> dwyer_witness(CatPtr b, const Subcat& a) {
  if (!is_sieve(*b, a)) throw Error("NotASieve", "dwyer_witness requires a sieve inclusion");
  DwyerMap d;
  d.total = b;
  d.sieve = a;
  d.sub = share(subcategory(*b, a).take());
  d.inclusion = inclusion_functor(d.sub, b);

  // minimal cosieve generated by ob(A): reachability along morphisms out
  std::set<std::string> wobj(a.objects.begin(), a.objects.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& m : b->morphisms())
      if (wobj.count(m.src) && !wobj.count(m.tgt)) {
        wobj.insert(m.tgt);
        grew = true;
      }
  }
  d.cosieve = full_subcat(*b, std::vector<std::string>(wobj.begin(), wobj.end()));

  std::set<std::string> aobj(a.objects.begin(), a.objects.end());
  auto asub = subcategory(*b, a).take();

  // pick (r(w), ε_w) per object by the universal property: every f: a -> w
  // with a in A factors uniquely through ε_w
  for (const auto& wname : d.cosieve.objects) {
    int wix = b->object_index(wname);
    if (aobj.count(wname)) {
      d.retraction_obj[wname] = wname;
      d.counit[wname] = b->morphisms()[b->identity_of(wix)].id;
      continue;
    }
    bool found = false;
    for (int cand = 0; cand < b->object_count() && !found; ++cand) {
      if (!aobj.count(b->objects()[cand])) continue;
      for (int eps : b->hom(cand, wix)) {
        bool universal = true;
        for (int ao = 0; ao < b->object_count() && universal; ++ao) {
          if (!aobj.count(b->objects()[ao])) continue;
          for (int fm : b->hom(ao, wix)) {
            int count = 0;
            for (int gm : b->hom(ao, cand))
              if (b->compose(eps, gm) == fm) ++count;
            if (count != 1) {
              universal = false;
              break;
            }
          }
        }
        if (universal) {
          d.retraction_obj[wname] = b->objects()[cand];
          d.counit[wname] = b->morphisms()[eps].id;
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }

  // morphism part of r: the unique g with ε_{w'} ∘ g = f ∘ ε_w
  for (const auto& m : b->morphisms()) {
    if (!wobj.count(m.src) || !wobj.count(m.tgt)) continue;
    int f = b->morphism_index(m.id);
    int ew = b->morphism_index(d.counit.at(m.src));
    int ew2 = b->morphism_index(d.counit.at(m.tgt));
    int lhs = b->compose(f, ew);
    int rsrc = b->object_index(d.retraction_obj.at(m.src));
    int rtgt = b->object_index(d.retraction_obj.at(m.tgt));
    int hit = -1, hits = 0;
    for (int gm : b->hom(rsrc, rtgt))
      if (b->compose(ew2, gm) == lhs) {
        hit = gm;
        ++hits;
      }
    if (hits != 1) return std::nullopt;
    d.retraction_mor[m.id] = b->morphisms()[hit].id;
  }

  auto errs = check_dwyer(d);
  if (!errs.empty()) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// Explicit Dwyer pushout

namespace {

// Bookkeeping for the explicit pushout, so nothing ever parses ids.
struct ExplicitPushout {
  PushoutResult po;
  // kind 0: from C (c_mor), kind 1: from B (b_mor), kind 2: mixed (b_obj, c_mor)
  struct Mor {
    int kind;
    int c_mor = -1;
    int b_mor = -1;
    int b_obj = -1;
  };
  std::vector<Mor> info;                 // per D morphism index
  std::vector<int> dmor_of_c;            // C morphism -> D morphism
  std::vector<int> dmor_of_b;            // B morphism (outside A) -> D morphism, else -1
  std::map<std::pair<int, int>, int> dmor_mixed;  // (b_obj, c_mor) -> D morphism
  std::vector<int> dobj_of_c, dobj_of_b;  // object index translations (-1 where n/a)
};

ExplicitPushout build_explicit_pushout(const DwyerMap& i, const FinFunctor& f) {
  const FinCat& b = *i.total;
  const FinCat& c = *f.target();
  const FinCat& a = *i.sub;
  if (*f.source() != a) throw Error("EndpointMismatch", "F must start at the sieve subcategory");
  if (!is_poset(b)) throw Error("NotPoset", "explicit pushout requires a poset Dwyer map");
  auto derrs = check_dwyer(i);
  if (!derrs.empty()) throw Error("NotDwyer", "\n" + describe(derrs));

  std::set<std::string> aobj(i.sieve.objects.begin(), i.sieve.objects.end());
  std::set<std::string> amors;  // all morphisms of A, identities included
  for (const auto& m : a.morphisms()) amors.insert(m.id);
  std::set<std::string> wobj(i.cosieve.objects.begin(), i.cosieve.objects.end());

  CatBuilder bld;
  auto cobj = [&](const std::string& id) { return "c:" + id; };
  auto bobj = [&](const std::string& id) { return "b:" + id; };
  auto cmor = [&](const std::string& id) { return "c:" + id; };
  auto bmor = [&](const std::string& id) { return "b:" + id; };
  auto pmor = [&](int b_obj, int c_mor) {
    // length prefix keeps the id injective even when object ids contain '|'
    const std::string& bn = b.objects()[b_obj];
    return "p:" + std::to_string(bn.size()) + ":" + bn + "|" + c.morphisms()[c_mor].id;
  };

  for (const auto& o : c.objects()) bld.add_object(cobj(o));
  for (const auto& o : b.objects())
    if (!aobj.count(o)) bld.add_object(bobj(o));

  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) bld.add_morphism(cmor(c.morphisms()[m].id), cobj(c.morphisms()[m].src), cobj(c.morphisms()[m].tgt));
  for (int m = 0; m < b.morphism_count(); ++m) {
    const auto& mm = b.morphisms()[m];
    if (b.is_identity(m) || aobj.count(mm.src) || aobj.count(mm.tgt)) continue;
    bld.add_morphism(bmor(mm.id), bobj(mm.src), bobj(mm.tgt));
  }
  // mixed morphisms (ε_b, γ) for b in W outside A
  std::vector<std::pair<int, int>> mixed;
  for (int bo = 0; bo < b.object_count(); ++bo) {
    const std::string& bname = b.objects()[bo];
    if (aobj.count(bname) || !wobj.count(bname)) continue;
    int rb = c.object_index(f.obj_image(i.retraction_obj.at(bname)));
    for (int co = 0; co < c.object_count(); ++co)
      for (int g : c.hom(co, rb)) {
        bld.add_morphism(pmor(bo, g), cobj(c.objects()[co]), bobj(bname));
        mixed.push_back({bo, g});
      }
  }

  // name of a C morphism inside D, identities included
  auto cname = [&](int m) {
    return c.is_identity(m) ? CatBuilder::identity_id(cobj(c.objects()[c.src_of(m)]))
                            : cmor(c.morphisms()[m].id);
  };
  auto bname_m = [&](int m) {
    return b.is_identity(m) ? CatBuilder::identity_id(bobj(b.objects()[b.src_of(m)]))
                            : bmor(b.morphisms()[m].id);
  };

  // (1) C ∘ C
  for (int g1 = 0; g1 < c.morphism_count(); ++g1) {
    if (c.is_identity(g1)) continue;
    for (int g2 : c.out_of(c.tgt_of(g1))) {
      if (c.is_identity(g2)) continue;
      bld.set_composite(cmor(c.morphisms()[g2].id), cmor(c.morphisms()[g1].id), cname(c.compose(g2, g1)));
    }
  }
  // (2) B ∘ B among morphisms outside A
  for (int b1 = 0; b1 < b.morphism_count(); ++b1) {
    const auto& m1 = b.morphisms()[b1];
    if (b.is_identity(b1) || aobj.count(m1.src) || aobj.count(m1.tgt)) continue;
    for (int b2 : b.out_of(b.tgt_of(b1))) {
      const auto& m2 = b.morphisms()[b2];
      if (b.is_identity(b2) || aobj.count(m2.tgt)) continue;
      bld.set_composite(bmor(m2.id), bmor(m1.id), bname_m(b.compose(b2, b1)));
    }
  }
  // (3) (ε_b, γ) ∘ γ' = (ε_b, γ∘γ')
  for (auto [bo, g] : mixed)
    for (int g1 = 0; g1 < c.morphism_count(); ++g1) {
      if (c.is_identity(g1) || c.tgt_of(g1) != c.src_of(g)) continue;
      bld.set_composite(pmor(bo, g), cmor(c.morphisms()[g1].id), pmor(bo, c.compose(g, g1)));
    }
  // (4) β ∘ (ε_b, γ) = (ε_{b'}, F(r(β ∘ ε_b)) ∘ γ)
  for (auto [bo, g] : mixed) {
    const std::string& bnm = b.objects()[bo];
    int eps = b.morphism_index(i.counit.at(bnm));
    for (int beta : b.out_of(bo)) {
      const auto& mb = b.morphisms()[beta];
      if (b.is_identity(beta) || aobj.count(mb.tgt)) continue;
      int be = b.compose(beta, eps);
      int rbe = c.morphism_index(f.mor_image(i.retraction_mor.at(b.morphisms()[be].id)));
      int comp = c.compose(rbe, g);
      int bo2 = b.object_index(mb.tgt);
      bld.set_composite(bmor(mb.id), pmor(bo, g), pmor(bo2, comp));
    }
  }

  ExplicitPushout out;
  FinCat d = bld.build_or_throw();
  out.po.cat = share(std::move(d));
  const FinCat& dc = *out.po.cat;

  out.dmor_of_c.assign(c.morphism_count(), -1);
  out.dmor_of_b.assign(b.morphism_count(), -1);
  for (int m = 0; m < c.morphism_count(); ++m) out.dmor_of_c[m] = dc.morphism_index(cname(m));
  for (int m = 0; m < b.morphism_count(); ++m) {
    const auto& mm = b.morphisms()[m];
    if (aobj.count(mm.src) || aobj.count(mm.tgt)) continue;
    out.dmor_of_b[m] = dc.morphism_index(bname_m(m));
  }
  for (auto [bo, g] : mixed) out.dmor_mixed[{bo, g}] = dc.morphism_index(pmor(bo, g));

  out.info.assign(dc.morphism_count(), {});
  for (int m = 0; m < c.morphism_count(); ++m) out.info[out.dmor_of_c[m]] = {0, m, -1, -1};
  for (int m = 0; m < b.morphism_count(); ++m)
    if (out.dmor_of_b[m] >= 0) out.info[out.dmor_of_b[m]] = {1, -1, m, -1};
  for (auto [bo, g] : mixed) out.info[out.dmor_mixed.at({bo, g})] = {2, g, -1, bo};

  out.dobj_of_c.assign(c.object_count(), -1);
  out.dobj_of_b.assign(b.object_count(), -1);
  for (int o = 0; o < c.object_count(); ++o) out.dobj_of_c[o] = dc.object_index(cobj(c.objects()[o]));
  for (int o = 0; o < b.object_count(); ++o)
    if (!aobj.count(b.objects()[o])) out.dobj_of_b[o] = dc.object_index(bobj(b.objects()[o]));

  // cocone C -> D
  {
    std::map<std::string, std::string> ob, mo;
    for (const auto& o : c.objects()) ob[o] = cobj(o);
    for (int m = 0; m < c.morphism_count(); ++m) mo[c.morphisms()[m].id] = cname(m);
    out.po.from_c = validate_functor(f.target(), out.po.cat, ob, mo).take();
  }
  // cocone B -> D
  {
    std::map<std::string, std::string> ob, mo;
    for (const auto& o : b.objects()) ob[o] = aobj.count(o) ? cobj(f.obj_image(o)) : bobj(o);
    for (int m = 0; m < b.morphism_count(); ++m) {
      const auto& mm = b.morphisms()[m];
      if (amors.count(mm.id)) {
        mo[mm.id] = cname(c.morphism_index(f.mor_image(mm.id)));
      } else if (b.is_identity(m)) {
        mo[mm.id] = CatBuilder::identity_id(bobj(mm.src));
      } else if (aobj.count(mm.src)) {
        // a -> b with b in W: (ε_b, F(r(β)))
        int g = c.morphism_index(f.mor_image(i.retraction_mor.at(mm.id)));
        mo[mm.id] = pmor(b.object_index(mm.tgt), g);
      } else {
        mo[mm.id] = bmor(mm.id);
      }
    }
    out.po.from_b = validate_functor(i.total, out.po.cat, ob, mo).take();
  }
  return out;
}

}  // namespace

PushoutResult pushout_along_dwyer(const DwyerMap& i, const FinFunctor& f) {
  return build_explicit_pushout(i, f).po;
}

FinFunctor pushout_mediating(const PushoutResult& po, const DwyerMap& i, const FinFunctor& f,
                             const FinFunctor& uc, const FinFunctor& ub) {
  // rebuild the bookkeeping; deterministic, so indices agree with `po`
  ExplicitPushout ep = build_explicit_pushout(i, f);
  if (!(*ep.po.cat == *po.cat)) throw Error("EndpointMismatch", "pushout does not match its Dwyer data");
  const FinCat& d = *po.cat;
  const FinCat& b = *i.total;
  const FinCat& c = *f.target();
  CatPtr e = uc.target();

  std::map<std::string, std::string> ob, mo;
  for (int o = 0; o < c.object_count(); ++o) ob[d.objects()[ep.dobj_of_c[o]]] = uc.obj_image(c.objects()[o]);
  for (int o = 0; o < b.object_count(); ++o)
    if (ep.dobj_of_b[o] >= 0) ob[d.objects()[ep.dobj_of_b[o]]] = ub.obj_image(b.objects()[o]);

  for (int m = 0; m < d.morphism_count(); ++m) {
    const auto& fo = ep.info[m];
    std::string img;
    if (fo.kind == 0) {
      img = uc.mor_image(c.morphisms()[fo.c_mor].id);
    } else if (fo.kind == 1) {
      img = ub.mor_image(b.morphisms()[fo.b_mor].id);
    } else {
      int eps = e->morphism_index(ub.mor_image(i.counit.at(b.objects()[fo.b_obj])));
      int g = e->morphism_index(uc.mor_image(c.morphisms()[fo.c_mor].id));
      img = e->morphisms()[e->compose(eps, g)].id;
    }
    mo[d.morphisms()[m].id] = img;
  }
  return validate_functor(po.cat, e, ob, mo).take();
}

// ---------------------------------------------------------------------------
// Oracle pushout

namespace {

struct OraclePres {
  Presentation pres;
  std::vector<int> vertex_of_c;  // C object -> vertex
  std::vector<int> vertex_of_b;  // B object -> vertex
  std::vector<int> edge_of_c;    // C morphism -> edge or -1
  std::vector<int> edge_of_b;    // B morphism -> edge or -1 (identity or in image)
  std::vector<int> b_obj_pre;    // B object -> preimage object in A, or -1
  std::vector<int> b_mor_pre;    // B morphism -> preimage morphism in A, or -1
};

OraclePres build_oracle_presentation(const FinFunctor& i, const FinFunctor& f) {
  const FinCat& a = *i.source();
  const FinCat& b = *i.target();
  const FinCat& c = *f.target();
  if (!(*f.source() == a)) throw Error("EndpointMismatch", "pushout legs must share their source");
  if (!i.injective()) throw Error("NotMono", "oracle pushout requires an injective inclusion");

  OraclePres op;
  op.b_obj_pre.assign(b.object_count(), -1);
  op.b_mor_pre.assign(b.morphism_count(), -1);
  for (int o = 0; o < a.object_count(); ++o) op.b_obj_pre[i.apply_obj(o)] = o;
  for (int m = 0; m < a.morphism_count(); ++m) op.b_mor_pre[i.apply_mor(m)] = m;

  op.vertex_of_c.assign(c.object_count(), -1);
  op.vertex_of_b.assign(b.object_count(), -1);
  for (int o = 0; o < c.object_count(); ++o) {
    op.vertex_of_c[o] = static_cast<int>(op.pres.vertices.size());
    op.pres.vertices.push_back("c:" + c.objects()[o]);
  }
  for (int o = 0; o < b.object_count(); ++o) {
    if (op.b_obj_pre[o] >= 0) {
      op.vertex_of_b[o] = op.vertex_of_c[f.apply_obj(op.b_obj_pre[o])];
    } else {
      op.vertex_of_b[o] = static_cast<int>(op.pres.vertices.size());
      op.pres.vertices.push_back("b:" + b.objects()[o]);
    }
  }

  op.edge_of_c.assign(c.morphism_count(), -1);
  op.edge_of_b.assign(b.morphism_count(), -1);
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    op.edge_of_c[m] = static_cast<int>(op.pres.edges.size());
    op.pres.edges.push_back({"c:" + c.morphisms()[m].id, op.vertex_of_c[c.src_of(m)], op.vertex_of_c[c.tgt_of(m)]});
  }
  for (int m = 0; m < b.morphism_count(); ++m) {
    if (b.is_identity(m) || op.b_mor_pre[m] >= 0) continue;
    op.edge_of_b[m] = static_cast<int>(op.pres.edges.size());
    op.pres.edges.push_back({"b:" + b.morphisms()[m].id, op.vertex_of_b[b.src_of(m)], op.vertex_of_b[b.tgt_of(m)]});
  }

  auto trans_c = [&](int m) -> std::vector<int> {
    if (c.is_identity(m)) return {};
    return {op.edge_of_c[m]};
  };
  auto trans_b = [&](int m) -> std::vector<int> {
    if (b.is_identity(m)) return {};
    if (op.b_mor_pre[m] >= 0) return trans_c(f.apply_mor(op.b_mor_pre[m]));
    return {op.edge_of_b[m]};
  };

  for (int g1 = 0; g1 < c.morphism_count(); ++g1) {
    if (c.is_identity(g1)) continue;
    for (int g2 : c.out_of(c.tgt_of(g1))) {
      if (c.is_identity(g2)) continue;
      Presentation::Relation rel;
      rel.lhs = trans_c(c.compose(g2, g1));
      rel.rhs = trans_c(g1);
      auto t2 = trans_c(g2);
      rel.rhs.insert(rel.rhs.end(), t2.begin(), t2.end());
      rel.src = op.vertex_of_c[c.src_of(g1)];
      if (rel.lhs != rel.rhs) op.pres.relations.push_back(std::move(rel));
    }
  }
  for (int b1 = 0; b1 < b.morphism_count(); ++b1) {
    if (b.is_identity(b1)) continue;
    for (int b2 : b.out_of(b.tgt_of(b1))) {
      if (b.is_identity(b2)) continue;
      if (op.b_mor_pre[b1] >= 0 && op.b_mor_pre[b2] >= 0) continue;  // covered by C relations via F
      Presentation::Relation rel;
      rel.lhs = trans_b(b.compose(b2, b1));
      rel.rhs = trans_b(b1);
      auto t2 = trans_b(b2);
      rel.rhs.insert(rel.rhs.end(), t2.begin(), t2.end());
      rel.src = op.vertex_of_b[b.src_of(b1)];
      if (rel.lhs != rel.rhs) op.pres.relations.push_back(std::move(rel));
    }
  }
  return op;
}

PushoutResult assemble_oracle(const OraclePres& op, const Presented& pr, const FinFunctor& i,
                              const FinFunctor& f) {
  const FinCat& b = *i.target();
  const FinCat& c = *f.target();
  PushoutResult out;
  out.cat = pr.cat;
  const FinCat& d = *out.cat;
  {
    std::map<std::string, std::string> ob, mo;
    for (int o = 0; o < c.object_count(); ++o)
      ob[c.objects()[o]] = d.objects()[d.object_index(op.pres.vertices[op.vertex_of_c[o]])];
    for (int m = 0; m < c.morphism_count(); ++m) {
      std::vector<int> path = c.is_identity(m) ? std::vector<int>{} : std::vector<int>{op.edge_of_c[m]};
      int cls = pr.class_of_path(path, op.vertex_of_c[c.src_of(m)]);
      mo[c.morphisms()[m].id] = d.morphisms()[cls].id;
    }
    out.from_c = validate_functor(f.target(), out.cat, ob, mo).take();
  }
  {
    std::map<std::string, std::string> ob, mo;
    for (int o = 0; o < b.object_count(); ++o)
      ob[b.objects()[o]] = d.objects()[d.object_index(op.pres.vertices[op.vertex_of_b[o]])];
    for (int m = 0; m < b.morphism_count(); ++m) {
      std::vector<int> path;
      if (!b.is_identity(m)) {
        if (op.b_mor_pre[m] >= 0) {
          int cm = f.apply_mor(op.b_mor_pre[m]);
          if (!c.is_identity(cm)) path = {op.edge_of_c[cm]};
        } else {
          path = {op.edge_of_b[m]};
        }
      }
      int cls = pr.class_of_path(path, op.vertex_of_b[b.src_of(m)]);
      mo[b.morphisms()[m].id] = d.morphisms()[cls].id;
    }
    out.from_b = validate_functor(i.target(), out.cat, ob, mo).take();
  }
  return out;
}

}  // namespace

PushoutResult pushout_oracle(const FinFunctor& i, const FinFunctor& f, std::int64_t budget) {
  OraclePres op = build_oracle_presentation(i, f);
  auto pr = std::make_shared<Presented>(present_acyclic(op.pres, budget));
  PushoutResult out = assemble_oracle(op, *pr, i, f);
  out.pres = pr;
  return out;
}

IsoReport compare_pushouts(const PushoutResult& explicit_po, const DwyerMap& i, const FinFunctor& f,
                           const PushoutResult& other) {
  IsoReport rep;
  FinFunctor m;
  try {
    m = pushout_mediating(explicit_po, i, f, other.from_c, other.from_b);
  } catch (const Error& e) {
    rep.iso = false;
    rep.detail = std::string("mediating functor failed: ") + e.what();
    return rep;
  }
  if (!m.bijective()) {
    rep.iso = false;
    rep.detail = "mediating functor is not bijective";
    return rep;
  }
  FinFunctor mc = compose_functors(m, explicit_po.from_c);
  FinFunctor mb = compose_functors(m, explicit_po.from_b);
  if (!(mc.object_map() == other.from_c.object_map() && mc.morphism_map() == other.from_c.morphism_map() &&
        mb.object_map() == other.from_b.object_map() && mb.morphism_map() == other.from_b.morphism_map())) {
    rep.iso = false;
    rep.detail = "cocone compatibility fails";
    return rep;
  }
  rep.iso = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Sequential colimits

ColimitResult sequential_colimit(const std::vector<FinFunctor>& chain) {
  if (chain.empty()) throw Error("BadIndices", "sequential colimit needs at least one functor");
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (!chain[j].injective()) throw Error("NotMono", "chain functor " + std::to_string(j) + " is not injective");
    if (j + 1 < chain.size() && !(*chain[j].target() == *chain[j + 1].source()))
      throw Error("EndpointMismatch", "chain functors do not compose");
  }
  const int k = static_cast<int>(chain.size());
  CatPtr last = chain.back().target();

  // earliest-stage name for each object/morphism of the last category
  auto trace_obj = [&](int o) {
    int stage = k, cur = o;
    while (stage > 0) {
      const FinFunctor& fn = chain[stage - 1];
      int pre = -1;
      for (int x = 0; x < fn.source()->object_count(); ++x)
        if (fn.apply_obj(x) == cur) pre = x;
      if (pre < 0) break;
      cur = pre;
      --stage;
    }
    return stage == k ? last->objects()[cur]
                      : (stage == 0 ? chain[0].source()->objects()[cur] : chain[stage].source()->objects()[cur]);
  };
  auto trace_mor = [&](int m) {
    int stage = k, cur = m;
    while (stage > 0) {
      const FinFunctor& fn = chain[stage - 1];
      int pre = -1;
      for (int x = 0; x < fn.source()->morphism_count(); ++x)
        if (fn.apply_mor(x) == cur) pre = x;
      if (pre < 0) break;
      cur = pre;
      --stage;
    }
    return stage == k ? last->morphisms()[cur].id
                      : (stage == 0 ? chain[0].source()->morphisms()[cur].id
                                    : chain[stage].source()->morphisms()[cur].id);
  };

  RawCategory raw;
  std::vector<std::string> oname(last->object_count()), mname(last->morphism_count());
  for (int o = 0; o < last->object_count(); ++o) oname[o] = trace_obj(o);
  for (int m = 0; m < last->morphism_count(); ++m) mname[m] = trace_mor(m);
  for (int o = 0; o < last->object_count(); ++o) raw.objects.push_back(oname[o]);
  for (int m = 0; m < last->morphism_count(); ++m)
    raw.morphisms.push_back({mname[m], oname[last->src_of(m)], oname[last->tgt_of(m)]});
  for (int o = 0; o < last->object_count(); ++o) raw.identities[oname[o]] = mname[last->identity_of(o)];
  for (int g = 0; g < last->morphism_count(); ++g)
    for (int fm = 0; fm < last->morphism_count(); ++fm) {
      int gf = last->compose(g, fm);
      if (gf >= 0) raw.composites.push_back({mname[g], mname[fm], mname[gf]});
    }

  ColimitResult out;
  out.cat = share(FinCat::validate(raw).take());
  for (int j = 0; j <= k; ++j) {
    CatPtr stage_cat = j == 0 ? chain[0].source() : chain[j - 1].target();
    std::map<std::string, std::string> ob, mo;
    for (int o = 0; o < stage_cat->object_count(); ++o) {
      int cur = o;
      for (int t = j; t < k; ++t) cur = chain[t].apply_obj(cur);
      ob[stage_cat->objects()[o]] = oname[cur];
    }
    for (int m = 0; m < stage_cat->morphism_count(); ++m) {
      int cur = m;
      for (int t = j; t < k; ++t) cur = chain[t].apply_mor(cur);
      mo[stage_cat->morphisms()[m].id] = mname[cur];
    }
    out.cocone.push_back(validate_functor(stage_cat, out.cat, ob, mo).take());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivariant constructions

namespace {

DwyerMap tensor_dwyer(const std::vector<std::string>& pts, const DwyerMap& cell, CatPtr total) {
  DwyerMap d;
  d.total = total;
  for (const auto& p : pts) {
    for (const auto& o : cell.sieve.objects) d.sieve.objects.push_back(p + "|" + o);
    for (const auto& m : cell.sieve.morphisms) {
      int mi = cell.total->morphism_index(m);
      if (mi >= 0 && cell.total->is_identity(mi)) continue;
      d.sieve.morphisms.push_back(p + "|" + m);
    }
    for (const auto& o : cell.cosieve.objects) d.cosieve.objects.push_back(p + "|" + o);
    for (const auto& m : cell.cosieve.morphisms) {
      int mi = cell.total->morphism_index(m);
      if (mi >= 0 && cell.total->is_identity(mi)) continue;
      d.cosieve.morphisms.push_back(p + "|" + m);
    }
    for (const auto& o : cell.cosieve.objects) d.cosieve.morphisms.push_back(CatBuilder::identity_id(p + "|" + o));
    for (const auto& [w, a] : cell.retraction_obj) d.retraction_obj[p + "|" + w] = p + "|" + a;
    for (const auto& [wm, am] : cell.retraction_mor) {
      int wi = cell.total->morphism_index(wm);
      std::string key = (wi >= 0 && cell.total->is_identity(wi))
                            ? CatBuilder::identity_id(p + "|" + cell.total->morphisms()[wi].src)
                            : p + "|" + wm;
      int ai = cell.sub->morphism_index(am);
      std::string val = (ai >= 0 && cell.sub->is_identity(ai))
                            ? CatBuilder::identity_id(p + "|" + cell.sub->morphisms()[ai].src)
                            : p + "|" + am;
      d.retraction_mor[key] = val;
    }
    for (const auto& [w, e] : cell.counit) {
      int ei = cell.total->morphism_index(e);
      std::string val = (ei >= 0 && cell.total->is_identity(ei))
                            ? CatBuilder::identity_id(p + "|" + cell.total->morphisms()[ei].src)
                            : p + "|" + e;
      d.counit[p + "|" + w] = val;
    }
  }
  d.sub = share(subcategory(*d.total, d.sieve).take());
  d.inclusion = inclusion_functor(d.sub, d.total);
  auto errs = check_dwyer(d);
  if (!errs.empty()) throw Error("NotDwyer", "tensored cell is not Dwyer:\n" + describe(errs));
  return d;
}

}  // namespace

TensorCell tensor_cell(GroupPtr g, const Subgroup& k, const DwyerMap& cell) {
  TensorCell out;
  out.s = coset_gset(g, k);
  out.plain = cell;
  out.ga = tensor(out.s, cell.sub);
  out.gb = tensor(out.s, cell.total);
  out.tensored = tensor_dwyer(out.s.points(), cell, out.gb.base);
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : out.ga.base->objects()) ob[o] = o;
  for (const auto& m : out.ga.base->morphisms()) mo[m.id] = m.id;
  FinFunctor incl = validate_functor(out.ga.base, out.gb.base, ob, mo).take();
  out.inclusion = make_gfunctor(out.ga, out.gb, std::move(incl));
  return out;
}

GPushout gcat_pushout_dwyer(const TensorCell& cell, const GFunctor& f) {
  ExplicitPushout ep = build_explicit_pushout(cell.tensored, f.base);
  const GCategory& gc = f.tgt;
  const GCategory& gb = cell.gb;
  const FinCat& d = *ep.po.cat;
  const FinCat& b = *gb.base;
  const FinCat& c = *gc.base;

  std::vector<FinFunctor> sigma;
  for (int g = 0; g < gc.group->size(); ++g) {
    std::vector<int> ob(d.object_count(), -1), mo(d.morphism_count(), -1);
    for (int o = 0; o < c.object_count(); ++o)
      ob[ep.dobj_of_c[o]] = ep.dobj_of_c[gc.sigma[g].apply_obj(o)];
    for (int o = 0; o < b.object_count(); ++o)
      if (ep.dobj_of_b[o] >= 0) ob[ep.dobj_of_b[o]] = ep.dobj_of_b[gb.sigma[g].apply_obj(o)];
    for (int m = 0; m < d.morphism_count(); ++m) {
      const auto& fo = ep.info[m];
      if (fo.kind == 0)
        mo[m] = ep.dmor_of_c[gc.sigma[g].apply_mor(fo.c_mor)];
      else if (fo.kind == 1)
        mo[m] = ep.dmor_of_b[gb.sigma[g].apply_mor(fo.b_mor)];
      else
        mo[m] = ep.dmor_mixed.at({gb.sigma[g].apply_obj(fo.b_obj), gc.sigma[g].apply_mor(fo.c_mor)});
    }
    sigma.emplace_back(ep.po.cat, ep.po.cat, std::move(ob), std::move(mo));
  }
  GPushout out;
  out.underlying = ep.po;
  out.d = validate_gcategory(gc.group, ep.po.cat, std::move(sigma)).take();
  out.from_c = make_gfunctor(gc, out.d, ep.po.from_c);
  out.from_b = make_gfunctor(gb, out.d, ep.po.from_b);
  return out;
}

GPushout gcat_pushout_oracle(const GFunctor& i, const GFunctor& f, std::int64_t budget) {
  OraclePres op = build_oracle_presentation(i.base, f.base);
  auto prp = std::make_shared<Presented>(present_acyclic(op.pres, budget));
  const Presented& pr = *prp;
  PushoutResult po = assemble_oracle(op, pr, i.base, f.base);
  po.pres = prp;

  const GCategory& gb = i.tgt;
  const GCategory& gc = f.tgt;
  const FinCat& d = *po.cat;

  std::vector<FinFunctor> sigma;
  for (int g = 0; g < gc.group->size(); ++g) {
    // permutation of vertices and edges induced by the two actions
    std::vector<int> vperm(op.pres.vertices.size(), -1), eperm(op.pres.edges.size(), -1);
    for (int o = 0; o < gc.base->object_count(); ++o)
      vperm[op.vertex_of_c[o]] = op.vertex_of_c[gc.sigma[g].apply_obj(o)];
    for (int o = 0; o < gb.base->object_count(); ++o)
      if (op.b_obj_pre[o] < 0) vperm[op.vertex_of_b[o]] = op.vertex_of_b[gb.sigma[g].apply_obj(o)];
    for (int m = 0; m < gc.base->morphism_count(); ++m)
      if (op.edge_of_c[m] >= 0) eperm[op.edge_of_c[m]] = op.edge_of_c[gc.sigma[g].apply_mor(m)];
    for (int m = 0; m < gb.base->morphism_count(); ++m)
      if (op.edge_of_b[m] >= 0) eperm[op.edge_of_b[m]] = op.edge_of_b[gb.sigma[g].apply_mor(m)];

    std::vector<int> ob(d.object_count(), -1), mo(d.morphism_count(), -1);
    for (std::size_t v = 0; v < op.pres.vertices.size(); ++v)
      ob[d.object_index(op.pres.vertices[v])] = d.object_index(op.pres.vertices[vperm[v]]);
    for (int m = 0; m < d.morphism_count(); ++m) {
      std::vector<int> path = pr.rep_path[m];
      for (int& e : path) e = eperm[e];
      mo[m] = pr.class_of_path(path, path.empty() ? vperm[pr.rep_src[m]] : op.pres.edges[path.front()].src);
    }
    sigma.emplace_back(po.cat, po.cat, std::move(ob), std::move(mo));
  }
  GPushout out;
  out.underlying = po;
  out.d = validate_gcategory(gc.group, po.cat, std::move(sigma)).take();
  out.from_c = make_gfunctor(gc, out.d, po.from_c);
  out.from_b = make_gfunctor(gb, out.d, po.from_b);
  return out;
}

FixedPushoutReport verify_fixed_point_pushout(const TensorCell& cell, const GFunctor& f, const Subgroup& h) {
  FixedPushoutReport rep;
  GPushout gp = gcat_pushout_dwyer(cell, f);
  FinCat dh = fixed_category(gp.d, h);

  // fixed legs
  auto fixed_pts_ix = gset_fixed_points(cell.s, h);
  std::vector<std::string> pts;
  for (int p : fixed_pts_ix) pts.push_back(cell.s.points()[p]);
  CatPtr total_fixed = share(discrete_tensor(pts, *cell.plain.total));
  DwyerMap cell_fixed = tensor_dwyer(pts, cell.plain, total_fixed);

  // F^H from the fixed tensored source
  FinCat ch = fixed_category(f.tgt, h);
  CatPtr chp = share(std::move(ch));
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : cell_fixed.sub->objects()) ob[o] = f.base.obj_image(o);
  for (const auto& m : cell_fixed.sub->morphisms()) mo[m.id] = f.base.mor_image(m.id);
  auto fh = validate_functor(cell_fixed.sub, chp, ob, mo);
  if (!fh.ok()) {
    rep.detail = "F^H is not a functor into C^H:\n" + describe(fh.violations());
    return rep;
  }

  PushoutResult p = pushout_along_dwyer(cell_fixed, fh.value());

  // canonical comparison P -> D^H on identical ids
  CatPtr dhp = share(std::move(dh));
  std::map<std::string, std::string> cob, cmo;
  for (const auto& o : p.cat->objects()) cob[o] = o;
  for (const auto& m : p.cat->morphisms()) cmo[m.id] = m.id;
  auto cmp = validate_functor(p.cat, dhp, cob, cmo);
  if (!cmp.ok()) {
    rep.functorial = false;
    rep.detail = "comparison is not a functor:\n" + describe(cmp.violations());
    return rep;
  }
  rep.functorial = true;
  {
    std::set<int> io(cmp.value().object_map().begin(), cmp.value().object_map().end());
    std::set<int> im(cmp.value().morphism_map().begin(), cmp.value().morphism_map().end());
    rep.objects_bijective = static_cast<int>(io.size()) == p.cat->object_count() &&
                            p.cat->object_count() == dhp->object_count();
    rep.morphisms_bijective = static_cast<int>(im.size()) == p.cat->morphism_count() &&
                              p.cat->morphism_count() == dhp->morphism_count();
  }
  if (!rep.pass()) rep.detail = "comparison functor is not bijective";
  return rep;
}

GColimit gcat_sequential_colimit(const GChain& chain) {
  if (chain.objects.empty()) throw Error("BadIndices", "empty chain");
  std::vector<FinFunctor> base;
  for (const auto& m : chain.maps) base.push_back(m.base);
  if (base.empty()) {
    GColimit out;
    out.colim = chain.objects[0];
    out.cocone.push_back(make_gfunctor(chain.objects[0], out.colim, FinFunctor::identity(chain.objects[0].base)));
    return out;
  }
  ColimitResult cr = sequential_colimit(base);
  const GCategory& lastg = chain.objects.back();
  const FinFunctor& rename = cr.cocone.back();  // X_k -> colim, bijective
  FinFunctor rename_inv = invert(rename);
  std::vector<FinFunctor> sigma;
  for (int g = 0; g < lastg.group->size(); ++g)
    sigma.push_back(compose_functors(rename, compose_functors(lastg.sigma[g], rename_inv)));
  GColimit out;
  out.colim = validate_gcategory(lastg.group, cr.cat, std::move(sigma)).take();
  for (std::size_t j = 0; j < chain.objects.size(); ++j)
    out.cocone.push_back(make_gfunctor(chain.objects[j], out.colim, cr.cocone[j]));
  return out;
}

FilteredMonoReport verify_filtered_mono(const GChain& chain, const Subgroup& h) {
  FilteredMonoReport rep;
  std::vector<FinFunctor> fixed_maps;
  for (const auto& m : chain.maps) fixed_maps.push_back(fixed_functor(m, h));
  GColimit gc = gcat_sequential_colimit(chain);
  FinCat rhs = fixed_category(gc.colim, h);
  if (fixed_maps.empty()) {
    rep.pass = fixed_category(chain.objects[0], h) == rhs;
    if (!rep.pass) rep.detail = "single-stage fixed categories differ";
    return rep;
  }
  ColimitResult lhs = sequential_colimit(fixed_maps);
  rep.pass = *lhs.cat == rhs;
  if (!rep.pass) rep.detail = "colim(X_i^H) differs from (colim X_i)^H at id level";
  return rep;
}

}  // namespace gcat
