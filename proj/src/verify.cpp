#include "gcat/verify.hpp"

#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "gcat/homology.hpp"
#include "gcat/sset.hpp"

namespace gcat {

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

int SuiteReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["requested"] = requested;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["seed"] = c.seed;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["cases"].push_back(cj);
  }
  j["passed"] = passed();
  j["failed"] = failed();
  return j.dump(2);
}

namespace {

struct CaseSpec {
  std::string id;
  std::uint64_t seed;
  std::function<CaseResult()> run;
};

SuiteReport run_cases(const std::string& suite, std::uint64_t seed, int requested,
                      std::vector<CaseSpec> specs, int jobs) {
  SuiteReport rep;
  rep.suite = suite;
  rep.seed = seed;
  rep.requested = requested;
  rep.cases.resize(specs.size());
  auto run_one = [&](std::size_t i) {
    CaseResult r;
    try {
      r = specs[i].run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = specs[i].id;
    r.seed = specs[i].seed;
    rep.cases[i] = std::move(r);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t workers = std::min(specs.size(), static_cast<std::size_t>(jobs));
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= rep.cases.size()) return;
          run_one(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  return rep;
}

int scaled(int cases, int fallback) { return cases < 0 ? fallback : cases; }

bool same_fun(const FinFunctor& a, const FinFunctor& b) {
  return a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map();
}

// --- pushout-explicit ------------------------------------------------------

std::vector<CaseSpec> pushout_explicit_specs(std::uint64_t seed, int cases, std::int64_t budget) {
  std::vector<CaseSpec> specs;
  for (int i = 0; i < cases; ++i) {
    std::uint64_t cs = case_seed(seed, i);
    specs.push_back({"case" + std::to_string(i), cs, [cs, budget]() {
                       CaseResult r;
                       Rng rng(cs);
                       DwyerMap d = random_dwyer_map(rng);
                       CatPtr c = share(random_poset(rng));
                       FinFunctor f = random_monotone_functor(rng, d.sub, c);
                       PushoutResult expl = pushout_along_dwyer(d, f);
                       PushoutResult orac = pushout_oracle(d.inclusion, f, budget);
                       IsoReport iso = compare_pushouts(expl, d, f, orac);
                       r.pass = iso.iso;
                       r.detail = iso.iso ? "isomorphic with compatible cocones, |D| = " +
                                                std::to_string(expl.cat->object_count()) + " objects / " +
                                                std::to_string(expl.cat->morphism_count()) + " morphisms"
                                          : iso.detail;
                       return r;
                     }});
  }
  return specs;
}

// --- pushout-fixed ---------------------------------------------------------

std::vector<CaseSpec> pushout_fixed_specs(std::uint64_t seed, int cases) {
  std::vector<CaseSpec> specs;
  std::vector<std::pair<std::string, GroupPtr>> groups{
      {"C2", share(cyclic_group(2))}, {"C3", share(cyclic_group(3))}, {"S3", share(symmetric3())}};
  std::uint64_t idx = 0;
  for (const auto& [gname, g] : groups) {
    auto subs = subgroups(*g);
    for (std::size_t ki = 0; ki < subs.size(); ++ki)
      for (std::size_t hi = 0; hi < subs.size(); ++hi)
        for (int j = 0; j < cases; ++j) {
          std::uint64_t cs = case_seed(seed, idx++);
          std::string id =
              gname + "/K" + std::to_string(ki) + "-H" + std::to_string(hi) + "#" + std::to_string(j);
          GroupPtr gp = g;
          Subgroup k = subs[ki], h = subs[hi];
          specs.push_back({id, cs, [cs, gp, k, h]() {
                             CaseResult r;
                             Rng rng(cs);
                             TensorCell cell = tensor_cell(gp, k, random_dwyer_map(rng, 6));
                             for (int attempt = 0;; ++attempt) {
                               try {
                                 GCategory c = random_gposet(rng, gp);
                                 GFunctor f = random_equivariant_functor(rng, cell, c);
                                 FixedPushoutReport fr = verify_fixed_point_pushout(cell, f, h);
                                 r.pass = fr.pass();
                                 r.detail = fr.pass() ? "comparison functor is an isomorphism" : fr.detail;
                                 return r;
                               } catch (const Error& e) {
                                 if (std::string(e.code()) == "EmptyFixed" && attempt < 20) continue;
                                 throw;
                               }
                             }
                           }});
        }
  }
  return specs;
}

// --- filtered-mono ---------------------------------------------------------

GFunctor union_inclusion(const GCategory& cur, const GCategory& uni, const std::string& prefix) {
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : cur.base->objects()) ob[o] = prefix + "0:" + o;
  for (int m = 0; m < cur.base->morphism_count(); ++m) {
    const auto& mm = cur.base->morphisms()[m];
    mo[mm.id] = cur.base->is_identity(m) ? CatBuilder::identity_id(prefix + "0:" + mm.src)
                                         : prefix + "0:" + mm.id;
  }
  FinFunctor f = validate_functor(cur.base, uni.base, ob, mo).take();
  return make_gfunctor(cur, uni, std::move(f));
}

std::vector<CaseSpec> filtered_mono_specs(std::uint64_t seed, int cases) {
  std::vector<CaseSpec> specs;
  std::vector<std::pair<std::string, GroupPtr>> groups{{"C2", share(cyclic_group(2))},
                                                       {"S3", share(symmetric3())}};
  for (int i = 0; i < cases; ++i) {
    std::uint64_t cs = case_seed(seed, i);
    const auto& [gname, g] = groups[i % groups.size()];
    GroupPtr gp = g;
    specs.push_back(
        {gname + "#" + std::to_string(i), cs, [cs, gp]() {
           CaseResult r;
           Rng rng(cs);
           GChain chain;
           chain.objects.push_back(random_gposet(rng, gp, 3));
           int len = rng.range(1, 3);
           for (int s = 0; s < len; ++s) {
             const GCategory cur = chain.objects.back();
             const std::string tag = "s" + std::to_string(s);
             if (rng.chance(0.5)) {
               GCategory uni = gdisjoint_union({cur, random_gposet(rng, gp, 3, tag)}, tag + "u");
               chain.maps.push_back(union_inclusion(cur, uni, tag + "u"));
               chain.objects.push_back(std::move(uni));
             } else {
               auto subs = subgroups(*gp);
               for (int attempt = 0;; ++attempt) {
                 try {
                   const Subgroup& k = subs[rng.bounded(subs.size())];
                   TensorCell cell = tensor_cell(gp, k, random_dwyer_map(rng, 4, tag + "c"));
                   GFunctor f = random_equivariant_functor(rng, cell, cur);
                   GPushout gpo = gcat_pushout_dwyer(cell, f);
                   chain.maps.push_back(gpo.from_c);
                   chain.objects.push_back(gpo.d);
                   break;
                 } catch (const Error& e) {
                   if (std::string(e.code()) == "EmptyFixed" && attempt < 10) continue;
                   throw;
                 }
               }
             }
           }
           r.pass = true;
           for (const auto& h : subgroups(*gp)) {
             FilteredMonoReport fr = verify_filtered_mono(chain, h);
             if (!fr.pass) {
               r.pass = false;
               r.detail = fr.detail;
             }
           }
           if (r.pass)
             r.detail = "chain of length " + std::to_string(chain.maps.size()) +
                        ": colimit commutes with fixed points for every subgroup";
           return r;
         }});
  }
  return specs;
}

// --- tensor-fixed ----------------------------------------------------------

std::vector<CaseSpec> tensor_fixed_specs(std::uint64_t seed, int cases) {
  std::vector<CaseSpec> specs;
  std::uint64_t idx = 0;
  for (const auto& [gname, g] : fixture_groups()) {
    auto subs = subgroups(*g);
    for (std::size_t ki = 0; ki < subs.size(); ++ki)
      for (std::size_t hi = 0; hi < subs.size(); ++hi)
        for (int j = 0; j < cases; ++j) {
          std::uint64_t cs = case_seed(seed, idx++);
          GroupPtr gp = g;
          Subgroup k = subs[ki], h = subs[hi];
          std::string id =
              gname + "/K" + std::to_string(ki) + "-H" + std::to_string(hi) + "#" + std::to_string(j);
          specs.push_back({id, cs, [cs, gp, k, h, j]() {
                             CaseResult r;
                             Rng rng(cs);
                             FinCat a;
                             if (j % 5 == 4) {
                               auto bases = small_bases();
                               a = *bases[rng.bounded(bases.size())].second;
                             } else {
                               a = random_poset(rng, 4);
                             }
                             TensorFixedReport tr = fixed_tensor_compare(gp, k, h, a);
                             r.pass = tr.iso;
                             r.detail = tr.iso ? "comparison is an isomorphism on " +
                                                     std::to_string(tr.lhs.object_count()) + " objects"
                                               : tr.detail;
                             return r;
                           }});
        }
  }
  return specs;
}

// --- adjunction ------------------------------------------------------------

std::vector<CaseSpec> adjunction_specs(std::uint64_t seed, int cap, std::int64_t budget) {
  std::vector<CaseSpec> specs;
  std::vector<std::pair<std::string, GroupPtr>> groups{{"C2", share(cyclic_group(2))},
                                                       {"C3", share(cyclic_group(3))}};
  std::uint64_t idx = 0;
  for (const auto& [gname, g] : groups) {
    auto xs = gcat_catalog(g);
    auto ys = ogdiagram_catalog(g);
    for (const auto& [yname, y] : ys)
      for (const auto& [xname, x] : xs) {
        if (cap >= 0 && static_cast<int>(specs.size()) >= cap) return specs;
        std::uint64_t cs = case_seed(seed, idx++);
        std::string id = gname + ":" + yname + "|" + xname;
        OGDiagram yy = y;
        GCategory xx = x;
        specs.push_back({id, cs, [yy, xx, budget]() {
                           CaseResult r;
                           AdjunctionReport ar = verify_adjunction(yy, xx, budget);
                           r.pass = ar.pass();
                           r.detail = "hom sets " + std::to_string(ar.hom_equivariant) + "/" +
                                      std::to_string(ar.hom_natural) + (ar.pass() ? "" : ": " + ar.detail);
                           return r;
                         }});
      }
  }
  return specs;
}

// --- dwyer-cells -----------------------------------------------------------

CaseResult check_cell_case(const GeneratingCell& cell, const std::string& what) {
  CaseResult r;
  if (!is_poset(*cell.source) || !is_poset(*cell.target)) {
    r.pass = false;
    r.detail = what + ": endpoints are not posets";
    return r;
  }
  Subcat sieve = full_subcat(*cell.target, cell.source->objects());
  if (!is_sieve(*cell.target, sieve)) {
    r.pass = false;
    r.detail = what + ": source is not a sieve in the target";
    return r;
  }
  auto d = dwyer_witness(cell.target, sieve);
  r.pass = d.has_value();
  r.detail = what + (d ? ": Dwyer witness found, cosieve of " + std::to_string(d->cosieve.objects.size()) +
                             " objects"
                       : ": no Dwyer witness");
  return r;
}

std::vector<CaseSpec> dwyer_cells_specs(std::uint64_t seed, int cap, std::int64_t budget) {
  std::vector<CaseSpec> specs;
  std::uint64_t idx = 0;
  auto push = [&](const std::string& id, std::function<CaseResult()> fn) {
    if (cap >= 0 && static_cast<int>(specs.size()) >= cap) return;
    specs.push_back({id, case_seed(seed, idx++), std::move(fn)});
  };
  for (int m = 0; m <= 2; ++m)
    push("cofibration-m" + std::to_string(m), [m, budget]() {
      GeneratingCell cell = generating_cell(m, std::nullopt, budget);
      CaseResult r = check_cell_case(cell, "boundary inclusion m=" + std::to_string(m));
      if (m == 0 && r.pass) {
        r.pass = cell.source->object_count() == 0 && cell.target->object_count() == 1;
        r.detail += "; source is the empty category";
      }
      if (m == 1 && r.pass) {
        int covers = 0;
        for (int mm = 0; mm < cell.target->morphism_count(); ++mm)
          if (!cell.target->is_identity(mm)) ++covers;
        r.pass = cell.target->object_count() == 5 && cell.source->object_count() == 2 && covers == 4;
        r.detail += "; target has " + std::to_string(cell.target->object_count()) + " objects and " +
                    std::to_string(covers) + " covering relations";
      }
      return r;
    });
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= m; ++k) {
      push("horn-into-simplex-m" + std::to_string(m) + "k" + std::to_string(k), [m, k, budget]() {
        GeneratingCell cell = generating_cell(m, k, budget);
        return check_cell_case(cell, "horn into the full simplex (standard target)");
      });
      push("horn-into-boundary-m" + std::to_string(m) + "k" + std::to_string(k), [m, k, budget]() {
        GeneratingCell cell = horn_into_boundary_cell(m, k, budget);
        CaseResult r = check_cell_case(cell, "horn into the boundary (the other stated target)");
        r.detail += "; both candidate targets verified since the two statements differ";
        return r;
      });
    }
  return specs;
}

// --- closure ---------------------------------------------------------------

}  // namespace

// Compares the H-fixed square of Q = Y ⊔_{X0} Xn against the oracle pushout
// of the fixed legs, through Q's presented-class lookup.
CaseResult verify_preservation_closure(const GPushout& q, const GFunctor& incl, const GFunctor& u,
                                       const Subgroup& h, std::int64_t budget) {
  CaseResult r;
  CatPtr qhp = share(fixed_category(q.d, h));

  FinFunctor incl_h = fixed_functor(incl, h);
  FinFunctor u_h = fixed_functor(u, h);
  PushoutResult ph = pushout_oracle(incl_h, u_h, budget);

  const Presented& pq = *q.underlying.pres;
  const Presented& pp = *ph.pres;
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : ph.cat->objects()) {
    if (qhp->object_index(o) < 0) {
      r.pass = false;
      r.detail = "fixed pushout object missing in Q^H: " + o;
      return r;
    }
    ob[o] = o;
  }
  for (int m = 0; m < ph.cat->morphism_count(); ++m) {
    std::vector<int> path;
    for (int e : pp.rep_path[m]) {
      int qe = pq.edge_index(pp.edges[e].id);
      if (qe < 0) {
        r.pass = false;
        r.detail = "fixed generator missing in Q: " + pp.edges[e].id;
        return r;
      }
      path.push_back(qe);
    }
    int src = path.empty() ? pq.vertex_index(pp.vertices[pp.rep_src[m]]) : pq.edges[path.front()].src;
    int qcls = pq.class_of_path(path, src);
    mo[ph.cat->morphisms()[m].id] = pq.cat->morphisms()[qcls].id;
  }
  auto cmp = validate_functor(ph.cat, qhp, ob, mo);
  if (!cmp.ok()) {
    r.pass = false;
    r.detail = "comparison is not a functor:\n" + describe(cmp.violations());
    return r;
  }
  if (!cmp.value().bijective()) {
    r.pass = false;
    r.detail = "comparison is not bijective: " + std::to_string(ph.cat->morphism_count()) + " vs " +
               std::to_string(qhp->morphism_count()) + " morphisms";
    return r;
  }
  FinFunctor via_c = compose_functors(cmp.value(), ph.from_c);
  FinFunctor via_b = compose_functors(cmp.value(), ph.from_b);
  FinFunctor qc_h = fixed_functor(q.from_c, h);
  FinFunctor qb_h = fixed_functor(q.from_b, h);
  if (!(same_fun(via_c, qc_h) && same_fun(via_b, qb_h))) {
    r.pass = false;
    r.detail = "cocone compatibility fails on the fixed square";
    return r;
  }
  r.pass = true;
  r.detail = "fixed square is a pushout";
  return r;
}

namespace {

struct Attachment {
  GPushout push;
  TensorCell cell;
};

// Attach a tensored generating cell along a random equivariant functor.
Attachment attach_cell(Rng& rng, GroupPtr g, const GCategory& x, int max_m, std::int64_t budget) {
  auto subs = subgroups(*g);
  for (int attempt = 0;; ++attempt) {
    try {
      int m = rng.range(0, max_m);
      std::optional<int> horn;
      if (m >= 1 && rng.chance(0.4)) horn = rng.range(0, m);
      GeneratingCell gc = generating_cell(m, horn, budget);
      Subcat sieve = full_subcat(*gc.target, gc.source->objects());
      auto d = dwyer_witness(gc.target, sieve);
      if (!d) throw Error("Internal", "generating cell lost its Dwyer witness");
      const Subgroup& k = subs[rng.bounded(subs.size())];
      TensorCell cell = tensor_cell(g, k, *d);
      GFunctor f = random_equivariant_functor(rng, cell, x);
      return {gcat_pushout_dwyer(cell, f), std::move(cell)};
    } catch (const Error& e) {
      if (std::string(e.code()) == "EmptyFixed" && attempt < 10) continue;
      throw;
    }
  }
}

std::vector<CaseSpec> closure_specs(std::uint64_t seed, int cases, std::int64_t budget) {
  std::vector<CaseSpec> specs;
  std::vector<std::pair<std::string, GroupPtr>> groups{{"C2", share(cyclic_group(2))},
                                                       {"S3", share(symmetric3())}};
  for (int i = 0; i < cases; ++i) {
    std::uint64_t cs = case_seed(seed, i);
    const auto& [gname, g] = groups[i % groups.size()];
    GroupPtr gp = g;
    int max_m = gname == "C2" ? 2 : 1;
    specs.push_back(
        {"composite-" + gname + "#" + std::to_string(i), cs, [cs, gp, max_m, budget]() {
           CaseResult r;
           Rng rng(cs);
           // the trivial summand keeps every C^K nonempty along the chain
           GCategory x0 = gdisjoint_union(
               {trivial_action(gp, share(random_poset(rng, 3, 0.3, "xq"))), random_gposet(rng, gp, 3, "x")},
               "xu");
           GCategory cur = x0;
           std::vector<FinFunctor> legs;
           int len = rng.range(1, 3);
           for (int s = 0; s < len; ++s) {
             Attachment at = attach_cell(rng, gp, cur, max_m, budget);
             legs.push_back(at.push.from_c.base);
             cur = at.push.d;
           }
           FinFunctor comp = legs[0];
           for (std::size_t s = 1; s < legs.size(); ++s) comp = compose_functors(legs[s], comp);
           GFunctor incl = make_gfunctor(x0, cur, std::move(comp));
           GFunctor u = random_outgoing_equivariant(rng, x0);
           GPushout q = gcat_pushout_oracle(incl, u, budget);
           r.pass = true;
           for (const auto& h : subgroups(*gp)) {
             CaseResult sub = verify_preservation_closure(q, incl, u, h, budget);
             if (!sub.pass) {
               r.pass = false;
               r.detail = sub.detail;
               break;
             }
           }
           if (r.pass)
             r.detail = "composite of " + std::to_string(len) +
                        " cell pushouts: fixed squares are pushouts for every subgroup";
           return r;
         }});
  }
  // one explicit retract instance per group
  for (const auto& [gname, g] : groups) {
    GroupPtr gp = g;
    std::uint64_t cs = case_seed(seed, 1000 + (gname == "C2" ? 0 : 1));
    specs.push_back({"retract-" + gname, cs, [cs, gp, budget]() {
                       CaseResult r;
                       Rng rng(cs);
                       // B: a < b1, a < b2; B': a < b1; retraction folds b2 onto b1
                       FinCat b =
                           poset_to_category({"a", "b1", "b2"}, {{"a", "b1"}, {"a", "b2"}}).take();
                       FinCat bp = poset_to_category({"a", "b1"}, {{"a", "b1"}}).take();
                       CatPtr bptr = share(std::move(b));
                       CatPtr bpptr = share(std::move(bp));
                       auto dw = dwyer_witness(bptr, full_subcat(*bptr, {"a"}));
                       auto dwp = dwyer_witness(bpptr, full_subcat(*bpptr, {"a"}));
                       if (!dw || !dwp) {
                         r.pass = false;
                         r.detail = "retract cells lost their witnesses";
                         return r;
                       }
                       auto subs = subgroups(*gp);
                       const Subgroup k = subs[rng.bounded(subs.size())];
                       TensorCell big = tensor_cell(gp, k, *dw);
                       TensorCell small = tensor_cell(gp, k, *dwp);

                       GCategory y = random_gposet(rng, gp, 3);
                       GFunctor u = [&]() {
                         for (int attempt = 0;; ++attempt) {
                           try {
                             return random_equivariant_functor(rng, big, y);
                           } catch (const Error& e) {
                             if (std::string(e.code()) == "EmptyFixed" && attempt < 10) {
                               y = random_gposet(rng, gp, 3);
                               continue;
                             }
                             throw;
                           }
                         }
                       }();
                       // same source category for both cells
                       FinFunctor u_small =
                           validate_functor(small.ga.base, y.base,
                                            [&] {
                                              std::map<std::string, std::string> m;
                                              for (const auto& o : small.ga.base->objects())
                                                m[o] = u.base.obj_image(o);
                                              return m;
                                            }(),
                                            [&] {
                                              std::map<std::string, std::string> m;
                                              for (const auto& mm : small.ga.base->morphisms())
                                                m[mm.id] = u.base.mor_image(mm.id);
                                              return m;
                                            }())
                               .take();
                       GFunctor us = make_gfunctor(small.ga, y, u_small);

                       GPushout p = gcat_pushout_dwyer(big, u);
                       GPushout qq = gcat_pushout_dwyer(small, us);

                       // tensored section and retraction between the cells
                       auto idmap = [&](CatPtr from, CatPtr to,
                                        const std::map<std::string, std::string>& osub,
                                        const std::map<std::string, std::string>& msub) {
                         std::map<std::string, std::string> ob, mo;
                         for (const auto& o : from->objects()) {
                           auto it = osub.find(o);
                           ob[o] = it == osub.end() ? o : it->second;
                         }
                         for (const auto& m : from->morphisms()) {
                           auto it = msub.find(m.id);
                           mo[m.id] = it == msub.end() ? m.id : it->second;
                         }
                         return validate_functor(from, to, ob, mo).take();
                       };
                       std::map<std::string, std::string> osub, msub;
                       for (const auto& pt : big.s.points()) {
                         osub[pt + "|b2"] = pt + "|b1";
                         msub[pt + "|a->b2"] = pt + "|a->b1";
                         msub[CatBuilder::identity_id(pt + "|b2")] = CatBuilder::identity_id(pt + "|b1");
                       }
                       FinFunctor section = idmap(small.gb.base, big.gb.base, {}, {});
                       FinFunctor retraction = idmap(big.gb.base, small.gb.base, osub, msub);
                       FinFunctor rs = compose_functors(retraction, section);
                       if (!same_fun(rs, FinFunctor::identity(small.gb.base))) {
                         r.pass = false;
                         r.detail = "retraction after section is not the identity";
                         return r;
                       }

                       // mediating functors both ways; their composite is the identity
                       FinFunctor m1 = pushout_mediating(qq.underlying, small.tensored, us.base,
                                                         p.underlying.from_c,
                                                         compose_functors(p.underlying.from_b, section));
                       FinFunctor m2 = pushout_mediating(p.underlying, big.tensored, u.base,
                                                         qq.underlying.from_c,
                                                         compose_functors(qq.underlying.from_b, retraction));
                       FinFunctor m21 = compose_functors(m2, m1);
                       if (!same_fun(m21, FinFunctor::identity(qq.underlying.cat))) {
                         r.pass = false;
                         r.detail = "the small pushout square is not a retract of the big one";
                         return r;
                       }
                       GFunctor gm1 = make_gfunctor(qq.d, p.d, m1);
                       GFunctor gm2 = make_gfunctor(p.d, qq.d, m2);
                       (void)gm1;
                       (void)gm2;

                       for (const auto& h : subgroups(*gp)) {
                         FixedPushoutReport big_rep = verify_fixed_point_pushout(big, u, h);
                         FixedPushoutReport small_rep = verify_fixed_point_pushout(small, us, h);
                         if (!big_rep.pass() || !small_rep.pass()) {
                           r.pass = false;
                           r.detail = "a fixed square of the retract diagram is not a pushout";
                           return r;
                         }
                       }
                       r.pass = true;
                       r.detail = "retract of a preserved square is preserved (checked directly and via "
                                  "the retract diagram)";
                       return r;
                     }});
  }
  return specs;
}

// --- homology-cells --------------------------------------------------------

bool groups_match(const std::vector<HomologyGroup>& got, const std::vector<std::pair<int, int>>& expect) {
  for (auto [deg, betti] : expect) {
    if (deg >= static_cast<int>(got.size())) return false;
    if (got[deg].betti != betti || !got[deg].torsion.empty()) return false;
  }
  return true;
}

std::vector<CaseSpec> homology_cells_specs(std::uint64_t seed, int cap, std::int64_t budget) {
  std::vector<CaseSpec> specs;
  std::uint64_t idx = 0;
  auto push = [&](const std::string& id, std::function<CaseResult()> fn) {
    if (cap >= 0 && static_cast<int>(specs.size()) >= cap) return;
    specs.push_back({id, case_seed(seed, idx++), std::move(fn)});
  };
  push("circle", [budget]() {
    CaseResult r;
    FinCat c = categorify(sd(sd(standard_complex(StdKind::Boundary, 2))), budget);
    auto h = homology(nerve(c, 2));
    r.pass = groups_match(h, {{0, 1}, {1, 1}});
    r.detail = show(h[0]) + "; " + show(h[1]);
    return r;
  });
  push("sphere", [budget]() {
    CaseResult r;
    FinCat c = categorify(sd(sd(standard_complex(StdKind::Boundary, 3))), budget);
    auto h = homology(nerve(c, 3));
    r.pass = groups_match(h, {{0, 1}, {1, 0}, {2, 1}});
    r.detail = show(h[0]) + "; " + show(h[1]) + "; " + show(h[2]);
    return r;
  });
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= m; ++k)
      push("acyclic-m" + std::to_string(m) + "k" + std::to_string(k), [m, k, budget]() {
        CaseResult r;
        GeneratingCell cell = generating_cell(m, k, budget);
        HomologyComparison cmp = compare_homology(cell.inclusion, m + 1);
        r.pass = cmp.equal;
        r.detail = cmp.verdict;
        return r;
      });
  push("cofibration-m2-detected", [budget]() {
    CaseResult r;
    GeneratingCell cell = generating_cell(2, std::nullopt, budget);
    HomologyComparison cmp = compare_homology(cell.inclusion, 3);
    r.pass = !cmp.equal && cmp.source.size() > 1 && cmp.source[1].betti == 1 && cmp.target[1].betti == 0;
    r.detail = cmp.verdict;
    return r;
  });
  return specs;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"pushout-explicit", "pushout-fixed", "filtered-mono", "tensor-fixed",
          "adjunction",       "dwyer-cells",   "closure",       "homology-cells"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cases, int jobs,
                      std::int64_t budget) {
  if (name == "pushout-explicit") {
    int n = scaled(cases, 50);
    return run_cases(name, seed, n, pushout_explicit_specs(seed, n, budget), jobs);
  }
  if (name == "pushout-fixed") {
    int n = scaled(cases, 20);
    return run_cases(name, seed, n, pushout_fixed_specs(seed, n), jobs);
  }
  if (name == "filtered-mono") {
    int n = scaled(cases, 20);
    return run_cases(name, seed, n, filtered_mono_specs(seed, n), jobs);
  }
  if (name == "tensor-fixed") {
    int n = scaled(cases, 10);
    return run_cases(name, seed, n, tensor_fixed_specs(seed, n), jobs);
  }
  if (name == "adjunction") {
    return run_cases(name, seed, cases, adjunction_specs(seed, cases < 0 ? -1 : cases, budget), jobs);
  }
  if (name == "dwyer-cells") {
    return run_cases(name, seed, cases, dwyer_cells_specs(seed, cases < 0 ? -1 : cases, budget), jobs);
  }
  if (name == "closure") {
    int n = scaled(cases, 6);
    return run_cases(name, seed, n, closure_specs(seed, n, budget), jobs);
  }
  if (name == "homology-cells") {
    return run_cases(name, seed, cases, homology_cells_specs(seed, cases < 0 ? -1 : cases, budget), jobs);
  }
  throw Error("UnknownSuite", "no suite named " + name);
}

SuiteReport nerve_compat_suite(std::uint64_t seed, int cases, int jobs) {
  std::vector<CaseSpec> specs;
  std::uint64_t idx = 0;
  std::vector<std::pair<std::string, GroupPtr>> groups{{"C2", share(cyclic_group(2))},
                                                       {"C3", share(cyclic_group(3))}};
  for (const auto& [gname, g] : groups) {
    for (const auto& [xname, x] : gcat_catalog(g)) {
      if (cases >= 0 && static_cast<int>(specs.size()) >= cases) break;
      GCategory xx = x;
      GroupPtr gp = g;
      specs.push_back({gname + ":fixed-nerve:" + xname, case_seed(seed, idx++), [xx, gp]() {
                         CaseResult r;
                         r.pass = true;
                         for (const auto& h : subgroups(*gp)) {
                           TruncSSet lhs = nerve(fixed_category(xx, h), 3);
                           TruncSSet rhs = nerve_fixed_points(xx, h, 3);
                           if (!(lhs == rhs)) {
                             r.pass = false;
                             r.detail = "N(X^H) differs from (N X)^H";
                           }
                         }
                         if (r.pass) r.detail = "N(X^H) = (N X)^H for every subgroup";
                         return r;
                       }});
    }
  }
  for (const auto& [bname, base] : small_bases()) {
    if (cases >= 0 && static_cast<int>(specs.size()) >= cases) break;
    if (bname == "iso2") continue;  // cyclic 1-skeleton, outside categorify's domain
    CatPtr bp = base;
    specs.push_back({"counit:" + bname, case_seed(seed, idx++), [bp]() {
                       CaseResult r;
                       FinCat cn = categorify(nerve(*bp, 2));
                       auto iso = find_isomorphism(share(std::move(cn)), bp);
                       r.pass = iso.has_value();
                       r.detail = r.pass ? "c(N(C)) is isomorphic to C" : "no isomorphism found";
                       return r;
                     }});
  }
  return run_cases("nerve-compat", seed, static_cast<int>(specs.size()), std::move(specs), jobs);
}

}  // namespace gcat
