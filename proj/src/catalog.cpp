#include "gcat/catalog.hpp"

#include <algorithm>
#include <set>

namespace gcat {

// ---------------------------------------------------------------------------
// Groups

namespace {

FinGroup group_from_perms(const std::vector<std::string>& names,
                          const std::vector<std::vector<int>>& perms) {
  // composition: (p*q)(x) = p(q(x)); table row g, column h is g*h
  const int n = static_cast<int>(names.size());
  auto find_perm = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == p) return i;
    throw Error("Internal", "permutation group is not closed");
  };
  std::vector<std::vector<std::string>> table(n, std::vector<std::string>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      std::vector<int> comp(perms[g].size());
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = perms[g][perms[h][x]];
      table[g][h] = names[find_perm(comp)];
    }
  return FinGroup::validate(names, table).take();
}

}  // namespace

FinGroup trivial_group() { return cyclic_group(1); }

FinGroup cyclic_group(int n) {
  std::vector<std::string> names;
  names.push_back("e");
  for (int i = 1; i < n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<std::vector<std::string>> table(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = names[(i + j) % n];
  return FinGroup::validate(names, table).take();
}

FinGroup klein_four() {
  std::vector<std::string> names{"e", "x", "y", "xy"};
  auto mul = [&](int a, int b) { return a ^ b; };
  std::vector<std::vector<std::string>> table(4, std::vector<std::string>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a][b] = names[mul(a, b)];
  return FinGroup::validate(names, table).take();
}

FinGroup symmetric3() {
  std::vector<std::string> names{"e", "r", "rr", "s", "sr", "srr"};
  std::vector<std::vector<int>> perms = {
      {0, 1, 2},  // e
      {1, 2, 0},  // r
      {2, 0, 1},  // rr
      {1, 0, 2},  // s
      {0, 2, 1},  // sr = s after r
      {2, 1, 0},  // srr
  };
  return group_from_perms(names, perms);
}

FinGroup dihedral8() {
  std::vector<std::string> names{"e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"};
  std::vector<int> r{1, 2, 3, 0};
  std::vector<int> s{0, 3, 2, 1};  // reflection fixing corner 0
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(4);
    for (int i = 0; i < 4; ++i) out[i] = p[q[i]];
    return out;
  };
  std::vector<std::vector<int>> perms;
  std::vector<int> e{0, 1, 2, 3};
  std::vector<int> cur = e;
  for (int i = 0; i < 4; ++i) {
    perms.push_back(cur);
    cur = compose(r, cur);
  }
  cur = s;
  std::vector<int> rot = e;
  for (int i = 0; i < 4; ++i) {
    perms.push_back(compose(s, rot));
    rot = compose(r, rot);
  }
  return group_from_perms(names, perms);
}

FinGroup quaternion8() {
  // element indices: 1, -1, i, -i, j, -j, k, -k
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](int x) { return x ^ 1; };
  auto mul = [&](int a, int b) -> int {
    if (a < 2) return a == 0 ? b : neg(b);
    if (b < 2) return b == 0 ? a : neg(a);
    int ua = a / 2, ub = b / 2;  // 1 = i, 2 = j, 3 = k
    int sign = (a % 2) ^ (b % 2);
    if (ua == ub) return sign == 0 ? 1 : 0;  // i*i = -1
    int uc = 6 - ua - ub;
    bool forward = (ub - ua + 3) % 3 == 1;  // i*j = k, j*k = i, k*i = j
    if (!forward) sign ^= 1;
    return 2 * uc + sign;
  };
  std::vector<std::vector<std::string>> table(8, std::vector<std::string>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = names[mul(a, b)];
  return FinGroup::validate(names, table).take();
}

std::vector<std::pair<std::string, GroupPtr>> fixture_groups() {
  std::vector<std::pair<std::string, GroupPtr>> out;
  out.push_back({"C2", share(cyclic_group(2))});
  out.push_back({"C3", share(cyclic_group(3))});
  out.push_back({"C4", share(cyclic_group(4))});
  out.push_back({"V4", share(klein_four())});
  out.push_back({"C5", share(cyclic_group(5))});
  out.push_back({"C6", share(cyclic_group(6))});
  out.push_back({"S3", share(symmetric3())});
  out.push_back({"C7", share(cyclic_group(7))});
  out.push_back({"C8", share(cyclic_group(8))});
  out.push_back({"D4", share(dihedral8())});
  out.push_back({"Q8", share(quaternion8())});
  return out;
}

// ---------------------------------------------------------------------------
// Small categories

FinCat chain_poset(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i <= n; ++i) elems.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) leq.push_back({elems[i], elems[j]});
  return poset_to_category(elems, leq).take();
}

FinCat antichain(int n) {
  CatBuilder b;
  for (int i = 0; i < n; ++i) b.add_object("d" + std::to_string(i));
  return b.build_or_throw();
}

FinCat parallel_pair() {
  CatBuilder b;
  b.add_object("x").add_object("y");
  b.add_morphism("f", "x", "y").add_morphism("g", "x", "y");
  return b.build_or_throw();
}

FinCat iso_pair() {
  CatBuilder b;
  b.add_object("x").add_object("y");
  b.add_morphism("f", "x", "y").add_morphism("g", "y", "x");
  b.set_composite("g", "f", "id_x").set_composite("f", "g", "id_y");
  return b.build_or_throw();
}

std::vector<std::pair<std::string, CatPtr>> small_bases() {
  std::vector<std::pair<std::string, CatPtr>> out;
  out.push_back({"empty", share(FinCat::empty())});
  out.push_back({"pt", share(FinCat::terminal("*"))});
  out.push_back({"disc2", share(antichain(2))});
  out.push_back({"disc3", share(antichain(3))});
  out.push_back({"chain1", share(chain_poset(1))});
  out.push_back({"chain2", share(chain_poset(2))});
  {
    auto vee = poset_to_category({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}).take();
    out.push_back({"vee", share(std::move(vee))});
  }
  {
    auto wedge = poset_to_category({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}}).take();
    out.push_back({"wedge", share(std::move(wedge))});
  }
  out.push_back({"par", share(parallel_pair())});
  out.push_back({"iso2", share(iso_pair())});
  return out;
}

std::vector<GCategory> all_actions(GroupPtr g, CatPtr base) {
  std::vector<FinFunctor> auts = automorphisms(base);
  const int n = g->size();
  std::vector<GCategory> out;
  std::vector<int> pick(n, -1);
  int id_at = -1;
  const FinFunctor ident = FinFunctor::identity(base);
  for (std::size_t i = 0; i < auts.size(); ++i)
    if (auts[i].object_map() == ident.object_map() && auts[i].morphism_map() == ident.morphism_map())
      id_at = static_cast<int>(i);
  if (id_at < 0) {
    if (base->object_count() == 0) {
      // the empty category has exactly the trivial action
      out.push_back(trivial_action(g, base));
      return out;
    }
    throw Error("Internal", "identity automorphism missing");
  }

  auto composes_ok = [&](int upto) {
    for (int a = 0; a <= upto; ++a)
      for (int b = 0; b <= upto; ++b) {
        int ab = g->mul(a, b);
        if (ab > upto) continue;
        const FinFunctor& fa = auts[pick[a]];
        const FinFunctor& fb = auts[pick[b]];
        const FinFunctor& fab = auts[pick[ab]];
        for (int o = 0; o < base->object_count(); ++o)
          if (fa.apply_obj(fb.apply_obj(o)) != fab.apply_obj(o)) return false;
        for (int m = 0; m < base->morphism_count(); ++m)
          if (fa.apply_mor(fb.apply_mor(m)) != fab.apply_mor(m)) return false;
      }
    return true;
  };
  std::function<void(int)> rec = [&](int el) {
    if (el == n) {
      std::vector<FinFunctor> sigma;
      for (int i = 0; i < n; ++i) sigma.push_back(auts[pick[i]]);
      auto r = validate_gcategory(g, base, std::move(sigma));
      if (r.ok()) out.push_back(std::move(r).take());
      return;
    }
    if (el == g->identity()) {
      pick[el] = id_at;
      if (composes_ok(el)) rec(el + 1);
      pick[el] = -1;
      return;
    }
    for (std::size_t i = 0; i < auts.size(); ++i) {
      pick[el] = static_cast<int>(i);
      if (composes_ok(el)) rec(el + 1);
      pick[el] = -1;
    }
  };
  rec(0);
  return out;
}

std::vector<std::pair<std::string, GCategory>> gcat_catalog(GroupPtr g) {
  std::vector<std::pair<std::string, GCategory>> out;
  for (const auto& [name, base] : small_bases()) {
    auto actions = all_actions(g, base);
    for (std::size_t i = 0; i < actions.size(); ++i)
      out.push_back({name + "#" + std::to_string(i), std::move(actions[i])});
  }
  return out;
}

std::vector<std::pair<std::string, OGDiagram>> ogdiagram_catalog(GroupPtr g) {
  std::vector<std::pair<std::string, OGDiagram>> out;
  for (const auto& [name, x] : gcat_catalog(g)) out.push_back({"phi:" + name, phi(x)});
  for (const auto& [name, base] : small_bases())
    out.push_back({"const:" + name, constant_diagram(g, base)});
  return out;
}

// ---------------------------------------------------------------------------
// Random constructions

FinCat random_poset(Rng& rng, int max_objects, double edge_p, const std::string& name_prefix) {
  const int n = rng.range(2, max_objects);
  std::vector<char> le(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> char& { return le[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) at(i, i) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(edge_p)) at(i, j) = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, k) && at(k, j)) at(i, j) = 1;
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back(name_prefix + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> leq;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j)) leq.push_back({elems[i], elems[j]});
  return poset_to_category(elems, leq).take();
}

Subcat random_sieve(Rng& rng, const FinCat& poset) {
  const int n = poset.object_count();
  std::vector<char> in(n, 0);
  for (int i = 0; i < n; ++i)
    if (rng.chance(0.45)) in[i] = 1;
  // down-closure: anything below a chosen element is chosen
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (in[y] && !poset.hom(x, y).empty()) in[x] = 1;
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i)
    if (in[i]) objs.push_back(poset.objects()[i]);
  return full_subcat(poset, objs);
}

DwyerMap random_dwyer_map(Rng& rng, int max_objects, const std::string& name_prefix) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    CatPtr bp = share(random_poset(rng, max_objects, 0.3, name_prefix));
    for (int tries = 0; tries < 8; ++tries) {
      Subcat a = random_sieve(rng, *bp);
      if (a.objects.empty() && tries < 6) continue;  // prefer nonempty sieves
      auto d = dwyer_witness(bp, a);
      if (d) return *d;
    }
  }
  throw Error("Internal", "could not sample a Dwyer map");
}

FinFunctor random_monotone_functor(Rng& rng, CatPtr a, CatPtr c) {
  if (c->object_count() == 0) {
    if (a->object_count() == 0)
      return validate_functor(a, c, {}, {}).take();
    throw Error("BadIndices", "cannot map into the empty category");
  }
  const int n = a->object_count();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> img(n, -1);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      std::vector<int> cands;
      for (int cobj = 0; cobj < c->object_count(); ++cobj) {
        bool fits = true;
        for (int y = 0; y < x && fits; ++y) {
          if (!a->hom(y, x).empty() && c->hom(img[y], cobj).empty()) fits = false;
          if (!a->hom(x, y).empty() && c->hom(cobj, img[y]).empty()) fits = false;
        }
        if (fits) cands.push_back(cobj);
      }
      if (cands.empty()) {
        ok = false;
        break;
      }
      img[x] = cands[rng.bounded(cands.size())];
    }
    if (!ok) continue;
    std::map<std::string, std::string> ob, mo;
    for (int x = 0; x < n; ++x) ob[a->objects()[x]] = c->objects()[img[x]];
    for (int m = 0; m < a->morphism_count() && ok; ++m) {
      const auto& h = c->hom(img[a->src_of(m)], img[a->tgt_of(m)]);
      if (h.size() != 1) {
        ok = false;
        break;
      }
      mo[a->morphisms()[m].id] = c->morphisms()[h[0]].id;
    }
    if (!ok) continue;
    auto r = validate_functor(a, c, ob, mo);
    if (r.ok()) return std::move(r).take();
  }
  // constant functor fallback
  int cobj = static_cast<int>(rng.bounded(c->object_count()));
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : a->objects()) ob[o] = c->objects()[cobj];
  for (const auto& m : a->morphisms()) mo[m.id] = c->morphisms()[c->identity_of(cobj)].id;
  return validate_functor(a, c, ob, mo).take();
}

GCategory gdisjoint_union(const std::vector<GCategory>& parts, const std::string& prefix) {
  if (parts.empty()) throw Error("BadIndices", "empty union");
  GroupPtr g = parts[0].group;
  CatBuilder bld;
  auto pref = [&](std::size_t i, const std::string& id) { return prefix + std::to_string(i) + ":" + id; };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const FinCat& c = *parts[i].base;
    for (const auto& o : c.objects()) bld.add_object(pref(i, o));
    for (int m = 0; m < c.morphism_count(); ++m) {
      if (c.is_identity(m)) continue;
      const auto& mm = c.morphisms()[m];
      bld.add_morphism(pref(i, mm.id), pref(i, mm.src), pref(i, mm.tgt));
    }
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      for (int gm : c.out_of(c.tgt_of(f))) {
        if (c.is_identity(gm)) continue;
        int gf = c.compose(gm, f);
        std::string gfid = c.is_identity(gf) ? CatBuilder::identity_id(pref(i, c.objects()[c.src_of(f)]))
                                             : pref(i, c.morphisms()[gf].id);
        bld.set_composite(pref(i, c.morphisms()[gm].id), pref(i, c.morphisms()[f].id), gfid);
      }
    }
  }
  CatPtr base = share(bld.build_or_throw());
  std::vector<FinFunctor> sigma;
  for (int el = 0; el < g->size(); ++el) {
    std::map<std::string, std::string> ob, mo;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const FinCat& c = *parts[i].base;
      const FinFunctor& sg = parts[i].sigma[el];
      for (const auto& o : c.objects()) ob[pref(i, o)] = pref(i, sg.obj_image(o));
      for (int m = 0; m < c.morphism_count(); ++m) {
        const auto& mm = c.morphisms()[m];
        const std::string key = c.is_identity(m) ? CatBuilder::identity_id(pref(i, mm.src)) : pref(i, mm.id);
        const std::string& img = sg.mor_image(mm.id);
        int imi = c.morphism_index(img);
        const std::string val = c.is_identity(imi) ? CatBuilder::identity_id(pref(i, c.morphisms()[imi].src))
                                                   : pref(i, img);
        mo[key] = val;
      }
    }
    sigma.push_back(validate_functor(base, base, ob, mo).take());
  }
  return validate_gcategory(g, base, std::move(sigma)).take();
}

GCategory random_gposet(Rng& rng, GroupPtr g, int max_piece, const std::string& tag) {
  std::vector<GCategory> parts;
  auto subs = subgroups(*g);
  if (rng.chance(0.7))
    parts.push_back(trivial_action(g, share(random_poset(rng, max_piece, 0.3, tag + "p"))));
  const int pieces = rng.range(1, 2);
  for (int i = 0; i < pieces; ++i) {
    const Subgroup& l = subs[rng.bounded(subs.size())];
    parts.push_back(tensor(coset_gset(g, l), share(random_poset(rng, max_piece, 0.3, tag + "p"))));
  }
  return gdisjoint_union(parts, tag + "u");
}

GFunctor random_equivariant_functor(Rng& rng, const TensorCell& cell, const GCategory& c) {
  // K is the stabilizer of the first coset point
  Subgroup k;
  const FinGroup& grp = *c.group;
  for (int gi = 0; gi < grp.size(); ++gi)
    if (cell.s.act(gi, 0) == 0) k.push_back(gi);
  std::sort(k.begin(), k.end());

  CatPtr fixed = share(fixed_category(c, k));
  if (fixed->object_count() == 0) throw Error("EmptyFixed", "C^K is empty");
  FinFunctor f0 = random_monotone_functor(rng, cell.plain.sub, fixed);

  std::map<std::string, std::string> ob, mo;
  for (int p = 0; p < static_cast<int>(cell.s.points().size()); ++p) {
    int gi = grp.element_index(cell.s.points()[p]);
    if (gi < 0) throw Error("Internal", "coset point is not an element name");
    const FinFunctor& sg = c.sigma[gi];
    const std::string& pt = cell.s.points()[p];
    for (const auto& o : cell.plain.sub->objects()) ob[pt + "|" + o] = sg.obj_image(f0.obj_image(o));
    for (const auto& m : cell.plain.sub->morphisms()) {
      int mi = cell.plain.sub->morphism_index(m.id);
      const std::string key = cell.plain.sub->is_identity(mi) ? CatBuilder::identity_id(pt + "|" + m.src)
                                                              : pt + "|" + m.id;
      // f0 lands in C^K whose ids live inside C
      mo[key] = sg.mor_image(c.base->morphisms()[c.base->morphism_index(f0.mor_image(m.id))].id);
    }
  }
  FinFunctor base = validate_functor(cell.ga.base, c.base, ob, mo).take();
  return make_gfunctor(cell.ga, c, std::move(base));
}

GFunctor random_outgoing_equivariant(Rng& rng, const GCategory& x) {
  int mode = rng.range(0, 2);
  if (mode == 0) return make_gfunctor(x, x, FinFunctor::identity(x.base));
  if (mode == 1) {
    GCategory pt = trivial_action(x.group, share(FinCat::terminal("*")));
    std::map<std::string, std::string> ob, mo;
    for (const auto& o : x.base->objects()) ob[o] = "*";
    for (const auto& m : x.base->morphisms()) mo[m.id] = "id_*";
    FinFunctor base = validate_functor(x.base, pt.base, ob, mo).take();
    return make_gfunctor(x, pt, std::move(base));
  }
  GCategory extra = random_gposet(rng, x.group, 3);
  GCategory uni = gdisjoint_union({x, extra});
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : x.base->objects()) ob[o] = "u0:" + o;
  for (int m = 0; m < x.base->morphism_count(); ++m) {
    const auto& mm = x.base->morphisms()[m];
    mo[mm.id] = x.base->is_identity(m) ? CatBuilder::identity_id("u0:" + mm.src) : "u0:" + mm.id;
  }
  FinFunctor base = validate_functor(x.base, uni.base, ob, mo).take();
  return make_gfunctor(x, uni, std::move(base));
}

}  // namespace gcat
