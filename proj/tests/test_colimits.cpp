#include <doctest.h>

#include "gcat/catalog.hpp"
#include "gcat/colimits.hpp"
#include "gcat/sset.hpp"

#include <set>

using namespace gcat;

namespace {

CatPtr arrow_cat() { return share(poset_to_category({"a", "b"}, {{"a", "b"}}).take()); }

FinFunctor collapse_to_terminal(CatPtr a, CatPtr pt) {
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : a->objects()) ob[o] = pt->objects()[0];
  for (const auto& m : a->morphisms()) mo[m.id] = pt->morphisms()[pt->identity_of(0)].id;
  return validate_functor(a, pt, ob, mo).take();
}

}  // namespace

TEST_CASE("sieve and cosieve detection") {
  CatPtr b = arrow_cat();
  CHECK(is_sieve(*b, full_subcat(*b, {"a"})));
  CHECK(!is_sieve(*b, full_subcat(*b, {"b"})));
  CHECK(is_cosieve(*b, full_subcat(*b, {"b"})));
  CHECK(!is_cosieve(*b, full_subcat(*b, {"a"})));
  CHECK_THROWS_AS(is_sieve(*b, Subcat{{"missing"}, {}}), Error);
}

TEST_CASE("dwyer witness on the arrow") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  REQUIRE(d.has_value());
  CHECK(d->cosieve.objects.size() == 2);
  CHECK(d->retraction_obj.at("b") == "a");
  CHECK(check_dwyer(*d).empty());
}

TEST_CASE("no witness when two sieve elements sit under one object") {
  // a1, a2 < w with a1, a2 incomparable: no maximum below w
  CatPtr b = share(poset_to_category({"a1", "a2", "w"}, {{"a1", "w"}, {"a2", "w"}}).take());
  auto d = dwyer_witness(b, full_subcat(*b, {"a1", "a2"}));
  CHECK(!d.has_value());
}

TEST_CASE("the empty sieve is a Dwyer map") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {}));
  REQUIRE(d.has_value());
  CHECK(d->cosieve.objects.empty());
}

TEST_CASE("explicit pushout of the collapse along the arrow") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  REQUIRE(d.has_value());
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = collapse_to_terminal(d->sub, pt);
  PushoutResult po = pushout_along_dwyer(*d, f);
  CHECK(po.cat->object_count() == 2);
  CHECK(po.cat->morphism_count() == 3);  // the pushout is a chain
  int c = po.cat->object_index("c:*"), bb = po.cat->object_index("b:b");
  REQUIRE(c >= 0);
  REQUIRE(bb >= 0);
  CHECK(po.cat->hom(c, bb).size() == 1);  // |D(c, b)| = |C(*, F(r(b)))| = 1
  CHECK(po.cat->hom(bb, c).empty());
  CHECK(po.from_c.check().empty());
  CHECK(po.from_b.check().empty());
}

TEST_CASE("pushout along the identity sieve returns C") {
  CatPtr b = share(chain_poset(2));
  auto d = dwyer_witness(b, full_subcat(*b, b->objects()));
  REQUIRE(d.has_value());
  Rng rng(7);
  CatPtr c = share(random_poset(rng, 5));
  FinFunctor f = random_monotone_functor(rng, d->sub, c);
  PushoutResult po = pushout_along_dwyer(*d, f);
  auto iso = find_isomorphism(po.cat, c);
  CHECK(iso.has_value());
}

TEST_CASE("objects outside the cosieve receive no morphisms from C") {
  // B = {a} ⊔ {b}: nothing reaches b from the sieve {a}
  CatPtr b = share(antichain(2));
  auto d = dwyer_witness(b, full_subcat(*b, {"d0"}));
  REQUIRE(d.has_value());
  CHECK(d->cosieve.objects == std::vector<std::string>{"d0"});
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = collapse_to_terminal(d->sub, pt);
  PushoutResult po = pushout_along_dwyer(*d, f);
  int c = po.cat->object_index("c:*"), bb = po.cat->object_index("b:d1");
  CHECK(po.cat->hom(c, bb).empty());
  CHECK(po.cat->hom(bb, c).empty());
}

TEST_CASE("oracle agrees with the explicit pushout on the arrow example") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = collapse_to_terminal(d->sub, pt);
  PushoutResult expl = pushout_along_dwyer(*d, f);
  PushoutResult orac = pushout_oracle(d->inclusion, f);
  IsoReport rep = compare_pushouts(expl, *d, f, orac);
  CHECK(rep.iso);
}

TEST_CASE("oracle pushout along the identity returns C up to isomorphism") {
  CatPtr b = share(chain_poset(1));
  FinFunctor id = FinFunctor::identity(b);
  Rng rng(11);
  CatPtr c = share(random_poset(rng, 5));
  FinFunctor f = random_monotone_functor(rng, b, c);
  PushoutResult po = pushout_oracle(id, f);
  CHECK(find_isomorphism(po.cat, c).has_value());
}

TEST_CASE("twenty seeded random Dwyer pushouts agree with the oracle") {
  for (int i = 0; i < 20; ++i) {
    Rng rng(case_seed(2024, i));
    DwyerMap d = random_dwyer_map(rng);
    CatPtr c = share(random_poset(rng));
    FinFunctor f = random_monotone_functor(rng, d.sub, c);
    PushoutResult expl = pushout_along_dwyer(d, f);
    PushoutResult orac = pushout_oracle(d.inclusion, f);
    IsoReport rep = compare_pushouts(expl, d, f, orac);
    CHECK_MESSAGE(rep.iso, "case " << i << ": " << rep.detail);
  }
}

TEST_CASE("pushout universal property on small targets") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = collapse_to_terminal(d->sub, pt);
  PushoutResult po = pushout_along_dwyer(*d, f);

  for (const auto& [ename, e] : small_bases()) {
    if (e->object_count() == 0 || e->object_count() > 3) continue;
    auto ucs = enumerate_functors(pt, e);
    auto ubs = enumerate_functors(b, e);
    for (const auto& uc : ucs)
      for (const auto& ub : ubs) {
        // cocone condition: ub ∘ i = uc ∘ f
        bool agree = true;
        for (int o = 0; o < d->sub->object_count(); ++o) {
          int via_b = ub.apply_obj(b->object_index(d->sub->objects()[o]));
          int via_c = uc.apply_obj(f.apply_obj(o));
          if (via_b != via_c) agree = false;
        }
        for (int m = 0; m < d->sub->morphism_count(); ++m) {
          int via_b = ub.apply_mor(b->morphism_index(d->sub->morphisms()[m].id));
          int via_c = uc.apply_mor(f.apply_mor(m));
          if (via_b != via_c) agree = false;
        }
        if (!agree) continue;
        FinFunctor med = pushout_mediating(po, *d, f, uc, ub);
        CHECK(med.check().empty());
        // uniqueness: no other functor commutes with both cocones
        int count = 0;
        for (const auto& cand : enumerate_functors(po.cat, e)) {
          FinFunctor cc = compose_functors(cand, po.from_c);
          FinFunctor cb = compose_functors(cand, po.from_b);
          if (cc.object_map() == uc.object_map() && cc.morphism_map() == uc.morphism_map() &&
              cb.object_map() == ub.object_map() && cb.morphism_map() == ub.morphism_map())
            ++count;
        }
        CHECK_MESSAGE(count == 1, ename);
      }
  }
}

TEST_CASE("sequential colimit of chain inclusions") {
  CatPtr c0 = share(chain_poset(0));
  CatPtr c1 = share(chain_poset(1));
  CatPtr c2 = share(chain_poset(2));
  auto incl = [](CatPtr s, CatPtr t) {
    std::map<std::string, std::string> ob, mo;
    for (const auto& o : s->objects()) ob[o] = o;
    for (const auto& m : s->morphisms()) mo[m.id] = m.id;
    return validate_functor(s, t, ob, mo).take();
  };
  ColimitResult r = sequential_colimit({incl(c0, c1), incl(c1, c2)});
  CHECK(*r.cat == *c2);
  CHECK(r.cocone.size() == 3);
  for (const auto& f : r.cocone) CHECK(f.check().empty());
}

TEST_CASE("sequential colimit of identities is the first stage") {
  CatPtr c = share(chain_poset(2));
  ColimitResult r = sequential_colimit({FinFunctor::identity(c), FinFunctor::identity(c)});
  CHECK(*r.cat == *c);
}

TEST_CASE("sequential colimit rejects non-monomorphisms") {
  CatPtr c = share(chain_poset(1));
  CatPtr pt = share(FinCat::terminal("*"));
  CHECK_THROWS_WITH_AS((void)sequential_colimit({collapse_to_terminal(c, pt)}),
                       doctest::Contains("NotMono"), Error);
}

TEST_CASE("fixed points commute with an equivariant mono chain") {
  GroupPtr c2 = share(cyclic_group(2));
  Rng rng(5);
  GChain chain;
  chain.objects.push_back(random_gposet(rng, c2, 3));
  GCategory uni = gdisjoint_union({chain.objects[0], random_gposet(rng, c2, 3)});
  {
    std::map<std::string, std::string> ob, mo;
    const GCategory& cur = chain.objects[0];
    for (const auto& o : cur.base->objects()) ob[o] = "u0:" + o;
    for (int m = 0; m < cur.base->morphism_count(); ++m) {
      const auto& mm = cur.base->morphisms()[m];
      mo[mm.id] = cur.base->is_identity(m) ? CatBuilder::identity_id("u0:" + mm.src) : "u0:" + mm.id;
    }
    chain.maps.push_back(make_gfunctor(cur, uni, validate_functor(cur.base, uni.base, ob, mo).take()));
    chain.objects.push_back(uni);
  }
  for (const auto& h : subgroups(*c2)) {
    FilteredMonoReport rep = verify_filtered_mono(chain, h);
    CHECK_MESSAGE(rep.pass, rep.detail);
  }
}

TEST_CASE("fixed points commute with a Dwyer pushout over C2") {
  GroupPtr c2 = share(cyclic_group(2));
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  TensorCell cell = tensor_cell(c2, trivial_subgroup(*c2), *d);
  GCategory y = trivial_action(c2, share(FinCat::terminal("*")));
  Rng rng(3);
  GFunctor u = random_equivariant_functor(rng, cell, y);
  GPushout p = gcat_pushout_dwyer(cell, u);
  CHECK(p.d.base->object_count() == 3);  // one C object plus two b copies

  FixedPushoutReport full_rep = verify_fixed_point_pushout(cell, u, full_subgroup(*c2));
  CHECK(full_rep.pass());
  FinCat dh = fixed_category(p.d, full_subgroup(*c2));
  CHECK(dh.object_count() == 1);  // no b copy is fixed

  FixedPushoutReport triv_rep = verify_fixed_point_pushout(cell, u, trivial_subgroup(*c2));
  CHECK(triv_rep.pass());
}

TEST_CASE("fixed points commute with a Dwyer pushout over S3 at K = C3") {
  GroupPtr s3 = share(symmetric3());
  Subgroup c3;
  for (const auto& h : subgroups(*s3))
    if (h.size() == 3) c3 = h;
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  TensorCell cell = tensor_cell(s3, c3, *d);
  GCategory y = trivial_action(s3, share(FinCat::terminal("*")));
  Rng rng(9);
  GFunctor u = random_equivariant_functor(rng, cell, y);
  FixedPushoutReport rep = verify_fixed_point_pushout(cell, u, c3);
  CHECK(rep.pass());
  GPushout p = gcat_pushout_dwyer(cell, u);
  FinCat dh = fixed_category(p.d, c3);
  CHECK(dh.object_count() == 3);  // the terminal object plus the two fixed b copies
}

TEST_CASE("phi commutes with pullbacks levelwise") {
  GroupPtr c2 = share(cyclic_group(2));
  // X = Y = C2 acting on two points, Z = point
  CatPtr two = share(antichain(2));
  std::map<std::string, std::string> ob{{"d0", "d1"}, {"d1", "d0"}};
  std::map<std::string, std::string> mo{{"id_d0", "id_d1"}, {"id_d1", "id_d0"}};
  FinFunctor swap = validate_functor(two, two, ob, mo).take();
  GCategory x = validate_gcategory(c2, two, {FinFunctor::identity(two), swap}).take();
  GCategory z = trivial_action(c2, share(FinCat::terminal("*")));
  GFunctor p = make_gfunctor(x, z, collapse_to_terminal(two, z.base));
  PullbackResult pb = pullback(p.base, p.base);
  // diagonal action on the pullback
  std::vector<FinFunctor> sigma;
  for (int g = 0; g < 2; ++g) {
    std::map<std::string, std::string> pob, pmo;
    for (const auto& o : pb.cat->objects()) {
      std::string x1 = pb.p1.obj_image(o), x2 = pb.p2.obj_image(o);
      pob[o] = "(" + x.sigma[g].obj_image(x1) + "," + x.sigma[g].obj_image(x2) + ")";
    }
    for (const auto& m : pb.cat->morphisms()) {
      int mi = pb.cat->morphism_index(m.id);
      pmo[m.id] = CatBuilder::identity_id(pob[pb.cat->objects()[pb.cat->src_of(mi)]]);
    }
    sigma.push_back(validate_functor(pb.cat, pb.cat, pob, pmo).take());
  }
  GCategory gpb = validate_gcategory(c2, pb.cat, std::move(sigma)).take();
  for (const auto& h : subgroups(*c2)) {
    FinCat lhs = fixed_category(gpb, h);
    PullbackResult rhs = pullback(fixed_functor(p, h), fixed_functor(p, h));
    CHECK(lhs == *rhs.cat);
  }
}

TEST_CASE("a single generating cell pushout is the closure base case") {
  GroupPtr c2 = share(cyclic_group(2));
  GeneratingCell gc = generating_cell(1);
  auto d = dwyer_witness(gc.target, full_subcat(*gc.target, gc.source->objects()));
  REQUIRE(d.has_value());
  TensorCell cell = tensor_cell(c2, trivial_subgroup(*c2), *d);
  Rng rng(17);
  GCategory y = random_gposet(rng, c2, 3);
  for (int attempt = 0; attempt < 10; ++attempt) {
    try {
      GFunctor u = random_equivariant_functor(rng, cell, y);
      for (const auto& h : subgroups(*c2)) CHECK(verify_fixed_point_pushout(cell, u, h).pass());
      return;
    } catch (const Error& e) {
      if (std::string(e.code()) == "EmptyFixed") {
        y = random_gposet(rng, c2, 3);
        continue;
      }
      throw;
    }
  }
  FAIL("could not build the base-case instance");
}

TEST_CASE("colimit error codes") {
  CatPtr b = share(chain_poset(1));
  CHECK_THROWS_WITH_AS((void)dwyer_witness(b, full_subcat(*b, {"1"})), doctest::Contains("NotASieve"),
                       Error);
  // a Dwyer map inside a non-poset total category is rejected by the
  // explicit construction
  CatPtr par = share(parallel_pair());
  auto d = dwyer_witness(par, full_subcat(*par, std::vector<std::string>{}));
  REQUIRE(d.has_value());
  CatPtr pt = share(FinCat::terminal("*"));
  FinFunctor f = validate_functor(d->sub, pt, {}, {}).take();
  CHECK_THROWS_WITH_AS((void)pushout_along_dwyer(*d, f), doctest::Contains("NotPoset"), Error);
}

TEST_CASE("pushout hom sets match C(c, F(r(b))) on seeded instances") {
  for (int t = 0; t < 12; ++t) {
    Rng rng(case_seed(77, t));
    DwyerMap d = random_dwyer_map(rng, 6);
    CatPtr c = share(random_poset(rng, 5));
    FinFunctor f = random_monotone_functor(rng, d.sub, c);
    PushoutResult po = pushout_along_dwyer(d, f);
    std::set<std::string> aobj(d.sieve.objects.begin(), d.sieve.objects.end());
    std::set<std::string> wobj(d.cosieve.objects.begin(), d.cosieve.objects.end());
    for (const auto& cn : c->objects())
      for (const auto& bn : d.total->objects()) {
        if (aobj.count(bn)) continue;
        int dc = po.cat->object_index("c:" + cn);
        int db = po.cat->object_index("b:" + bn);
        std::size_t expect = 0;
        if (wobj.count(bn)) {
          int rb = c->object_index(f.obj_image(d.retraction_obj.at(bn)));
          expect = c->hom(c->object_index(cn), rb).size();
        }
        CHECK(po.cat->hom(dc, db).size() == expect);
        CHECK(po.cat->hom(db, dc).empty());
      }
  }
}

TEST_CASE("explicit pushout accepts a target category with isomorphisms") {
  CatPtr b = arrow_cat();
  auto d = dwyer_witness(b, full_subcat(*b, {"a"}));
  REQUIRE(d.has_value());
  CatPtr c = share(iso_pair());
  std::map<std::string, std::string> ob{{"a", "x"}}, mo{{"id_a", "id_x"}};
  FinFunctor f = validate_functor(d->sub, c, ob, mo).take();
  PushoutResult po = pushout_along_dwyer(*d, f);
  // D(y, b) is a single morphism through the isomorphism y -> x = F(r(b))
  int dy = po.cat->object_index("c:y");
  int db = po.cat->object_index("b:b");
  CHECK(po.cat->hom(dy, db).size() == 1);
  CHECK(po.cat->hom(po.cat->object_index("c:x"), db).size() == 1);
  CHECK(po.from_b.check().empty());
  // universal property against a small target with an isomorphism
  auto ucs = enumerate_functors(c, c);
  for (const auto& uc : ucs) {
    // cocone: ub = uc∘F on A extended along r
    std::map<std::string, std::string> bob, bmo;
    bob["a"] = uc.obj_image("x");
    bob["b"] = uc.obj_image("x");
    bmo["id_a"] = bmo["id_b"] = bmo["a->b"] =
        c->morphisms()[c->identity_of(c->object_index(uc.obj_image("x")))].id;
    FinFunctor ub = validate_functor(b, c, bob, bmo).take();
    FinFunctor med = pushout_mediating(po, *d, f, uc, ub);
    CHECK(med.check().empty());
  }
}
