// gcat: finite G-categories, orbit diagrams, Dwyer pushouts, subdivision and
// integer homology, with seeded verification suites.

#include <CLI11.hpp>
#include <iostream>

#include "gcat/catalog.hpp"
#include "gcat/colimits.hpp"
#include "gcat/homology.hpp"
#include "gcat/json_io.hpp"
#include "gcat/sset.hpp"
#include "gcat/verify.hpp"

using namespace gcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
// reserved for a theorem failing on an instance, which signals a bug here,
// not a user error
constexpr int kExitLemmaFailure = 2;

struct Global {
  std::uint64_t seed = 0;
  std::string out;
  int max_dim = 3;
  std::int64_t budget = 2'000'000;
  int jobs = 1;
};

int fail_validation(const std::vector<Violation>& vs) {
  std::cerr << "validation failed:\n" << describe(vs);
  return kExitInvalid;
}

template <typename T>
const T& need(const Result<T>& r) {
  if (!r.ok()) throw Error("ValidationFailed", "\n" + describe(r.violations()));
  return r.value();
}

Subcat subcat_from_list(const FinCat& c, const std::string& csv) {
  std::vector<std::string> objs;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) objs.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) objs.push_back(cur);
  return full_subcat(c, objs);
}

TruncSSet truncate(const TruncSSet& x, int d) {
  if (d >= x.dim_bound()) return x;
  RawSSet raw = x.to_raw();
  raw.dim = d;
  raw.simplices.resize(d + 1);
  return TruncSSet::validate(raw).take();
}

Json pushout_json(const PushoutResult& po) {
  Json j;
  j["category"] = category_payload(*po.cat);
  j["from_c"] = functor_payload(po.from_c);
  j["from_b"] = functor_payload(po.from_b);
  return j;
}

Json homology_json(const std::vector<HomologyGroup>& hs) {
  Json arr = Json::array();
  for (const auto& h : hs) {
    Json one;
    one["degree"] = h.degree;
    one["betti"] = h.betti;
    one["torsion"] = Json::array();
    for (const auto& t : h.torsion) one["torsion"].push_back(t.str());
    one["display"] = show(h);
    arr.push_back(std::move(one));
  }
  return arr;
}

void emit(const Global& g, const std::string& kind, Json payload) {
  write_manifest(g.out, kind, std::move(payload));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite G-categories, orbit diagrams and seeded verification suites"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--seed", g.seed, "seed for randomized constructions")->capture_default_str();
  app.add_option("--out", g.out, "output path (stdout when omitted)");
  app.add_option("--max-dim", g.max_dim, "truncation dimension")->capture_default_str();
  app.add_option("--budget", g.budget, "search/enumeration budget")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for suites")->capture_default_str();

  int rc = kExitOk;

  // validate
  {
    auto* sub = app.add_subcommand("validate", "validate a manifest (category, group, gaction, sset, ogdiagram, functor)");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--in", *in, "input manifest")->required();
    sub->callback([&, in]() {
      Json j = read_manifest(*in);
      std::string kind = j.at("kind").get<std::string>();
      const Json& p = j.at("payload");
      std::vector<Violation> errs;
      if (kind == "category") {
        auto r = category_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else if (kind == "group") {
        auto r = group_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else if (kind == "gaction") {
        auto r = gaction_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else if (kind == "sset") {
        auto r = sset_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else if (kind == "ogdiagram") {
        auto r = ogdiagram_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else if (kind == "functor") {
        auto r = functor_from_payload(p);
        if (!r.ok()) errs = r.violations();
      } else {
        throw Error("BadManifest", "unknown kind " + kind);
      }
      if (!errs.empty()) {
        rc = fail_validation(errs);
        return;
      }
      std::cout << "valid " << kind << "\n";
    });
  }

  // fixed-points
  {
    auto* sub = app.add_subcommand("fixed-points", "H-fixed subcategory of a G-category");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    auto hname = std::make_shared<std::string>();
    sub->add_option("--action", *in, "gaction manifest")->required();
    sub->add_option("--subgroup", *hname, "subgroup, e.g. {e,a1}")->required();
    sub->callback([&, in, hname]() {
      GCategory x = gaction_from_payload(read_manifest(*in, "gaction").at("payload")).take();
      Subgroup h = parse_subgroup(*x.group, *hname).take();
      emit(g, "category", category_payload(fixed_category(x, h)));
    });
  }

  // orbit-cat
  {
    auto* sub = app.add_subcommand("orbit-cat", "orbit category of a finite group");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--group", *in, "group manifest")->required();
    sub->callback([&, in]() {
      GroupPtr gp = share(group_from_payload(read_manifest(*in, "group").at("payload")).take());
      emit(g, "category", category_payload(*orbit_category(gp).cat));
    });
  }

  // phi
  {
    auto* sub = app.add_subcommand("phi", "fixed-point diagram of a G-category");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--action", *in, "gaction manifest")->required();
    sub->callback([&, in]() {
      GCategory x = gaction_from_payload(read_manifest(*in, "gaction").at("payload")).take();
      emit(g, "ogdiagram", ogdiagram_payload(phi(x)));
    });
  }

  // lambda
  {
    auto* sub = app.add_subcommand("lambda", "evaluate an orbit diagram at G/e");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--diagram", *in, "ogdiagram manifest")->required();
    sub->callback([&, in]() {
      OGDiagram y = ogdiagram_from_payload(read_manifest(*in, "ogdiagram").at("payload")).take();
      emit(g, "gaction", gaction_payload(lambda(y)));
    });
  }

  // tensor
  {
    auto* sub = app.add_subcommand("tensor", "G/K ⊗ A with the permutation action");
    sub->fallthrough();
    auto gin = std::make_shared<std::string>();
    auto kname = std::make_shared<std::string>();
    auto cin = std::make_shared<std::string>();
    sub->add_option("--group", *gin, "group manifest")->required();
    sub->add_option("--subgroup", *kname, "subgroup K")->required();
    sub->add_option("--category", *cin, "category manifest for A")->required();
    sub->callback([&, gin, kname, cin]() {
      GroupPtr gp = share(group_from_payload(read_manifest(*gin, "group").at("payload")).take());
      Subgroup k = parse_subgroup(*gp, *kname).take();
      FinCat a = category_from_payload(read_manifest(*cin, "category").at("payload")).take();
      emit(g, "gaction", gaction_payload(tensor(coset_gset(gp, k), share(std::move(a)))));
    });
  }

  // nerve
  {
    auto* sub = app.add_subcommand("nerve", "nerve of a category, truncated");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--category", *in, "category manifest")->required();
    sub->callback([&, in]() {
      FinCat c = category_from_payload(read_manifest(*in, "category").at("payload")).take();
      emit(g, "sset", sset_payload(nerve(c, g.max_dim)));
    });
  }

  // sd
  {
    auto* sub = app.add_subcommand("sd", "barycentric subdivision");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--sset", *in, "sset manifest")->required();
    sub->callback([&, in]() {
      TruncSSet x = sset_from_payload(read_manifest(*in, "sset").at("payload")).take();
      emit(g, "sset", sset_payload(sd(x)));
    });
  }

  // categorify
  {
    auto* sub = app.add_subcommand("categorify", "left adjoint of the nerve");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--sset", *in, "sset manifest")->required();
    sub->callback([&, in]() {
      TruncSSet x = sset_from_payload(read_manifest(*in, "sset").at("payload")).take();
      emit(g, "category", category_payload(categorify(x, g.budget)));
    });
  }

  // gen-cell
  {
    auto* sub = app.add_subcommand("gen-cell", "generating (acyclic) cofibration cSd²");
    sub->fallthrough();
    auto m = std::make_shared<int>(1);
    auto horn = std::make_shared<int>(-1);
    auto boundary_target = std::make_shared<bool>(false);
    sub->add_option("--m", *m, "simplex dimension")->required();
    sub->add_option("--horn", *horn, "horn index k (omit for the boundary inclusion)");
    sub->add_flag("--boundary-target", *boundary_target,
                  "for horns, target cSd²∂Δ[m] as stated in one source instead of cSd²Δ[m]");
    sub->callback([&, m, horn, boundary_target]() {
      GeneratingCell cell;
      if (*horn >= 0) {
        cell = *boundary_target ? horn_into_boundary_cell(*m, *horn, g.budget)
                                : generating_cell(*m, *horn, g.budget);
      } else {
        cell = generating_cell(*m, std::nullopt, g.budget);
      }
      emit(g, "functor", functor_payload(cell.inclusion));
    });
  }

  // ex
  {
    auto* sub = app.add_subcommand("ex", "right adjoint Ex, truncated");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    auto cat_in = std::make_shared<std::string>();
    auto twice = std::make_shared<bool>(false);
    sub->add_option("--sset", *in, "sset manifest");
    sub->add_option("--category", *cat_in, "category manifest (applies Ex to its nerve)");
    sub->add_flag("--twice", *twice, "apply Ex twice");
    sub->callback([&, in, cat_in, twice]() {
      TruncSSet x = [&]() {
        if (!cat_in->empty()) {
          FinCat c = category_from_payload(read_manifest(*cat_in, "category").at("payload")).take();
          return nerve(c, g.max_dim);
        }
        if (in->empty()) throw Error("BadManifest", "ex needs --sset or --category");
        return sset_from_payload(read_manifest(*in, "sset").at("payload")).take();
      }();
      TruncSSet e = ex(x, g.max_dim, g.budget);
      if (*twice) e = ex(e, g.max_dim, g.budget);
      emit(g, "sset", sset_payload(e));
    });
  }

  // sieve-check
  {
    auto* sub = app.add_subcommand("sieve-check", "test a full subcategory for being a (co)sieve");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    auto objs = std::make_shared<std::string>();
    auto cosieve = std::make_shared<bool>(false);
    sub->add_option("--category", *in, "category manifest")->required();
    sub->add_option("--objects", *objs, "comma-separated object ids")->required();
    sub->add_flag("--cosieve", *cosieve, "test the dual notion");
    sub->callback([&, in, objs, cosieve]() {
      FinCat b = category_from_payload(read_manifest(*in, "category").at("payload")).take();
      Subcat part = subcat_from_list(b, *objs);
      bool res = *cosieve ? is_cosieve(b, part) : is_sieve(b, part);
      Json j;
      j[*cosieve ? "cosieve" : "sieve"] = res;
      std::cout << j.dump(2) << "\n";
    });
  }

  // dwyer-check
  {
    auto* sub = app.add_subcommand("dwyer-check", "search a Dwyer witness for a sieve inclusion");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    auto objs = std::make_shared<std::string>();
    sub->add_option("--category", *in, "category manifest")->required();
    sub->add_option("--objects", *objs, "comma-separated sieve objects")->required();
    sub->callback([&, in, objs]() {
      CatPtr b = share(category_from_payload(read_manifest(*in, "category").at("payload")).take());
      auto d = dwyer_witness(b, subcat_from_list(*b, *objs));
      Json j;
      j["found"] = d.has_value();
      if (d) {
        j["cosieve"] = Json::array();
        for (const auto& o : d->cosieve.objects) j["cosieve"].push_back(o);
        Json r, eps;
        for (const auto& [w, a] : d->retraction_obj) r[w] = a;
        for (const auto& [w, e] : d->counit) eps[w] = e;
        j["retraction"] = std::move(r);
        j["counit"] = std::move(eps);
      }
      if (g.out.empty())
        std::cout << j.dump(2) << "\n";
      else {
        std::ofstream fo(g.out);
        fo << j.dump(2) << "\n";
      }
    });
  }

  // pushout
  {
    auto* sub = app.add_subcommand("pushout", "explicit pushout along a Dwyer map of posets");
    sub->fallthrough();
    auto bin = std::make_shared<std::string>();
    auto objs = std::make_shared<std::string>();
    auto fin = std::make_shared<std::string>();
    sub->add_option("--category", *bin, "category manifest for B")->required();
    sub->add_option("--objects", *objs, "sieve objects of A inside B")->required();
    sub->add_option("--functor", *fin, "functor manifest F: A -> C")->required();
    sub->callback([&, bin, objs, fin]() {
      CatPtr b = share(category_from_payload(read_manifest(*bin, "category").at("payload")).take());
      auto d = dwyer_witness(b, subcat_from_list(*b, *objs));
      if (!d) throw Error("NotDwyer", "no Dwyer witness for the given sieve");
      FinFunctor f0 = functor_from_payload(read_manifest(*fin, "functor").at("payload")).take();
      if (!(*f0.source() == *d->sub))
        throw Error("EndpointMismatch", "functor source must be the sieve subcategory");
      // rebase the functor on the witness's subcategory object
      std::map<std::string, std::string> ob, mo;
      for (const auto& o : d->sub->objects()) ob[o] = f0.obj_image(o);
      for (const auto& m : d->sub->morphisms()) mo[m.id] = f0.mor_image(m.id);
      FinFunctor f = validate_functor(d->sub, f0.target(), ob, mo).take();
      emit(g, "pushout", pushout_json(pushout_along_dwyer(*d, f)));
    });
  }

  // pushout-oracle
  {
    auto* sub = app.add_subcommand("pushout-oracle", "presented pushout (independent oracle)");
    sub->fallthrough();
    auto iin = std::make_shared<std::string>();
    auto fin = std::make_shared<std::string>();
    sub->add_option("--inclusion", *iin, "functor manifest i: A -> B (injective)")->required();
    sub->add_option("--functor", *fin, "functor manifest F: A -> C")->required();
    sub->callback([&, iin, fin]() {
      FinFunctor i = functor_from_payload(read_manifest(*iin, "functor").at("payload")).take();
      FinFunctor f0 = functor_from_payload(read_manifest(*fin, "functor").at("payload")).take();
      if (!(*f0.source() == *i.source()))
        throw Error("EndpointMismatch", "the two legs must share their source");
      std::map<std::string, std::string> ob, mo;
      for (const auto& o : i.source()->objects()) ob[o] = f0.obj_image(o);
      for (const auto& m : i.source()->morphisms()) mo[m.id] = f0.mor_image(m.id);
      FinFunctor f = validate_functor(i.source(), f0.target(), ob, mo).take();
      emit(g, "pushout", pushout_json(pushout_oracle(i, f, g.budget)));
    });
  }

  // seq-colim
  {
    auto* sub = app.add_subcommand("seq-colim", "finite sequential colimit of injective functors");
    sub->fallthrough();
    auto files = std::make_shared<std::vector<std::string>>();
    sub->add_option("--functor", *files, "chain functor manifests, in order")->required();
    sub->callback([&, files]() {
      std::vector<FinFunctor> chain;
      for (const auto& p : *files)
        chain.push_back(functor_from_payload(read_manifest(p, "functor").at("payload")).take());
      // rebase each functor so that consecutive categories share structure
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!(*chain[i - 1].target() == *chain[i].source()))
          throw Error("EndpointMismatch", "chain functors do not compose");
        std::map<std::string, std::string> ob, mo;
        for (const auto& o : chain[i].source()->objects()) ob[o] = chain[i].obj_image(o);
        for (const auto& m : chain[i].source()->morphisms()) mo[m.id] = chain[i].mor_image(m.id);
        chain[i] = validate_functor(chain[i - 1].target(), chain[i].target(), ob, mo).take();
      }
      ColimitResult r = sequential_colimit(chain);
      Json j;
      j["category"] = category_payload(*r.cat);
      j["cocone"] = Json::array();
      for (const auto& f : r.cocone) j["cocone"].push_back(functor_payload(f));
      emit(g, "colimit", std::move(j));
    });
  }

  // pullback
  {
    auto* sub = app.add_subcommand("pullback", "pullback of two functors with shared target");
    sub->fallthrough();
    auto lin = std::make_shared<std::string>();
    auto rin = std::make_shared<std::string>();
    sub->add_option("--left", *lin, "functor manifest")->required();
    sub->add_option("--right", *rin, "functor manifest")->required();
    sub->callback([&, lin, rin]() {
      FinFunctor f = functor_from_payload(read_manifest(*lin, "functor").at("payload")).take();
      FinFunctor h = functor_from_payload(read_manifest(*rin, "functor").at("payload")).take();
      PullbackResult r = pullback(f, h);
      Json j;
      j["category"] = category_payload(*r.cat);
      j["p1"] = functor_payload(r.p1);
      j["p2"] = functor_payload(r.p2);
      emit(g, "pullback", std::move(j));
    });
  }

  // homology
  {
    auto* sub = app.add_subcommand("homology", "integer homology of a truncated simplicial set");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--sset", *in, "sset manifest")->required();
    sub->callback([&, in]() {
      TruncSSet x = sset_from_payload(read_manifest(*in, "sset").at("payload")).take();
      x = truncate(x, g.max_dim);
      Json j;
      j["degrees"] = homology_json(homology(x));
      j["note"] = "degree " + std::to_string(x.dim_bound()) +
                  " is omitted: chains above the truncation are unavailable";
      if (g.out.empty())
        std::cout << j.dump(2) << "\n";
      else {
        std::ofstream fo(g.out);
        fo << j.dump(2) << "\n";
      }
    });
  }

  // compare-homology
  {
    auto* sub = app.add_subcommand("compare-homology", "necessary weak-equivalence check");
    sub->fallthrough();
    auto in = std::make_shared<std::string>();
    sub->add_option("--functor", *in, "functor manifest")->required();
    sub->callback([&, in]() {
      FinFunctor f = functor_from_payload(read_manifest(*in, "functor").at("payload")).take();
      HomologyComparison cmp = compare_homology(f, g.max_dim);
      Json j;
      j["source"] = homology_json(cmp.source);
      j["target"] = homology_json(cmp.target);
      j["equal"] = cmp.equal;
      j["verdict"] = cmp.verdict;
      if (g.out.empty())
        std::cout << j.dump(2) << "\n";
      else {
        std::ofstream fo(g.out);
        fo << j.dump(2) << "\n";
      }
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "run a seeded verification suite");
    sub->fallthrough();
    auto suite = std::make_shared<std::string>();
    auto cases = std::make_shared<int>(-1);
    std::string names = join(suite_names(), ", ");
    sub->add_option("suite", *suite, "one of: " + names)->required();
    sub->add_option("--cases", *cases, "instances per parameter set (0 = vacuous run)");
    sub->callback([&, suite, cases]() {
      SuiteReport rep = run_suite(*suite, g.seed, *cases, g.jobs, g.budget);
      std::string text = rep.to_json();
      if (g.out.empty())
        std::cout << text << "\n";
      else {
        std::ofstream fo(g.out);
        fo << text << "\n";
      }
      if (!rep.all_pass()) rc = kExitLemmaFailure;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string code = e.code();
    if (code == "Internal" || code == "ComparisonNotIso" || code == "TranspositionMismatch")
      return kExitLemmaFailure;
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return rc;
}
