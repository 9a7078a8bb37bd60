#include "gcat/json_io.hpp"

#include <fstream>
#include <set>

namespace gcat {

Json wrap(const std::string& kind, Json payload) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["payload"] = std::move(payload);
  return j;
}

// ---------------------------------------------------------------------------
// Category

Json category_payload(const FinCat& c) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& o : c.objects()) j["objects"].push_back(o);
  j["morphisms"] = Json::array();
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& mm = c.morphisms()[m];
    j["morphisms"].push_back(Json{{"id", mm.id}, {"src", mm.src}, {"tgt", mm.tgt}});
  }
  j["compose"] = Json::array();
  for (int g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      int gf = c.compose(g, f);
      if (gf < 0) continue;
      j["compose"].push_back(Json::array({c.morphisms()[g].id, c.morphisms()[f].id, c.morphisms()[gf].id}));
    }
  }
  // identities are implicit unless they deviate from the id_<object> scheme
  bool standard = true;
  for (int o = 0; o < c.object_count(); ++o)
    if (c.morphisms()[c.identity_of(o)].id != CatBuilder::identity_id(c.objects()[o])) standard = false;
  if (!standard) {
    Json ids;
    for (int o = 0; o < c.object_count(); ++o)
      ids[c.objects()[o]] = c.morphisms()[c.identity_of(o)].id;
    j["identities"] = std::move(ids);
  }
  return j;
}

Result<FinCat> category_from_payload(const Json& payload) {
  if (!payload.is_object()) return Result<FinCat>::failure("BadManifest", "category payload must be an object");
  RawCategory raw;
  try {
    for (const auto& o : payload.value("objects", Json::array())) raw.objects.push_back(o.get<std::string>());
    for (const auto& m : payload.value("morphisms", Json::array()))
      raw.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                               m.at("tgt").get<std::string>()});
    if (payload.contains("identities")) {
      for (const auto& [obj, mid] : payload.at("identities").items()) {
        raw.identities[obj] = mid.get<std::string>();
        raw.morphisms.push_back({mid.get<std::string>(), obj, obj});
      }
    } else {
      for (const auto& o : raw.objects) {
        std::string iid = CatBuilder::identity_id(o);
        raw.morphisms.push_back({iid, o, o});
        raw.identities[o] = iid;
      }
    }
    for (const auto& t : payload.value("compose", Json::array())) {
      if (!t.is_array() || t.size() != 3)
        return Result<FinCat>::failure("BadManifest", "compose entries must be [g, f, gf]");
      raw.composites.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    return Result<FinCat>::failure("BadManifest", e.what());
  }
  // synthesize the composition entries that involve identities
  std::set<std::string> idset;
  for (const auto& [obj, mid] : raw.identities) idset.insert(mid);
  for (const auto& m : raw.morphisms) {
    if (idset.count(m.id)) continue;
    auto src_id = raw.identities.find(m.src);
    auto tgt_id = raw.identities.find(m.tgt);
    if (src_id != raw.identities.end()) raw.composites.push_back({m.id, src_id->second, m.id});
    if (tgt_id != raw.identities.end()) raw.composites.push_back({tgt_id->second, m.id, m.id});
  }
  for (const auto& [obj, mid] : raw.identities) raw.composites.push_back({mid, mid, mid});
  return FinCat::validate(raw);
}

// ---------------------------------------------------------------------------
// Group

Json group_payload(const FinGroup& g) {
  Json j;
  j["elements"] = Json::array();
  for (const auto& e : g.elements()) j["elements"].push_back(e);
  j["table"] = Json::array();
  for (int a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.elements()[g.mul(a, b)]);
    j["table"].push_back(std::move(row));
  }
  return j;
}

Result<FinGroup> group_from_payload(const Json& payload) {
  if (!payload.is_object()) return Result<FinGroup>::failure("BadManifest", "group payload must be an object");
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
  try {
    for (const auto& e : payload.at("elements")) elements.push_back(e.get<std::string>());
    for (const auto& row : payload.at("table")) {
      std::vector<std::string> r;
      for (const auto& v : row) r.push_back(v.get<std::string>());
      table.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    return Result<FinGroup>::failure("BadManifest", e.what());
  }
  return FinGroup::validate(elements, table);
}

// ---------------------------------------------------------------------------
// G-category

Json gaction_payload(const GCategory& x) {
  Json j;
  j["group"] = group_payload(*x.group);
  j["category"] = category_payload(*x.base);
  Json sigma;
  for (int g = 0; g < x.group->size(); ++g) {
    Json one;
    Json ob, mo;
    for (const auto& o : x.base->objects()) ob[o] = x.sigma[g].obj_image(o);
    for (int m = 0; m < x.base->morphism_count(); ++m) {
      if (x.base->is_identity(m)) continue;
      mo[x.base->morphisms()[m].id] = x.sigma[g].mor_image(x.base->morphisms()[m].id);
    }
    one["objects"] = std::move(ob);
    one["morphisms"] = std::move(mo);
    sigma[x.group->elements()[g]] = std::move(one);
  }
  j["sigma"] = std::move(sigma);
  return j;
}

namespace {

// Completes a functor map with identity entries derived from the object map.
Result<FinFunctor> functor_from_maps(CatPtr src, CatPtr tgt, const Json& objects, const Json& morphisms) {
  std::map<std::string, std::string> ob, mo;
  try {
    for (const auto& [k, v] : objects.items()) ob[k] = v.get<std::string>();
    for (const auto& [k, v] : morphisms.items()) mo[k] = v.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    return Result<FinFunctor>::failure("BadManifest", e.what());
  }
  for (int o = 0; o < src->object_count(); ++o) {
    const std::string& oid = src->objects()[o];
    const std::string& iid = src->morphisms()[src->identity_of(o)].id;
    if (mo.count(iid)) continue;
    auto it = ob.find(oid);
    if (it == ob.end()) continue;  // validate_functor reports the gap
    int to = tgt->object_index(it->second);
    if (to >= 0) mo[iid] = tgt->morphisms()[tgt->identity_of(to)].id;
  }
  return validate_functor(src, tgt, ob, mo);
}

}  // namespace

Result<GCategory> gaction_from_payload(const Json& payload) {
  if (!payload.is_object())
    return Result<GCategory>::failure("BadManifest", "gaction payload must be an object");
  auto g = group_from_payload(payload.value("group", Json::object()));
  if (!g.ok()) return Result<GCategory>::failure(g.violations());
  auto c = category_from_payload(payload.value("category", Json::object()));
  if (!c.ok()) return Result<GCategory>::failure(c.violations());
  GroupPtr gp = share(std::move(g).take());
  CatPtr cp = share(std::move(c).take());
  std::vector<FinFunctor> sigma;
  std::vector<Violation> errs;
  const Json& sj = payload.value("sigma", Json::object());
  for (const auto& el : gp->elements()) {
    if (!sj.contains(el)) {
      errs.push_back({"BadManifest", "sigma is missing element " + el});
      continue;
    }
    auto f = functor_from_maps(cp, cp, sj.at(el).value("objects", Json::object()),
                               sj.at(el).value("morphisms", Json::object()));
    if (!f.ok()) {
      for (const auto& v : f.violations()) errs.push_back({v.code, "sigma[" + el + "]: " + v.detail});
      continue;
    }
    sigma.push_back(std::move(f).take());
  }
  if (!errs.empty()) return Result<GCategory>::failure(std::move(errs));
  return validate_gcategory(gp, cp, std::move(sigma));
}

// ---------------------------------------------------------------------------
// Simplicial sets

Json sset_payload(const TruncSSet& x) {
  Json j;
  j["dim"] = x.dim_bound();
  Json dims;
  RawSSet raw = x.to_raw();
  for (int n = 0; n <= x.dim_bound(); ++n) {
    Json level = Json::array();
    for (const auto& s : raw.simplices[n]) {
      Json sj;
      sj["id"] = s.id;
      sj["faces"] = Json::array();
      for (const auto& f : s.faces)
        sj["faces"].push_back(Json{{"ref", f.ref}, {"degeneracy", f.degeneracy}});
      level.push_back(std::move(sj));
    }
    dims[std::to_string(n)] = std::move(level);
  }
  j["dims"] = std::move(dims);
  return j;
}

Result<TruncSSet> sset_from_payload(const Json& payload) {
  if (!payload.is_object()) return Result<TruncSSet>::failure("BadManifest", "sset payload must be an object");
  RawSSet raw;
  try {
    int dim = payload.value("dim", -1);
    const Json& dims = payload.value("dims", Json::object());
    if (dim < 0)
      for (const auto& [k, v] : dims.items()) dim = std::max(dim, std::stoi(k));
    raw.dim = std::max(dim, 0);
    raw.simplices.resize(raw.dim + 1);
    for (const auto& [k, v] : dims.items()) {
      int n = std::stoi(k);
      if (n < 0 || n > raw.dim)
        return Result<TruncSSet>::failure("BadManifest", "dimension key out of range: " + k);
      for (const auto& sj : v) {
        RawSSet::SimplexData s;
        s.id = sj.at("id").get<std::string>();
        for (const auto& f : sj.value("faces", Json::array())) {
          RawSSet::FaceData fd;
          fd.ref = f.at("ref").get<std::string>();
          for (const auto& d : f.value("degeneracy", Json::array())) fd.degeneracy.push_back(d.get<int>());
          s.faces.push_back(std::move(fd));
        }
        raw.simplices[n].push_back(std::move(s));
      }
    }
  } catch (const std::exception& e) {
    return Result<TruncSSet>::failure("BadManifest", e.what());
  }
  return TruncSSet::validate(raw);
}

// ---------------------------------------------------------------------------
// Orbit diagrams

Json ogdiagram_payload(const OGDiagram& y) {
  Json j;
  j["group"] = group_payload(*y.group);
  Json values;
  for (std::size_t i = 0; i < y.og.subs.size(); ++i)
    values[subgroup_name(*y.group, y.og.subs[i])] = category_payload(*y.values[i]);
  j["values"] = std::move(values);
  Json rests;
  for (int m = 0; m < y.og.cat->morphism_count(); ++m) {
    const FinFunctor& r = y.restrictions[m];
    Json ob, mo;
    for (const auto& o : r.source()->objects()) ob[o] = r.obj_image(o);
    for (int mm = 0; mm < r.source()->morphism_count(); ++mm) {
      if (r.source()->is_identity(mm)) continue;
      mo[r.source()->morphisms()[mm].id] = r.mor_image(r.source()->morphisms()[mm].id);
    }
    rests[y.og.cat->morphisms()[m].id] = Json{{"objects", std::move(ob)}, {"morphisms", std::move(mo)}};
  }
  j["restrictions"] = std::move(rests);
  return j;
}

Result<OGDiagram> ogdiagram_from_payload(const Json& payload) {
  if (!payload.is_object())
    return Result<OGDiagram>::failure("BadManifest", "ogdiagram payload must be an object");
  auto g = group_from_payload(payload.value("group", Json::object()));
  if (!g.ok()) return Result<OGDiagram>::failure(g.violations());
  OGDiagram y;
  y.group = share(std::move(g).take());
  y.og = orbit_category(y.group);
  std::vector<Violation> errs;
  const Json& values = payload.value("values", Json::object());
  for (const auto& h : y.og.subs) {
    std::string name = subgroup_name(*y.group, h);
    if (!values.contains(name)) {
      errs.push_back({"BadManifest", "missing value at subgroup " + name});
      y.values.push_back(share(FinCat::empty()));
      continue;
    }
    auto c = category_from_payload(values.at(name));
    if (!c.ok()) {
      for (const auto& v : c.violations()) errs.push_back({v.code, name + ": " + v.detail});
      y.values.push_back(share(FinCat::empty()));
      continue;
    }
    y.values.push_back(share(std::move(c).take()));
  }
  if (!errs.empty()) return Result<OGDiagram>::failure(std::move(errs));
  const Json& rests = payload.value("restrictions", Json::object());
  for (int m = 0; m < y.og.cat->morphism_count(); ++m) {
    const std::string& mid = y.og.cat->morphisms()[m].id;
    const auto& d = y.og.mor_data[m];
    if (!rests.contains(mid)) {
      errs.push_back({"BadManifest", "missing restriction along " + mid});
      continue;
    }
    auto f = functor_from_maps(y.values[d.tgt_sub], y.values[d.src_sub],
                               rests.at(mid).value("objects", Json::object()),
                               rests.at(mid).value("morphisms", Json::object()));
    if (!f.ok()) {
      for (const auto& v : f.violations()) errs.push_back({v.code, mid + ": " + v.detail});
      continue;
    }
    y.restrictions.push_back(std::move(f).take());
  }
  if (!errs.empty()) return Result<OGDiagram>::failure(std::move(errs));
  errs = check_ogdiagram(y);
  if (!errs.empty()) return Result<OGDiagram>::failure(std::move(errs));
  return Result<OGDiagram>::success(std::move(y));
}

// ---------------------------------------------------------------------------
// Functors

Json functor_payload(const FinFunctor& f) {
  Json j;
  j["source"] = category_payload(*f.source());
  j["target"] = category_payload(*f.target());
  Json ob, mo;
  for (const auto& o : f.source()->objects()) ob[o] = f.obj_image(o);
  for (int m = 0; m < f.source()->morphism_count(); ++m) {
    if (f.source()->is_identity(m)) continue;
    mo[f.source()->morphisms()[m].id] = f.mor_image(f.source()->morphisms()[m].id);
  }
  j["objects"] = std::move(ob);
  j["morphisms"] = std::move(mo);
  return j;
}

Result<FinFunctor> functor_from_payload(const Json& payload) {
  if (!payload.is_object())
    return Result<FinFunctor>::failure("BadManifest", "functor payload must be an object");
  auto s = category_from_payload(payload.value("source", Json::object()));
  if (!s.ok()) return Result<FinFunctor>::failure(s.violations());
  auto t = category_from_payload(payload.value("target", Json::object()));
  if (!t.ok()) return Result<FinFunctor>::failure(t.violations());
  return functor_from_maps(share(std::move(s).take()), share(std::move(t).take()),
                           payload.value("objects", Json::object()),
                           payload.value("morphisms", Json::object()));
}

// ---------------------------------------------------------------------------
// Files

Json read_manifest(const std::string& path, const std::string& expect_kind) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadManifest", path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("payload"))
    throw Error("BadManifest", path + ": expected {schema, kind, payload}");
  if (j.value("schema", 0) != kSchemaVersion)
    throw Error("BadManifest", path + ": unsupported schema version");
  if (!expect_kind.empty() && j.at("kind").get<std::string>() != expect_kind)
    throw Error("BadManifest", path + ": expected kind " + expect_kind + ", found " +
                                   j.at("kind").get<std::string>());
  return j;
}

void write_manifest(const std::string& path, const std::string& kind, Json payload) {
  Json j = wrap(kind, std::move(payload));
  if (path.empty() || path == "-") {
    printf("%s\n", j.dump(2).c_str());
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  out << j.dump(2) << "\n";
}

Result<Subgroup> parse_subgroup(const FinGroup& g, const std::string& name) {
  std::string body = name;
  if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  Subgroup h;
  std::string cur;
  auto flush = [&]() -> bool {
    if (cur.empty()) return true;
    int i = g.element_index(cur);
    if (i < 0) return false;
    h.push_back(i);
    cur.clear();
    return true;
  };
  for (char ch : body) {
    if (ch == ',') {
      if (!flush()) return Result<Subgroup>::failure("NotASubgroup", "unknown element in " + name);
    } else {
      cur += ch;
    }
  }
  if (!flush()) return Result<Subgroup>::failure("NotASubgroup", "unknown element in " + name);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (!is_subgroup(g, h)) return Result<Subgroup>::failure("NotASubgroup", name + " is not a subgroup");
  return Result<Subgroup>::success(std::move(h));
}

}  // namespace gcat
