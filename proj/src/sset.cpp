#include "gcat/sset.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gcat/presentation.hpp"

#include "gcat/util.hpp"

namespace gcat {

// ---------------------------------------------------------------------------
// SimplexRef helpers

SimplexRef nondeg_ref(int dim, int index) {
  SimplexRef s;
  s.base_dim = dim;
  s.base_index = index;
  s.eta.resize(dim + 1);
  for (int i = 0; i <= dim; ++i) s.eta[i] = i;
  return s;
}

std::vector<int> eta_to_word(const std::vector<int>& eta) {
  std::vector<int> w;
  for (std::size_t j = 0; j + 1 < eta.size(); ++j)
    if (eta[j] == eta[j + 1]) w.push_back(static_cast<int>(j));
  return w;
}

std::vector<int> word_to_eta(int dim, const std::vector<int>& word) {
  std::set<int> collapse(word.begin(), word.end());
  std::vector<int> eta(dim + 1);
  eta[0] = 0;
  for (int j = 0; j < dim; ++j) eta[j + 1] = eta[j] + (collapse.count(j) ? 0 : 1);
  return eta;
}

namespace {

// theta ∘ eta for surjections stored by values.
std::vector<int> compose_eta(const std::vector<int>& theta, const std::vector<int>& eta) {
  std::vector<int> out(eta.size());
  for (std::size_t j = 0; j < eta.size(); ++j) out[j] = theta[eta[j]];
  return out;
}

std::string ref_key(const SimplexRef& s) {
  std::string k = std::to_string(s.base_dim) + "#" + std::to_string(s.base_index) + "#";
  for (int v : s.eta) k += std::to_string(v) + ".";
  return k;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncSSet

int TruncSSet::index_of(int n, const std::string& id) const {
  if (n < 0 || n > dim_) return -1;
  auto it = ix_[n].find(id);
  return it == ix_[n].end() ? -1 : it->second;
}

SimplexRef TruncSSet::face(const SimplexRef& s, int i) const {
  const int k = s.dim();
  if (k < 1 || i < 0 || i > k) throw Error("BadIndices", "face index out of range");
  std::vector<int> psi(k);
  for (int j = 0; j < k; ++j) psi[j] = s.eta[j < i ? j : j + 1];
  const int t = s.eta[i];
  const bool still_hit = (i > 0 && s.eta[i - 1] == t) || (i < k && s.eta[i + 1] == t);
  if (still_hit) return {s.base_dim, s.base_index, std::move(psi)};
  // value t is dropped: defer to the stored face d_t of the base
  const SimplexRef& stored = faces_[s.base_dim][s.base_index][t];
  std::vector<int> eta2(k);
  for (int j = 0; j < k; ++j) eta2[j] = psi[j] - (psi[j] > t ? 1 : 0);
  return {stored.base_dim, stored.base_index, compose_eta(stored.eta, eta2)};
}

SimplexRef TruncSSet::degeneracy(const SimplexRef& s, int j) const {
  const int k = s.dim();
  if (j < 0 || j > k) throw Error("BadIndices", "degeneracy index out of range");
  std::vector<int> eta(k + 2);
  for (int l = 0; l <= k + 1; ++l) eta[l] = s.eta[l <= j ? l : l - 1];
  return {s.base_dim, s.base_index, std::move(eta)};
}

int TruncSSet::vertex_of(const SimplexRef& s, int j) const {
  return verts_[s.base_dim][s.base_index][s.eta[j]];
}

std::vector<SimplexRef> TruncSSet::all_simplices(int k) const {
  std::vector<SimplexRef> out;
  if (k < 0) return out;
  for (int mm = 0; mm <= std::min(k, dim_); ++mm) {
    for (int i = 0; i < count(mm); ++i) {
      // all monotone surjections [k] -> [mm]: choose k-mm collapse positions
      std::vector<int> comb(k - mm);
      for (int j = 0; j < k - mm; ++j) comb[j] = j;
      while (true) {
        std::vector<int> eta = word_to_eta(k, comb);
        out.push_back({mm, i, std::move(eta)});
        if (k == mm) break;
        // next combination of positions from [0, k-1]
        int pos = k - mm - 1;
        while (pos >= 0 && comb[pos] == k - 1 - (k - mm - 1 - pos)) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int q = pos + 1; q < k - mm; ++q) comb[q] = comb[q - 1] + 1;
      }
    }
  }
  return out;
}

Result<TruncSSet> TruncSSet::validate(const RawSSet& raw) {
  std::vector<Violation> errs;
  TruncSSet x;
  x.dim_ = raw.dim;
  if (raw.dim < 0) return Result<TruncSSet>::failure("BadIndices", "negative dimension bound");
  if (static_cast<int>(raw.simplices.size()) > raw.dim + 1)
    return Result<TruncSSet>::failure("BadIndices", "more simplex levels than the dimension bound");
  x.ids_.resize(raw.dim + 1);
  x.ix_.resize(raw.dim + 1);
  x.faces_.resize(raw.dim + 1);
  x.verts_.resize(raw.dim + 1);
  for (int n = 0; n < static_cast<int>(raw.simplices.size()); ++n)
    for (const auto& s : raw.simplices[n]) {
      if (!x.ix_[n].emplace(s.id, static_cast<int>(x.ids_[n].size())).second)
        errs.push_back({"DuplicateId", "simplex id repeated at dim " + std::to_string(n) + ": " + s.id});
      x.ids_[n].push_back(s.id);
    }
  if (!errs.empty()) return Result<TruncSSet>::failure(std::move(errs));

  for (int n = 0; n < static_cast<int>(raw.simplices.size()); ++n) {
    x.faces_[n].resize(x.ids_[n].size());
    for (int i = 0; i < x.count(n); ++i) {
      const auto& s = raw.simplices[n][i];
      if (n == 0) {
        if (!s.faces.empty()) errs.push_back({"BadFace", "0-simplex " + s.id + " lists faces"});
        continue;
      }
      if (static_cast<int>(s.faces.size()) != n + 1) {
        errs.push_back({"BadFace", s.id + " needs " + std::to_string(n + 1) + " faces"});
        continue;
      }
      for (const auto& fd : s.faces) {
        const int base_dim = n - 1 - static_cast<int>(fd.degeneracy.size());
        int bi = base_dim >= 0 ? x.index_of(base_dim, fd.ref) : -1;
        if (bi < 0) {
          errs.push_back({"BadFace", s.id + " face reference does not resolve: " + fd.ref});
          x.faces_[n][i].push_back(nondeg_ref(0, 0));
          continue;
        }
        for (int w : fd.degeneracy)
          if (w < 0 || w >= n - 1) errs.push_back({"BadFace", s.id + " has an out-of-range degeneracy"});
        x.faces_[n][i].push_back({base_dim, bi, word_to_eta(n - 1, fd.degeneracy)});
      }
    }
  }
  if (!errs.empty()) return Result<TruncSSet>::failure(std::move(errs));

  // vertices, computed bottom-up
  for (int n = 0; n <= raw.dim && n < static_cast<int>(raw.simplices.size()); ++n) {
    x.verts_[n].resize(x.ids_[n].size());
    for (int i = 0; i < x.count(n); ++i) {
      if (n == 0) {
        x.verts_[n][i] = {i};
        continue;
      }
      std::vector<int> vs(n + 1);
      SimplexRef self = nondeg_ref(n, i);
      SimplexRef last = x.face(self, n);   // keeps vertices 0..n-1
      SimplexRef first = x.face(self, 0);  // keeps vertices 1..n
      for (int j = 0; j < n; ++j) vs[j] = x.vertex_of(last, j);
      vs[n] = x.vertex_of(first, n - 1);
      x.verts_[n][i] = std::move(vs);
    }
  }

  // simplicial identities d_i d_j = d_{j-1} d_i (i < j) on nondegenerate simplices
  for (int n = 2; n <= raw.dim && n < static_cast<int>(raw.simplices.size()); ++n)
    for (int i = 0; i < x.count(n) && errs.size() < 16; ++i) {
      SimplexRef s = nondeg_ref(n, i);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (x.face(x.face(s, b), a) != x.face(x.face(s, a), b - 1)) {
            errs.push_back({"SimplicialIdentity",
                            "d_" + std::to_string(a) + " d_" + std::to_string(b) + " fails at " + x.ids_[n][i]});
          }
    }
  if (!errs.empty()) return Result<TruncSSet>::failure(std::move(errs));
  return Result<TruncSSet>::success(std::move(x));
}

RawSSet TruncSSet::to_raw() const {
  RawSSet raw;
  raw.dim = dim_;
  raw.simplices.resize(dim_ + 1);
  for (int n = 0; n <= dim_; ++n)
    for (int i = 0; i < count(n); ++i) {
      RawSSet::SimplexData s;
      s.id = ids_[n][i];
      for (const auto& f : n == 0 ? std::vector<SimplexRef>{} : faces_[n][i])
        s.faces.push_back(RawSSet::FaceData{ids_[f.base_dim][f.base_index], eta_to_word(f.eta)});
      raw.simplices[n].push_back(std::move(s));
    }
  return raw;
}

bool TruncSSet::operator==(const TruncSSet& o) const {
  if (dim_ != o.dim_) return false;
  for (int n = 0; n <= dim_; ++n) {
    if (count(n) != o.count(n)) return false;
    for (int i = 0; i < count(n); ++i) {
      int j = o.index_of(n, ids_[n][i]);
      if (j < 0) return false;
      if (n == 0) continue;
      const auto& fa = faces_[n][i];
      const auto& fb = o.faces_[n][j];
      for (int p = 0; p <= n; ++p) {
        if (fa[p].eta != fb[p].eta) return false;
        if (ids_[fa[p].base_dim][fa[p].base_index] != o.ids_[fb[p].base_dim][fb[p].base_index]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Nerve

TruncSSet nerve(const FinCat& c, int d) {
  RawSSet raw;
  raw.dim = std::max(d, 0);
  raw.simplices.resize(raw.dim + 1);
  for (const auto& o : c.objects()) raw.simplices[0].push_back({o, {}});

  std::vector<int> nonid;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) nonid.push_back(m);

  auto chain_id = [&](const std::vector<int>& ch) {
    std::vector<std::string> ids;
    for (int m : ch) ids.push_back(c.morphisms()[m].id);
    return join(ids, "*");
  };

  std::vector<std::vector<int>> prev;  // chains at the previous dimension
  for (int n = 1; n <= raw.dim; ++n) {
    std::vector<std::vector<int>> cur;
    if (n == 1) {
      for (int m : nonid) cur.push_back({m});
    } else {
      for (const auto& ch : prev)
        for (int m : nonid)
          if (c.src_of(m) == c.tgt_of(ch.back())) {
            auto ext = ch;
            ext.push_back(m);
            cur.push_back(std::move(ext));
          }
    }
    for (const auto& ch : cur) {
      RawSSet::SimplexData s;
      s.id = chain_id(ch);
      if (n == 1) {
        s.faces.push_back(RawSSet::FaceData{c.objects()[c.tgt_of(ch[0])], {}});
        s.faces.push_back(RawSSet::FaceData{c.objects()[c.src_of(ch[0])], {}});
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == 0) {
            s.faces.push_back(RawSSet::FaceData{chain_id({ch.begin() + 1, ch.end()}), {}});
          } else if (i == n) {
            s.faces.push_back(RawSSet::FaceData{chain_id({ch.begin(), ch.end() - 1}), {}});
          } else {
            int comp = c.compose(ch[i], ch[i - 1]);
            std::vector<int> entries;
            for (int p = 0; p < i - 1; ++p) entries.push_back(ch[p]);
            entries.push_back(comp);
            for (int p = i + 1; p < n; ++p) entries.push_back(ch[p]);
            if (c.is_identity(comp)) {
              std::vector<int> base;
              for (int e : entries)
                if (!c.is_identity(e)) base.push_back(e);
              // only the composed slot may be an identity in a nondegenerate chain
              if (base.empty())
                s.faces.push_back(RawSSet::FaceData{c.objects()[c.src_of(ch[0])], {0}});
              else
                s.faces.push_back(RawSSet::FaceData{chain_id(base), {i - 1}});
            } else {
              s.faces.push_back(RawSSet::FaceData{chain_id(entries), {}});
            }
          }
        }
      }
      raw.simplices[n].push_back(std::move(s));
    }
    prev = std::move(cur);
  }
  return TruncSSet::validate(raw).take();
}

// ---------------------------------------------------------------------------
// Standard complexes

namespace {

std::string subset_id(const std::vector<int>& s) {
  std::vector<std::string> parts;
  for (int v : s) parts.push_back(std::to_string(v));
  return "{" + join(parts, ",") + "}";
}

bool subset_allowed(StdKind kind, int m, int k, const std::vector<int>& s) {
  const int size = static_cast<int>(s.size());
  if (kind == StdKind::Delta) return true;
  if (size == m + 1) return false;  // the full simplex
  if (kind == StdKind::Boundary) return true;
  // horn: also exclude the face opposite the k-th vertex
  if (size == m) {
    int missing = 0;
    for (int i = 0, j = 0; i <= m; ++i) {
      if (j < size && s[j] == i)
        ++j;
      else
        missing = i;
    }
    if (missing == k) return false;
  }
  return true;
}

void gen_subsets(int m, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int pos = size - 1;
    while (pos >= 0 && cur[pos] == m - (size - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int q = pos + 1; q < size; ++q) cur[q] = cur[q - 1] + 1;
  }
}

}  // namespace

TruncSSet standard_complex(StdKind kind, int m, int k) {
  if (m < 0) throw Error("BadIndices", "m must be nonnegative");
  if (kind == StdKind::Horn && (m < 1 || k < 0 || k > m)) throw Error("BadIndices", "horn needs m >= 1, 0 <= k <= m");
  if (kind == StdKind::Boundary && m < 0) throw Error("BadIndices", "bad boundary index");
  RawSSet raw;
  raw.dim = m;
  raw.simplices.resize(m + 1);
  for (int n = 0; n <= m; ++n) {
    std::vector<std::vector<int>> subsets;
    gen_subsets(m, n + 1, subsets);
    for (const auto& s : subsets) {
      if (!subset_allowed(kind, m, k, s)) continue;
      RawSSet::SimplexData sd_;
      sd_.id = subset_id(s);
      for (int i = 0; i <= n && n > 0; ++i) {
        auto f = s;
        f.erase(f.begin() + i);
        sd_.faces.push_back(RawSSet::FaceData{subset_id(f), {}});
      }
      raw.simplices[n].push_back(std::move(sd_));
    }
  }
  return TruncSSet::validate(raw).take();
}

// ---------------------------------------------------------------------------
// Barycentric subdivision (flag model)

namespace {

struct FacePoset {
  // global element = (dim, index), numbered dim-major
  std::vector<std::pair<int, int>> elements;
  std::vector<int> offset;                 // per dim
  std::vector<std::vector<char>> below_;   // below_[a][b]: a < b strictly
  int global(int n, int i) const { return offset[n] + i; }
  bool below(int a, int b) const { return below_[a][b]; }
};

FacePoset face_poset(const TruncSSet& x) {
  FacePoset p;
  p.offset.resize(x.dim_bound() + 1, 0);
  for (int n = 0; n <= x.dim_bound(); ++n) {
    p.offset[n] = static_cast<int>(p.elements.size());
    for (int i = 0; i < x.count(n); ++i) p.elements.push_back({n, i});
  }
  const int total = static_cast<int>(p.elements.size());
  p.below_.assign(total, std::vector<char>(total, 0));
  // direct faces, then transitive closure by increasing dimension
  for (int n = 1; n <= x.dim_bound(); ++n)
    for (int i = 0; i < x.count(n); ++i) {
      int g = p.global(n, i);
      for (const auto& f : x.faces_of(n, i)) {
        int fg = p.global(f.base_dim, f.base_index);
        p.below_[fg][g] = 1;
        for (int a = 0; a < total; ++a)
          if (p.below_[a][fg]) p.below_[a][g] = 1;
      }
    }
  return p;
}

std::string flag_token(const TruncSSet& x, int n, int i) {
  return std::to_string(n) + ":" + x.id_of(n, i);
}

std::string flag_id(const TruncSSet& x, const FacePoset& p, const std::vector<int>& flag) {
  std::vector<std::string> toks;
  for (int g : flag) toks.push_back(flag_token(x, p.elements[g].first, p.elements[g].second));
  return "[" + join(toks, "<") + "]";
}

}  // namespace

TruncSSet sd(const TruncSSet& x) {
  // regularity: nondegenerate faces and distinct vertices throughout
  for (int n = 1; n <= x.dim_bound(); ++n)
    for (int i = 0; i < x.count(n); ++i) {
      for (const auto& f : x.faces_of(n, i))
        if (f.degenerate())
          throw Error("NotRegular", "nondegenerate simplex " + x.id_of(n, i) + " has a degenerate face");
      SimplexRef s = nondeg_ref(n, i);
      std::set<int> vs;
      for (int j = 0; j <= n; ++j) vs.insert(x.vertex_of(s, j));
      if (static_cast<int>(vs.size()) != n + 1)
        throw Error("NotRegular", "nondegenerate simplex " + x.id_of(n, i) + " has repeated vertices");
    }

  FacePoset p = face_poset(x);
  const int total = static_cast<int>(p.elements.size());

  RawSSet raw;
  raw.dim = x.dim_bound();
  raw.simplices.resize(raw.dim + 1);

  std::vector<std::vector<int>> flags;
  for (int g = 0; g < total; ++g) flags.push_back({g});
  int len = 1;
  while (!flags.empty() && len - 1 <= raw.dim) {
    for (const auto& fl : flags) {
      RawSSet::SimplexData s;
      s.id = flag_id(x, p, fl);
      if (len > 1)
        for (int i = 0; i < len; ++i) {
          auto sub = fl;
          sub.erase(sub.begin() + i);
          s.faces.push_back(RawSSet::FaceData{flag_id(x, p, sub), {}});
        }
      raw.simplices[len - 1].push_back(std::move(s));
    }
    if (len - 1 == raw.dim) break;
    std::vector<std::vector<int>> next;
    for (const auto& fl : flags)
      for (int g = 0; g < total; ++g)
        if (p.below(fl.back(), g)) {
          auto ext = fl;
          ext.push_back(g);
          next.push_back(std::move(ext));
        }
    flags = std::move(next);
    ++len;
  }
  return TruncSSet::validate(raw).take();
}

// ---------------------------------------------------------------------------
// Categorification

FinCat categorify(const TruncSSet& x, std::int64_t budget) {
  Presentation p;
  for (int i = 0; i < x.count(0); ++i) p.vertices.push_back(x.id_of(0, i));
  for (int e = 0; e < x.count(1); ++e) {
    const auto& fs = x.faces_of(1, e);
    p.edges.push_back({x.id_of(1, e), fs[1].base_index, fs[0].base_index});
  }
  auto path_of = [&](const SimplexRef& r) -> std::vector<int> {
    if (r.degenerate()) return {};
    return {r.base_index};
  };
  for (int s = 0; s < x.count(2); ++s) {
    const auto& fs = x.faces_of(2, s);
    Presentation::Relation rel;
    rel.lhs = path_of(fs[1]);
    rel.rhs = path_of(fs[2]);
    auto after = path_of(fs[0]);
    rel.rhs.insert(rel.rhs.end(), after.begin(), after.end());
    rel.src = x.vertex_of(nondeg_ref(2, s), 0);
    if (rel.lhs != rel.rhs) p.relations.push_back(std::move(rel));
  }
  try {
    return *present_acyclic(p, budget).cat;
  } catch (const Error& e) {
    if (e.code() == "CyclicPresentation")
      throw Error("CyclicOneSkeleton", "categorify requires an acyclic 1-skeleton");
    throw;
  }
}

// ---------------------------------------------------------------------------
// Generating cells

namespace {

GeneratingCell cell_between(const TruncSSet& sub, const TruncSSet& total, std::int64_t budget) {
  GeneratingCell cell;
  cell.source = share(categorify(sd(sd(sub)), budget));
  cell.target = share(categorify(sd(sd(total)), budget));
  if (!is_poset(*cell.source) || !is_poset(*cell.target))
    throw Error("NotPoset", "generating cell endpoints must be posets");
  std::map<std::string, std::string> ob, mo;
  for (const auto& o : cell.source->objects()) {
    if (cell.target->object_index(o) < 0) throw Error("Internal", "cell source object missing in target: " + o);
    ob[o] = o;
  }
  for (int m = 0; m < cell.source->morphism_count(); ++m) {
    const auto& mm = cell.source->morphisms()[m];
    int sx = cell.target->object_index(mm.src), tx = cell.target->object_index(mm.tgt);
    const auto& hs = cell.target->hom(sx, tx);
    if (hs.size() != 1) throw Error("Internal", "poset hom set is not a singleton");
    mo[mm.id] = cell.target->morphisms()[hs[0]].id;
  }
  cell.inclusion = validate_functor(cell.source, cell.target, ob, mo).take();
  return cell;
}

}  // namespace

GeneratingCell generating_cell(int m, std::optional<int> horn, std::int64_t budget) {
  if (m < 0) throw Error("BadIndices", "m must be nonnegative");
  TruncSSet total = standard_complex(StdKind::Delta, m);
  TruncSSet sub = horn ? standard_complex(StdKind::Horn, m, *horn) : standard_complex(StdKind::Boundary, m);
  return cell_between(sub, total, budget);
}

GeneratingCell horn_into_boundary_cell(int m, int k, std::int64_t budget) {
  TruncSSet total = standard_complex(StdKind::Boundary, m);
  TruncSSet sub = standard_complex(StdKind::Horn, m, k);
  return cell_between(sub, total, budget);
}

// ---------------------------------------------------------------------------
// Simplicial maps and Ex

SimplexRef SSetMap::apply(const SimplexRef& s) const {
  const SimplexRef& img = image[s.base_dim][s.base_index];
  return {img.base_dim, img.base_index, compose_eta(img.eta, s.eta)};
}

std::string SSetMap::key() const {
  std::string k;
  for (const auto& level : image) {
    for (const auto& r : level) k += ref_key(r) + "|";
    k += ";";
  }
  return k;
}

std::vector<SSetMap> enumerate_sset_maps(const TruncSSet& a, const TruncSSet& x, std::int64_t budget) {
  std::vector<std::vector<SimplexRef>> cands(a.dim_bound() + 1);
  for (int n = 0; n <= a.dim_bound(); ++n)
    if (a.count(n) > 0) cands[n] = x.all_simplices(n);

  std::vector<SSetMap> out;
  SSetMap cur;
  cur.image.resize(a.dim_bound() + 1);
  for (int n = 0; n <= a.dim_bound(); ++n) cur.image[n].resize(a.count(n), nondeg_ref(0, 0));
  std::int64_t nodes = 0;

  std::function<void(int, int)> rec = [&](int n, int i) {
    while (n <= a.dim_bound() && i >= a.count(n)) {
      ++n;
      i = 0;
    }
    if (n > a.dim_bound()) {
      out.push_back(cur);
      return;
    }
    for (const auto& cand : cands[n]) {
      if (++nodes > budget) throw Error("EnumerationBudgetExceeded", "simplicial map enumeration over budget");
      bool ok = true;
      for (int f = 0; f <= n && n > 0 && ok; ++f) {
        SimplexRef lhs = x.face(cand, f);
        SimplexRef rhs = cur.apply(a.faces_of(n, i)[f]);
        if (lhs != rhs) ok = false;
      }
      if (!ok) continue;
      cur.image[n][i] = cand;
      rec(n, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Sd of a vertex map on standard simplices: sends a flag of subsets of [m]
// to the (possibly collapsed) flag of image subsets.
struct SdInducedMap {
  // per dim, per flag index of the source subdivision: a ref in the target
  std::vector<std::vector<SimplexRef>> image;
};

std::vector<int> apply_vertex_map(const std::vector<int>& vmap, const std::vector<int>& s) {
  std::set<int> img;
  for (int v : s) img.insert(vmap[v]);
  return {img.begin(), img.end()};
}

// Enumerate the subsets of Δ[m] in the order standard_complex generates them.
std::vector<std::vector<std::vector<int>>> delta_subsets(int m) {
  std::vector<std::vector<std::vector<int>>> per_dim(m + 1);
  for (int n = 0; n <= m; ++n) gen_subsets(m, n + 1, per_dim[n]);
  return per_dim;
}

// Flags of SdΔ[m] as (dim, index) chains, reconstructed in sd()'s order.
struct SdDeltaModel {
  TruncSSet sdx;                               // Sd Δ[m]
  std::vector<std::vector<std::vector<int>>> subsets;  // of Δ[m]
  TruncSSet delta;

  explicit SdDeltaModel(int m)
      : sdx(sd(standard_complex(StdKind::Delta, m))),
        subsets(delta_subsets(m)),
        delta(standard_complex(StdKind::Delta, m)) {}
};

// Builds the map SdΔ[a] -> SdΔ[b] induced by a monotone vertex map [a] -> [b].
SdInducedMap sd_induced(const SdDeltaModel& from, const SdDeltaModel& to, const std::vector<int>& vmap) {
  SdInducedMap out;
  out.image.resize(from.sdx.dim_bound() + 1);
  // a flag component of SdΔ[a] is a nondeg simplex of Δ[a], i.e. a subset;
  // recover each flag's components from its faces by peeling the last vertex
  // (the flag id is "[t0<t1<...]" but parsing positions is avoided: vertex j
  // of a flag is its j-th component, a 0-simplex of SdΔ[a] = subset of [a])
  for (int n = 0; n <= from.sdx.dim_bound(); ++n) {
    for (int i = 0; i < from.sdx.count(n); ++i) {
      SimplexRef fl = nondeg_ref(n, i);
      // components via vertices: vertex j of the flag = j-th element
      std::vector<std::vector<int>> comps;
      for (int j = 0; j <= n; ++j) {
        int v0 = from.sdx.vertex_of(fl, j);
        // v0 indexes a 0-simplex of SdΔ[a], whose id is "d:{...}"; map back
        // to the subset by position: 0-simplices of SdΔ[a] are the elements
        // of the face poset in (dim, index) order
        int acc = v0;
        int dim_found = -1, idx_found = -1;
        for (int dd = 0; dd <= from.delta.dim_bound(); ++dd) {
          if (acc < from.delta.count(dd)) {
            dim_found = dd;
            idx_found = acc;
            break;
          }
          acc -= from.delta.count(dd);
        }
        if (dim_found < 0) throw Error("Internal", "flag vertex out of range");
        comps.push_back(from.subsets[dim_found][idx_found]);
      }
      // image chain (weakly ascending after the vertex map)
      std::vector<std::vector<int>> img;
      for (const auto& s : comps) img.push_back(apply_vertex_map(vmap, s));
      // collapse equal consecutive subsets
      std::vector<std::vector<int>> base;
      std::vector<int> eta(img.size());
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (base.empty() || base.back() != img[j]) base.push_back(img[j]);
        eta[j] = static_cast<int>(base.size()) - 1;
      }
      // find the base flag's index in `to`
      std::vector<std::string> toks;
      for (const auto& s : base) {
        int dd = static_cast<int>(s.size()) - 1;
        toks.push_back(std::to_string(dd) + ":" + subset_id(s));
      }
      std::string fid = "[" + join(toks, "<") + "]";
      int bdim = static_cast<int>(base.size()) - 1;
      int bix = to.sdx.index_of(bdim, fid);
      if (bix < 0) throw Error("Internal", "induced flag missing in target subdivision: " + fid);
      out.image[n].push_back({bdim, bix, std::move(eta)});
    }
  }
  return out;
}

SSetMap precompose(const SSetMap& f, const SdInducedMap& along) {
  SSetMap out;
  out.image.resize(along.image.size());
  for (std::size_t n = 0; n < along.image.size(); ++n)
    for (const auto& r : along.image[n]) out.image[n].push_back(f.apply(r));
  return out;
}

std::vector<int> delta_vertex_map(int n, int skip) {  // δ_i: [n-1] -> [n]
  std::vector<int> v;
  for (int j = 0; j <= n; ++j)
    if (j != skip) v.push_back(j);
  return v;
}

std::vector<int> sigma_vertex_map(int n, int dup) {  // σ_j: [n+1] -> [n]
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= dup ? j : j - 1);
  return v;
}

}  // namespace

TruncSSet ex(const TruncSSet& x, int n_max, std::int64_t budget) {
  if (n_max < 0) throw Error("BadIndices", "n_max must be nonnegative");
  std::vector<SdDeltaModel> models;
  for (int n = 0; n <= n_max; ++n) models.emplace_back(n);

  // all maps per level
  std::vector<std::vector<SSetMap>> maps(n_max + 1);
  std::vector<std::map<std::string, int>> map_ix(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    maps[n] = enumerate_sset_maps(models[n].sdx, x, budget);
    std::sort(maps[n].begin(), maps[n].end(),
              [](const SSetMap& a, const SSetMap& b) { return a.key() < b.key(); });
    for (int i = 0; i < static_cast<int>(maps[n].size()); ++i) map_ix[n][maps[n][i].key()] = i;
  }

  // precomposition tables
  std::vector<std::vector<SdInducedMap>> sd_delta(n_max + 1), sd_sigma(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i)
      sd_delta[n].push_back(sd_induced(models[n - 1], models[n], delta_vertex_map(n, i)));
  for (int n = 0; n + 1 <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      sd_sigma[n].push_back(sd_induced(models[n + 1], models[n], sigma_vertex_map(n, j)));

  // degeneracy images at each level
  std::vector<std::set<std::string>> degen(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    for (const auto& g : maps[n - 1])
      for (int j = 0; j <= n - 1; ++j) degen[n].insert(precompose(g, sd_sigma[n - 1][j]).key());

  // nondegenerate maps, with ids in sorted-key order
  std::vector<std::vector<int>> nd(n_max + 1);  // indices into maps[n]
  std::vector<std::map<std::string, int>> nd_ix(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i < static_cast<int>(maps[n].size()); ++i)
      if (!degen[n].count(maps[n][i].key())) {
        nd_ix[n][maps[n][i].key()] = static_cast<int>(nd[n].size());
        nd[n].push_back(i);
      }

  // Eilenberg-Zilber stripping of an arbitrary map to (nondeg level, index, eta)
  std::function<std::tuple<int, int, std::vector<int>>(const SSetMap&, int)> strip =
      [&](const SSetMap& m, int level) -> std::tuple<int, int, std::vector<int>> {
    for (int j = 0; j + 1 <= level; ++j) {
      SSetMap g = precompose(m, sd_delta[level][j]);
      if (precompose(g, sd_sigma[level - 1][j]).key() == m.key()) {
        auto [bl, bi, eta] = strip(g, level - 1);
        // m = g ∘ Sd(σ_j), so the total surjection picks up σ_j
        std::vector<int> sig = sigma_vertex_map(level - 1, j);
        return {bl, bi, compose_eta(eta, sig)};
      }
    }
    auto it = nd_ix[level].find(m.key());
    if (it == nd_ix[level].end()) throw Error("Internal", "map not found during stripping");
    std::vector<int> id_eta(level + 1);
    for (int q = 0; q <= level; ++q) id_eta[q] = q;
    return {level, it->second, id_eta};
  };

  RawSSet raw;
  raw.dim = n_max;
  raw.simplices.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    for (std::size_t r = 0; r < nd[n].size(); ++r) {
      RawSSet::SimplexData s;
      s.id = "e" + std::to_string(n) + "_" + std::to_string(r);
      const SSetMap& f = maps[n][nd[n][r]];
      for (int i = 0; i <= n && n > 0; ++i) {
        SSetMap df = precompose(f, sd_delta[n][i]);
        auto [bl, bi, eta] = strip(df, n - 1);
        s.faces.push_back(RawSSet::FaceData{"e" + std::to_string(bl) + "_" + std::to_string(bi), eta_to_word(eta)});
      }
      raw.simplices[n].push_back(std::move(s));
    }
  return TruncSSet::validate(raw).take();
}

TruncSSet ex2_nerve(const FinCat& c, int n_max, std::int64_t budget) {
  TruncSSet n1 = nerve(c, n_max);
  TruncSSet e1 = ex(n1, n_max, budget);
  return ex(e1, n_max, budget);
}

// ---------------------------------------------------------------------------
// Fixed points of a nerve under the induced action

TruncSSet nerve_fixed_points(const GCategory& x, const Subgroup& h, int d) {
  TruncSSet n = nerve(*x.base, d);
  const FinCat& c = *x.base;

  // Recover each chain's morphism entries from the face data: the head face
  // d_n and tail face d_0 of a nondegenerate chain are nondegenerate chains.
  std::vector<std::vector<std::vector<int>>> entries(n.dim_bound() + 1);
  for (int dim = 1; dim <= n.dim_bound(); ++dim) {
    entries[dim].resize(n.count(dim));
    for (int i = 0; i < n.count(dim); ++i) {
      if (dim == 1) {
        entries[dim][i] = {c.morphism_index(n.id_of(1, i))};
        continue;
      }
      const auto& head = n.faces_of(dim, i)[dim];
      const auto& tail = n.faces_of(dim, i)[0];
      entries[dim][i] = entries[dim - 1][head.base_index];
      entries[dim][i].push_back(entries[dim - 1][tail.base_index].back());
    }
  }

  auto fixed_simplex = [&](int dim, int i) {
    for (int g : h) {
      if (dim == 0) {
        if (x.sigma[g].apply_obj(c.object_index(n.id_of(0, i))) != c.object_index(n.id_of(0, i))) return false;
      } else {
        for (int e : entries[dim][i])
          if (x.sigma[g].apply_mor(e) != e) return false;
      }
    }
    return true;
  };

  RawSSet kept;
  kept.dim = n.dim_bound();
  kept.simplices.resize(kept.dim + 1);
  RawSSet full = n.to_raw();
  for (int dim = 0; dim <= n.dim_bound(); ++dim)
    for (int i = 0; i < n.count(dim); ++i)
      if (fixed_simplex(dim, i)) kept.simplices[dim].push_back(full.simplices[dim][i]);
  return TruncSSet::validate(kept).take();
}

}  // namespace gcat
