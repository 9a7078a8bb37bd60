#include "gcat/homology.hpp"

#include "gcat/util.hpp"

#include <algorithm>

namespace gcat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("BadIndices", "matrix dimensions do not match");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error("BadIndices", "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithResult res;
  IntMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  res.u = IntMatrix::identity(rows);
  res.v = IntMatrix::identity(cols);

  auto row_swap = [&](int a, int b) {
    for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < rows; ++j) std::swap(res.u.at(a, j), res.u.at(b, j));
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < cols; ++i) std::swap(res.v.at(i, a), res.v.at(i, b));
  };
  auto row_add = [&](int dst, int src, const BigInt& c) {  // row dst += c * row src
    for (int j = 0; j < cols; ++j) m.at(dst, j) += c * m.at(src, j);
    for (int j = 0; j < rows; ++j) res.u.at(dst, j) += c * res.u.at(src, j);
  };
  auto col_add = [&](int dst, int src, const BigInt& c) {
    for (int i = 0; i < rows; ++i) m.at(i, dst) += c * m.at(i, src);
    for (int i = 0; i < cols; ++i) res.v.at(i, dst) += c * res.v.at(i, src);
  };
  auto row_negate = [&](int r) {
    for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
    for (int j = 0; j < rows; ++j) res.u.at(r, j) = -res.u.at(r, j);
  };

  int t = 0;
  const int bound = std::min(rows, cols);
  while (t < bound) {
    // smallest nonzero pivot in the remaining block limits coefficient growth
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pr < 0 || abs(m.at(i, j)) < abs(m.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    row_swap(t, pr);
    col_swap(t, pc);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m.at(i, t) == 0) continue;
      BigInt q = m.at(i, t) / m.at(t, t);
      row_add(i, t, -q);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m.at(t, j) == 0) continue;
      BigInt q = m.at(t, j) / m.at(t, t);
      col_add(j, t, -q);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainders became new smaller candidates
    // divisibility fix-up: pivot must divide the rest of the block
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          row_add(t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    if (m.at(t, t) < 0) row_negate(t);
    ++t;
  }
  res.d = std::move(m);
  res.rank = t;
  for (int i = 0; i < t; ++i) res.divisors.push_back(res.d.at(i, i));
  return res;
}

std::vector<IntMatrix> chain_complex(const TruncSSet& x) {
  std::vector<IntMatrix> out;
  for (int n = 1; n <= x.dim_bound(); ++n) {
    IntMatrix d(std::max(x.count(n - 1), 0), x.count(n));
    for (int j = 0; j < x.count(n); ++j) {
      const auto& faces = x.faces_of(n, j);
      for (int i = 0; i <= n; ++i) {
        if (faces[i].degenerate()) continue;
        d.at(faces[i].base_index, j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(d));
  }
  for (std::size_t n = 1; n < out.size(); ++n)
    if (!out[n - 1].mul(out[n]).is_zero()) throw Error("Internal", "boundary squared is nonzero");
  return out;
}

std::string show(const HomologyGroup& h) {
  std::string s = "H" + std::to_string(h.degree) + " = ";
  std::vector<std::string> parts;
  if (h.betti == 1) parts.push_back("Z");
  if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
  for (const auto& tq : h.torsion) parts.push_back("Z/" + tq.str());
  if (parts.empty()) return s + "0";
  return s + join(parts, " + ");
}

std::vector<HomologyGroup> homology(const TruncSSet& x) {
  std::vector<HomologyGroup> out;
  if (x.dim_bound() < 1) {
    if (x.dim_bound() == 0) out.push_back({0, x.count(0), {}});
    return out;
  }
  auto complex = chain_complex(x);
  std::vector<SmithResult> snf;
  for (const auto& d : complex) snf.push_back(smith_normal_form(d));
  for (int n = 0; n < x.dim_bound(); ++n) {
    HomologyGroup h;
    h.degree = n;
    const int dim_cn = x.count(n);
    const int rank_dn = n == 0 ? 0 : snf[n - 1].rank;       // rank of ∂_n : C_n -> C_{n-1}
    const int rank_dn1 = snf[n].rank;                       // rank of ∂_{n+1}
    h.betti = dim_cn - rank_dn - rank_dn1;
    for (const auto& q : snf[n].divisors)
      if (q > 1) h.torsion.push_back(q);
    out.push_back(std::move(h));
  }
  return out;
}

HomologyComparison compare_homology(const FinFunctor& f, int d) {
  HomologyComparison cmp;
  cmp.source = homology(nerve(*f.source(), d));
  cmp.target = homology(nerve(*f.target(), d));
  cmp.equal = cmp.source == cmp.target;
  cmp.verdict = cmp.equal
                    ? "homology agrees up to degree " + std::to_string(d - 1) +
                          "; necessary for a weak equivalence, never sufficient"
                    : "homology differs: not a weak equivalence";
  return cmp;
}

}  // namespace gcat
