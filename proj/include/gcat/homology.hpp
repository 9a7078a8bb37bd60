#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gcat/sset.hpp"

namespace gcat {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& other) const;
  bool is_zero() const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  BigInt determinant() const;  // Bareiss fraction-free elimination

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithResult {
  IntMatrix d;  // diagonal, d1 | d2 | ...
  IntMatrix u;  // unimodular, u * m * v = d
  IntMatrix v;
  int rank = 0;
  std::vector<BigInt> divisors;  // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

// Boundary operators of the nondegenerate chain complex of a truncated
// simplicial set: entry (i, j) of the n-th matrix is the signed count of
// face i among the faces of simplex j; degenerate faces contribute zero.
// Asserts ∂∂ = 0.
std::vector<IntMatrix> chain_complex(const TruncSSet& x);

struct HomologyGroup {
  int degree = 0;
  int betti = 0;
  std::vector<BigInt> torsion;
  bool operator==(const HomologyGroup& o) const {
    return degree == o.degree && betti == o.betti && torsion == o.torsion;
  }
};

std::string show(const HomologyGroup& h);

// H_0 .. H_{d-1} of a d-truncated simplicial set.
std::vector<HomologyGroup> homology(const TruncSSet& x);

struct HomologyComparison {
  std::vector<HomologyGroup> source, target;
  bool equal = false;
  // equality of homology is necessary, never sufficient, for the functor to
  // be a weak equivalence
  std::string verdict;
};

HomologyComparison compare_homology(const FinFunctor& f, int d);

}  // namespace gcat
