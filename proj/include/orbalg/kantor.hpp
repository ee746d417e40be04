#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "orbalg/rational.hpp"

namespace orbalg {

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// All e-element subsets of {1,...,d} in colexicographic order, each subset a
// sorted vector.  Row/column indices of the incidence matrices follow this
// order.
std::vector<std::vector<int>> subsets_colex(int d, int e);

// Inclusion matrix of e-subsets against f-subsets of a d-element ground set:
// entry (E, F) is 1 when E is contained in F, else 0.  Requires
// 0 <= e < f <= d - e.
RationalMatrix incidence_matrix(int d, int e, int f);

// Weights are keyed by (f-e)-element subsets of the reference set e0; every
// (f-e)-subset not contained in e0 implicitly has weight 1, and keys missing
// from the map default to 1 as well.
using SubsetWeights = std::map<std::vector<int>, Rational>;

// Weighted variant: entry (E, F) is w(F \ E) when E is contained in F, else
// 0.  The reference set e0 is an e-subset of {1..d}; weights are free on the
// (f-e)-subsets of e0 and forced to 1 everywhere else.  Requires
// 0 <= e < f <= d - 2e.
RationalMatrix weighted_incidence_matrix(int d, int e, int f, const std::vector<int>& e0,
                                         const SubsetWeights& weights);

// Exact rank over the rationals by fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy.
std::size_t rank_exact(const RationalMatrix& m);

// Exact rank by straightforward rational Gaussian elimination.  Slower, kept
// as an independently coded cross-check of rank_exact.
std::size_t rank_rational_gauss(const RationalMatrix& m);

}  // namespace orbalg
