#pragma once

#include <string>
#include <vector>

#include "orbalg/rational.hpp"

namespace orbalg {

// A 1-indexed integer sequence truncated at a fixed order: values[i] holds
// term i+1, and order() is the number of stored terms.
struct IntSeries {
  std::vector<Int> values;

  IntSeries() = default;
  explicit IntSeries(std::vector<Int> v) : values(std::move(v)) {}

  static IntSeries zeros(int order) { return IntSeries(std::vector<Int>(order, 0)); }
  // The sequence 1,1,...,1 (count ones) padded with zeros up to order.
  static IntSeries ones(int count, int order);

  int order() const { return static_cast<int>(values.size()); }
  const Int& at(int n) const;  // 1-indexed
  Int& at(int n);

  friend bool operator==(const IntSeries&, const IntSeries&) = default;
};

enum class Direction { Forward, Inverse };

// Forward: w_n = a_n + sum_{k=1}^{n-1} a_k w_{n-k}  (letters -> words).
// Inverse recovers a from w.  Both keep the input's order.
IntSeries invert_transform(const IntSeries& s, Direction d);

// Forward maps the generator counts l to the orbit counts w through the
// auxiliary series c_n = sum_{d|n} d*l_d.  The inverse recovers l from w;
// for integer input the recovered exponents are always integers, but the
// division is checked and a failure reports the first bad index.
IntSeries euler_transform(const IntSeries& s, Direction d);

// c_n = n*a_n + sum_{k=1}^{n-1} c_k a_{n-k}: the auxiliary series shared by
// the invert and euler transforms of the same letter counts.
IntSeries aux_from_letters(const IntSeries& a);

// l_n = (1/n) sum_{d|n} mobius(n/d) c_d.  Errors when some l_n is not a
// nonnegative integer, naming the first failing index.
IntSeries lyndon_from_aux(const IntSeries& c);

// The composite a -> c -> l.
IntSeries lyndon_from_letters(const IntSeries& a);

int mobius(long n);

// Checks 1 - sum a_n x^n = prod (1 - x^n)^{l_n} through the given order.
struct WeighReport {
  bool ok = true;
  int first_mismatch = 0;  // 1-indexed coefficient, 0 when ok
  Int lhs, rhs;            // the two coefficient values at the mismatch
};
WeighReport verify_weigh_identity(const IntSeries& a, const IntSeries& l, int order);

// Is b, through the given order, the orbit-count sequence of some letter
// profile with nonnegative integer generator counts?  The witness holds the
// recovered generator counts when ok.
struct RealizabilityReport {
  bool ok = true;
  int failing_index = 0;
  std::vector<Int> witness;
};
RealizabilityReport exactly_realizable(const IntSeries& b, int order);

// One integer per line, term 1 first.  Blank lines and '#' comments skipped
// on parse.
std::string format_series(const IntSeries& s);
IntSeries parse_series(const std::string& text);

}  // namespace orbalg
