#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbalg/lyndon.hpp"
#include "orbalg/model.hpp"

namespace orbalg {

// A finitely supported rational combination of orbit keys over one model.
// Terms iterate in ascending orbit order; zero coefficients are not stored.
class AlgebraElement {
 public:
  using Terms = std::map<OrbitKey, Rational, OrbitKeyLess>;

  explicit AlgebraElement(GroupModel model) : model_(std::move(model)) {}
  static AlgebraElement basis(const GroupModel& model, const OrbitKey& key);

  const GroupModel& model() const { return model_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(const OrbitKey& key) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const OrbitKey& key, const Rational& c);

  // The weight when every term has the same weight; nullopt for zero or
  // mixed elements.
  std::optional<int> homogeneous_weight() const;
  std::vector<int> weights() const;  // distinct term weights, ascending
  AlgebraElement component(int weight) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& scalar, AlgebraElement a) {
    return a *= scalar;
  }

  bool equals(const AlgebraElement& other) const;

 private:
  GroupModel model_;
  Terms terms_;
};

// Structure constants of the orbit basis: the coefficient of each weight
// (wv + ww) orbit in the product of the two basis elements.  Memoized on the
// model.  Terms come back in ascending orbit order with positive counts.
const std::vector<std::pair<OrbitKey, Int>>& structure_constants(const GroupModel& model,
                                                                 const OrbitKey& v,
                                                                 const OrbitKey& w);

// The convolution product: (fg)(X) sums f(Y)g(X \ Y) over m-subsets Y when f
// lives in weight m.  Defined for any pair of elements over the same model
// by bilinear extension.
AlgebraElement product(const AlgebraElement& f, const AlgebraElement& g);

// The product of two word basis elements in a wreath-A-like model, viewed as
// the model's deformation of the plain shuffle: it restricts to shuffle(v, w)
// on the letter multiset [v] + [w], and every other term has a strictly
// larger letter multiset (hence comes later in the orbit order).
AlgebraElement complete_shuffle(const Word& v, const Word& w, const GroupModel& model);

// The weight-1 element that sums every weight-1 orbit with coefficient 1.
AlgebraElement epsilon(const GroupModel& model);

// The generator attached to a word: for w with Lyndon factorization
// l1^r1 ... lk^rk, the product of the basis elements of the li (each taken
// ri times) divided by r1! ... rk!.  Its leading term is the basis element
// of w with coefficient 1.
AlgebraElement sbar_basis(const Word& w, const GroupModel& model);

using GeneratorCoords = std::map<Word, Rational, WordOrbitLess>;

// Coordinates of a homogeneous-by-parts element in the generator basis
// { sbar_basis(w) }.  Exact by unitriangular forward substitution, one
// weight at a time.  Requires a wreath-A-like model whose enumeration covers
// every weight present in f.
GeneratorCoords to_generator_basis(const AlgebraElement& f);
AlgebraElement from_generator_basis(const GeneratorCoords& coords, const GroupModel& model);

// The least orbit in the support of a nonzero homogeneous element.
OrbitKey leading_orbit(const AlgebraElement& f);

// "<p> <key>" or "<p>/<q> <key>" per line, ascending orbit order.  Blank
// lines and '#' comments are skipped on parse.
std::string format_element(const AlgebraElement& f);
AlgebraElement parse_element(const std::string& text, const GroupModel& model);

}  // namespace orbalg
