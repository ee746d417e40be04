#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbalg/rational.hpp"
#include "orbalg/words.hpp"

namespace orbalg {

// An integer combination of words with no zero coefficients stored.  Terms
// iterate in ascending lexicographic order of the word.
class WordPolynomial {
 public:
  using Terms = std::map<Word, Int, WordLexLess>;

  WordPolynomial() = default;
  static WordPolynomial monomial(const Word& w, Int c = 1);

  void add(const Word& w, const Int& c);
  const Int& coeff(const Word& w) const;  // zero if absent
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient_sum() const;

  WordPolynomial& operator+=(const WordPolynomial& other);

  friend bool operator==(const WordPolynomial&, const WordPolynomial&) = default;

 private:
  Terms terms_;
};

// "<coeff> <word>" per line, terms in ascending lexicographic order.
std::string format_word_polynomial(const WordPolynomial& p);

// The shuffle product of two words: the sum over all interleavings, with
// multiplicity when distinct interleavings produce equal words.
WordPolynomial shuffle(const Word& u, const Word& v);

// The lexicographically greatest word appearing in shuffle(beta, gamma),
// computed by a single merge pass without expanding the product.
Word greatest_shuffle(const Word& beta, const Word& gamma);

// A nonempty word is a Lyndon word when it is strictly smaller than every
// nontrivial proper right factor of itself.
bool is_lyndon(const Word& w);

// Equivalent characterization used as a cross-check: w is Lyndon iff it is
// strictly smaller than each of its nontrivial rotations.  Pre: w nonempty.
bool rotation_lyndon_check(const Word& w);

struct LyndonFactor {
  Word factor;
  int exponent = 1;

  friend bool operator==(const LyndonFactor&, const LyndonFactor&) = default;
};

// The unique factorization of a nonempty word as l1^r1 l2^r2 ... lk^rk with
// l1 > l2 > ... > lk Lyndon words (lexicographically strictly decreasing).
std::vector<LyndonFactor> lyndon_factorization(const Word& w);

// For a Lyndon word of length >= 2: w = uv where v is the lexicographically
// smallest nontrivial proper right factor.  Both parts are again Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

// All Lyndon words of total weight n over the given alphabet of distinct
// blocks, in ascending lexicographic order.
std::vector<Word> lyndon_words_of_weight(std::vector<Block> alphabet, int n);

// All words of total weight n over the given alphabet, ascending lex order.
std::vector<Word> words_of_weight(std::vector<Block> alphabet, int n);

}  // namespace orbalg
