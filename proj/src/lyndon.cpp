#include "orbalg/lyndon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbalg {

WordPolynomial WordPolynomial::monomial(const Word& w, Int c) {
  WordPolynomial p;
  p.add(w, c);
  return p;
}

void WordPolynomial::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int& WordPolynomial::coeff(const Word& w) const {
  static const Int zero = 0;
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

Int WordPolynomial::coefficient_sum() const {
  Int total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

std::string format_word_polynomial(const WordPolynomial& p) {
  std::ostringstream out;
  for (const auto& [w, c] : p.terms()) out << c << ' ' << word_token(w) << '\n';
  return out.str();
}

namespace {

// Prepend one letter to every term.
WordPolynomial prepend(Block b, const WordPolynomial& p) {
  WordPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<Block> letters;
    letters.reserve(w.size() + 1);
    letters.push_back(b);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    out.add(Word(std::move(letters)), c);
  }
  return out;
}

}  // namespace

WordPolynomial shuffle(const Word& u, const Word& v) {
  const std::size_t r = u.size(), s = v.size();
  // table[i][j] = shuffle of the suffixes u[i:] and v[j:], filled backwards.
  std::vector<std::vector<WordPolynomial>> table(r + 1, std::vector<WordPolynomial>(s + 1));
  table[r][s] = WordPolynomial::monomial(Word{});
  for (std::size_t i = r + 1; i-- > 0;) {
    for (std::size_t j = s + 1; j-- > 0;) {
      if (i == r && j == s) continue;
      WordPolynomial p;
      if (i < r) p += prepend(u[i], table[i + 1][j]);
      if (j < s) p += prepend(v[j], table[i][j + 1]);
      table[i][j] = std::move(p);
    }
  }
  return table[0][0];
}

Word greatest_shuffle(const Word& beta, const Word& gamma) {
  // Merge pass: repeatedly take the head of whichever remaining suffix is
  // lexicographically larger.  Comparing whole suffixes rather than head
  // letters matters on ties: after equal heads the continuation decides
  // which source must be drained first.
  const auto& b = beta.letters();
  const auto& g = gamma.letters();
  std::vector<Block> out;
  out.reserve(b.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < b.size() && j < g.size()) {
    std::span<const Block> rest_b(b.data() + i, b.size() - i);
    std::span<const Block> rest_g(g.data() + j, g.size() - j);
    if (compare_lex(rest_g, rest_b) != std::strong_ordering::less)
      out.push_back(g[j++]);
    else
      out.push_back(b[i++]);
  }
  for (; i < b.size(); ++i) out.push_back(b[i]);
  for (; j < g.size(); ++j) out.push_back(g[j]);
  return Word(std::move(out));
}

bool is_lyndon(const Word& w) {
  const auto& a = w.letters();
  const std::size_t n = a.size();
  if (n == 0) return false;
  for (std::size_t start = 1; start < n; ++start) {
    std::span<const Block> suffix(a.data() + start, n - start);
    if (compare_lex(std::span<const Block>(a), suffix) != std::strong_ordering::less)
      return false;
  }
  return true;
}

bool rotation_lyndon_check(const Word& w) {
  const auto& a = w.letters();
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("rotation check requires a nonempty word");
  std::vector<Block> rot(a.begin(), a.end());
  for (std::size_t k = 1; k < n; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (compare_lex(std::span<const Block>(a), std::span<const Block>(rot)) !=
        std::strong_ordering::less)
      return false;
  }
  return true;
}

std::vector<LyndonFactor> lyndon_factorization(const Word& w) {
  const auto& a = w.letters();
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("the empty word has no Lyndon factorization");

  // Duval's algorithm: emits the factors left to right; the factor sequence
  // is lexicographically non-increasing, so equal neighbours group into
  // powers and distinct neighbours strictly decrease.
  std::vector<Word> factors;
  std::size_t k = 0;
  while (k < n) {
    std::size_t i = k, j = k + 1;
    while (j < n && a[i] <= a[j]) {
      if (a[i] < a[j])
        i = k;
      else
        ++i;
      ++j;
    }
    const std::size_t len = j - i;
    while (k <= i) {
      factors.emplace_back(std::vector<Block>(a.begin() + k, a.begin() + k + len));
      k += len;
    }
  }

  std::vector<LyndonFactor> grouped;
  for (auto& f : factors) {
    if (!grouped.empty() && grouped.back().factor == f)
      ++grouped.back().exponent;
    else
      grouped.push_back({std::move(f), 1});
  }
  return grouped;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2)
    throw std::invalid_argument("standard factorization requires length >= 2");
  if (!is_lyndon(w))
    throw std::invalid_argument("standard factorization requires a Lyndon word");
  const auto& a = w.letters();
  const std::size_t n = a.size();
  // v = the lexicographically smallest nontrivial proper right factor.
  std::size_t best = 1;
  for (std::size_t start = 2; start < n; ++start) {
    std::span<const Block> cand(a.data() + start, n - start);
    std::span<const Block> cur(a.data() + best, n - best);
    if (compare_lex(cand, cur) == std::strong_ordering::less) best = start;
  }
  Word u(std::vector<Block>(a.begin(), a.begin() + best));
  Word v(std::vector<Block>(a.begin() + best, a.end()));
  return {std::move(u), std::move(v)};
}

namespace {

void extend_words(const std::vector<Block>& alphabet, int remaining,
                  std::vector<Block>& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Block b : alphabet) {
    if (b.weight > remaining) break;  // alphabet is sorted ascending
    prefix.push_back(b);
    extend_words(alphabet, remaining - b.weight, prefix, out);
    prefix.pop_back();
  }
}

void validate_alphabet(std::vector<Block>& alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
    throw std::invalid_argument("alphabet blocks must be distinct");
  for (Block b : alphabet)
    if (b.weight < 1 || b.index < 1)
      throw std::invalid_argument("alphabet blocks must have positive weight and index");
}

}  // namespace

std::vector<Word> words_of_weight(std::vector<Block> alphabet, int n) {
  if (n < 0) throw std::invalid_argument("weight must be >= 0");
  validate_alphabet(alphabet);
  // Depth-first extension with letters tried in ascending order emits the
  // words in ascending lexicographic order.
  std::vector<Word> out;
  std::vector<Block> prefix;
  extend_words(alphabet, n, prefix, out);
  return out;
}

std::vector<Word> lyndon_words_of_weight(std::vector<Block> alphabet, int n) {
  if (n <= 0) throw std::invalid_argument("Lyndon enumeration requires weight >= 1");
  std::vector<Word> all = words_of_weight(std::move(alphabet), n);
  std::vector<Word> out;
  for (auto& w : all)
    if (is_lyndon(w)) out.push_back(std::move(w));
  return out;
}

}  // namespace orbalg
