#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbalg {

// A weighted letter.  Blocks are totally ordered by weight first and index
// second, so b1.1 is the least block of all and blocks of smaller weight
// always precede blocks of larger weight.
struct Block {
  int weight = 1;
  int index = 1;

  friend constexpr auto operator<=>(const Block&, const Block&) = default;
};

std::strong_ordering compare_blocks(Block a, Block b);

std::string block_token(Block b);             // "b2.1"
Block parse_block_token(std::string_view s);  // throws std::invalid_argument

// A finite sequence of blocks.  The empty word labels the unique orbit on
// 0-element sets.  Words are values: construct once, then read.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Block> letters) : letters_(std::move(letters)) {}
  static Word single(Block b) { return Word(std::vector<Block>{b}); }

  const std::vector<Block>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Block operator[](std::size_t i) const { return letters_[i]; }
  int weight() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Block> letters_;
};

Word concat(const Word& x, const Word& y);

// Lexicographic order on words: compare letter by letter; if one word runs
// out first, the proper prefix is the smaller word.
std::strong_ordering compare_lex(const Word& x, const Word& y);
std::strong_ordering compare_lex(std::span<const Block> x, std::span<const Block> y);

// A multiset of blocks, kept as its canonical decreasing sequence.
class BlockMultiset {
 public:
  BlockMultiset() = default;
  explicit BlockMultiset(std::vector<Block> blocks);  // any order; canonicalized
  static BlockMultiset of_word(const Word& w);

  // The canonical sequence: blocks in decreasing order.
  const std::vector<Block>& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  int weight() const;

  friend bool operator==(const BlockMultiset&, const BlockMultiset&) = default;

 private:
  std::vector<Block> seq_;
};

BlockMultiset multiset_sum(const BlockMultiset& a, const BlockMultiset& b);

// Multisets are ordered by lexicographic comparison of their canonical
// decreasing sequences.
std::strong_ordering compare_multiset_lex(const BlockMultiset& a, const BlockMultiset& b);

// The orbit order on words: first compare the letter multisets; on ties the
// *lexicographically larger* word is the smaller element.  This is the order
// in which word-labelled orbits are listed.
std::strong_ordering compare_words_a(const Word& x, const Word& y);

struct WordLexLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_lex(a, b) == std::strong_ordering::less;
  }
};

struct WordOrbitLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_words_a(a, b) == std::strong_ordering::less;
  }
};

struct MultisetLexLess {
  bool operator()(const BlockMultiset& a, const BlockMultiset& b) const {
    return compare_multiset_lex(a, b) == std::strong_ordering::less;
  }
};

// Text forms.  Empty word / empty multiset both print as "e".
std::string word_token(const Word& w);                // "b2.1-b1.1"
Word parse_word_token(std::string_view s);
std::string multiset_token(const BlockMultiset& m);   // "b2.1+b1.1"
BlockMultiset parse_multiset_token(std::string_view s);

enum class ModelKind { WreathS, WreathA };

// Label of one orbit: a word for wreath-A-like models, a block multiset for
// wreath-S-like models.
class OrbitKey {
 public:
  OrbitKey() : v_(Word{}) {}
  static OrbitKey of(Word w) { return OrbitKey(std::variant<Word, BlockMultiset>(std::move(w))); }
  static OrbitKey of(BlockMultiset m) {
    return OrbitKey(std::variant<Word, BlockMultiset>(std::move(m)));
  }

  bool holds_word() const { return std::holds_alternative<Word>(v_); }
  ModelKind kind() const { return holds_word() ? ModelKind::WreathA : ModelKind::WreathS; }
  const Word& word() const;              // throws std::logic_error on a multiset key
  const BlockMultiset& multiset() const; // throws std::logic_error on a word key
  int weight() const;
  std::string str() const;

  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;

 private:
  explicit OrbitKey(std::variant<Word, BlockMultiset> v) : v_(std::move(v)) {}
  std::variant<Word, BlockMultiset> v_;
};

// Total order on orbit keys.  Keys of the same kind compare in the natural
// orbit order of that kind (compare_words_a for words, multiset-lex for
// multisets); a word key never equals a multiset key.
std::strong_ordering compare_orbit_keys(const OrbitKey& a, const OrbitKey& b);

struct OrbitKeyLess {
  bool operator()(const OrbitKey& a, const OrbitKey& b) const {
    return compare_orbit_keys(a, b) == std::strong_ordering::less;
  }
};

OrbitKey parse_orbit_key(ModelKind kind, std::string_view s);

}  // namespace orbalg
