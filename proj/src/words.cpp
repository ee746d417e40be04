#include "orbalg/words.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbalg {

std::strong_ordering compare_blocks(Block a, Block b) { return a <=> b; }

std::string block_token(Block b) {
  return "b" + std::to_string(b.weight) + "." + std::to_string(b.index);
}

namespace {

[[noreturn]] void bad_token(std::string_view what, std::string_view s) {
  throw std::invalid_argument(std::string(what) + ": '" + std::string(s) + "'");
}

int parse_positive_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0)
    bad_token(context, s);
  return value;
}

}  // namespace

Block parse_block_token(std::string_view s) {
  if (s.size() < 4 || s[0] != 'b') bad_token("malformed block token", s);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) bad_token("malformed block token", s);
  Block b;
  b.weight = parse_positive_int(s.substr(1, dot - 1), "malformed block weight");
  b.index = parse_positive_int(s.substr(dot + 1), "malformed block index");
  return b;
}

int Word::weight() const {
  int w = 0;
  for (Block b : letters_) w += b.weight;
  return w;
}

Word concat(const Word& x, const Word& y) {
  std::vector<Block> letters = x.letters();
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return Word(std::move(letters));
}

std::strong_ordering compare_lex(std::span<const Block> x, std::span<const Block> y) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = x[i] <=> y[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering compare_lex(const Word& x, const Word& y) {
  return compare_lex(std::span<const Block>(x.letters()), std::span<const Block>(y.letters()));
}

BlockMultiset::BlockMultiset(std::vector<Block> blocks) : seq_(std::move(blocks)) {
  std::sort(seq_.begin(), seq_.end(), std::greater<>{});
}

BlockMultiset BlockMultiset::of_word(const Word& w) { return BlockMultiset(w.letters()); }

int BlockMultiset::weight() const {
  int w = 0;
  for (Block b : seq_) w += b.weight;
  return w;
}

BlockMultiset multiset_sum(const BlockMultiset& a, const BlockMultiset& b) {
  std::vector<Block> all = a.seq();
  all.insert(all.end(), b.seq().begin(), b.seq().end());
  return BlockMultiset(std::move(all));
}

std::strong_ordering compare_multiset_lex(const BlockMultiset& a, const BlockMultiset& b) {
  return compare_lex(std::span<const Block>(a.seq()), std::span<const Block>(b.seq()));
}

std::strong_ordering compare_words_a(const Word& x, const Word& y) {
  auto c = compare_multiset_lex(BlockMultiset::of_word(x), BlockMultiset::of_word(y));
  if (c != std::strong_ordering::equal) return c;
  // Same multiset of letters: the lexicographically larger word comes first.
  auto l = compare_lex(x, y);
  if (l == std::strong_ordering::less) return std::strong_ordering::greater;
  if (l == std::strong_ordering::greater) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

std::string join_tokens(const std::vector<Block>& blocks, char sep) {
  if (blocks.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += sep;
    out += block_token(blocks[i]);
  }
  return out;
}

std::vector<Block> split_tokens(std::string_view s, char sep, std::string_view context) {
  if (s.empty()) bad_token(context, s);
  if (s == "e") return {};
  std::vector<Block> blocks;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    std::string_view piece =
        pos == std::string_view::npos ? s.substr(start) : s.substr(start, pos - start);
    if (piece.empty()) bad_token(context, s);
    blocks.push_back(parse_block_token(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return blocks;
}

}  // namespace

std::string word_token(const Word& w) { return join_tokens(w.letters(), '-'); }

Word parse_word_token(std::string_view s) {
  return Word(split_tokens(s, '-', "malformed word token"));
}

std::string multiset_token(const BlockMultiset& m) { return join_tokens(m.seq(), '+'); }

BlockMultiset parse_multiset_token(std::string_view s) {
  return BlockMultiset(split_tokens(s, '+', "malformed multiset token"));
}

const Word& OrbitKey::word() const {
  if (!holds_word()) throw std::logic_error("orbit key holds a multiset, not a word");
  return std::get<Word>(v_);
}

const BlockMultiset& OrbitKey::multiset() const {
  if (holds_word()) throw std::logic_error("orbit key holds a word, not a multiset");
  return std::get<BlockMultiset>(v_);
}

int OrbitKey::weight() const {
  return holds_word() ? std::get<Word>(v_).weight() : std::get<BlockMultiset>(v_).weight();
}

std::string OrbitKey::str() const {
  return holds_word() ? word_token(std::get<Word>(v_))
                      : multiset_token(std::get<BlockMultiset>(v_));
}

std::strong_ordering compare_orbit_keys(const OrbitKey& a, const OrbitKey& b) {
  if (a.holds_word() != b.holds_word())
    return a.holds_word() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.holds_word()) return compare_words_a(a.word(), b.word());
  return compare_multiset_lex(a.multiset(), b.multiset());
}

OrbitKey parse_orbit_key(ModelKind kind, std::string_view s) {
  if (kind == ModelKind::WreathA) return OrbitKey::of(parse_word_token(s));
  return OrbitKey::of(parse_multiset_token(s));
}

}  // namespace orbalg
