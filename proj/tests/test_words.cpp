#include <doctest.h>

#include <algorithm>
#include <vector>

#include "orbalg/lyndon.hpp"
#include "orbalg/words.hpp"

using namespace orbalg;

namespace {

const Block w1{1, 1};   // least block of all
const Block w1b{1, 2};  // second block of weight 1
const Block w2{2, 1};

Word W(std::initializer_list<Block> letters) { return Word(std::vector<Block>(letters)); }
BlockMultiset M(std::initializer_list<Block> blocks) {
  return BlockMultiset(std::vector<Block>(blocks));
}

// Every word of weight <= max over the {wt1, wt2} alphabet.
std::vector<Word> small_words(int max_weight) {
  std::vector<Word> out;
  for (int n = 0; n <= max_weight; ++n)
    for (Word& w : words_of_weight({w1, w2}, n)) out.push_back(std::move(w));
  return out;
}

template <typename T, typename Cmp>
void check_total_order(const std::vector<T>& items, Cmp cmp) {
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) {
      auto c = cmp(items[i], items[j]);
      auto r = cmp(items[j], items[i]);
      // antisymmetry and consistency of the reverse comparison
      if (c == std::strong_ordering::less) CHECK(r == std::strong_ordering::greater);
      if (c == std::strong_ordering::equal) {
        CHECK(r == std::strong_ordering::equal);
        CHECK(i == j);  // items are pairwise distinct in these tests
      }
      // transitivity against every third element
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (c != std::strong_ordering::greater &&
            cmp(items[j], items[k]) != std::strong_ordering::greater)
          CHECK(cmp(items[i], items[k]) != std::strong_ordering::greater);
      }
    }
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("block order is weight-major") {
    CHECK(compare_blocks(w1, w1b) == std::strong_ordering::less);
    CHECK(compare_blocks(w1b, w2) == std::strong_ordering::less);  // any wt-1 < any wt-2
    CHECK(compare_blocks(w2, w2) == std::strong_ordering::equal);
    CHECK(compare_blocks(Block{2, 3}, Block{3, 1}) == std::strong_ordering::less);
  }

  TEST_CASE("block tokens round-trip") {
    CHECK(block_token(w2) == "b2.1");
    CHECK(parse_block_token("b2.1") == w2);
    CHECK(parse_block_token("b12.34") == Block{12, 34});
    CHECK_THROWS_AS(parse_block_token("x1.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_token("b1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_token("b0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_token("b1.0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_token("b1.+2"), std::invalid_argument);
  }

  TEST_CASE("lexicographic word order with the prefix rule") {
    CHECK(compare_lex(W({w1}), W({w2})) == std::strong_ordering::less);
    CHECK(compare_lex(W({w1}), W({w1, w1})) == std::strong_ordering::less);  // proper prefix
    CHECK(compare_lex(W({w1, w2}), W({w1, w1, w1})) == std::strong_ordering::greater);
    CHECK(compare_lex(Word{}, W({w1})) == std::strong_ordering::less);
    CHECK(compare_lex(Word{}, Word{}) == std::strong_ordering::equal);
  }

  TEST_CASE("multiset canonical sequence is decreasing") {
    BlockMultiset m = M({w1, w2, w1});
    CHECK(m.seq() == std::vector<Block>{w2, w1, w1});
    CHECK(m.weight() == 4);
    CHECK(BlockMultiset::of_word(W({w1, w2})) == M({w2, w1}));
  }

  TEST_CASE("multiset order compares canonical sequences") {
    // (b2.1, b1.1) vs (b2.1, b2.1): differs at position 2
    CHECK(compare_multiset_lex(M({w2, w1}), M({w2, w2})) == std::strong_ordering::less);
    // proper prefix rule: {b2.1} < {b2.1, b1.1}
    CHECK(compare_multiset_lex(M({w2}), M({w2, w1})) == std::strong_ordering::less);
    CHECK(compare_multiset_lex(M({w1, w1}), M({w2})) == std::strong_ordering::less);
    CHECK(compare_multiset_lex(M({}), M({w1})) == std::strong_ordering::less);
  }

  TEST_CASE("multiset sum is monotone in each argument") {
    std::vector<BlockMultiset> all;
    for (const Word& w : small_words(6)) all.push_back(BlockMultiset::of_word(w));
    std::sort(all.begin(), all.end(), MultisetLexLess{});
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& a : all)
      for (const auto& b : all) {
        if (compare_multiset_lex(a, b) != std::strong_ordering::less) continue;
        for (const auto& c : all)
          CHECK(compare_multiset_lex(multiset_sum(a, c), multiset_sum(b, c)) ==
                std::strong_ordering::less);
      }
  }

  TEST_CASE("orbit order on words: multiset first, then reversed lex") {
    // Same multiset {b2.1, b1.1}: the lex-larger word comes first.
    CHECK(compare_words_a(W({w2, w1}), W({w1, w2})) == std::strong_ordering::less);
    // Different multisets: {b1.1, b1.1} < {b2.1}.
    CHECK(compare_words_a(W({w1, w1}), W({w2})) == std::strong_ordering::less);
    CHECK(compare_words_a(W({w1, w1}), W({w1, w1})) == std::strong_ordering::equal);
    // Weight-3 words over {wt1, wt2} in ascending orbit order.
    std::vector<Word> expected{W({w1, w1, w1}), W({w2, w1}), W({w1, w2})};
    std::vector<Word> got = words_of_weight({w1, w2}, 3);
    std::sort(got.begin(), got.end(), WordOrbitLess{});
    CHECK(got == expected);
  }

  TEST_CASE("the three comparisons are total orders on small words") {
    std::vector<Word> words = small_words(6);
    check_total_order(words, [](const Word& a, const Word& b) { return compare_lex(a, b); });
    check_total_order(words,
                      [](const Word& a, const Word& b) { return compare_words_a(a, b); });

    std::vector<BlockMultiset> multis;
    for (const Word& w : words) multis.push_back(BlockMultiset::of_word(w));
    std::sort(multis.begin(), multis.end(), MultisetLexLess{});
    multis.erase(std::unique(multis.begin(), multis.end()), multis.end());
    check_total_order(multis, [](const BlockMultiset& a, const BlockMultiset& b) {
      return compare_multiset_lex(a, b);
    });
  }

  TEST_CASE("word and multiset tokens round-trip") {
    CHECK(word_token(Word{}) == "e");
    CHECK(word_token(W({w2, w1})) == "b2.1-b1.1");
    CHECK(parse_word_token("b2.1-b1.1") == W({w2, w1}));
    CHECK(parse_word_token("e") == Word{});
    CHECK(multiset_token(M({w1, w2})) == "b2.1+b1.1");
    CHECK(parse_multiset_token("b1.1+b2.1") == M({w2, w1}));  // canonicalized
    CHECK(parse_multiset_token("e") == BlockMultiset{});
    for (const Word& w : small_words(5)) {
      CHECK(parse_word_token(word_token(w)) == w);
      BlockMultiset m = BlockMultiset::of_word(w);
      CHECK(parse_multiset_token(multiset_token(m)) == m);
    }
    CHECK_THROWS_AS(parse_word_token(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_token("b1.1--b1.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multiset_token("b1.1+"), std::invalid_argument);
  }

  TEST_CASE("orbit keys carry their kind") {
    OrbitKey kw = OrbitKey::of(W({w2, w1}));
    OrbitKey km = OrbitKey::of(M({w2, w1}));
    CHECK(kw.holds_word());
    CHECK(!km.holds_word());
    CHECK(kw.kind() == ModelKind::WreathA);
    CHECK(km.kind() == ModelKind::WreathS);
    CHECK(kw.weight() == 3);
    CHECK(km.weight() == 3);
    CHECK(kw.str() == "b2.1-b1.1");
    CHECK(km.str() == "b2.1+b1.1");
    CHECK_THROWS_AS(kw.multiset(), std::logic_error);
    CHECK_THROWS_AS(km.word(), std::logic_error);
    CHECK(parse_orbit_key(ModelKind::WreathA, "b2.1-b1.1") == kw);
    CHECK(parse_orbit_key(ModelKind::WreathS, "b1.1+b2.1") == km);
    CHECK(compare_orbit_keys(kw, kw) == std::strong_ordering::equal);
    CHECK(compare_orbit_keys(OrbitKey::of(W({w2, w1})), OrbitKey::of(W({w1, w2}))) ==
          std::strong_ordering::less);
  }
}
