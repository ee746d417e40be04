#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "orbalg/rational.hpp"
#include "orbalg/words.hpp"

namespace orbalg {

// How many blocks exist at each weight, up to a stated maximum weight.
class AlphabetProfile {
 public:
  AlphabetProfile() = default;
  // counts[i] = number of blocks of weight i+1; trailing zeros are kept.
  explicit AlphabetProfile(std::vector<int> counts);

  int count(int weight) const;  // zero beyond the stated maximum
  int max_weight() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& counts() const { return counts_; }
  bool contains(Block b) const;
  std::vector<Block> blocks() const;  // every declared block, ascending

  friend bool operator==(const AlphabetProfile&, const AlphabetProfile&) = default;

 private:
  std::vector<int> counts_;
};

// One admissible way of splitting a block's representative set into an
// ordered pair of parts, with the number of subsets realizing it.
struct SplitEntry {
  Word left;
  Word right;
  Int multiplicity = 1;

  friend bool operator==(const SplitEntry&, const SplitEntry&) = default;
};

using SplitTable = std::map<Block, std::vector<SplitEntry>>;

// Memoized basis products, keyed by the pair of factor orbit keys.  Lives on
// the model so repeated products over the same model are computed once.
class ProductCache {
 public:
  using Value = std::vector<std::pair<OrbitKey, Int>>;

  const Value* find(const OrbitKey& v, const OrbitKey& w) const;
  const Value& store(const OrbitKey& v, const OrbitKey& w, Value value) const;

 private:
  struct KeyLess {
    bool operator()(const std::pair<OrbitKey, OrbitKey>& a,
                    const std::pair<OrbitKey, OrbitKey>& b) const {
      auto c = compare_orbit_keys(a.first, b.first);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return compare_orbit_keys(a.second, b.second) == std::strong_ordering::less;
    }
  };
  mutable std::mutex mutex_;
  mutable std::map<std::pair<OrbitKey, OrbitKey>, Value, KeyLess> entries_;
};

// A family of permutation-group-like models described combinatorially: an
// alphabet of weighted blocks plus, for every block, the table of its
// admissible splits.  Orbits of the model are words over the alphabet
// (wreath-A-like kinds) or block multisets (wreath-S-like kinds).
//
// Models are immutable; handles share the underlying data, and two handles
// denote "the same model" only when they share it.
class GroupModel {
 public:
  GroupModel() = default;

  ModelKind kind() const;
  const AlphabetProfile& profile() const;
  const std::vector<SplitEntry>& splits(Block b) const;  // throws on unknown block
  const SplitTable& split_table() const;
  // Zero means every weight can be enumerated; a positive value bounds
  // orbits_of_weight (used by the truncated a-wr-a family).
  int enumeration_limit() const;
  const std::string& name() const;
  bool valid() const { return impl_ != nullptr; }
  bool same_as(const GroupModel& other) const { return impl_ == other.impl_; }
  ProductCache& product_cache() const;

  std::string to_table_text() const;

  // Builtin families.  sk_wreath_* have one block of each weight 1..k and
  // binomial split multiplicities; a_wreath_a has one block of each weight
  // 1..max_weight with the same splits and bounded enumeration.
  static GroupModel sk_wreath_s(int k);
  static GroupModel sk_wreath_a(int k);
  static GroupModel a_wreath_a(int max_weight);

  static GroupModel from_table_text(const std::string& text,
                                    const std::string& name = "custom");
  static GroupModel from_parts(ModelKind kind, AlphabetProfile profile, SplitTable table,
                               std::string name, int enumeration_limit = 0);

 private:
  struct Impl;
  explicit GroupModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// "sk-wr-s:K", "sk-wr-a:K", "a-wr-a:W", or "@PATH" for a split-table file.
GroupModel parse_model_spec(const std::string& spec);

// All orbit keys of total weight n, ascending in the model's orbit order.
// For models with a bounded alphabet this refuses n beyond the bound, since
// the list would silently be missing orbits.
std::vector<OrbitKey> orbits_of_weight(const GroupModel& model, int n);

// Same enumeration with no bound check: every weight-n key over the declared
// alphabet.  This is the candidate universe used when forming products.
std::vector<OrbitKey> support_keys_of_weight(const GroupModel& model, int n);

using CountMap = std::map<OrbitKey, Int, OrbitKeyLess>;

// How many k-element subsets of a set in orbit u fall in each weight-k
// orbit.  Requires 0 <= k <= weight(u).
CountMap suborbit_counts(const GroupModel& model, const OrbitKey& u, int k);

}  // namespace orbalg
