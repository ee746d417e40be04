#include "orbalg/model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "orbalg/lyndon.hpp"

namespace orbalg {

AlphabetProfile::AlphabetProfile(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw std::invalid_argument("alphabet profile counts must be >= 0");
}

int AlphabetProfile::count(int weight) const {
  if (weight < 1 || weight > max_weight()) return 0;
  return counts_[static_cast<std::size_t>(weight - 1)];
}

bool AlphabetProfile::contains(Block b) const {
  return b.index >= 1 && b.index <= count(b.weight);
}

std::vector<Block> AlphabetProfile::blocks() const {
  std::vector<Block> out;
  for (int w = 1; w <= max_weight(); ++w)
    for (int i = 1; i <= count(w); ++i) out.push_back(Block{w, i});
  return out;
}

const ProductCache::Value* ProductCache::find(const OrbitKey& v, const OrbitKey& w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find({v, w});
  return it == entries_.end() ? nullptr : &it->second;
}

const ProductCache::Value& ProductCache::store(const OrbitKey& v, const OrbitKey& w,
                                               Value value) const {
  std::lock_guard<std::mutex> lock(mutex_);
  // Map nodes are stable, so returned references survive later insertions.
  return entries_.try_emplace({v, w}, std::move(value)).first->second;
}

struct GroupModel::Impl {
  ModelKind kind = ModelKind::WreathA;
  AlphabetProfile profile;
  SplitTable table;
  std::string name;
  int enumeration_limit = 0;
  mutable ProductCache cache;  // memoized products; guarded by its own mutex
};

namespace {

Word canonical_part(ModelKind kind, Word part) {
  if (kind == ModelKind::WreathS) {
    // Multiset semantics: keep each part in its canonical decreasing order.
    std::vector<Block> letters = part.letters();
    std::sort(letters.begin(), letters.end(), std::greater<>{});
    return Word(std::move(letters));
  }
  return part;
}

void validate_table(ModelKind kind, const AlphabetProfile& profile, SplitTable& table) {
  for (const Block b : profile.blocks()) {
    auto it = table.find(b);
    if (it == table.end())
      throw std::invalid_argument("missing split entries for block " + block_token(b));
  }
  for (auto& [b, entries] : table) {
    if (!profile.contains(b))
      throw std::invalid_argument("split table mentions undeclared block " + block_token(b));
    bool saw_left_trivial = false, saw_right_trivial = false;
    for (auto& entry : entries) {
      entry.left = canonical_part(kind, std::move(entry.left));
      entry.right = canonical_part(kind, std::move(entry.right));
      if (entry.multiplicity < 1)
        throw std::invalid_argument("split multiplicity must be >= 1 for block " +
                                    block_token(b));
      if (entry.left.weight() + entry.right.weight() != b.weight)
        throw std::invalid_argument("split parts of " + block_token(b) +
                                    " do not add up to its weight");
      for (const auto& part : {entry.left, entry.right})
        for (Block letter : part.letters())
          if (!profile.contains(letter))
            throw std::invalid_argument("split of " + block_token(b) +
                                        " uses undeclared block " + block_token(letter));
      if (entry.left == Word::single(b) && entry.right.empty()) {
        saw_left_trivial = true;
        if (entry.multiplicity != 1)
          throw std::invalid_argument("trivial split of " + block_token(b) +
                                      " must have multiplicity 1");
      }
      if (entry.right == Word::single(b) && entry.left.empty()) {
        saw_right_trivial = true;
        if (entry.multiplicity != 1)
          throw std::invalid_argument("trivial split of " + block_token(b) +
                                      " must have multiplicity 1");
      }
    }
    if (!saw_left_trivial || !saw_right_trivial)
      throw std::invalid_argument("block " + block_token(b) +
                                  " is missing a trivial split entry");

    // Deterministic entry order, then duplicate and symmetry checks.
    auto entry_less = [](const SplitEntry& x, const SplitEntry& y) {
      auto c = compare_lex(x.left, y.left);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return compare_lex(x.right, y.right) == std::strong_ordering::less;
    };
    std::sort(entries.begin(), entries.end(), entry_less);
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].left == entries[i - 1].left && entries[i].right == entries[i - 1].right)
        throw std::invalid_argument("duplicate split entry for block " + block_token(b));
    for (const auto& entry : entries) {
      SplitEntry mirrored{entry.right, entry.left, entry.multiplicity};
      auto it = std::lower_bound(entries.begin(), entries.end(), mirrored, entry_less);
      if (it == entries.end() || it->left != mirrored.left || it->right != mirrored.right)
        throw std::invalid_argument("split table of " + block_token(b) +
                                    " is not symmetric in its two parts");
      if (it->multiplicity != entry.multiplicity)
        throw std::invalid_argument("mirrored split entries of " + block_token(b) +
                                    " have different multiplicities");
    }
  }
}

SplitTable binomial_split_table(int max_weight) {
  // One block per weight; a weight-j block splits as (b_i | b_{j-i}) in
  // C(j, i) ways, the i = 0 and i = j cases being the trivial splits.
  SplitTable table;
  for (int j = 1; j <= max_weight; ++j) {
    std::vector<SplitEntry> entries;
    for (int i = 0; i <= j; ++i) {
      Word left = i == 0 ? Word{} : Word::single(Block{i, 1});
      Word right = i == j ? Word{} : Word::single(Block{j - i, 1});
      entries.push_back({std::move(left), std::move(right), binomial(j, i)});
    }
    table[Block{j, 1}] = std::move(entries);
  }
  return table;
}

}  // namespace

ModelKind GroupModel::kind() const { return impl_->kind; }
const AlphabetProfile& GroupModel::profile() const { return impl_->profile; }
const SplitTable& GroupModel::split_table() const { return impl_->table; }
int GroupModel::enumeration_limit() const { return impl_->enumeration_limit; }
const std::string& GroupModel::name() const { return impl_->name; }
ProductCache& GroupModel::product_cache() const { return impl_->cache; }

const std::vector<SplitEntry>& GroupModel::splits(Block b) const {
  auto it = impl_->table.find(b);
  if (it == impl_->table.end())
    throw std::invalid_argument("model has no block " + block_token(b));
  return it->second;
}

GroupModel GroupModel::from_parts(ModelKind kind, AlphabetProfile profile, SplitTable table,
                                  std::string name, int enumeration_limit) {
  if (enumeration_limit < 0)
    throw std::invalid_argument("enumeration limit must be >= 0");
  validate_table(kind, profile, table);
  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->profile = std::move(profile);
  impl->table = std::move(table);
  impl->name = std::move(name);
  impl->enumeration_limit = enumeration_limit;
  return GroupModel(std::move(impl));
}

GroupModel GroupModel::sk_wreath_s(int k) {
  if (k < 1) throw std::invalid_argument("sk-wr-s requires k >= 1");
  return from_parts(ModelKind::WreathS, AlphabetProfile(std::vector<int>(k, 1)),
                    binomial_split_table(k), "sk-wr-s:" + std::to_string(k));
}

GroupModel GroupModel::sk_wreath_a(int k) {
  if (k < 1) throw std::invalid_argument("sk-wr-a requires k >= 1");
  return from_parts(ModelKind::WreathA, AlphabetProfile(std::vector<int>(k, 1)),
                    binomial_split_table(k), "sk-wr-a:" + std::to_string(k));
}

GroupModel GroupModel::a_wreath_a(int max_weight) {
  if (max_weight < 1) throw std::invalid_argument("a-wr-a requires max weight >= 1");
  // The full alphabet has one block of every weight; only weights up to
  // max_weight are materialized, so enumeration is bounded accordingly.
  return from_parts(ModelKind::WreathA, AlphabetProfile(std::vector<int>(max_weight, 1)),
                    binomial_split_table(max_weight), "a-wr-a:" + std::to_string(max_weight),
                    max_weight);
}

std::string GroupModel::to_table_text() const {
  std::ostringstream out;
  out << "# split table for model " << name() << '\n';
  out << "kind = " << (kind() == ModelKind::WreathA ? "wreath_a" : "wreath_s") << '\n';
  if (enumeration_limit() > 0) out << "maxweight = " << enumeration_limit() << '\n';
  const auto& counts = profile().counts();
  for (std::size_t i = 0; i < counts.size(); ++i)
    out << "weight " << (i + 1) << " = " << counts[i] << '\n';
  for (const Block b : profile().blocks())
    for (const auto& entry : splits(b))
      out << block_token(b) << " : " << word_token(entry.left) << " | "
          << word_token(entry.right) << " * " << entry.multiplicity << '\n';
  return out.str();
}

namespace {

std::string strip(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void table_error(int lineno, const std::string& message) {
  throw std::invalid_argument("split table line " + std::to_string(lineno) + ": " + message);
}

long parse_long(const std::string& s, int lineno, const std::string& what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    table_error(lineno, "expected an integer " + what + ", got '" + s + "'");
  return value;
}

}  // namespace

GroupModel GroupModel::from_table_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  ModelKind kind = ModelKind::WreathA;
  int enumeration_limit = 0;
  std::map<int, int> weight_counts;
  SplitTable table;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (auto colon = line.find(':'); colon != std::string::npos && line[0] == 'b') {
      // entry line: <block> : <left> | <right> * <mult>
      std::string head = strip(line.substr(0, colon));
      std::string rest = strip(line.substr(colon + 1));
      auto bar = rest.find('|');
      if (bar == std::string::npos) table_error(lineno, "missing '|' separator");
      auto star = rest.find('*', bar);
      if (star == std::string::npos) table_error(lineno, "missing '*' multiplicity");
      Block b;
      SplitEntry entry;
      try {
        b = parse_block_token(head);
        std::string left = strip(rest.substr(0, bar));
        std::string right = strip(rest.substr(bar + 1, star - bar - 1));
        // Accept '+'-joined multiset spelling for the parts as well.
        std::replace(left.begin(), left.end(), '+', '-');
        std::replace(right.begin(), right.end(), '+', '-');
        entry.left = parse_word_token(left);
        entry.right = parse_word_token(right);
      } catch (const std::invalid_argument& e) {
        table_error(lineno, e.what());
      }
      try {
        entry.multiplicity = Int(strip(rest.substr(star + 1)));
      } catch (const std::exception&) {
        table_error(lineno, "malformed multiplicity");
      }
      table[b].push_back(std::move(entry));
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) table_error(lineno, "unrecognized line '" + line + "'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "kind") {
      if (value == "wreath_a")
        kind = ModelKind::WreathA;
      else if (value == "wreath_s")
        kind = ModelKind::WreathS;
      else
        table_error(lineno, "kind must be wreath_a or wreath_s");
    } else if (key == "maxweight") {
      enumeration_limit = static_cast<int>(parse_long(value, lineno, "maxweight"));
      if (enumeration_limit < 1) table_error(lineno, "maxweight must be >= 1");
    } else if (key.starts_with("weight")) {
      std::string w = strip(key.substr(6));
      int weight = static_cast<int>(parse_long(w, lineno, "weight"));
      if (weight < 1) table_error(lineno, "weight must be >= 1");
      weight_counts[weight] = static_cast<int>(parse_long(value, lineno, "count"));
    } else {
      table_error(lineno, "unrecognized key '" + key + "'");
    }
  }

  int max_weight = weight_counts.empty() ? 0 : weight_counts.rbegin()->first;
  std::vector<int> counts(static_cast<std::size_t>(max_weight), 0);
  for (auto [w, c] : weight_counts) counts[static_cast<std::size_t>(w - 1)] = c;

  return from_parts(kind, AlphabetProfile(std::move(counts)), std::move(table), name,
                    enumeration_limit);
}

GroupModel parse_model_spec(const std::string& spec) {
  if (spec.starts_with("@")) {
    std::string path = spec.substr(1);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open split table file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return GroupModel::from_table_text(buffer.str(), path);
  }
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string family = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec == std::errc{} && ptr == arg.data() + arg.size()) {
      if (family == "sk-wr-s") return GroupModel::sk_wreath_s(value);
      if (family == "sk-wr-a") return GroupModel::sk_wreath_a(value);
      if (family == "a-wr-a") return GroupModel::a_wreath_a(value);
    }
  }
  throw std::invalid_argument(
      "unrecognized model spec '" + spec +
      "' (expected sk-wr-s:K, sk-wr-a:K, a-wr-a:W, or @FILE)");
}

namespace {

void extend_multisets(const std::vector<Block>& blocks_desc, std::size_t from, int remaining,
                      std::vector<Block>& prefix, std::vector<OrbitKey>& out) {
  if (remaining == 0) {
    out.push_back(OrbitKey::of(BlockMultiset(prefix)));
    return;
  }
  for (std::size_t i = from; i < blocks_desc.size(); ++i) {
    if (blocks_desc[i].weight > remaining) continue;
    prefix.push_back(blocks_desc[i]);
    extend_multisets(blocks_desc, i, remaining - blocks_desc[i].weight, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OrbitKey> support_keys_of_weight(const GroupModel& model, int n) {
  if (n < 0) throw std::invalid_argument("orbit weight must be >= 0");
  std::vector<OrbitKey> out;
  if (model.kind() == ModelKind::WreathA) {
    for (auto& w : words_of_weight(model.profile().blocks(), n))
      out.push_back(OrbitKey::of(std::move(w)));
  } else {
    std::vector<Block> desc = model.profile().blocks();
    std::sort(desc.begin(), desc.end(), std::greater<>{});
    std::vector<Block> prefix;
    extend_multisets(desc, 0, n, prefix, out);
  }
  std::sort(out.begin(), out.end(), OrbitKeyLess{});
  return out;
}

std::vector<OrbitKey> orbits_of_weight(const GroupModel& model, int n) {
  if (n < 0) throw std::invalid_argument("orbit weight must be >= 0");
  if (model.enumeration_limit() > 0 && n > model.enumeration_limit())
    throw std::domain_error("weight " + std::to_string(n) +
                            " exceeds the model's enumeration limit of " +
                            std::to_string(model.enumeration_limit()));
  return support_keys_of_weight(model, n);
}

CountMap suborbit_counts(const GroupModel& model, const OrbitKey& u, int k) {
  if (u.kind() != model.kind())
    throw std::invalid_argument("orbit key kind does not match the model kind");
  const int total = u.weight();
  if (k < 0 || k > total)
    throw std::invalid_argument("suborbit size must lie between 0 and the orbit weight");

  const std::vector<Block>& parts =
      u.holds_word() ? u.word().letters() : u.multiset().seq();
  for (Block b : parts)
    if (!model.profile().contains(b))
      throw std::invalid_argument("orbit key uses undeclared block " + block_token(b));

  CountMap result{OrbitKeyLess{}};
  if (model.kind() == ModelKind::WreathA) {
    // Accumulate the left parts in block order; a subset of the whole set is
    // a choice of one split per block, and its word is the concatenation of
    // the chosen left parts.
    std::map<Word, Int, WordLexLess> acc;
    acc[Word{}] = 1;
    for (Block b : parts) {
      std::map<Word, Int, WordLexLess> next;
      for (const auto& [prefix, count] : acc) {
        int have = prefix.weight();
        for (const auto& entry : model.splits(b)) {
          if (have + entry.left.weight() > k) continue;
          next[concat(prefix, entry.left)] += count * entry.multiplicity;
        }
      }
      acc = std::move(next);
    }
    for (auto& [w, count] : acc)
      if (w.weight() == k) result[OrbitKey::of(w)] += count;
  } else {
    std::map<BlockMultiset, Int, MultisetLexLess> acc;
    acc[BlockMultiset{}] = 1;
    for (Block b : parts) {
      std::map<BlockMultiset, Int, MultisetLexLess> next;
      for (const auto& [partial, count] : acc) {
        int have = partial.weight();
        for (const auto& entry : model.splits(b)) {
          if (have + entry.left.weight() > k) continue;
          next[multiset_sum(partial, BlockMultiset::of_word(entry.left))] +=
              count * entry.multiplicity;
        }
      }
      acc = std::move(next);
    }
    for (auto& [m, count] : acc)
      if (m.weight() == k) result[OrbitKey::of(m)] += count;
  }
  return result;
}

}  // namespace orbalg
