#include "orbalg/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbalg {

AlgebraElement AlgebraElement::basis(const GroupModel& model, const OrbitKey& key) {
  if (key.kind() != model.kind())
    throw std::invalid_argument("orbit key kind does not match the model kind");
  const std::vector<Block>& letters =
      key.holds_word() ? key.word().letters() : key.multiset().seq();
  for (Block b : letters)
    if (!model.profile().contains(b))
      throw std::invalid_argument("orbit key uses undeclared block " + block_token(b));
  AlgebraElement f(model);
  f.add_term(key, 1);
  return f;
}

Rational AlgebraElement::coeff(const OrbitKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const OrbitKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> AlgebraElement::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  int n = terms_.begin()->first.weight();
  for (const auto& [key, c] : terms_)
    if (key.weight() != n) return std::nullopt;
  return n;
}

std::vector<int> AlgebraElement::weights() const {
  std::vector<int> out;
  for (const auto& [key, c] : terms_) {
    int n = key.weight();
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement AlgebraElement::component(int weight) const {
  AlgebraElement out(model_);
  for (const auto& [key, c] : terms_)
    if (key.weight() == weight) out.add_term(key, c);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (!model_.same_as(other.model_))
    throw std::invalid_argument("elements live over different models");
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (!model_.same_as(other.model_))
    throw std::invalid_argument("elements live over different models");
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

bool AlgebraElement::equals(const AlgebraElement& other) const {
  return model_.same_as(other.model_) && terms_ == other.terms_;
}

namespace {

// Number of ways to pick one split entry per letter of u so the chosen left
// parts concatenate to v and the chosen right parts concatenate to w.
Int word_structure_constant(const GroupModel& model, const Word& u, const Word& v,
                            const Word& w) {
  const auto& vl = v.letters();
  const auto& wl = w.letters();
  // State: (letters of v consumed, letters of w consumed) -> count.
  std::map<std::pair<std::size_t, std::size_t>, Int> acc;
  acc[{0, 0}] = 1;
  for (Block b : u.letters()) {
    std::map<std::pair<std::size_t, std::size_t>, Int> next;
    for (const auto& [state, count] : acc) {
      auto [i, j] = state;
      for (const auto& entry : model.splits(b)) {
        const auto& left = entry.left.letters();
        const auto& right = entry.right.letters();
        if (i + left.size() > vl.size() || j + right.size() > wl.size()) continue;
        if (!std::equal(left.begin(), left.end(), vl.begin() + i)) continue;
        if (!std::equal(right.begin(), right.end(), wl.begin() + j)) continue;
        next[{i + left.size(), j + right.size()}] += count * entry.multiplicity;
      }
    }
    acc = std::move(next);
    if (acc.empty()) return 0;
  }
  auto it = acc.find({vl.size(), wl.size()});
  return it == acc.end() ? Int(0) : it->second;
}

bool is_submultiset(const std::vector<Block>& a_desc, const std::vector<Block>& b_desc) {
  std::size_t j = 0;
  for (Block x : a_desc) {
    while (j < b_desc.size() && b_desc[j] > x) ++j;
    if (j == b_desc.size() || !(b_desc[j] == x)) return false;
    ++j;
  }
  return true;
}

// Same count for multiset keys: chosen left parts must add up to the
// multiset v, chosen right parts to the multiset w.
Int multiset_structure_constant(const GroupModel& model, const BlockMultiset& u,
                                const BlockMultiset& v, const BlockMultiset& w) {
  using State = std::pair<std::vector<Block>, std::vector<Block>>;
  std::map<State, Int> acc;
  acc[{{}, {}}] = 1;
  for (Block b : u.seq()) {
    std::map<State, Int> next;
    for (const auto& [state, count] : acc) {
      for (const auto& entry : model.splits(b)) {
        BlockMultiset left = multiset_sum(BlockMultiset(state.first),
                                          BlockMultiset::of_word(entry.left));
        if (!is_submultiset(left.seq(), v.seq())) continue;
        BlockMultiset right = multiset_sum(BlockMultiset(state.second),
                                           BlockMultiset::of_word(entry.right));
        if (!is_submultiset(right.seq(), w.seq())) continue;
        next[{left.seq(), right.seq()}] += count * entry.multiplicity;
      }
    }
    acc = std::move(next);
    if (acc.empty()) return 0;
  }
  auto it = acc.find({v.seq(), w.seq()});
  return it == acc.end() ? Int(0) : it->second;
}

}  // namespace

const std::vector<std::pair<OrbitKey, Int>>& structure_constants(const GroupModel& model,
                                                                 const OrbitKey& v,
                                                                 const OrbitKey& w) {
  if (v.kind() != model.kind() || w.kind() != model.kind())
    throw std::invalid_argument("orbit key kind does not match the model kind");
  // The product is commutative; cache each unordered pair once.
  const bool swapped = compare_orbit_keys(w, v) == std::strong_ordering::less;
  const OrbitKey& a = swapped ? w : v;
  const OrbitKey& b = swapped ? v : w;

  ProductCache& cache = model.product_cache();
  if (const auto* hit = cache.find(a, b)) return *hit;

  ProductCache::Value value;
  for (const OrbitKey& u : support_keys_of_weight(model, a.weight() + b.weight())) {
    Int c = model.kind() == ModelKind::WreathA
                ? word_structure_constant(model, u.word(), a.word(), b.word())
                : multiset_structure_constant(model, u.multiset(), a.multiset(),
                                              b.multiset());
    if (c != 0) value.emplace_back(u, std::move(c));
  }
  return cache.store(a, b, std::move(value));
}

AlgebraElement product(const AlgebraElement& f, const AlgebraElement& g) {
  if (!f.model().same_as(g.model()))
    throw std::invalid_argument("cannot multiply elements over different models");
  AlgebraElement out(f.model());
  for (const auto& [v, cv] : f.terms()) {
    for (const auto& [w, cw] : g.terms()) {
      const Rational scale = cv * cw;
      for (const auto& [u, c] : structure_constants(f.model(), v, w))
        out.add_term(u, scale * Rational(c));
    }
  }
  return out;
}

AlgebraElement complete_shuffle(const Word& v, const Word& w, const GroupModel& model) {
  if (model.kind() != ModelKind::WreathA)
    throw std::invalid_argument("complete shuffle requires a wreath-A-like model");
  return product(AlgebraElement::basis(model, OrbitKey::of(v)),
                 AlgebraElement::basis(model, OrbitKey::of(w)));
}

AlgebraElement epsilon(const GroupModel& model) {
  AlgebraElement out(model);
  for (int i = 1; i <= model.profile().count(1); ++i) {
    Block b{1, i};
    OrbitKey key = model.kind() == ModelKind::WreathA
                       ? OrbitKey::of(Word::single(b))
                       : OrbitKey::of(BlockMultiset(std::vector<Block>{b}));
    out.add_term(key, 1);
  }
  return out;
}

AlgebraElement sbar_basis(const Word& w, const GroupModel& model) {
  if (model.kind() != ModelKind::WreathA)
    throw std::invalid_argument("generator basis requires a wreath-A-like model");
  AlgebraElement out = AlgebraElement::basis(model, OrbitKey::of(Word{}));
  if (w.empty()) return out;
  AlgebraElement::basis(model, OrbitKey::of(w));  // validates the letters
  Rational scale = 1;
  for (const auto& [factor, exponent] : lyndon_factorization(w)) {
    AlgebraElement piece = AlgebraElement::basis(model, OrbitKey::of(factor));
    for (int e = 0; e < exponent; ++e) out = product(out, piece);
    scale *= Rational(factorial(exponent));
  }
  out *= Rational(1) / scale;
  return out;
}

GeneratorCoords to_generator_basis(const AlgebraElement& f) {
  const GroupModel& model = f.model();
  if (model.kind() != ModelKind::WreathA)
    throw std::invalid_argument("generator basis requires a wreath-A-like model");
  GeneratorCoords coords;
  for (int n : f.weights()) {
    AlgebraElement remaining = f.component(n);
    // Forward substitution: every generator's expansion starts at its own
    // word with coefficient 1 and continues with strictly later orbits, so
    // sweeping the weight-n words in ascending orbit order clears the
    // component exactly.
    for (const OrbitKey& key : orbits_of_weight(model, n)) {
      Rational c = remaining.coeff(key);
      if (c == 0) continue;
      coords[key.word()] = c;
      AlgebraElement gen = sbar_basis(key.word(), model);
      gen *= c;
      remaining -= gen;
    }
    if (!remaining.is_zero())
      throw std::logic_error("generator-basis substitution failed to terminate");
  }
  return coords;
}

AlgebraElement from_generator_basis(const GeneratorCoords& coords, const GroupModel& model) {
  AlgebraElement out(model);
  for (const auto& [w, c] : coords) {
    AlgebraElement gen = sbar_basis(w, model);
    gen *= c;
    out += gen;
  }
  return out;
}

OrbitKey leading_orbit(const AlgebraElement& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero element has no leading orbit");
  if (!f.homogeneous_weight())
    throw std::invalid_argument("leading orbit requires a homogeneous element");
  return f.terms().begin()->first;
}

std::string format_element(const AlgebraElement& f) {
  std::ostringstream out;
  for (const auto& [key, c] : f.terms()) out << c << ' ' << key.str() << '\n';
  return out.str();
}

AlgebraElement parse_element(const std::string& text, const GroupModel& model) {
  AlgebraElement out(model);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(first, last - first + 1);
    auto space = line.find_first_of(" \t");
    if (space == std::string::npos)
      throw std::invalid_argument("element line " + std::to_string(lineno) +
                                  ": expected '<coefficient> <orbit>'");
    Rational c;
    try {
      c = Rational(line.substr(0, space));
    } catch (const std::exception&) {
      throw std::invalid_argument("element line " + std::to_string(lineno) +
                                  ": malformed coefficient");
    }
    auto key_start = line.find_first_not_of(" \t", space);
    OrbitKey key = parse_orbit_key(model.kind(), line.substr(key_start));
    AlgebraElement::basis(model, key);  // validates the letters
    out.add_term(key, c);
  }
  return out;
}

}  // namespace orbalg
