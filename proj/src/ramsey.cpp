#include "orbalg/ramsey.hpp"

#include <sstream>
#include <stdexcept>

#include "orbalg/lyndon.hpp"

namespace orbalg {

std::string CheckReport::summary() const {
  if (ok) return "ok";
  std::ostringstream out;
  out << failures.size() << " violation(s):";
  for (const auto& f : failures) out << "\n  " << f;
  return out.str();
}

namespace {

// alpha padded with copies of the least weight-1 block up to total weight N.
OrbitKey pad_orbit(const GroupModel& model, const OrbitKey& alpha, int N) {
  const int extra = N - alpha.weight();
  const Block one{1, 1};
  if (model.kind() == ModelKind::WreathA) {
    std::vector<Block> letters = alpha.word().letters();
    letters.insert(letters.end(), static_cast<std::size_t>(extra), one);
    return OrbitKey::of(Word(std::move(letters)));
  }
  std::vector<Block> blocks = alpha.multiset().seq();
  blocks.insert(blocks.end(), static_cast<std::size_t>(extra), one);
  return OrbitKey::of(BlockMultiset(std::move(blocks)));
}

}  // namespace

RamseyOrdering ramsey_ordering(const GroupModel& model, int n, int N) {
  if (n < 0) throw std::invalid_argument("orbit weight must be >= 0");
  if (N < n) throw std::invalid_argument("padded weight must satisfy N >= n");
  if (N > n && model.profile().count(1) < 1)
    throw std::invalid_argument(
        "padding requires a weight-1 block, which this model does not have");

  RamseyOrdering ordering;
  ordering.weight = n;
  ordering.padded_size = N;
  ordering.orbits = orbits_of_weight(model, n);  // already in ascending orbit order
  for (const OrbitKey& alpha : ordering.orbits)
    ordering.padded.emplace(alpha, pad_orbit(model, alpha, N));
  return ordering;
}

CheckReport verify_ramsey_property(const RamseyOrdering& ordering, const GroupModel& model) {
  CheckReport report;
  const auto& orbits = ordering.orbits;
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    const OrbitKey& alpha = orbits[a];
    const OrbitKey& witness = ordering.padded.at(alpha);
    CountMap counts = suborbit_counts(model, witness, ordering.weight);
    auto own = counts.find(alpha);
    if (own == counts.end() || own->second <= 0)
      report.fail("witness of " + alpha.str() + " contains no subset of its own orbit");
    for (std::size_t b = a + 1; b < orbits.size(); ++b) {
      auto later = counts.find(orbits[b]);
      if (later != counts.end() && later->second > 0)
        report.fail("witness of " + alpha.str() + " contains " + later->second.str() +
                    " subset(s) of the later orbit " + orbits[b].str());
    }
  }
  return report;
}

RamseyOrdering induced_ordering(const RamseyOrdering& ordering, const GroupModel& model,
                                int m) {
  if (m < 0 || m > ordering.weight)
    throw std::invalid_argument("induced weight must satisfy 0 <= m <= n");

  RamseyOrdering induced;
  induced.weight = m;
  induced.padded_size = ordering.padded_size;

  // Position of the first witness containing each m-orbit.
  std::map<OrbitKey, std::size_t, OrbitKeyLess> first_at;
  std::vector<OrbitKey> targets = orbits_of_weight(model, m);
  for (const OrbitKey& d : targets) {
    bool found = false;
    for (std::size_t a = 0; a < ordering.orbits.size() && !found; ++a) {
      CountMap counts =
          suborbit_counts(model, ordering.padded.at(ordering.orbits[a]), m);
      auto it = counts.find(d);
      if (it != counts.end() && it->second > 0) {
        first_at.emplace(d, a);
        found = true;
      }
    }
    if (!found)
      throw std::domain_error("orbit " + d.str() +
                              " appears in no witness set of the ordering");
  }

  // Distinct orbits must appear first at distinct positions, otherwise the
  // induced order would be ambiguous.
  std::map<std::size_t, OrbitKey> by_position;
  for (const auto& [d, a] : first_at) {
    auto [it, inserted] = by_position.emplace(a, d);
    if (!inserted)
      throw std::domain_error("orbits " + it->second.str() + " and " + d.str() +
                              " first appear in the same witness set");
  }

  for (const auto& [a, d] : by_position) {
    induced.orbits.push_back(d);
    induced.padded.emplace(d, ordering.padded.at(ordering.orbits[a]));
  }
  return induced;
}

OrbitKey join_orbits(const OrbitKey& beta, const OrbitKey& gamma, const GroupModel& model) {
  if (beta.kind() != model.kind() || gamma.kind() != model.kind())
    throw std::invalid_argument("orbit key kind does not match the model kind");
  if (model.kind() == ModelKind::WreathS)
    return OrbitKey::of(multiset_sum(beta.multiset(), gamma.multiset()));
  return OrbitKey::of(greatest_shuffle(beta.word(), gamma.word()));
}

CheckReport verify_conjecture_conditions(const GroupModel& model, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("orbit weights must be >= 0");
  CheckReport report;
  const std::vector<OrbitKey> bs = orbits_of_weight(model, m);
  const std::vector<OrbitKey> cs = orbits_of_weight(model, n);

  auto check_side = [&](const std::vector<OrbitKey>& firsts,
                        const std::vector<OrbitKey>& seconds, const char* side) {
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      for (std::size_t j = i + 1; j < firsts.size(); ++j) {
        for (const OrbitKey& g : seconds) {
          OrbitKey lo = side[0] == 'l' ? join_orbits(firsts[i], g, model)
                                       : join_orbits(g, firsts[i], model);
          OrbitKey hi = side[0] == 'l' ? join_orbits(firsts[j], g, model)
                                       : join_orbits(g, firsts[j], model);
          if (compare_orbit_keys(lo, hi) != std::strong_ordering::less)
            report.fail(std::string("join is not strictly monotone on the ") + side +
                        ": " + firsts[i].str() + " < " + firsts[j].str() +
                        " but join with " + g.str() + " gives " + lo.str() +
                        " !< " + hi.str());
        }
      }
    }
  };
  check_side(bs, cs, "left");
  check_side(cs, bs, "right");
  return report;
}

}  // namespace orbalg
