#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbalg/algebra.hpp"
#include "orbalg/model.hpp"

namespace orbalg {

// The weight-n orbits of a model in ascending orbit order, each paired with
// the weight-N key of its padded witness set (the orbit padded with copies
// of the least weight-1 block up to total weight N).
struct RamseyOrdering {
  int weight = 0;       // n: the weight of the listed orbits
  int padded_size = 0;  // N: the weight of each witness key
  std::vector<OrbitKey> orbits;
  std::map<OrbitKey, OrbitKey, OrbitKeyLess> padded;
};

RamseyOrdering ramsey_ordering(const GroupModel& model, int n, int N);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string line) {
    ok = false;
    failures.push_back(std::move(line));
  }
  std::string summary() const;
};

// The defining property of the ordering: each witness set contains subsets
// of its own orbit but none of any later orbit.
CheckReport verify_ramsey_property(const RamseyOrdering& ordering, const GroupModel& model);

// Orders the weight-m orbits by first appearance inside the witness sets of
// an existing weight-n ordering (m <= n).  Errors if some m-orbit never
// appears or two m-orbits would share a witness position.
RamseyOrdering induced_ordering(const RamseyOrdering& ordering, const GroupModel& model,
                                int m);

// The least orbit in the support of the product of the two basis elements:
// the multiset union for wreath-S-like models, the greatest shuffle for
// wreath-A-like models.
OrbitKey join_orbits(const OrbitKey& beta, const OrbitKey& gamma, const GroupModel& model);

// Checks both strict-monotonicity conditions of the product conjecture for
// all weight-m orbit pairs against all weight-n orbits (and symmetrically),
// reporting every violation.
CheckReport verify_conjecture_conditions(const GroupModel& model, int m, int n);

}  // namespace orbalg
