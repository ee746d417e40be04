#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "orbalg/ramsey.hpp"

using namespace orbalg;

namespace {

const Block A{1, 1}, W2{2, 1}, W3{3, 1};

Word W(std::initializer_list<Block> letters) { return Word(std::vector<Block>(letters)); }
BlockMultiset M(std::initializer_list<Block> blocks) {
  return BlockMultiset(std::vector<Block>(blocks));
}

}  // namespace

TEST_SUITE("ramsey") {
  TEST_CASE("orderings pad witnesses with the least weight-1 block") {
    GroupModel m = GroupModel::sk_wreath_a(2);
    RamseyOrdering o = ramsey_ordering(m, 2, 5);
    CHECK(o.weight == 2);
    CHECK(o.padded_size == 5);
    REQUIRE(o.orbits == std::vector<OrbitKey>{OrbitKey::of(W({A, A})), OrbitKey::of(W({W2}))});
    CHECK(o.padded.at(OrbitKey::of(W({A, A}))) == OrbitKey::of(W({A, A, A, A, A})));
    CHECK(o.padded.at(OrbitKey::of(W({W2}))) == OrbitKey::of(W({W2, A, A, A})));

    GroupModel s = GroupModel::sk_wreath_s(2);
    RamseyOrdering os = ramsey_ordering(s, 2, 4);
    CHECK(os.padded.at(OrbitKey::of(M({W2}))) == OrbitKey::of(M({W2, A, A})));

    // N = n means no padding at all, even without weight-1 blocks
    GroupModel heavy = GroupModel::from_table_text(
        "kind = wreath_s\nweight 2 = 1\nb2.1 : e | b2.1 * 1\nb2.1 : b2.1 | e * 1\n");
    RamseyOrdering oh = ramsey_ordering(heavy, 4, 4);
    CHECK(oh.orbits.size() == 1);

    CHECK_THROWS_AS(ramsey_ordering(m, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_ordering(m, 3, 2), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ramsey_ordering(heavy, 2, 5),
                         doctest::Contains("requires a weight-1 block"), std::invalid_argument);
  }

  TEST_CASE("the orbit order is a Ramsey ordering of its padded witnesses") {
    // Every witness may only contain subsets of its own orbit and earlier
    // ones: dissecting or dropping blocks can only move a set earlier.
    for (const GroupModel& m :
         {GroupModel::sk_wreath_a(2), GroupModel::sk_wreath_a(3), GroupModel::sk_wreath_s(3),
          GroupModel::a_wreath_a(4)}) {
      int top = m.enumeration_limit() > 0 ? m.enumeration_limit() : 4;
      for (int n = 0; n <= top; ++n) {
        CheckReport report = verify_ramsey_property(ramsey_ordering(m, n, n + 3), m);
        CHECK(report.ok);
        CHECK(report.summary() == "ok");
        CHECK(report.failures.empty());
      }
    }
  }

  TEST_CASE("a swapped ordering violates the Ramsey property") {
    GroupModel m = GroupModel::sk_wreath_a(2);
    RamseyOrdering o = ramsey_ordering(m, 2, 5);
    std::swap(o.orbits[0], o.orbits[1]);  // claim b2.1 comes before b1.1-b1.1
    CheckReport report = verify_ramsey_property(o, m);
    CHECK(!report.ok);
    REQUIRE(!report.failures.empty());
    // the b2.1 witness still contains pairs of ones, which are now "later"
    CHECK(report.failures[0].find("b2.1") != std::string::npos);
    CHECK(report.summary().find("violation(s):") != std::string::npos);
  }

  TEST_CASE("induced orderings") {
    GroupModel m = GroupModel::sk_wreath_a(2);
    RamseyOrdering o = ramsey_ordering(m, 3, 7);
    RamseyOrdering ind = induced_ordering(o, m, 2);
    CHECK(ind.weight == 2);
    CHECK(ind.padded_size == 7);
    // the induced order recovers the weight-2 orbit order, with witnesses
    // borrowed from the first containing position
    REQUIRE(ind.orbits ==
            std::vector<OrbitKey>{OrbitKey::of(W({A, A})), OrbitKey::of(W({W2}))});
    CHECK(ind.padded.at(OrbitKey::of(W({A, A}))) ==
          OrbitKey::of(W({A, A, A, A, A, A, A})));
    CHECK(ind.padded.at(OrbitKey::of(W({W2}))) == OrbitKey::of(W({W2, A, A, A, A, A})));
    CHECK(verify_ramsey_property(ind, m).ok);

    CHECK_THROWS_AS(induced_ordering(o, m, 4), std::invalid_argument);
    CHECK_THROWS_AS(induced_ordering(o, m, -1), std::invalid_argument);

    // an ordering whose witnesses never contain some target orbit
    RamseyOrdering partial;
    partial.weight = 2;
    partial.padded_size = 4;
    partial.orbits = {OrbitKey::of(W({A, A}))};
    partial.padded.emplace(OrbitKey::of(W({A, A})), OrbitKey::of(W({A, A, A, A})));
    CHECK_THROWS_WITH_AS(induced_ordering(partial, m, 2),
                         doctest::Contains("appears in no witness"), std::domain_error);

    // two orbits surfacing in the same witness make the order ambiguous
    RamseyOrdering clash;
    clash.weight = 3;
    clash.padded_size = 3;
    clash.orbits = {OrbitKey::of(W({W2, A}))};
    clash.padded.emplace(OrbitKey::of(W({W2, A})), OrbitKey::of(W({W2, A})));
    CHECK_THROWS_WITH_AS(induced_ordering(clash, m, 2),
                         doctest::Contains("same witness"), std::domain_error);
  }

  TEST_CASE("joins agree with the least orbit of the actual product") {
    GroupModel a2 = GroupModel::sk_wreath_a(2);
    GroupModel s2 = GroupModel::sk_wreath_s(2);
    for (const GroupModel& m : {a2, s2}) {
      for (int nb = 0; nb <= 3; ++nb)
        for (const OrbitKey& beta : orbits_of_weight(m, nb))
          for (int ng = 0; ng <= 3; ++ng)
            for (const OrbitKey& gamma : orbits_of_weight(m, ng)) {
              OrbitKey joined = join_orbits(beta, gamma, m);
              AlgebraElement p =
                  product(AlgebraElement::basis(m, beta), AlgebraElement::basis(m, gamma));
              CHECK(joined == leading_orbit(p));
              CHECK(joined == join_orbits(gamma, beta, m));
            }
    }
    CHECK(join_orbits(OrbitKey::of(W({A, W2})), OrbitKey::of(W({A})), a2) ==
          OrbitKey::of(W({A, W2, A})));
    CHECK(join_orbits(OrbitKey::of(M({W2})), OrbitKey::of(M({A})), s2) ==
          OrbitKey::of(M({W2, A})));
    CHECK_THROWS_AS(join_orbits(OrbitKey::of(M({A})), OrbitKey::of(M({A})), a2),
                    std::invalid_argument);
  }

  TEST_CASE("join monotonicity holds on the checked ranges") {
    for (const GroupModel& m : {GroupModel::sk_wreath_a(2), GroupModel::sk_wreath_a(3),
                                GroupModel::a_wreath_a(4)}) {
      for (int mm = 0; mm <= 3; ++mm)
        for (int nn = mm; nn <= 3; ++nn) {
          CheckReport report = verify_conjecture_conditions(m, mm, nn);
          CHECK(report.ok);
        }
    }
    // multiset sums are strictly monotone outright
    CheckReport s = verify_conjecture_conditions(GroupModel::sk_wreath_s(3), 3, 4);
    CHECK(s.ok);
    CHECK_THROWS_AS(verify_conjecture_conditions(GroupModel::sk_wreath_a(2), -1, 2),
                    std::invalid_argument);
  }
}
