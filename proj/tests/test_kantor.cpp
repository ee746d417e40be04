#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "orbalg/kantor.hpp"

using namespace orbalg;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

Int choose(int n, int k) { return binomial(Int(n), k); }

}  // namespace

TEST_SUITE("kantor") {
  TEST_CASE("colex subset enumeration") {
    CHECK(subsets_colex(4, 2) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(subsets_colex(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(subsets_colex(3, 3) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(subsets_colex(1, 1) == std::vector<std::vector<int>>{{1}});
    for (int d = 0; d <= 7; ++d)
      for (int e = 0; e <= d; ++e)
        CHECK(Int(subsets_colex(d, e).size()) == choose(d, e));
    CHECK_THROWS_AS(subsets_colex(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(subsets_colex(-1, 0), std::invalid_argument);
  }

  TEST_CASE("colex order is increasing in the largest element") {
    auto subsets = subsets_colex(6, 3);
    for (std::size_t i = 1; i < subsets.size(); ++i) {
      // colex: the reversed sequences compare lexicographically
      std::vector<int> a(subsets[i - 1].rbegin(), subsets[i - 1].rend());
      std::vector<int> b(subsets[i].rbegin(), subsets[i].rend());
      CHECK(a < b);
    }
  }

  TEST_CASE("incidence matrix of points against pairs") {
    RationalMatrix m = incidence_matrix(4, 1, 2);
    RationalMatrix expected = from_rows({{1, 1, 0, 1, 0, 0},
                                         {1, 0, 1, 0, 1, 0},
                                         {0, 1, 1, 0, 0, 1},
                                         {0, 0, 0, 1, 1, 1}});
    REQUIRE(m.rows() == expected.rows());
    REQUIRE(m.cols() == expected.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) CHECK(m.at(r, c) == expected.at(r, c));
    // every column of an (e, f) incidence matrix has C(f, e) ones
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational sum = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) sum += m.at(r, c);
      CHECK(sum == 2);
    }
  }

  TEST_CASE("incidence matrices have full row rank") {
    for (auto [d, e, f] : {std::tuple{4, 1, 2}, {5, 2, 3}, {6, 2, 3}, {6, 2, 4},
                           {7, 3, 4}, {6, 1, 5}, {2, 0, 1}}) {
      RationalMatrix m = incidence_matrix(d, e, f);
      CHECK(Int(rank_exact(m)) == choose(d, e));
      CHECK(rank_rational_gauss(m) == rank_exact(m));
    }
    CHECK_THROWS_AS(incidence_matrix(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(incidence_matrix(4, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(incidence_matrix(3, -1, 1), std::invalid_argument);
  }

  TEST_CASE("weighted incidence keeps full rank for any weights on e0") {
    // f - e = 1: free weights sit on the singletons inside e0
    for (const SubsetWeights& w :
         {SubsetWeights{}, SubsetWeights{{{1}, 0}, {{2}, 0}},
          SubsetWeights{{{1}, Rational(-7, 3)}, {{2}, Rational(1, 2)}}}) {
      RationalMatrix m = weighted_incidence_matrix(7, 2, 3, {1, 2}, w);
      CHECK(m.rows() == 21);
      CHECK(m.cols() == 35);
      CHECK(rank_exact(m) == 21);
      CHECK(rank_rational_gauss(m) == 21);
    }
    // f - e = 2: the only free weight is w(e0) itself; zero it out
    RationalMatrix m2 = weighted_incidence_matrix(8, 2, 4, {1, 2}, {{{1, 2}, 0}});
    CHECK(Int(m2.rows()) == choose(8, 2));
    CHECK(rank_exact(m2) == m2.rows());
    // e = 0: no free weights at all, plain incidence
    RationalMatrix m3 = weighted_incidence_matrix(4, 0, 2, {}, {});
    CHECK(m3.rows() == 1);
    CHECK(rank_exact(m3) == 1);
  }

  TEST_CASE("weighted incidence matches the unweighted matrix at weight one") {
    RationalMatrix w = weighted_incidence_matrix(6, 1, 2, {3}, {{{3}, 1}});
    RationalMatrix plain = incidence_matrix(6, 1, 2);
    REQUIRE(w.rows() == plain.rows());
    REQUIRE(w.cols() == plain.cols());
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < w.cols(); ++c) CHECK(w.at(r, c) == plain.at(r, c));
  }

  TEST_CASE("weighted incidence input validation") {
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 4, {1, 2}, {}),
                    std::invalid_argument);  // f > d - 2e
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {0, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {1, 8}, {}), std::invalid_argument);
    // weight keys must be (f-e)-subsets of e0
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {1, 2}, {{{3}, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_incidence_matrix(7, 2, 3, {1, 2}, {{{1, 2}, 2}}),
                    std::invalid_argument);
  }

  TEST_CASE("rank on constructed matrices") {
    CHECK(rank_exact(RationalMatrix(3, 4)) == 0);
    CHECK(rank_exact(RationalMatrix(0, 0)) == 0);
    RationalMatrix id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank_exact(id) == 3);
    // third row is the sum of the first two
    RationalMatrix dep = from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}});
    CHECK(rank_exact(dep) == 2);
    CHECK(rank_rational_gauss(dep) == 2);
    // Hilbert 4x4 is nonsingular; its entries exercise the rational paths
    RationalMatrix hilbert(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        hilbert.at(r, c) = Rational(1, static_cast<long>(r + c + 1));
    CHECK(rank_exact(hilbert) == 4);
    CHECK(rank_rational_gauss(hilbert) == 4);
    // rank-one outer product with mixed signs
    RationalMatrix outer(3, 3);
    std::vector<long> u = {2, -3, 5}, v = {1, 4, -2};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) outer.at(r, c) = Rational(u[r] * v[c], 3);
    CHECK(rank_exact(outer) == 1);
  }

  TEST_CASE("the two rank routines agree on random rational matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
      RationalMatrix m(dim(rng), dim(rng));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(num(rng), den(rng));
      // occasionally force dependent rows
      if (trial % 3 == 0 && m.rows() >= 2)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(m.rows() - 1, c) = m.at(0, c) * 2;
      CHECK(rank_exact(m) == rank_rational_gauss(m));
    }
  }
}
