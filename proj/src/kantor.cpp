#include "orbalg/kantor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbalg {

std::vector<std::vector<int>> subsets_colex(int d, int e) {
  if (d < 0 || e < 0 || e > d)
    throw std::invalid_argument("subsets_colex: need 0 <= e <= d");
  // Colex enumeration: start with {1..e}, repeatedly advance the lowest
  // element that can move without disturbing the larger ones, resetting the
  // elements below it.
  std::vector<std::vector<int>> out;
  if (e == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> s(e);
  for (int i = 0; i < e; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = 0;
    while (i < e) {
      int limit = (i + 1 < e) ? s[i + 1] - 1 : d;
      if (s[i] < limit) break;
      ++i;
    }
    if (i == e) break;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j + 1;
  }
  return out;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_difference(const std::vector<int>& b, const std::vector<int>& a) {
  std::vector<int> out;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RationalMatrix incidence_matrix(int d, int e, int f) {
  if (!(0 <= e && e < f && f <= d - e))
    throw std::invalid_argument("incidence_matrix: need 0 <= e < f <= d - e");
  auto rows = subsets_colex(d, e);
  auto cols = subsets_colex(d, f);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (subset_of(rows[r], cols[c])) m.at(r, c) = 1;
  return m;
}

RationalMatrix weighted_incidence_matrix(int d, int e, int f, const std::vector<int>& e0,
                                         const SubsetWeights& weights) {
  if (!(0 <= e && e < f && f <= d - 2 * e))
    throw std::invalid_argument("weighted_incidence_matrix: need 0 <= e < f <= d - 2e");
  std::vector<int> ref = e0;
  std::sort(ref.begin(), ref.end());
  if (std::adjacent_find(ref.begin(), ref.end()) != ref.end())
    throw std::invalid_argument("weighted_incidence_matrix: e0 has repeated elements");
  if (static_cast<int>(ref.size()) != e)
    throw std::invalid_argument("weighted_incidence_matrix: e0 must have e elements");
  for (int v : ref)
    if (v < 1 || v > d)
      throw std::invalid_argument("weighted_incidence_matrix: e0 element out of range");

  for (const auto& [key, value] : weights) {
    std::vector<int> k = key;
    std::sort(k.begin(), k.end());
    if (static_cast<int>(k.size()) != f - e || !subset_of(k, ref))
      throw std::invalid_argument(
          "weighted_incidence_matrix: weight keys must be (f-e)-subsets of e0");
    (void)value;
  }

  auto weight_of = [&](const std::vector<int>& x) -> Rational {
    if (!subset_of(x, ref)) return 1;  // weight forced to 1 off the reference set
    auto it = weights.find(x);
    return it == weights.end() ? Rational(1) : it->second;
  };

  auto rows = subsets_colex(d, e);
  auto cols = subsets_colex(d, f);
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (subset_of(rows[r], cols[c])) m.at(r, c) = weight_of(set_difference(cols[c], rows[r]));
  return m;
}

std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row (scaling a row by a positive integer does
  // not change the rank), then run fraction-free elimination: after step k
  // every entry is a (k+1)x(k+1) minor of the integer matrix, and the
  // division by the previous pivot is exact.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Int lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(m.at(r, c))));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c);
      a[r][c] = Int(boost::multiprecision::numerator(q)) *
                (lcm / Int(boost::multiprecision::denominator(q)));
    }
  }

  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // Choose the nonzero pivot of smallest magnitude to limit entry growth.
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      if (pivot == rows || boost::multiprecision::abs(a[r][col]) <
                               boost::multiprecision::abs(a[pivot][col]))
        pivot = r;
    }
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const Int& p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (p * a[r][c] - factor * a[rank][c]) / prev;
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational_gauss(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const Rational inv = a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] /= inv;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbalg
