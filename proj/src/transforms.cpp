#include "orbalg/transforms.hpp"

#include <sstream>
#include <stdexcept>

namespace orbalg {

IntSeries IntSeries::ones(int count, int order) {
  if (count < 0 || order < 0 || count > order)
    throw std::invalid_argument("ones: need 0 <= count <= order");
  IntSeries s = zeros(order);
  for (int n = 1; n <= count; ++n) s.at(n) = 1;
  return s;
}

const Int& IntSeries::at(int n) const {
  if (n < 1 || n > order()) throw std::out_of_range("series index out of range");
  return values[static_cast<std::size_t>(n - 1)];
}

Int& IntSeries::at(int n) {
  if (n < 1 || n > order()) throw std::out_of_range("series index out of range");
  return values[static_cast<std::size_t>(n - 1)];
}

IntSeries invert_transform(const IntSeries& s, Direction d) {
  const int order = s.order();
  IntSeries out = IntSeries::zeros(order);
  if (d == Direction::Forward) {
    // w_n = a_n + sum_{k<n} a_k w_{n-k}
    for (int n = 1; n <= order; ++n) {
      Int w = s.at(n);
      for (int k = 1; k < n; ++k) w += s.at(k) * out.at(n - k);
      out.at(n) = w;
    }
  } else {
    // a_n = w_n - sum_{k<n} a_k w_{n-k}
    for (int n = 1; n <= order; ++n) {
      Int a = s.at(n);
      for (int k = 1; k < n; ++k) a -= out.at(k) * s.at(n - k);
      out.at(n) = a;
    }
  }
  return out;
}

namespace {

// c_n = sum_{d|n} d*l_d
IntSeries aux_from_lyndon(const IntSeries& l) {
  const int order = l.order();
  IntSeries c = IntSeries::zeros(order);
  for (int n = 1; n <= order; ++n)
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) c.at(n) += d * l.at(d);
  return c;
}

// Moebius inversion of c_n = sum_{d|n} d*l_d, with an integrality check.
// require_nonnegative additionally rejects negative exponents.
IntSeries lyndon_from_aux_impl(const IntSeries& c, bool require_nonnegative) {
  const int order = c.order();
  IntSeries l = IntSeries::zeros(order);
  for (int n = 1; n <= order; ++n) {
    Int total = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) total += mobius(n / d) * c.at(d);
    if (total % n != 0)
      throw std::domain_error("generator count is not an integer at index " +
                              std::to_string(n));
    Int value = total / n;
    if (require_nonnegative && value < 0)
      throw std::domain_error("generator count is negative at index " + std::to_string(n));
    l.at(n) = value;
  }
  return l;
}

}  // namespace

IntSeries euler_transform(const IntSeries& s, Direction d) {
  const int order = s.order();
  IntSeries out = IntSeries::zeros(order);
  if (d == Direction::Forward) {
    // l -> w via c: n*w_n = c_n + sum_{k<n} c_k w_{n-k}
    IntSeries c = aux_from_lyndon(s);
    for (int n = 1; n <= order; ++n) {
      Int t = c.at(n);
      for (int k = 1; k < n; ++k) t += c.at(k) * out.at(n - k);
      if (t % n != 0)
        throw std::domain_error("euler transform is not integral at index " +
                                std::to_string(n));
      out.at(n) = t / n;
    }
  } else {
    // w -> l: recover c by c_n = n*w_n - sum_{k<n} c_k w_{n-k}, then invert
    // the divisor sum.  Integer input always yields integer exponents (the
    // unique product expansion of an integer power series has integer
    // exponents); the check stays as a guard on the arithmetic.
    IntSeries c = IntSeries::zeros(order);
    for (int n = 1; n <= order; ++n) {
      Int t = n * s.at(n);
      for (int k = 1; k < n; ++k) t -= c.at(k) * s.at(n - k);
      c.at(n) = t;
    }
    out = lyndon_from_aux_impl(c, /*require_nonnegative=*/false);
  }
  return out;
}

IntSeries aux_from_letters(const IntSeries& a) {
  const int order = a.order();
  IntSeries c = IntSeries::zeros(order);
  // c_n = n*a_n + sum_{k<n} c_k a_{n-k}
  for (int n = 1; n <= order; ++n) {
    Int t = n * a.at(n);
    for (int k = 1; k < n; ++k) t += c.at(k) * a.at(n - k);
    c.at(n) = t;
  }
  return c;
}

IntSeries lyndon_from_aux(const IntSeries& c) {
  return lyndon_from_aux_impl(c, /*require_nonnegative=*/true);
}

IntSeries lyndon_from_letters(const IntSeries& a) {
  return lyndon_from_aux(aux_from_letters(a));
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius requires n >= 1");
  int primes = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared factor
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

WeighReport verify_weigh_identity(const IntSeries& a, const IntSeries& l, int order) {
  if (order < 0 || order > a.order() || order > l.order())
    throw std::invalid_argument("weigh identity order exceeds the series order");
  // Expand prod_{n<=order} (1 - x^n)^{l_n} modulo x^{order+1}.  Generalized
  // binomials keep this exact for negative exponents as well.
  std::vector<Int> prod(static_cast<std::size_t>(order) + 1, 0);
  prod[0] = 1;
  for (int n = 1; n <= order; ++n) {
    const Int& e = l.at(n);
    if (e == 0) continue;
    std::vector<Int> next(prod.size(), 0);
    for (long k = 0; n * k <= order; ++k) {
      Int coeff = binomial(e, k);
      if (k % 2 == 1) coeff = -coeff;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n * k) < next.size(); ++i)
        next[i + static_cast<std::size_t>(n * k)] += coeff * prod[i];
    }
    prod = std::move(next);
  }

  WeighReport report;
  for (int n = 1; n <= order; ++n) {
    Int lhs = -a.at(n);  // coefficient of x^n in 1 - sum a_k x^k
    const Int& rhs = prod[static_cast<std::size_t>(n)];
    if (lhs != rhs) {
      report.ok = false;
      report.first_mismatch = n;
      report.lhs = lhs;
      report.rhs = rhs;
      return report;
    }
  }
  return report;
}

RealizabilityReport exactly_realizable(const IntSeries& b, int order) {
  if (order < 0 || order > b.order())
    throw std::invalid_argument("realizability order exceeds the series order");
  RealizabilityReport report;
  // Recover the auxiliary series from the candidate orbit counts, then the
  // generator counts; realizable means every count is a nonnegative integer.
  IntSeries c = IntSeries::zeros(order);
  for (int n = 1; n <= order; ++n) {
    Int t = n * b.at(n);
    for (int k = 1; k < n; ++k) t -= c.at(k) * b.at(n - k);
    c.at(n) = t;
  }
  for (int n = 1; n <= order; ++n) {
    Int total = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) total += mobius(n / d) * c.at(d);
    if (total % n != 0 || total < 0) {
      report.ok = false;
      report.failing_index = n;
      return report;
    }
    report.witness.push_back(total / n);
  }
  return report;
}

std::string format_series(const IntSeries& s) {
  std::ostringstream out;
  for (const Int& v : s.values) out << v << '\n';
  return out.str();
}

IntSeries parse_series(const std::string& text) {
  std::vector<Int> values;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body[0] == '#') continue;
    try {
      values.emplace_back(body);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected an integer, got '" + body + "'");
    }
  }
  return IntSeries(std::move(values));
}

}  // namespace orbalg
