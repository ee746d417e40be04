#include "orbalg/rational.hpp"

#include <stdexcept>

namespace orbalg {

Int binomial(const Int& n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - (i - 1);
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace orbalg
