#include "preftriads/counting.hpp"

#include <stdexcept>
#include <string>

namespace preftriads {

namespace {

BigCount exact_divide(const BigCount& numerator, const BigCount& divisor,
                      const char* what) {
  if (numerator % divisor != 0) {
    throw std::logic_error(std::string(what) + ": division of " +
                           numerator.str() + " by " + divisor.str() +
                           " is not exact");
  }
  return numerator / divisor;
}

}  // namespace

BigCount factorial(std::uint32_t n) {
  BigCount result = 1;
  for (std::uint32_t k = 2; k <= n; ++k) result *= k;
  return result;
}

BigCount order3_count(std::uint32_t n) {
  if (n < 1) throw InvalidSizeError("order3_count needs n >= 1");
  BigCount total = 0;
  BigCount pow3 = 1;
  for (std::uint32_t m = 1; 3 * m <= n; ++m) {
    pow3 *= 3;
    total += exact_divide(factorial(n),
                          factorial(n - 3 * m) * factorial(m) * pow3,
                          "order3_count term");
  }
  return total;
}

BigCount class_count(std::uint32_t n) {
  if (n < 2) {
    throw InvalidSizeError("class_count needs n >= 2, got " +
                           std::to_string(n));
  }
  const BigCount nf = factorial(n);
  return exact_divide(nf * (nf + 3) + 2 * (order3_count(n) + 1), 6,
                      "class_count");
}

OrbitCaseCounts orbit_case_counts(std::uint32_t n) {
  if (n < 2) {
    throw InvalidSizeError("orbit_case_counts needs n >= 2, got " +
                           std::to_string(n));
  }
  const BigCount nf = factorial(n);
  const BigCount l = order3_count(n);
  OrbitCaseCounts counts;
  counts.all_identical = 1;
  counts.two_identical = nf - 1;
  counts.order3_pair = exact_divide(l, 2, "order3_pair count");
  counts.generic =
      exact_divide(nf * nf - 1 - 3 * (nf - 1) - l, 6, "generic count");
  return counts;
}

}  // namespace preftriads
