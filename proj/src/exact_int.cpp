#include "sandwich/exact_int.hpp"

#include <stdexcept>

namespace sandwich {

ExactInt binom(int k, int mu) {
  if (k < 0 || mu < 0) throw std::invalid_argument("binom: negative argument");
  if (mu > k) return 0;
  mu = std::min(mu, k - mu);
  ExactInt r = 1;
  for (int i = 0; i < mu; ++i) {
    r *= (k - i);
    r /= (i + 1);
  }
  return r;
}

ExactInt stirling2(int k, int mu) {
  if (k < 0 || mu < 0)
    throw std::invalid_argument("stirling2: negative argument");
  if (mu > k) return 0;
  if (k == 0) return 1;  // S(0,0)
  if (mu == 0) return 0;
  // Rolling row of S(i, j) = j*S(i-1, j) + S(i-1, j-1).
  std::vector<ExactInt> row(static_cast<size_t>(mu) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= k; ++i) {
    for (int j = std::min(i, mu); j >= 1; --j)
      row[static_cast<size_t>(j)] =
          ExactInt(j) * row[static_cast<size_t>(j)] +
          row[static_cast<size_t>(j - 1)];
    row[0] = 0;  // S(i,0) = 0 for i >= 1
  }
  return row[static_cast<size_t>(mu)];
}

ExactInt factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

ExactInt ipow(ExactInt base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  ExactInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

std::vector<ExactInt> elementary_symmetric(const std::vector<int>& values) {
  std::vector<ExactInt> e(values.size() + 1, 0);
  e[0] = 1;
  size_t used = 0;
  for (int v : values) {
    ++used;
    for (size_t mu = used; mu >= 1; --mu)
      e[mu] += ExactInt(v) * e[mu - 1];
  }
  return e;
}

}  // namespace sandwich
