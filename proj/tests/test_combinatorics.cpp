// Exact combinatorics, checked against Pascal-style recurrences and brute
// enumeration, plus the counting identities used by the census formulas.

#include <doctest.h>

#include "sandwich/exact_int.hpp"
#include "sandwich/partial_map.hpp"

using namespace sandwich;

namespace {

// Independent Pascal-triangle oracle.
ExactInt binom_rec(int k, int mu) {
  if (mu < 0 || mu > k) return 0;
  if (mu == 0 || mu == k) return 1;
  return binom_rec(k - 1, mu - 1) + binom_rec(k - 1, mu);
}

// Count partitions of {1..k} into exactly mu blocks by direct enumeration of
// restricted-growth strings.
long long partitions_direct(int k, int mu) {
  if (k == 0) return mu == 0 ? 1 : 0;
  long long count = 0;
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == k) {
      if (maxv + 1 == mu) ++count;
      return;
    }
    for (int b = 0; b <= maxv + 1; ++b) self(self, i + 1, std::max(maxv, b));
  };
  rec(rec, 1, 0);  // point 1 always opens block 0
  return count;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binom(5, 3) == 10);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(2, 5) == 0);
  for (int k = 0; k <= 12; ++k)
    for (int mu = 0; mu <= 12; ++mu)
      CHECK(binom(k, mu) == binom_rec(k, mu));
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 6) == 1);
  CHECK(stirling2(5, 4) == 10);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  for (int k = 0; k <= 6; ++k)
    for (int mu = 0; mu <= k; ++mu)
      CHECK(stirling2(k, mu) == ExactInt(partitions_direct(k, mu)));
}

TEST_CASE("factorials and powers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(6) == 720);
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(10, 20) == ExactInt("100000000000000000000"));
}

TEST_CASE("elementary symmetric sums") {
  auto e = elementary_symmetric({2, 2});
  REQUIRE(e.size() == 3);
  CHECK(e[0] == 1);
  CHECK(e[1] == 4);
  CHECK(e[2] == 4);
  auto e2 = elementary_symmetric({1, 2, 3});
  CHECK(e2[1] == 6);
  CHECK(e2[2] == 11);
  CHECK(e2[3] == 6);
}

TEST_CASE("partial transformation counting identity") {
  // (beta+1)^alpha = sum over mu of mu! C(beta,mu) S(alpha+1,mu+1).
  for (int alpha = 0; alpha <= 8; ++alpha)
    for (int beta = 0; beta <= 8; ++beta) {
      ExactInt sum = 0;
      for (int mu = 0; mu <= std::min(alpha, beta); ++mu)
        sum += factorial(mu) * binom(beta, mu) * stirling2(alpha + 1, mu + 1);
      CHECK(sum == ipow(beta + 1, alpha));
    }
}

TEST_CASE("full transformation counting identity") {
  // beta^alpha = sum over mu >= 1 of mu! C(beta,mu) S(alpha,mu).
  for (int alpha = 1; alpha <= 8; ++alpha)
    for (int beta = 1; beta <= 8; ++beta) {
      ExactInt sum = 0;
      for (int mu = 1; mu <= std::min(alpha, beta); ++mu)
        sum += factorial(mu) * binom(beta, mu) * stirling2(alpha, mu);
      CHECK(sum == ipow(beta, alpha));
    }
}

TEST_CASE("injective counting formula against an independent recurrence") {
  // |I(a,b)| = |I(a-1,b)| + b |I(a-1,b-1)|, seeded at |I(0,b)| = 1.
  const int N = 8;
  std::vector<std::vector<ExactInt>> table(
      N + 1, std::vector<ExactInt>(N + 1, 0));
  for (int b = 0; b <= N; ++b) table[0][static_cast<size_t>(b)] = 1;
  for (int a = 1; a <= N; ++a) {
    table[static_cast<size_t>(a)][0] = 1;
    for (int b = 1; b <= N; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          table[static_cast<size_t>(a - 1)][static_cast<size_t>(b)] +
          ExactInt(b) *
              table[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
  }
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b) {
      ExactInt sum = 0;
      for (int mu = 0; mu <= std::min(a, b); ++mu)
        sum += factorial(mu) * binom(a, mu) * binom(b, mu);
      CHECK(sum == table[static_cast<size_t>(a)][static_cast<size_t>(b)]);
    }
  // And against direct enumeration at small sizes.
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      ExactInt sum = 0;
      for (int mu = 0; mu <= std::min(a, b); ++mu)
        sum += factorial(mu) * binom(a, mu) * binom(b, mu);
      CHECK(sum == ExactInt(static_cast<long long>(
                       enumerate_hom_set(Variant::I, a, b).size())));
    }
}
