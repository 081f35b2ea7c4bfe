#include "mmcu/setfamily.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "mmcu/util.hpp"

namespace mmcu {

namespace detail {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int next_prime(int p) {
  while (!is_prime(p)) ++p;
  return p;
}

// Primes for the splitter: every (a+b)-subset of [0,n) must be mapped
// injectively by x mod p for at least one listed prime. A pair x != y
// collides mod p only when p divides x - y, and a difference below n has
// fewer than log_p0(n) prime factors >= p0.
std::vector<int> splitter_primes(int n, int t) {
  int p0 = next_prime(std::max(t * t, 2));
  int pairs = t * (t - 1) / 2;
  int per_pair = std::max(1, static_cast<int>(std::ceil(
                                 std::log(std::max(2, n)) / std::log(p0))));
  int count = pairs * per_pair + 1;
  std::vector<int> out;
  for (int p = p0; static_cast<int>(out.size()) < count; p = next_prime(p + 1))
    out.push_back(p);
  return out;
}

}  // namespace

double splitter_size_estimate(int n, int a, int b) {
  int t = a + b;
  if (t < 2) return 1e300;
  auto primes = splitter_primes(n, t);
  double total = 0;
  for (int p : primes) {
    if (p > 30) return 1e300;  // 2^p members would be unusable
    total += std::ldexp(1.0, p);
  }
  return total;
}

SetFamily build_family_kernel(int n, int a, int b) {
  SetFamily f;
  f.universe_size = n;
  if (subset_count(n, a) <= subset_count(n, b)) {
    for_each_subset_lex(n, a, [&](const std::vector<int>& s) {
      boost::dynamic_bitset<> m(n);
      for (int i : s) m.set(i);
      f.members.push_back(std::move(m));
      return true;
    });
  } else {
    for_each_subset_lex(n, b, [&](const std::vector<int>& s) {
      boost::dynamic_bitset<> m(n);
      m.set();
      for (int i : s) m.reset(i);
      f.members.push_back(std::move(m));
      return true;
    });
  }
  return f;
}

SetFamily build_family_splitter(int n, int a, int b) {
  int t = a + b;
  SetFamily f;
  f.universe_size = n;
  for (int p : splitter_primes(n, t)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      boost::dynamic_bitset<> m(n);
      for (int x = 0; x < n; ++x)
        if (mask >> (x % p) & 1) m.set(x);
      f.members.push_back(std::move(m));
    }
  }
  return f;
}

}  // namespace detail

SetFamily build_family(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0)
    throw std::invalid_argument("build_family: negative parameter");
  a = std::min(a, n);
  b = std::min(b, n);
  SetFamily f;
  f.universe_size = n;
  if (a == 0) {
    f.members.emplace_back(n);  // the empty set serves every (empty A, B)
    return f;
  }
  if (b == 0) {
    boost::dynamic_bitset<> all(n);
    all.set();
    f.members.push_back(std::move(all));
    return f;
  }
  double kernel_cost = std::min(subset_count(n, a), subset_count(n, b));
  double splitter_cost = detail::splitter_size_estimate(n, a, b);
  if (splitter_cost < kernel_cost) return detail::build_family_splitter(n, a, b);
  return detail::build_family_kernel(n, a, b);
}

bool verify_family(const SetFamily& f, int a, int b, double guard) {
  int n = f.universe_size;
  a = std::min(a, n);
  b = std::min(b, n);
  double pairs = subset_count(n, a) * subset_count(n, b);
  if (pairs * std::max<std::size_t>(1, f.members.size()) > guard)
    throw std::runtime_error("verify_family: check would exceed the guard");

  // It suffices to test B at its maximal size: shrinking B only relaxes the
  // avoidance requirement. A runs over all sizes (it cannot always be padded
  // when n is small).
  bool ok = true;
  for_each_subset_lex(n, a, [&](const std::vector<int>& a_idx) {
    boost::dynamic_bitset<> amask(n);
    for (int i : a_idx) amask.set(i);
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (!amask.test(i)) rest.push_back(i);
    int bsize = std::min<int>(b, static_cast<int>(rest.size()));
    // Exact-size subsets of the complement.
    std::vector<int> comb(bsize);
    std::function<bool(int, int)> rec = [&](int pos, int start) {
      if (pos == bsize) {
        boost::dynamic_bitset<> bmask(n);
        for (int i : comb) bmask.set(rest[i]);
        for (const auto& s : f.members)
          if (amask.is_subset_of(s) && !s.intersects(bmask)) return true;
        ok = false;
        return false;
      }
      for (int i = start; i <= static_cast<int>(rest.size()) - (bsize - pos); ++i) {
        comb[pos] = i;
        if (!rec(pos + 1, i + 1)) return false;
      }
      return true;
    };
    return rec(0, 0);
  });
  return ok;
}

SetFamily build_family_random(int n, int a, int b, std::uint64_t seed) {
  a = std::min(a, n);
  b = std::min(b, n);
  if (a == 0 || b == 0) return build_family(n, a, b);
  double t = a + b;
  double success = std::exp(a * std::log(a / t) + b * std::log(b / t));
  double log_pairs = std::lgamma(n + 1.0) - std::lgamma(a + 1.0) - std::lgamma(n - a + 1.0) +
                     std::lgamma(n - a + 1.0) - std::lgamma(b + 1.0) -
                     std::lgamma(n - a - b + 1.0);
  double rounds_d = (log_pairs + std::log(1e6)) / success;
  int rounds = static_cast<int>(std::min(1e6, std::max(16.0, std::ceil(rounds_d))));

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution join(a / t);
  SetFamily f;
  f.universe_size = n;
  for (int r = 0; r < rounds; ++r) {
    boost::dynamic_bitset<> m(n);
    for (int x = 0; x < n; ++x)
      if (join(rng)) m.set(x);
    f.members.push_back(std::move(m));
  }
  return f;
}

}  // namespace mmcu
