// setfamily.hpp — deterministic covering families: for any disjoint A, B with
// |A| <= a, |B| <= b over the universe, some member contains A and avoids B.
#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mmcu {

struct SetFamily {
  int universe_size = 0;
  std::vector<boost::dynamic_bitset<>> members;
};

/// Deterministic construction. Strategy is chosen by estimated size: either
/// the kernel family (all subsets of size <= a, or complements of subsets of
/// size <= b, whichever is smaller) or a prime-modulus splitter (hash the
/// universe into residue buckets and take all bucket unions, over enough
/// primes that every a+b element set is hashed injectively by one of them).
SetFamily build_family(int universe_size, int a, int b);

/// Exhaustive check of the covering property. Guarded: throws when the
/// number of (A, B) pairs to test exceeds the guard.
bool verify_family(const SetFamily& f, int a, int b, double guard = 2e8);

/// Seeded randomized constructor (each element joins a member independently
/// with probability a/(a+b), repeated enough rounds for coverage with high
/// probability). Cross-checking only; not used by the solver.
SetFamily build_family_random(int universe_size, int a, int b, std::uint64_t seed);

namespace detail {
SetFamily build_family_kernel(int universe_size, int a, int b);
SetFamily build_family_splitter(int universe_size, int a, int b);
double splitter_size_estimate(int universe_size, int a, int b);
}  // namespace detail

}  // namespace mmcu
