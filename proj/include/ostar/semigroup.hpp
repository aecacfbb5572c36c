#pragma once

#include <cstdint>
#include <vector>

namespace ostar {

// Membership query for the numerical semigroup N0<primes>: is k a
// nonnegative integer combination of the given primes?
struct SemigroupQuery {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> primes;

  // Throws std::invalid_argument unless primes is a nonempty set of primes.
  void validate() const;
};

bool is_prime(std::uint64_t p);

// Distinct prime factors in increasing order; empty for m = 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

bool semigroup_member(const SemigroupQuery& q);

// True iff k lies outside N0<Prime(m)>, in which case no k-term sum of m-th
// roots of unity vanishes (Lam-Leung). A false return only means the
// criterion is silent. For m = 1 the semigroup is {0}.
bool lam_leung_certifies_nonzero(std::uint64_t k, std::uint64_t m);

}  // namespace ostar
