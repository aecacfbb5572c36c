#include "ostar/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ostar {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("prime_factors(0)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

void SemigroupQuery::validate() const {
  if (primes.empty()) throw std::invalid_argument("semigroup query needs at least one prime");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw std::invalid_argument("semigroup generator " + std::to_string(primes[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[j] == primes[i]) throw std::invalid_argument("semigroup generators must be distinct");
  }
}

bool semigroup_member(const SemigroupQuery& q) {
  q.validate();
  if (q.k == 0) return true;
  // reachable[r]: r is a nonnegative combination of the primes.
  std::vector<char> reachable(q.k + 1, 0);
  reachable[0] = 1;
  for (std::uint64_t r = 1; r <= q.k; ++r) {
    for (auto p : q.primes) {
      if (p <= r && reachable[r - p]) {
        reachable[r] = 1;
        break;
      }
    }
  }
  return reachable[q.k] != 0;
}

bool lam_leung_certifies_nonzero(std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("root-of-unity order must be positive");
  auto primes = prime_factors(m);
  if (primes.empty()) return k != 0;
  return !semigroup_member(SemigroupQuery{k, std::move(primes)});
}

}  // namespace ostar
