#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ostar {

// Largest conductor accepted by CycloNum. Beyond this the dense
// representation and the cyclotomic polynomial computation get expensive.
inline constexpr unsigned kMaxConductor = 10000;

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
// first. The result is cached per N; the cache is filled at most once per key.
const std::vector<long>& cyclotomic_polynomial(unsigned N);

// Euler's totient, i.e. deg Phi_N.
unsigned euler_phi(unsigned N);

/**
 * An exact element of the cyclotomic field Q(zeta_N).
 *
 * Values are kept in the power basis {1, zeta, ..., zeta^(phi(N)-1)} with
 * arbitrary-precision rational coefficients, reduced modulo Phi_N after
 * every operation, so equality at a fixed conductor is a coefficient
 * comparison and the zero test is exact.
 *
 * Operands with different conductors are promoted to the lcm of the two.
 */
class CycloNum {
 public:
  CycloNum();
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(mpq_class v);  // NOLINT(google-explicit-constructor)

  static CycloNum root_of_unity(unsigned N, long long e);

  // `coeffs[i]` is the coefficient of zeta_N^(i mod N); any length accepted.
  static CycloNum from_power_coeffs(unsigned N, std::vector<mpq_class> coeffs);

  // Sum of counts[e] * zeta_N^e for e < N. Reduction happens in machine
  // integers, which is the fast path for sums of roots of unity.
  static CycloNum from_exponent_counts(unsigned N, std::span<const long long> counts);

  unsigned conductor() const noexcept { return conductor_; }

  // Normalized coefficients, length euler_phi(conductor()).
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  // Coefficient of zeta^i in the normalized form; zero for i >= phi(N).
  mpq_class coefficient(unsigned i) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;

  // Same value expressed in Q(zeta_L). L must be a multiple of conductor().
  CycloNum promote(unsigned L) const;

  CycloNum conj() const;
  CycloNum inverse() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const mpq_class& q);
  CycloNum& operator/=(const mpq_class& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const mpq_class& q) { return a *= q; }
  friend CycloNum operator*(const mpq_class& q, CycloNum a) { return a *= q; }
  friend CycloNum operator/(CycloNum a, const mpq_class& q) { return a /= q; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  CycloNum(unsigned N, std::vector<mpq_class> normalized);

  unsigned conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

inline CycloNum root_of_unity(unsigned N, long long e) { return CycloNum::root_of_unity(N, e); }
inline bool is_zero(const CycloNum& a) { return a.is_zero(); }

unsigned lcm_conductor(unsigned a, unsigned b);

}  // namespace ostar
