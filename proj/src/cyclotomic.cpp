#include "ostar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ostar/errors.hpp"

namespace ostar {

namespace {

void check_conductor(unsigned N) {
  if (N == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  if (N > kMaxConductor)
    throw BudgetError("cyclotomic conductor " + std::to_string(N) + " exceeds cap " +
                      std::to_string(kMaxConductor));
}

// Exact division of `num` by the monic polynomial `den`; both lowest degree first.
std::vector<mpz_class> divide_exact(const std::vector<mpz_class>& num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> rem = num;
  std::vector<mpz_class> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = rem[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (rem[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

std::vector<long> compute_cyclotomic(unsigned N) {
  // x^N - 1 divided by Phi_d for every proper divisor d of N.
  std::vector<mpz_class> poly(N + 1, 0);
  poly[0] = -1;
  poly[N] = 1;
  for (unsigned d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::vector<long> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].fits_slong_p()) throw std::overflow_error("cyclotomic coefficient overflow");
    out[i] = poly[i].get_si();
  }
  return out;
}

// Reduces a dense vector indexed by exponent mod N (length N) modulo Phi_N
// and truncates it to length phi(N).
template <typename T>
void reduce_in_place(unsigned N, std::vector<T>& v) {
  const auto& phi_poly = cyclotomic_polynomial(N);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    T c = v[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) v[i - deg + j] -= c * phi_poly[j];
    }
    v[i] = 0;
  }
  v.resize(deg);
}

void reduce_counts(unsigned N, std::vector<long long>& v) {
  const auto& phi_poly = cyclotomic_polynomial(N);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    const long long c = v[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] == 0) continue;
      long long prod = 0;
      if (__builtin_mul_overflow(c, static_cast<long long>(phi_poly[j]), &prod) ||
          __builtin_sub_overflow(v[i - deg + j], prod, &v[i - deg + j]))
        throw std::overflow_error("root-of-unity count reduction overflow");
    }
    v[i] = 0;
  }
  v.resize(deg);
}

// Polynomial helpers over Q for the inverse computation.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::size_t degree(const QPoly& p) { return p.size() - 1; }

bool is_zero_poly(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  const std::size_t db = degree(b);
  if (degree(r) < db) {
    q = QPoly{0};
    return;
  }
  q.assign(degree(r) - db + 1, 0);
  const mpq_class lead = b.back();
  for (std::size_t i = degree(r) + 1; i-- > db;) {
    if (r[i] == 0) continue;
    mpq_class c = r[i] / lead;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  r.resize(db == 0 ? 1 : db);
  trim(r);
  trim(q);
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned N) {
  check_conductor(N);
  static std::mutex mu;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = compute_cyclotomic(N);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned N) {
  if (N == 0) throw std::invalid_argument("euler_phi(0)");
  unsigned result = N;
  unsigned n = N;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) {
  const unsigned long l = std::lcm(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  if (l > kMaxConductor) check_conductor(kMaxConductor + 1);
  return static_cast<unsigned>(l);
}

CycloNum::CycloNum() : conductor_(1), coeffs_{mpq_class(0)} {}

CycloNum::CycloNum(long v) : conductor_(1), coeffs_{mpq_class(v)} {}

CycloNum::CycloNum(mpq_class v) : conductor_(1), coeffs_{std::move(v)} { coeffs_[0].canonicalize(); }

CycloNum::CycloNum(unsigned N, std::vector<mpq_class> normalized)
    : conductor_(N), coeffs_(std::move(normalized)) {}

CycloNum CycloNum::root_of_unity(unsigned N, long long e) {
  check_conductor(N);
  long long r = e % static_cast<long long>(N);
  if (r < 0) r += N;
  std::vector<long long> counts(N, 0);
  counts[static_cast<std::size_t>(r)] = 1;
  return from_exponent_counts(N, counts);
}

CycloNum CycloNum::from_power_coeffs(unsigned N, std::vector<mpq_class> coeffs) {
  check_conductor(N);
  std::vector<mpq_class> dense(N, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i] != 0) dense[i % N] += coeffs[i];
  }
  reduce_in_place(N, dense);
  return CycloNum(N, std::move(dense));
}

CycloNum CycloNum::from_exponent_counts(unsigned N, std::span<const long long> counts) {
  check_conductor(N);
  if (counts.size() != N) throw std::invalid_argument("exponent count vector must have length N");
  std::vector<long long> v(counts.begin(), counts.end());
  reduce_counts(N, v);
  std::vector<mpq_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpq_class(static_cast<long>(v[i]));
  return CycloNum(N, std::move(out));
}

mpq_class CycloNum::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> CycloNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycloNum CycloNum::promote(unsigned L) const {
  check_conductor(L);
  if (L == conductor_) return *this;
  if (L % conductor_ != 0) throw std::invalid_argument("promotion target must be a multiple of the conductor");
  const unsigned stride = L / conductor_;
  std::vector<mpq_class> dense(L, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[i * stride] = coeffs_[i];
  reduce_in_place(L, dense);
  return CycloNum(L, std::move(dense));
}

CycloNum CycloNum::conj() const {
  const unsigned N = conductor_;
  std::vector<mpq_class> dense(N, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[(N - i) % N] = coeffs_[i];
  reduce_in_place(N, dense);
  return CycloNum(N, std::move(dense));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  const auto& phi_poly = cyclotomic_polynomial(conductor_);
  QPoly r0(phi_poly.begin(), phi_poly.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{0};
  QPoly s1{1};
  // Invariant: s_k * a == r_k (mod Phi_N).
  while (degree(r1) > 0) {
    QPoly q;
    QPoly r;
    divmod(r0, r1, q, r);
    if (is_zero_poly(r)) throw std::logic_error("cyclotomic polynomial is not irreducible");
    QPoly s = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return from_power_coeffs(conductor_, std::move(s1));
}

std::complex<double> CycloNum::to_complex() const {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long double re = 0;
  long double im = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const long double c = coeffs_[i].get_d();
    const long double t = two_pi * static_cast<long double>(i) / conductor_;
    re += c * std::cos(t);
    im += c * std::sin(t);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << coeffs_[i].get_str();
    if (i > 0) out << "*z" << conductor_ << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  const unsigned L = lcm_conductor(conductor_, o.conductor_);
  *this = promote(L);
  return *this += o.promote(L);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.conductor_ != conductor_) {
    const unsigned L = lcm_conductor(conductor_, o.conductor_);
    *this = promote(L);
    return *this *= o.promote(L);
  }
  const unsigned N = conductor_;
  std::vector<mpq_class> dense(N, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      dense[(i + j) % N] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_in_place(N, dense);
  coeffs_ = std::move(dense);
  return *this;
}

CycloNum& CycloNum::operator*=(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycloNum& CycloNum::operator/=(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  if (r == 0) throw std::domain_error("division of cyclotomic number by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const unsigned L = lcm_conductor(a.conductor_, b.conductor_);
  return a.promote(L).coeffs_ == b.promote(L).coeffs_;
}

}  // namespace ostar
