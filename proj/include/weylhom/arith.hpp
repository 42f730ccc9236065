#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace weylhom {

inline bool is_prime_u32(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) return false;
  return true;
}

// Prime modulus; validated once at construction so downstream code can
// assume inverses exist.
class Prime {
 public:
  explicit Prime(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p))
      throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
  }
  std::uint32_t value() const { return p_; }
  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

// Raw GF(p) ops on canonical representatives in [0, p).  Hot paths use
// these directly; FpScalar below is the checked wrapper.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, p - 2, p);  // Fermat
}

// Element of GF(p).  Mixing moduli is a programming error and throws.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  FpScalar() = default;
  FpScalar(std::uint64_t v, Prime prime)
      : value(static_cast<std::uint32_t>(v % prime.value())), p(prime.value()) {}
  static FpScalar raw(std::uint32_t v, std::uint32_t p) { return FpScalar{v, p}; }

  bool is_zero() const { return value == 0; }

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_add(a.value, b.value, a.p), a.p);
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_sub(a.value, b.value, a.p), a.p);
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_mul(a.value, b.value, a.p), a.p);
  }
  friend FpScalar operator-(FpScalar a) { return raw(fp_neg(a.value, a.p), a.p); }
  FpScalar inv() const { return raw(fp_inv(value, p), p); }
  friend bool operator==(FpScalar a, FpScalar b) {
    a.check(b);
    return a.value == b.value;
  }

 private:
  FpScalar(std::uint32_t v, std::uint32_t prime) : value(v), p(prime) {}
  void check(FpScalar o) const {
    if (p != o.p) throw std::invalid_argument("FpScalar: modulus mismatch");
  }
};

// Exact binomial coefficient.  Out-of-range k yields 0 rather than an
// error so sums over formal ranges need no guards.
inline mpz_class binom_exact(unsigned long m, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > m) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), m, static_cast<unsigned long>(k));
  return r;
}

namespace detail {

// binom(m, k) mod p for 0 <= m, k < p, by the multiplicative formula.
inline std::uint32_t binom_small_mod_p(std::uint32_t m, std::uint32_t k, std::uint32_t p) {
  if (k > m) return 0;
  if (m - k < k) k = m - k;
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t j = 1; j <= k; ++j) {
    num = fp_mul(num, m - k + j, p);
    den = fp_mul(den, j, p);
  }
  return fp_mul(num, fp_inv(den == 0 ? 1 : den, p), p);
}

}  // namespace detail

// binom(m, k) mod p via the base-p digit product (Lucas).  Never builds
// the exact value, so huge m are fine.
inline FpScalar binom_mod_p(Prime prime, unsigned long m, long k) {
  const std::uint32_t p = prime.value();
  if (k < 0 || static_cast<unsigned long>(k) > m) return FpScalar(0, prime);
  unsigned long kk = static_cast<unsigned long>(k);
  std::uint32_t r = 1;
  while (m > 0 || kk > 0) {
    std::uint32_t md = static_cast<std::uint32_t>(m % p);
    std::uint32_t kd = static_cast<std::uint32_t>(kk % p);
    if (kd > md) return FpScalar(0, prime);
    r = fp_mul(r, detail::binom_small_mod_p(md, kd, p), p);
    m /= p;
    kk /= p;
  }
  return FpScalar(r, prime);
}

inline bool binom_divisible_by_p(Prime p, unsigned long m, long k) {
  return binom_mod_p(p, m, k).is_zero();
}

}  // namespace weylhom
