#ifndef SUPERMAGIC_FIELD_HPP
#define SUPERMAGIC_FIELD_HPP

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supermagic::gf {

namespace detail {
inline std::uint32_t& modulus_storage() {
  static std::uint32_t p = 3;
  return p;
}
}  // namespace detail

/// Characteristic of the prime field all arithmetic happens in.
inline std::uint32_t modulus() { return detail::modulus_storage(); }

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Sets the session modulus. Only odd primes below 2^15 are accepted, so
/// that products of two residues and their sums stay well inside 64 bits.
inline void set_modulus(std::uint32_t p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 15))
    throw std::invalid_argument("modulus must be an odd prime < 32768, got " +
                                std::to_string(p));
  detail::modulus_storage() = p;
}

/// Restores the previous modulus on scope exit.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint32_t p) : saved_(modulus()) { set_modulus(p); }
  ~ModulusScope() { detail::modulus_storage() = saved_; }
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint32_t saved_;
};

/// Residue class modulo the session prime.
class Fp {
 public:
  constexpr Fp() = default;
  Fp(long long x) {  // NOLINT: implicit from integer literals is intended
    const long long p = modulus();
    long long r = x % p;
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  static Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= modulus()) v_ -= modulus();
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ %
                                    modulus());
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // extended Euclid on (v, p)
    long long a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0);
  }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

/// 1/2 in the current field.
inline Fp half() { return Fp(2).inverse(); }

/// (-1)^(a*b) for parity bits.
inline Fp sign(int a, int b) { return (a & b & 1) ? Fp(-1) : Fp(1); }

}  // namespace supermagic::gf

namespace Eigen {
template <>
struct NumTraits<supermagic::gf::Fp> : GenericNumTraits<supermagic::gf::Fp> {
  using Real = supermagic::gf::Fp;
  using NonInteger = supermagic::gf::Fp;
  using Literal = supermagic::gf::Fp;
  using Nested = supermagic::gf::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real::raw(supermagic::gf::modulus() - 1); }
  static inline Real lowest() { return Real(0); }
};
}  // namespace Eigen

#endif  // SUPERMAGIC_FIELD_HPP
