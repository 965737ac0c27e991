#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpdec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
  explicit NotPrime(std::uint64_t q) : Error("not a prime modulus: " + std::to_string(q)) {}
};
struct DivideByZero : Error {
  DivideByZero() : Error("division by zero in finite field") {}
};
struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

/// Prime field F_q. Residues are stored as machine integers in [0, q);
/// every operation reduces eagerly.
class Field {
 public:
  explicit Field(std::uint64_t q) : q_(q) {
    if (q < 2 || !detail::is_prime_u64(q)) throw NotPrime(q);
  }

  std::uint64_t q() const { return q_; }

  std::uint64_t reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(q_) : m);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod(a, b, q_); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return detail::powmod(a, e, q_); }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % q_ == 0) throw DivideByZero();
    return detail::powmod(a % q_, q_ - 2, q_);
  }

  /// Zero-centered lift of a residue into [-q/2, q/2).
  double lift(std::uint64_t a) const {
    double v = static_cast<double>(a % q_);
    return v >= static_cast<double>(q_) / 2.0 ? v - static_cast<double>(q_) : v;
  }

  bool operator==(const Field& o) const { return q_ == o.q_; }
  bool operator!=(const Field& o) const { return q_ != o.q_; }

 private:
  std::uint64_t q_;
};

/// A residue tagged with its modulus, for interfaces where mixing fields
/// must be detectable.
struct FieldElem {
  std::uint64_t value = 0;
  std::uint64_t q = 0;

  FieldElem() = default;
  FieldElem(std::uint64_t v, const Field& f) : value(v % f.q()), q(f.q()) {}
  FieldElem(std::uint64_t v, std::uint64_t modulus) : value(v % modulus), q(modulus) {}

  bool operator==(const FieldElem& o) const = default;
};

inline void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.q != b.q) throw FieldMismatch();
}

inline Field field_new(std::uint64_t q) { return Field(q); }

}  // namespace lpdec
