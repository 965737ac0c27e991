#pragma once

#include <cstdint>
#include <vector>

#include "lpdec/field.hpp"

namespace lpdec {

struct DegreeTooLarge : Error {
  DegreeTooLarge() : Error("message degree exceeds code dimension") {}
};

/// Univariate polynomial over F_q, coefficients low-degree first.
/// The zero polynomial has an empty coefficient vector and degree -1
/// (stand-in for the -infinity convention).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) {}

  static Poly zero() { return Poly(); }
  static Poly constant(std::uint64_t v, const Field& f) {
    Poly p;
    if (v % f.q() != 0) p.c_ = {v % f.q()};
    return p;
  }

  /// Trims trailing zero coefficients so the invariant holds.
  void normalize(const Field& f) {
    for (auto& v : c_) v %= f.q();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  void set_coeff(std::size_t i, std::uint64_t v) {
    if (i >= c_.size()) c_.resize(i + 1, 0);
    c_[i] = v;
  }

  std::uint64_t eval(const Field& f, std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x % f.q()), c_[i]);
    return acc;
  }

  Poly plus(const Field& f, const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f.add(coeff(i), o.coeff(i));
    r.normalize(f);
    return r;
  }

  Poly times(const Field& f, const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
    r.normalize(f);
    return r;
  }

  Poly scaled(const Field& f, std::uint64_t a) const {
    Poly r = *this;
    for (auto& v : r.c_) v = f.mul(v, a);
    r.normalize(f);
    return r;
  }

  bool operator==(const Poly& o) const = default;

 private:
  std::vector<std::uint64_t> c_;
};

/// Horner evaluation with a field-consistency check on the argument.
inline FieldElem poly_eval(const Field& f, const Poly& p, const FieldElem& x) {
  if (x.q != f.q()) throw FieldMismatch();
  return FieldElem(p.eval(f, x.value), f);
}

}  // namespace lpdec
