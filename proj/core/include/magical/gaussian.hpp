#ifndef MAGICAL_GAUSSIAN_HPP
#define MAGICAL_GAUSSIAN_HPP

// Gaussian rationals a + b*i over GMP rationals: the scalar extension the
// Cayley transform needs (its formulas mix a triple's elements with i times
// them).  Plain value semantics, exact arithmetic, no normalization beyond
// what mpq_class already guarantees.

#include <gmpxx.h>

#include <string>

namespace magical {

/// Exact rational scalar used throughout the concrete models.
using Rational = mpq_class;

/// A Gaussian rational a + b*i.
struct Gaussian {
  Rational re = 0;
  Rational im = 0;

  Gaussian() = default;
  Gaussian(int r) : re(r) {}  // NOLINT: implicit by design, like mpq_class
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  /// The imaginary unit.
  static Gaussian i() { return Gaussian(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  /// Division via the conjugate; throws std::invalid_argument on zero.
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) {
    return !(a == b);
  }

  /// Display form, e.g. "3/2", "i", "1 - 2i", "0".
  std::string to_string() const;
};

}  // namespace magical

#endif  // MAGICAL_GAUSSIAN_HPP
