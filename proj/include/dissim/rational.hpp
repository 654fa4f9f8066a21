#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dissim {

// Exact rational number. Always kept in lowest terms with positive
// denominator. Backed by GMP's mpq_class; never falls back to floating
// point, so every arithmetic result and comparison is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den);

  // Accepts "3", "-7/2", "4.25", ".5", "41/5". Throws ParseError otherwise.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool positive() const { return sign() > 0; }
  bool negative() const { return sign() < 0; }
  bool is_zero() const { return sign() == 0; }

  // Exact decimal string when the reduced denominator is of the form
  // 2^a * 5^b (e.g. "8.2"), otherwise "p/q" (e.g. "1/3").
  std::string str() const;
  // Always "p" or "p/q".
  std::string fraction_str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  mpq_class v_;
};

}  // namespace dissim
