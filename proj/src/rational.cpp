#include "dissim/rational.hpp"

#include <ostream>
#include <utility>

#include "dissim/errors.hpp"

namespace dissim {

namespace {

[[noreturn]] void bad_literal(std::string_view whole) {
  throw ParseError("invalid rational literal '" + std::string(whole) + "'");
}

// Digits only; GMP's own parser would silently skip embedded whitespace.
mpz_class parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    bad_literal(whole);
  }
  return mpz_class(std::string(s), 10);
}

// Optional sign followed by digits.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class v = parse_digits(s, whole);
  if (negative) v = -v;
  return v;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  // Trim surrounding whitespace; everything else must be part of the number.
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  const std::string_view whole = s;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), whole);
    mpz_class den = parse_integer(s.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view ipart = s.substr(0, dot);
    const std::string_view fpart = s.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) bad_literal(whole);
    digits = std::string(ipart) + std::string(fpart);
    frac_len = fpart.size();
  } else {
    digits = std::string(s);
  }
  mpz_class num = parse_digits(digits, whole);
  if (negative) num = -num;
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::fraction_str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str() const {
  mpz_class den = v_.get_den();
  if (den == 1) return v_.get_num().get_str();

  // A reduced fraction has a finite decimal expansion iff den = 2^a * 5^b.
  mpz_class rest;
  const mp_bitcnt_t a = mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  mpz_class rest2;
  const mp_bitcnt_t b = mpz_remove(rest2.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (rest2 != 1) return fraction_str();

  const mp_bitcnt_t m = a > b ? a : b;
  mpz_class scaled = abs(v_.get_num());
  for (mp_bitcnt_t i = b; i < m; ++i) scaled *= 5;
  for (mp_bitcnt_t i = a; i < m; ++i) scaled *= 2;
  std::string s = scaled.get_str();
  if (s.size() <= m) s.insert(0, m + 1 - s.size(), '0');
  s.insert(s.size() - m, ".");
  if (sgn(v_) < 0) s.insert(0, "-");
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace dissim
