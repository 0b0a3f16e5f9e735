#ifndef TRIMLAB_RATIONAL_HPP
#define TRIMLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trimlab {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. All coordinates, lengths and weights in the library are
// Rationals; nothing is ever rounded.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : v_(value) {}                  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  // Accepts integers ("-3"), decimals ("0.125", "-.5") and fractions
  // ("7/4"). Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Integer helpers on BigInt.
BigInt pow(const BigInt& base, unsigned long exponent);
BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace trimlab

#endif  // TRIMLAB_RATIONAL_HPP
