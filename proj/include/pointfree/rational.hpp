#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pointfree {

/// Exact rational scalar used for every breakpoint and coordinate.
using Rational = mpq_class;

/// num / den in lowest terms (mpq_class(num, den) alone does not reduce).
Rational make_rational(long num, long den);

/// Parses "n", "-n" or "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "n/d" form, or just "n" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Rational extended by the two infinities.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : kind_(Kind::Finite), value_(value) {}                 // NOLINT
  ExtRational(int value) : kind_(Kind::Finite), value_(value) {}                  // NOLINT

  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Only meaningful for finite values.
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// r + inf = inf; inf + (-inf) throws.
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a);
  /// Scaling by a rational; 0 * inf throws.
  friend ExtRational operator*(const Rational& lambda, const ExtRational& a);

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

/// "inf", "-inf" or a rational string.
ExtRational parse_ext_rational(std::string_view text);
std::string format_ext_rational(const ExtRational& value);

std::ostream& operator<<(std::ostream& os, const ExtRational& value);

/// Order isomorphism p -> p / (1 + |p|) of the rationals onto the open interval (-1, 1).
Rational squash(const Rational& p);
/// Inverse of squash; defined on (-1, 1).
Rational unsquash(const Rational& y);

}  // namespace pointfree
