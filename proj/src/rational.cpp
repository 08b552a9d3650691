#include "pointfree/rational.hpp"

#include <cctype>
#include <sstream>

#include "pointfree/error.hpp"

namespace pointfree {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotAnExtendedScale: return "NotAnExtendedScale";
    case ErrorCode::MeetNotZero: return "MeetNotZero";
    case ErrorCode::NotDiscrete: return "NotDiscrete";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::OracleNotIso: return "OracleNotIso";
    case ErrorCode::NotHausdorff: return "NotHausdorff";
    case ErrorCode::NotNearlyFinite: return "NotNearlyFinite";
    case ErrorCode::NotASpace: return "NotASpace";
    case ErrorCode::EndpointOrder: return "EndpointOrder";
    case ErrorCode::NotSemicontinuous: return "NotSemicontinuous";
    case ErrorCode::NotNormalLsc: return "NotNormalLsc";
    case ErrorCode::UndefinedSum: return "UndefinedSum";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotWeakUnit: return "NotWeakUnit";
    case ErrorCode::GNotPositive: return "GNotPositive";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRational::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtRational::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_finite() && b.is_finite()) return ExtRational(Rational(a.value_ + b.value_));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw Error(ErrorCode::UndefinedSum, "inf + (-inf)");
  }
  return a.is_finite() ? b : a;
}

ExtRational operator-(const ExtRational& a) {
  switch (a.kind_) {
    case ExtRational::Kind::NegInf: return ExtRational::pos_inf();
    case ExtRational::Kind::PosInf: return ExtRational::neg_inf();
    case ExtRational::Kind::Finite: break;
  }
  return ExtRational(Rational(-a.value_));
}

ExtRational operator*(const Rational& lambda, const ExtRational& a) {
  if (a.is_finite()) return ExtRational(Rational(lambda * a.value_));
  if (lambda == 0) throw Error(ErrorCode::UndefinedSum, "0 * inf");
  return lambda > 0 ? a : -a;
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRational::pos_inf();
  if (text == "-inf") return ExtRational::neg_inf();
  return ExtRational(parse_rational(text));
}

std::string format_ext_rational(const ExtRational& value) {
  if (value.is_pos_inf()) return "inf";
  if (value.is_neg_inf()) return "-inf";
  return format_rational(value.value());
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value) {
  return os << format_ext_rational(value);
}

Rational squash(const Rational& p) {
  Rational denom = 1 + abs(p);
  Rational out = p / denom;
  return out;
}

Rational unsquash(const Rational& y) {
  if (y <= -1 || y >= 1) throw Error(ErrorCode::InvalidArgument, "unsquash outside (-1, 1)");
  Rational denom = 1 - abs(y);
  Rational out = y / denom;
  return out;
}

}  // namespace pointfree
