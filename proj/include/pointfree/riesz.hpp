#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/real_fn.hpp"

namespace pointfree {

/// Element of Q^n with the coordinatewise order.
class RieszVec {
 public:
  RieszVec() = default;
  explicit RieszVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static RieszVec zero(std::size_t n) { return RieszVec(std::vector<Rational>(n)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend RieszVec operator+(const RieszVec& a, const RieszVec& b);
  friend RieszVec operator-(const RieszVec& a, const RieszVec& b);
  friend RieszVec operator*(const Rational& lambda, const RieszVec& a);
  friend bool operator==(const RieszVec&, const RieszVec&) = default;

  /// Pointwise order.
  bool leq(const RieszVec& other) const;
  bool is_zero() const;

 private:
  std::vector<Rational> coords_;
};

RieszVec join(const RieszVec& a, const RieszVec& b);
RieszVec meet(const RieszVec& a, const RieszVec& b);
RieszVec positive_part(const RieszVec& a);
RieszVec abs(const RieszVec& a);

/// Band of Q^n given by the coordinates allowed to be nonzero.
struct BandFD {
  std::size_t dim = 0;
  /// Sorted coordinate indices.
  std::vector<std::size_t> support;

  std::uint64_t mask() const;
  bool contains(const RieszVec& v) const;
  friend bool operator==(const BandFD&, const BandFD&) = default;
};

BandFD band_generated(const RieszVec& f);

/// Membership in the band of f by the dominated-sequence criterion: some
/// N <= bound has |g| <= N |f| (finite dimension collapses the sequence).
bool band_oracle_member(const RieszVec& g, const RieszVec& f, long bound);

/// Throws NotPositive unless e > 0 (e >= 0 and e != 0).
bool is_weak_unit(const RieszVec& e);

/// The Boolean frame of subsets of {0..n-1}, shared per n; index = bitmask.
FramePtr coordinate_frame(std::size_t n);

/// p -> {i : f_i > p e_i}. Throws NotWeakUnit or DimensionMismatch.
Scale band_scale(const RieszVec& f, const RieszVec& e);
RealFn m_embed(const RieszVec& f, const RieszVec& e);

/// Value of a function on the coordinate frame at atom i.
std::pair<ExtRational, ExtRational> atom_value(const RealFn& g, std::size_t i);

/// Nonzero f, h with 0 <= m(f) <= g <= m(h). Throws GNotPositive.
std::pair<RieszVec, RieszVec> sandwich_check(const RealFn& g, const RieszVec& e);

struct BandAlgebraResult {
  bool ok = false;
  /// Number of distinct bands met by the functions enumerated.
  std::size_t bands = 0;
  /// Band mask -> element of the Booleanization.
  std::vector<std::pair<std::uint64_t, Element>> iso;
  std::string detail;
};

/// For L = 2^n: bands of the coordinate model of C(L) correspond to the
/// Booleanization's elements through f -> coz f, as an order isomorphism.
BandAlgebraResult band_algebra_check(std::size_t n, const std::vector<Rational>& grid);

}  // namespace pointfree
