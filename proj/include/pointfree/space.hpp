#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointfree/frame.hpp"

namespace pointfree {

/// Set of points of a finite space as a bitmask (at most 64 points).
using PointSet = std::uint64_t;

/// Finite topological space given by its open sets.
///
/// Opens are stored sorted by bitmask, so the element index of an open in
/// open_frame() is its position in opens().
class FiniteSpace {
 public:
  /// Throws NotASpace unless the family contains the empty and full sets and is
  /// closed under binary union and intersection.
  FiniteSpace(std::size_t point_count, std::vector<PointSet> opens, std::vector<std::string> names = {});

  std::size_t point_count() const { return point_count_; }
  PointSet full() const { return point_count_ == 64 ? ~PointSet{0} : (PointSet{1} << point_count_) - 1; }
  const std::vector<PointSet>& opens() const { return opens_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Smallest open set containing x.
  PointSet min_nbhd(std::size_t x) const { return min_nbhd_[x]; }
  std::optional<std::size_t> open_index(PointSet s) const;
  bool is_open(PointSet s) const { return open_index(s).has_value(); }

  PointSet closure(PointSet s) const;
  PointSet interior(PointSet s) const;
  bool is_dense(PointSet s) const { return closure(s) == full(); }

  bool is_discrete() const { return opens_.size() == (std::size_t{1} << point_count_); }
  /// Distinct points have distinct minimal neighbourhoods.
  bool is_t0() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.point_count_ == b.point_count_ && a.opens_ == b.opens_;
  }

 private:
  std::size_t point_count_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> min_nbhd_;
  std::vector<std::string> names_;
};

/// Frame of open sets ordered by inclusion; element i is opens()[i].
FramePtr open_frame(const FiniteSpace& space);

/// Points are the prime elements of the frame; open sets are the Σ_a.
struct Spectrum {
  FiniteSpace space;
  /// Prime element behind each point: ξ_p(a) = 0 iff a <= p.
  std::vector<Element> primes;
};

Spectrum spectrum(const FiniteFrame& f);

/// η(a) = Σ_a, as a homomorphism into the open-set frame of the spectrum.
FrameHom spatial_reflection(const FramePtr& f);

}  // namespace pointfree
