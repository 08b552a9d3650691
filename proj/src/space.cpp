#include "pointfree/space.hpp"

#include <algorithm>

namespace pointfree {

FiniteSpace::FiniteSpace(std::size_t point_count, std::vector<PointSet> opens, std::vector<std::string> names)
    : point_count_(point_count), opens_(std::move(opens)), names_(std::move(names)) {
  if (point_count_ > 64) throw Error(ErrorCode::NotASpace, "more than 64 points");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (PointSet u : opens_) {
    if (u & ~full()) throw Error(ErrorCode::NotASpace, "open set mentions a point out of range");
  }
  if (!is_open(0)) throw Error(ErrorCode::NotASpace, "empty set is not open");
  if (!is_open(full())) throw Error(ErrorCode::NotASpace, "whole space is not open");
  for (PointSet u : opens_) {
    for (PointSet v : opens_) {
      if (!is_open(u | v) || !is_open(u & v)) throw Error(ErrorCode::NotASpace, "opens not closed under union/intersection");
    }
  }
  min_nbhd_.assign(point_count_, full());
  for (std::size_t x = 0; x < point_count_; ++x) {
    for (PointSet u : opens_) {
      if (u >> x & 1) min_nbhd_[x] &= u;
    }
  }
  if (names_.empty()) {
    for (std::size_t x = 0; x < point_count_; ++x) names_.push_back(std::to_string(x));
  } else if (names_.size() != point_count_) {
    throw Error(ErrorCode::NotASpace, "name count does not match point count");
  }
}

std::optional<std::size_t> FiniteSpace::open_index(PointSet s) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), s);
  if (it == opens_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - opens_.begin());
}

PointSet FiniteSpace::interior(PointSet s) const {
  PointSet out = 0;
  for (PointSet u : opens_) {
    if ((u & ~s) == 0) out |= u;
  }
  return out;
}

PointSet FiniteSpace::closure(PointSet s) const { return full() & ~interior(full() & ~s); }

bool FiniteSpace::is_t0() const {
  for (std::size_t x = 0; x < point_count_; ++x) {
    for (std::size_t y = x + 1; y < point_count_; ++y) {
      if (min_nbhd_[x] == min_nbhd_[y]) return false;
    }
  }
  return true;
}

FramePtr open_frame(const FiniteSpace& space) {
  const auto& opens = space.opens();
  Relation leq(opens.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    std::string name = "{";
    for (std::size_t x = 0; x < space.point_count(); ++x) {
      if (opens[i] >> x & 1) {
        if (name.size() > 1) name += ",";
        name += space.names()[x];
      }
    }
    names.push_back(name + "}");
    for (std::size_t j = 0; j < opens.size(); ++j) leq.set(i, j, (opens[i] & ~opens[j]) == 0);
  }
  return build_frame(leq, std::move(names));
}

namespace {

PointSet sigma(const FiniteFrame& f, const std::vector<Element>& primes, Element a) {
  PointSet s = 0;
  for (std::size_t x = 0; x < primes.size(); ++x) {
    if (!f.leq(a, primes[x])) s |= PointSet{1} << x;
  }
  return s;
}

}  // namespace

Spectrum spectrum(const FiniteFrame& f) {
  std::vector<Element> primes = prime_elements(f);
  if (primes.size() > 64) throw Error(ErrorCode::InvalidArgument, "spectrum has more than 64 points");
  std::vector<PointSet> opens;
  for (Element a = 0; a < f.size(); ++a) opens.push_back(sigma(f, primes, a));
  std::vector<std::string> names;
  for (Element p : primes) names.push_back(f.name(p));
  return Spectrum{FiniteSpace(primes.size(), std::move(opens), std::move(names)), std::move(primes)};
}

FrameHom spatial_reflection(const FramePtr& f) {
  Spectrum s = spectrum(*f);
  FramePtr target = open_frame(s.space);
  std::vector<Element> map(f->size());
  for (Element a = 0; a < f->size(); ++a) map[a] = *s.space.open_index(sigma(*f, s.primes, a));
  return FrameHom(f, target, std::move(map));
}

}  // namespace pointfree
