#include "pointfree/step_map.hpp"

#include <algorithm>

namespace pointfree {

namespace {

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

StepMap::StepMap(Orientation orientation, std::vector<Rational> breakpoints, std::vector<Element> values)
    : orientation_(orientation), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  for (Rational& b : breakpoints_) b.canonicalize();
  if (values_.size() != breakpoints_.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "step map needs exactly one more value than breakpoints");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(ErrorCode::InvalidArgument, "breakpoints must be strictly increasing");
    }
  }
  canonicalize();
}

void StepMap::canonicalize() {
  std::vector<Rational> b;
  std::vector<Element> v{values_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (values_[i + 1] != v.back()) {
      b.push_back(breakpoints_[i]);
      v.push_back(values_[i + 1]);
    }
  }
  breakpoints_ = std::move(b);
  values_ = std::move(v);
}

std::size_t StepMap::segment(const Rational& p) const {
  auto it = orientation_ == Orientation::Antitone ? std::upper_bound(breakpoints_.begin(), breakpoints_.end(), p)
                                                  : std::lower_bound(breakpoints_.begin(), breakpoints_.end(), p);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

std::vector<Rational> segment_representatives(Orientation orientation, const std::vector<Rational>& b) {
  std::vector<Rational> reps;
  if (b.empty()) return {Rational(0)};
  reps.reserve(b.size() + 1);
  if (orientation == Orientation::Antitone) {
    reps.push_back(Rational(b.front() - 1));
    for (const Rational& x : b) reps.push_back(x);
  } else {
    for (const Rational& x : b) reps.push_back(x);
    reps.push_back(Rational(b.back() + 1));
  }
  return reps;
}

StepMap StepMap::sample(Orientation orientation, std::vector<Rational> candidates,
                        const std::function<Element(const Rational&)>& fn) {
  sort_unique(candidates);
  std::vector<Element> values;
  for (const Rational& r : segment_representatives(orientation, candidates)) values.push_back(fn(r));
  return StepMap(orientation, std::move(candidates), std::move(values));
}

StepMap StepMap::map_values(const std::function<Element(Element)>& fn) const {
  std::vector<Element> v;
  v.reserve(values_.size());
  for (Element e : values_) v.push_back(fn(e));
  return StepMap(orientation_, breakpoints_, std::move(v));
}

StepMap StepMap::reflect() const {
  std::vector<Rational> b(breakpoints_.rbegin(), breakpoints_.rend());
  for (Rational& x : b) x = -x;
  std::vector<Element> v(values_.rbegin(), values_.rend());
  Orientation o = orientation_ == Orientation::Antitone ? Orientation::Isotone : Orientation::Antitone;
  return StepMap(o, std::move(b), std::move(v));
}

StepMap StepMap::rescale(const Rational& lambda) const {
  if (lambda <= 0) throw Error(ErrorCode::InvalidArgument, "rescale needs a positive factor");
  std::vector<Rational> b = breakpoints_;
  for (Rational& x : b) x *= lambda;
  return StepMap(orientation_, std::move(b), values_);
}

StepMap StepMap::shift(const Rational& delta) const {
  std::vector<Rational> b = breakpoints_;
  for (Rational& x : b) x += delta;
  return StepMap(orientation_, std::move(b), values_);
}

bool StepMap::is_monotone(const FiniteFrame& frame) const {
  for (Element v : values_) {
    if (v >= frame.size()) return false;
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    bool ok = orientation_ == Orientation::Antitone ? frame.leq(values_[i], values_[i - 1])
                                                    : frame.leq(values_[i - 1], values_[i]);
    if (!ok) return false;
  }
  return true;
}

StepMap combine(const StepMap& a, const StepMap& b, const std::function<Element(Element, Element)>& op) {
  if (a.orientation() != b.orientation()) throw Error(ErrorCode::InvalidArgument, "orientation mismatch");
  std::vector<Rational> cand = a.breakpoints();
  cand.insert(cand.end(), b.breakpoints().begin(), b.breakpoints().end());
  return StepMap::sample(a.orientation(), std::move(cand), [&](const Rational& r) { return op(a(r), b(r)); });
}

std::vector<Rational> probe_points(std::vector<Rational> b) {
  sort_unique(b);
  if (b.empty()) return {Rational(0), Rational(1)};
  std::vector<Rational> probes;
  probes.reserve(3 * b.size() + 4);
  probes.push_back(Rational(b.front() - 2));
  probes.push_back(Rational(b.front() - 1));
  for (std::size_t i = 0; i < b.size(); ++i) {
    probes.push_back(b[i]);
    if (i + 1 < b.size()) {
      Rational gap = (b[i + 1] - b[i]) / 3;
      probes.push_back(Rational(b[i] + gap));
      probes.push_back(Rational(b[i] + 2 * gap));
    }
  }
  probes.push_back(Rational(b.back() + 1));
  probes.push_back(Rational(b.back() + 2));
  return probes;
}

std::vector<Rational> probe_points(std::span<const StepMap* const> maps) {
  std::vector<Rational> b;
  for (const StepMap* m : maps) b.insert(b.end(), m->breakpoints().begin(), m->breakpoints().end());
  return probe_points(std::move(b));
}

StepMap sup_convolution(const FiniteFrame& frame, const StepMap& a, const StepMap& b) {
  if (a.orientation() != b.orientation()) throw Error(ErrorCode::InvalidArgument, "orientation mismatch");
  std::vector<Rational> sums;
  sums.reserve(a.breakpoints().size() * b.breakpoints().size());
  for (const Rational& x : a.breakpoints()) {
    for (const Rational& y : b.breakpoints()) sums.push_back(Rational(x + y));
  }
  return StepMap::sample(a.orientation(), std::move(sums), [&](const Rational& p) {
    // t -> a(t) ^ b(p - t) only changes at a's breakpoints and at p minus b's breakpoints.
    std::vector<Rational> critical = a.breakpoints();
    for (const Rational& y : b.breakpoints()) critical.push_back(Rational(p - y));
    Element acc = frame.bottom();
    for (const Rational& t : probe_points(std::move(critical))) {
      acc = frame.join(acc, frame.meet(a(t), b(Rational(p - t))));
    }
    return acc;
  });
}

Element left_limit(const StepMap& m, const Rational& q) {
  auto it = std::lower_bound(m.breakpoints().begin(), m.breakpoints().end(), q);
  return m.values()[static_cast<std::size_t>(it - m.breakpoints().begin())];
}

Element right_limit(const StepMap& m, const Rational& p) {
  auto it = std::upper_bound(m.breakpoints().begin(), m.breakpoints().end(), p);
  return m.values()[static_cast<std::size_t>(it - m.breakpoints().begin())];
}

}  // namespace pointfree
