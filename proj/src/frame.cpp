#include "pointfree/frame.hpp"

#include <algorithm>
#include <bit>

namespace pointfree {

bool Relation::subset_of(const Relation& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] && !other.bits_[k]) return false;
  }
  return true;
}

namespace {

// Reflexive-transitive closure (Warshall).
Relation closure(const Relation& r) {
  Relation out = r;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) out.set(i, i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!out(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (out(k, j)) out.set(i, j);
      }
    }
  }
  return out;
}

std::string describe(Element a, Element b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Element FiniteFrame::join_all(std::span<const Element> elements) const {
  Element acc = bottom_;
  for (Element e : elements) acc = join(acc, e);
  return acc;
}

Element FiniteFrame::meet_all(std::span<const Element> elements) const {
  Element acc = top_;
  for (Element e : elements) acc = meet(acc, e);
  return acc;
}

FramePtr build_frame(const Relation& leq_in, std::vector<std::string> names) {
  const std::size_t n = leq_in.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "empty carrier");
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "name count does not match element count");
  }
  Relation leq = closure(leq_in);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq(i, j) && leq(j, i)) {
        throw Error(ErrorCode::NotAPartialOrder, "antisymmetry fails at " + describe(i, j));
      }
    }
  }

  auto frame = std::shared_ptr<FiniteFrame>(new FiniteFrame());
  FiniteFrame& f = *frame;
  f.n_ = n;
  f.leq_ = leq;
  f.meet_.assign(n * n, 0);
  f.join_.assign(n * n, 0);

  // Greatest lower bound / least upper bound by scanning the bound sets.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bool found_meet = false;
      bool found_join = false;
      Element m = 0;
      Element j = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (leq(x, a) && leq(x, b)) {
          bool greatest = true;
          for (std::size_t y = 0; y < n && greatest; ++y) {
            if (leq(y, a) && leq(y, b) && !leq(y, x)) greatest = false;
          }
          if (greatest) {
            m = x;
            found_meet = true;
          }
        }
        if (leq(a, x) && leq(b, x)) {
          bool least = true;
          for (std::size_t y = 0; y < n && least; ++y) {
            if (leq(a, y) && leq(b, y) && !leq(x, y)) least = false;
          }
          if (least) {
            j = x;
            found_join = true;
          }
        }
      }
      if (!found_meet || !found_join) {
        throw Error(ErrorCode::NotALattice, "no " + std::string(found_meet ? "join" : "meet") + " for " + describe(a, b));
      }
      f.meet_[a * n + b] = f.meet_[b * n + a] = m;
      f.join_[a * n + b] = f.join_[b * n + a] = j;
    }
  }

  f.bottom_ = 0;
  f.top_ = 0;
  for (std::size_t x = 1; x < n; ++x) {
    f.bottom_ = f.meet(f.bottom_, x);
    f.top_ = f.join(f.top_, x);
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c))) {
          throw Error(ErrorCode::NotDistributive,
                      "a^(bvc) != (a^b)v(a^c) at a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                          ", c=" + std::to_string(c));
        }
      }
    }
  }

  // a -> b is the join of everything x with a ^ x <= b; distributivity makes it the maximum.
  f.heyting_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element acc = f.bottom_;
      for (std::size_t x = 0; x < n; ++x) {
        if (leq(f.meet(a, x), b)) acc = f.join(acc, x);
      }
      f.heyting_[a * n + b] = acc;
    }
  }
  f.pseudo_.resize(n);
  for (std::size_t a = 0; a < n; ++a) f.pseudo_[a] = f.heyting_[a * n + f.bottom_];

  // Greatest fixpoint of R -> R ∩ (R ∘ R) starting from rather-below.
  Relation r(n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) r.set(b, a, f.rather_below(b, a));
  }
  for (bool changed = true; changed;) {
    changed = false;
    Relation next(n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!r(b, a)) continue;
        bool interpolates = false;
        for (std::size_t c = 0; c < n && !interpolates; ++c) interpolates = r(b, c) && r(c, a);
        next.set(b, a, interpolates);
        if (!interpolates) changed = true;
      }
    }
    r = std::move(next);
  }
  f.completely_below_ = std::move(r);

  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  f.names_ = std::move(names);
  return frame;
}

FramePtr build_frame(std::size_t n, std::span<const std::pair<Element, Element>> leq_pairs,
                     std::vector<std::string> names) {
  Relation r(n);
  for (auto [i, j] : leq_pairs) {
    if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "leq pair " + describe(i, j));
    r.set(i, j);
  }
  return build_frame(r, std::move(names));
}

FramePtr chain_frame(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i + 1 < n; ++i) r.set(i, i + 1);
  return build_frame(r);
}

FramePtr powerset_frame(std::size_t n) {
  return downset_frame(Relation(n));
}

FramePtr downset_frame(const Relation& poset) {
  const std::size_t k = poset.size();
  if (k >= 64) throw Error(ErrorCode::InvalidArgument, "poset too large for bitmask downsets");
  std::vector<std::uint64_t> below(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || poset(j, i)) below[i] |= std::uint64_t{1} << j;
    }
  }
  // Grow the family of downsets by closing under "add one point whose strict downset is present".
  std::vector<std::uint64_t> downsets{0};
  for (std::size_t next = 0; next < downsets.size(); ++next) {
    std::uint64_t d = downsets[next];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((d & bit) || (below[i] & ~bit & ~d)) continue;
      std::uint64_t e = d | bit;
      if (std::find(downsets.begin(), downsets.end(), e) == downsets.end()) downsets.push_back(e);
    }
  }
  std::sort(downsets.begin(), downsets.end());
  const std::size_t n = downsets.size();
  Relation leq(n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((downsets[a] & ~downsets[b]) == 0) leq.set(a, b);
    }
    std::string name = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (downsets[a] >> i & 1) {
        if (name.size() > 1) name += ",";
        name += std::to_string(i);
      }
    }
    names.push_back(name + "}");
  }
  return build_frame(leq, std::move(names));
}

Element heyting(const FiniteFrame& f, Element a, Element b) {
  f.check_index(a);
  f.check_index(b);
  return f.heyting(a, b);
}

Element pseudocomplement(const FiniteFrame& f, Element a) {
  f.check_index(a);
  return f.pseudocomplement(a);
}

bool rather_below(const FiniteFrame& f, Element b, Element a) {
  f.check_index(a);
  f.check_index(b);
  return f.rather_below(b, a);
}

Relation completely_below(const FiniteFrame& f) { return f.completely_below_relation(); }

bool is_cozero(const FiniteFrame& f, Element a) {
  f.check_index(a);
  return f.completely_below(a, a);
}

FrameHom::FrameHom(FramePtr source, FramePtr target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const FiniteFrame& s = *source_;
  const FiniteFrame& t = *target_;
  if (map_.size() != s.size()) throw Error(ErrorCode::NotAHomomorphism, "map size mismatch");
  for (Element v : map_) t.check_index(v);
  if (map_[s.top()] != t.top()) throw Error(ErrorCode::NotAHomomorphism, "top not preserved");
  if (map_[s.bottom()] != t.bottom()) throw Error(ErrorCode::NotAHomomorphism, "bottom not preserved");
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = a + 1; b < s.size(); ++b) {
      if (map_[s.meet(a, b)] != t.meet(map_[a], map_[b])) {
        throw Error(ErrorCode::NotAHomomorphism, "meet not preserved at " + describe(a, b));
      }
      if (map_[s.join(a, b)] != t.join(map_[a], map_[b])) {
        throw Error(ErrorCode::NotAHomomorphism, "join not preserved at " + describe(a, b));
      }
    }
  }
}

FrameHom FrameHom::identity(FramePtr frame) {
  std::vector<Element> map(frame->size());
  for (Element a = 0; a < map.size(); ++a) map[a] = a;
  return FrameHom(frame, frame, std::move(map));
}

bool FrameHom::is_injective() const {
  std::vector<bool> hit(target_->size(), false);
  for (Element v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FrameHom::is_surjective() const {
  std::vector<bool> hit(target_->size(), false);
  for (Element v : map_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FrameHom FrameHom::inverse() const {
  if (!is_isomorphism()) throw Error(ErrorCode::PreconditionFailed, "inverse of a non-isomorphism");
  std::vector<Element> inv(map_.size());
  for (Element a = 0; a < map_.size(); ++a) inv[map_[a]] = a;
  return FrameHom(target_, source_, std::move(inv));
}

std::vector<std::pair<std::string, const Predicate*>> Classification::entries() const {
  return {{"regular", &regular},
          {"completely_regular", &completely_regular},
          {"extremally_disconnected", &extremally_disconnected},
          {"boolean", &boolean},
          {"p_frame", &p_frame},
          {"almost_p_frame", &almost_p_frame},
          {"almost_boolean", &almost_boolean}};
}

Classification classify(const FiniteFrame& f) {
  Classification c;
  auto fail = [](Predicate& p, Element a) {
    p.holds = false;
    p.witnesses.push_back(a);
  };
  const std::size_t n = f.size();
  for (Element a = 0; a < n; ++a) {
    Element rb = f.bottom();
    Element cb = f.bottom();
    for (Element b = 0; b < n; ++b) {
      if (f.rather_below(b, a)) rb = f.join(rb, b);
      if (f.completely_below(b, a)) cb = f.join(cb, b);
    }
    if (rb != a) fail(c.regular, a);
    if (cb != a) fail(c.completely_regular, a);
    Element pa = f.pseudocomplement(a);
    if (f.join(pa, f.pseudocomplement(pa)) != f.top()) fail(c.extremally_disconnected, a);
    if (!f.is_complemented(a)) fail(c.boolean, a);
    if (is_cozero(f, a)) {
      if (!f.is_complemented(a)) fail(c.p_frame, a);
      if (!f.is_regular(a)) fail(c.almost_p_frame, a);
    }
  }
  // Almost Boolean: regular, extremally disconnected, and complemented elements closed under joins
  // (countable joins reduce to finite ones here).
  c.almost_boolean.holds = c.regular.holds && c.extremally_disconnected.holds;
  std::vector<Element> failing = c.regular.witnesses;
  failing.insert(failing.end(), c.extremally_disconnected.witnesses.begin(), c.extremally_disconnected.witnesses.end());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (f.is_complemented(a) && f.is_complemented(b) && !f.is_complemented(f.join(a, b))) {
        c.almost_boolean.holds = false;
        failing.push_back(f.join(a, b));
      }
    }
  }
  std::sort(failing.begin(), failing.end());
  failing.erase(std::unique(failing.begin(), failing.end()), failing.end());
  c.almost_boolean.witnesses = std::move(failing);
  return c;
}

Booleanization booleanize(const FramePtr& fp) {
  const FiniteFrame& f = *fp;
  std::vector<Element> embed;
  std::vector<Element> index_in_b(f.size(), 0);
  for (Element a = 0; a < f.size(); ++a) {
    if (f.is_regular(a)) {
      index_in_b[a] = embed.size();
      embed.push_back(a);
    }
  }
  Relation leq(embed.size());
  std::vector<std::string> names;
  for (Element i = 0; i < embed.size(); ++i) {
    names.push_back(f.name(embed[i]));
    for (Element j = 0; j < embed.size(); ++j) leq.set(i, j, f.leq(embed[i], embed[j]));
  }
  FramePtr b = build_frame(leq, std::move(names));
  std::vector<Element> beta(f.size());
  for (Element a = 0; a < f.size(); ++a) beta[a] = index_in_b[f.double_pseudocomplement(a)];
  return Booleanization{b, FrameHom(fp, b, std::move(beta)), std::move(embed)};
}

std::vector<Element> prime_elements(const FiniteFrame& f) {
  std::vector<Element> primes;
  for (Element p = 0; p < f.size(); ++p) {
    if (p == f.top()) continue;
    bool prime = true;
    for (Element a = 0; a < f.size() && prime; ++a) {
      if (f.leq(a, p)) continue;
      for (Element b = 0; b < f.size() && prime; ++b) {
        if (!f.leq(b, p) && f.leq(f.meet(a, b), p)) prime = false;
      }
    }
    if (prime) primes.push_back(p);
  }
  return primes;
}

}  // namespace pointfree
