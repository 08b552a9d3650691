#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/error.hpp"

namespace pointfree {

/// Elements of a finite frame are identified by index.
using Element = std::size_t;

/// Square boolean relation over element indices.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * n_ + j] = value ? 1 : 0; }

  /// True when every related pair of *this is related in other.
  bool subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class FiniteFrame;
using FramePtr = std::shared_ptr<const FiniteFrame>;

/// A finite distributive lattice together with its Heyting tables.
///
/// Instances are immutable; every table is filled by build_frame and shared
/// read-only afterwards.
class FiniteFrame {
 public:
  std::size_t size() const { return n_; }
  Element top() const { return top_; }
  Element bottom() const { return bottom_; }

  bool leq(Element a, Element b) const { return leq_(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element heyting(Element a, Element b) const { return heyting_[a * n_ + b]; }
  Element pseudocomplement(Element a) const { return pseudo_[a]; }
  Element double_pseudocomplement(Element a) const { return pseudo_[pseudo_[a]]; }

  Element join_all(std::span<const Element> elements) const;
  Element meet_all(std::span<const Element> elements) const;

  /// b is rather below a: b* v a = 1.
  bool rather_below(Element b, Element a) const { return join(pseudocomplement(b), a) == top_; }
  /// Greatest interpolative relation contained in rather-below.
  bool completely_below(Element b, Element a) const { return completely_below_(b, a); }

  bool is_complemented(Element a) const { return join(a, pseudocomplement(a)) == top_; }
  bool is_dense(Element a) const { return pseudocomplement(a) == bottom_; }
  bool is_regular(Element a) const { return double_pseudocomplement(a) == a; }

  const Relation& order() const { return leq_; }
  const Relation& completely_below_relation() const { return completely_below_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Element a) const { return names_[a]; }

  void check_index(Element a) const {
    if (a >= n_) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(a));
  }

  /// Structural identity: same carrier size and the same order on indices.
  friend bool same_frame(const FiniteFrame& a, const FiniteFrame& b) {
    return &a == &b || (a.n_ == b.n_ && a.leq_ == b.leq_);
  }

 private:
  friend FramePtr build_frame(const Relation& leq, std::vector<std::string> names);

  FiniteFrame() = default;

  std::size_t n_ = 0;
  Element top_ = 0;
  Element bottom_ = 0;
  Relation leq_;
  Relation completely_below_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> heyting_;
  std::vector<Element> pseudo_;
  std::vector<std::string> names_;
};

/// Validates the reflexive-transitive closure of leq as a distributive lattice.
///
/// Throws NotAPartialOrder, NotALattice or NotDistributive. Names default to
/// the decimal index of each element.
FramePtr build_frame(const Relation& leq, std::vector<std::string> names = {});
FramePtr build_frame(std::size_t n, std::span<const std::pair<Element, Element>> leq_pairs,
                     std::vector<std::string> names = {});

/// 0 < 1 < ... < n-1.
FramePtr chain_frame(std::size_t n);
/// Subsets of {0..n-1}; the element index equals the subset bitmask.
FramePtr powerset_frame(std::size_t n);
/// Downsets of a finite poset given as a (reflexive, transitive) relation,
/// indexed in increasing bitmask order. Requires fewer than 64 poset points.
FramePtr downset_frame(const Relation& poset);

// Free-function spellings of the table lookups.
Element heyting(const FiniteFrame& f, Element a, Element b);
Element pseudocomplement(const FiniteFrame& f, Element a);
bool rather_below(const FiniteFrame& f, Element b, Element a);
Relation completely_below(const FiniteFrame& f);

/// A cozero element of a finite frame is one completely below itself.
bool is_cozero(const FiniteFrame& f, Element a);

/// Finite frame homomorphism, checked on construction.
class FrameHom {
 public:
  /// Throws NotAHomomorphism unless top, bottom, binary meets and binary joins are preserved.
  FrameHom(FramePtr source, FramePtr target, std::vector<Element> map);

  static FrameHom identity(FramePtr frame);

  Element operator()(Element a) const { return map_[a]; }
  const FramePtr& source() const { return source_; }
  const FramePtr& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// Requires is_isomorphism().
  FrameHom inverse() const;

 private:
  FramePtr source_;
  FramePtr target_;
  std::vector<Element> map_;
};

/// Outcome of one classification predicate; witnesses are the failing elements.
struct Predicate {
  bool holds = true;
  std::vector<Element> witnesses;
};

struct Classification {
  Predicate regular;
  Predicate completely_regular;
  Predicate extremally_disconnected;
  Predicate boolean;
  Predicate p_frame;
  Predicate almost_p_frame;
  Predicate almost_boolean;

  /// (name, predicate) pairs in a fixed order.
  std::vector<std::pair<std::string, const Predicate*>> entries() const;
};

Classification classify(const FiniteFrame& f);

/// The Boolean algebra of regular elements and the double-pseudocomplement map onto it.
struct Booleanization {
  FramePtr frame;
  /// a -> a** read in the Booleanization.
  FrameHom beta;
  /// Index in the source frame of each element of the Booleanization.
  std::vector<Element> embed;
};

Booleanization booleanize(const FramePtr& f);

/// Prime elements p (p != 1, a ^ b <= p implies a <= p or b <= p).
std::vector<Element> prime_elements(const FiniteFrame& f);

}  // namespace pointfree
