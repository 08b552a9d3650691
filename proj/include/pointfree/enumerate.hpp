#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pointfree/real_fn.hpp"
#include "pointfree/space.hpp"

namespace pointfree {

/// Every frame with at most max_size elements, one per isomorphism class, as
/// downset frames of posets (finite distributive lattices are exactly these).
std::vector<FramePtr> all_frames(std::size_t max_size);

/// Every topology on at most max_points points (points >= 1), one per homeomorphism class.
std::vector<FiniteSpace> all_spaces(std::size_t max_points);

/// Downset frame of a random poset, trimmed until it has at most size elements.
/// Deterministic in (seed, size).
FramePtr generate_frame(std::uint64_t seed, std::size_t size);

/// Same, drawing from a caller-owned engine.
FramePtr random_frame(std::mt19937_64& rng, std::size_t max_size);

/// Random poset on n points as a reflexive transitive relation.
Relation random_poset(std::mt19937_64& rng, std::size_t n);

/// Visits every antitone sequence v_0 >= ... >= v_k of elements drawn from allowed
/// (k = grid size), with the given first and last values when set.
void for_each_antitone_chain(const FiniteFrame& frame, std::size_t length, const std::vector<Element>& allowed,
                             std::optional<Element> first, std::optional<Element> last,
                             const std::function<void(const std::vector<Element>&)>& visit);

/// All continuous functions whose breakpoints lie on the grid.
std::vector<RealFn> continuous_grid_functions(const FramePtr& frame, const std::vector<Rational>& grid);
/// All extended continuous functions whose breakpoints lie on the grid.
std::vector<RealFn> extended_grid_functions(const FramePtr& frame, const std::vector<Rational>& grid);
/// Visits every partial function with breakpoints on the grid.
void for_each_partial_grid_function(const FramePtr& frame, const std::vector<Rational>& grid,
                                    const std::function<void(const RealFn&)>& visit);

/// Random grid-free continuous function: complemented values on 1..max_breaks random breakpoints.
RealFn random_continuous(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks = 3);
/// Random partial function (r1 only).
RealFn random_partial(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks = 3);
/// Same, with breakpoints among the given sorted candidates.
RealFn random_continuous_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid);
RealFn random_partial_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid);
/// Random extended continuous function (complemented values, free ends).
RealFn random_extended_on(std::mt19937_64& rng, const FramePtr& frame, const std::vector<Rational>& grid);
/// Random non-empty subset of the grid, sorted.
std::vector<Rational> random_subgrid(std::mt19937_64& rng, const std::vector<Rational>& grid, std::size_t max_size);
/// Random Hausdorff function, from random partial data closed up by hausdorff_completion.
RealFn random_hausdorff(std::mt19937_64& rng, const FramePtr& frame, std::size_t max_breaks = 3);

/// Random rational in [-3, 3] with denominator dividing 4.
Rational random_rational(std::mt19937_64& rng);

}  // namespace pointfree
