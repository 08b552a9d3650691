#pragma once

#include <string>

#include "json.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/interval_fn.hpp"
#include "pointfree/real_fn.hpp"
#include "pointfree/riesz.hpp"
#include "pointfree/space.hpp"
#include "pointfree/spatial.hpp"

namespace pointfree::io {

using json = nlohmann::ordered_json;

/// {"elements": [names], "leq": [[i, j], ...]}; only covering pairs are written.
json to_json(const FiniteFrame& f);
/// Accepts any generating set of pairs; the closure is taken. Throws ParseError on
/// malformed input and the frame errors on invalid orders.
FramePtr frame_from_json(const json& j);

/// [[breakpoints], [values]] with breakpoints as "n/d" strings.
json to_json(const StepMap& m);
StepMap step_map_from_json(const json& j, Orientation o);

/// {"frame", "up", "down", "class", "hausdorff", "nearly_finite"}.
json to_json(const RealFn& f);
/// Uses the embedded "frame" unless frame is given.
RealFn function_from_json(const json& j, FramePtr frame = nullptr);

/// {"points": [names], "opens": [[indices], ...]}.
json to_json(const FiniteSpace& s);
FiniteSpace space_from_json(const json& j);

json to_json(const ExtRational& v);
ExtRational ext_from_json(const json& j);
/// {"lower": [...], "upper": [...]} per point.
json to_json(const IntervalValuedFn& f);
json to_json(const ExtRealFn& u);

/// {"dim", "coords"}.
json to_json(const RieszVec& v);
RieszVec vec_from_json(const json& j);
/// Sorted index list.
json to_json(const BandFD& b);

/// One record per predicate with its failing elements.
json to_json(const Classification& c);
std::string to_text(const Classification& c, const FiniteFrame& f);

json read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace pointfree::io
