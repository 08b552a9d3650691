#include "pointfree/io.hpp"

#include <fstream>
#include <sstream>

namespace pointfree::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational, got " + j.dump());
}

}  // namespace

json to_json(const FiniteFrame& f) {
  json j;
  j["elements"] = f.names();
  json leq = json::array();
  for (Element a = 0; a < f.size(); ++a) {
    for (Element b = 0; b < f.size(); ++b) {
      if (a == b || !f.leq(a, b)) continue;
      bool cover = true;
      for (Element c = 0; c < f.size() && cover; ++c) {
        if (c != a && c != b && f.leq(a, c) && f.leq(c, b)) cover = false;
      }
      if (cover) leq.push_back({a, b});
    }
  }
  j["leq"] = std::move(leq);
  return j;
}

FramePtr frame_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq")) bad("frame needs \"elements\" and \"leq\"");
  const json& el = j["elements"];
  std::vector<std::string> names;
  std::size_t n = 0;
  if (el.is_number_unsigned()) {
    n = el.get<std::size_t>();
  } else if (el.is_array()) {
    for (const json& e : el) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    n = names.size();
  } else {
    bad("\"elements\" must be a list of names or a count");
  }
  if (n == 0) bad("frame has no elements");
  Relation r(n);
  for (const json& pair : j["leq"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      bad("leq entries must be [i, j] index pairs");
    }
    std::size_t a = pair[0].get<std::size_t>(), b = pair[1].get<std::size_t>();
    if (a >= n || b >= n) throw Error(ErrorCode::IndexOutOfRange, "leq pair " + pair.dump());
    r.set(a, b);
  }
  return build_frame(r, std::move(names));
}

json to_json(const StepMap& m) {
  json b = json::array();
  for (const Rational& q : m.breakpoints()) b.push_back(format_rational(q));
  return json::array({b, m.values()});
}

StepMap step_map_from_json(const json& j, Orientation o) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array()) bad("step map must be [[breakpoints], [values]]");
  std::vector<Rational> b;
  for (const json& q : j[0]) b.push_back(rational_from(q));
  std::vector<Element> v;
  for (const json& x : j[1]) {
    if (!x.is_number_unsigned()) bad("step values must be element indices");
    v.push_back(x.get<Element>());
  }
  return StepMap(o, std::move(b), std::move(v));
}

json to_json(const RealFn& f) {
  json j;
  j["frame"] = to_json(*f.frame());
  j["up"] = to_json(f.up());
  j["down"] = to_json(f.down());
  j["class"] = to_string(f.fn_class());
  j["hausdorff"] = is_hausdorff(f);
  j["nearly_finite"] = is_nearly_finite(f);
  return j;
}

RealFn function_from_json(const json& j, FramePtr frame) {
  if (!j.is_object() || !j.contains("up") || !j.contains("down")) bad("function needs \"up\" and \"down\"");
  if (!frame) {
    if (!j.contains("frame")) bad("function needs a frame");
    frame = frame_from_json(j["frame"]);
  }
  return RealFn(frame, step_map_from_json(j["up"], Orientation::Antitone), step_map_from_json(j["down"], Orientation::Isotone));
}

json to_json(const FiniteSpace& s) {
  json j;
  j["points"] = s.names();
  json opens = json::array();
  for (PointSet u : s.opens()) {
    json idx = json::array();
    for (std::size_t x = 0; x < s.point_count(); ++x) {
      if (u >> x & 1) idx.push_back(x);
    }
    opens.push_back(std::move(idx));
  }
  j["opens"] = std::move(opens);
  return j;
}

FiniteSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens")) bad("space needs \"points\" and \"opens\"");
  std::vector<std::string> names;
  for (const json& p : j["points"]) names.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  std::vector<PointSet> opens;
  for (const json& o : j["opens"]) {
    PointSet u = 0;
    for (const json& x : o) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() >= names.size()) bad("open set index out of range");
      u |= PointSet{1} << x.get<std::size_t>();
    }
    opens.push_back(u);
  }
  std::size_t n = names.size();
  return FiniteSpace(n, std::move(opens), std::move(names));
}

json to_json(const ExtRational& v) { return format_ext_rational(v); }

ExtRational ext_from_json(const json& j) {
  if (j.is_string()) return parse_ext_rational(j.get<std::string>());
  if (j.is_number_integer()) return ExtRational(Rational(j.get<long>()));
  bad("expected an extended rational, got " + j.dump());
}

json to_json(const IntervalValuedFn& f) {
  json lo = json::array(), hi = json::array();
  for (const auto& v : f.lower()) lo.push_back(to_json(v));
  for (const auto& v : f.upper()) hi.push_back(to_json(v));
  return json{{"lower", lo}, {"upper", hi}};
}

json to_json(const ExtRealFn& u) {
  json a = json::array();
  for (const auto& v : u.values) a.push_back(to_json(v));
  return a;
}

json to_json(const RieszVec& v) {
  json c = json::array();
  for (const Rational& x : v.coords()) c.push_back(format_rational(x));
  return json{{"dim", v.dim()}, {"coords", c}};
}

RieszVec vec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coords")) bad("vector needs \"coords\"");
  std::vector<Rational> c;
  for (const json& x : j["coords"]) c.push_back(rational_from(x));
  if (j.contains("dim") && j["dim"].get<std::size_t>() != c.size()) throw Error(ErrorCode::DimensionMismatch, "dim and coords disagree");
  return RieszVec(std::move(c));
}

json to_json(const BandFD& b) { return b.support; }

json to_json(const Classification& c) {
  json j = json::object();
  for (const auto& [name, p] : c.entries()) j[name] = json{{"holds", p->holds}, {"witnesses", p->witnesses}};
  return j;
}

std::string to_text(const Classification& c, const FiniteFrame& f) {
  std::ostringstream os;
  for (const auto& [name, p] : c.entries()) {
    os << name << ": " << (p->holds ? "true" : "false");
    if (!p->holds) {
      os << " (";
      for (std::size_t i = 0; i < p->witnesses.size(); ++i) os << (i ? ", " : "") << f.name(p->witnesses[i]);
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace pointfree::io
