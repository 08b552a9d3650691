// Command-line front end: frame files in, classifications, frames, spaces and
// verification reports out.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pointfree/enumerate.hpp"
#include "pointfree/io.hpp"
#include "pointfree/verify.hpp"

namespace pf = pointfree;
using json = pf::io::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

struct Output {
  std::string out_path;
  std::string format = "text";

  void emit(const std::string& body) const {
    if (out_path.empty()) {
      std::cout << body;
    } else {
      pf::io::write_text(out_path, body);
    }
  }
};

std::vector<pf::Rational> parse_grid(const std::string& text) {
  std::vector<pf::Rational> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) grid.push_back(pf::parse_rational(item));
  }
  return grid;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string frame_text(const pf::FiniteFrame& f) {
  std::ostringstream os;
  os << "elements: " << f.size() << "\n";
  for (pf::Element a = 0; a < f.size(); ++a) {
    os << f.name(a) << ":";
    for (pf::Element b = 0; b < f.size(); ++b) {
      if (a != b && f.leq(a, b)) os << " <= " << f.name(b);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, their real functions and the checks relating them"};
  app.require_subcommand(1);

  Output out;
  auto add_output = [&out](CLI::App* cmd) {
    cmd->add_option("--out", out.out_path, "Write the result to this path instead of standard output");
    cmd->add_option("--format", out.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  std::string frame_path;
  auto* classify_cmd = app.add_subcommand("classify", "Report the separation and disconnectedness predicates of a frame");
  classify_cmd->add_option("frame", frame_path, "Frame file")->required();
  add_output(classify_cmd);

  auto* booleanize_cmd = app.add_subcommand("booleanize", "Write the Booleanization of a frame");
  booleanize_cmd->add_option("frame", frame_path, "Frame file")->required();
  add_output(booleanize_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Write the space of prime elements of a frame");
  spectrum_cmd->add_option("frame", frame_path, "Frame file")->required();
  add_output(spectrum_cmd);

  pf::verify::SuiteConfig config;
  std::string grid_text, suites_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--seed", config.seed, "Random seed");
  verify_cmd->add_option("--max-size", config.max_frame_size, "Largest frame size enumerated or sampled");
  verify_cmd->add_option("--samples", config.samples_per_law, "Random instances per law");
  verify_cmd->add_option("--grid", grid_text, "Comma-separated increasing breakpoint grid, e.g. -1,0,1/2");
  verify_cmd->add_option("--suites", suites_text, "Comma-separated subset of core,realfn,intervalfn,spatial,rieszfd,universal");
  add_output(verify_cmd);

  std::uint64_t gen_seed = 0;
  std::size_t gen_size = 8;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random frame, the downsets of a random poset");
  generate_cmd->add_option("--seed", gen_seed, "Random seed");
  generate_cmd->add_option("--max-size", gen_size, "Largest number of elements");
  add_output(generate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  bool structured = out.format == "structured";
  try {
    if (*classify_cmd) {
      pf::FramePtr f = pf::io::frame_from_json(pf::io::read_file(frame_path));
      pf::Classification c = pf::classify(*f);
      out.emit(structured ? pf::io::to_json(c).dump(2) + "\n" : pf::io::to_text(c, *f));
      return kPass;
    }
    if (*booleanize_cmd) {
      pf::FramePtr f = pf::io::frame_from_json(pf::io::read_file(frame_path));
      pf::Booleanization b = pf::booleanize(f);
      json j = pf::io::to_json(*b.frame);
      j["embed"] = b.embed;
      out.emit(structured ? j.dump(2) + "\n" : frame_text(*b.frame));
      return kPass;
    }
    if (*spectrum_cmd) {
      pf::FramePtr f = pf::io::frame_from_json(pf::io::read_file(frame_path));
      pf::Spectrum s = pf::spectrum(*f);
      json j = pf::io::to_json(s.space);
      j["primes"] = s.primes;
      std::ostringstream os;
      for (std::size_t x = 0; x < s.primes.size(); ++x) os << "point " << x << ": prime " << f->name(s.primes[x]) << "\n";
      os << "opens: " << pf::io::to_json(s.space)["opens"].dump() << "\n";
      out.emit(structured ? j.dump(2) + "\n" : os.str());
      return kPass;
    }
    if (*generate_cmd) {
      if (gen_size == 0) throw pf::Error(pf::ErrorCode::InvalidArgument, "--max-size must be >= 1");
      pf::FramePtr f = pf::generate_frame(gen_seed, gen_size);
      out.emit(structured ? pf::io::to_json(*f).dump(2) + "\n" : frame_text(*f));
      return kPass;
    }
    if (*verify_cmd) {
      if (!grid_text.empty()) config.breakpoint_grid = parse_grid(grid_text);
      if (!suites_text.empty()) config.suites = split(suites_text);
      config.validate();
      pf::verify::Report r = pf::verify::run(config);
      out.emit(structured ? r.to_json().dump(2) + "\n" : r.to_text());
      return r.passed() ? kPass : kFail;
    }
  } catch (const pf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
