#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gmf/moy.hpp"
#include "gmf/reports.hpp"

using namespace gmf;

namespace {

enum Exit { ok = 0, input_error = 2, partial = 3, invariant = 4 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string input;
  int n = 2;
  std::string window;
  std::string format = "json";
  bool certify = false;
  int unit = 0;  // 0: per-verb default
  std::string route = "theorem";
};

std::string read_input(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::optional<std::pair<int, int>> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("window must be lo..hi");
  try {
    int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw InputError("window: lo > hi");
    return std::make_pair(lo, hi);
  } catch (const std::logic_error&) {
    throw InputError("window must be lo..hi with integer bounds");
  }
}

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded matrix factorizations: compile, close and verify"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& name, const std::string& desc, bool input = true) {
    CLI::App* c = app.add_subcommand(name, desc);
    if (input) c->add_option("input", o.input, "file path or inline text")->required();
    c->add_option("--n", o.n, "sl(n) rank");
    c->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    c->add_option("--unit", o.unit, "degree of the alphabet generators");
    c->add_flag("--certify", o.certify, "always search explicit equivalences");
    return c;
  };
  add("compile", "compile a MOY graph or braid word");
  CLI::App* close = add("close", "closure of a braid word");
  close->add_option("--window", o.window, "internal degree window lo..hi");
  close->add_option("--route", o.route)->check(CLI::IsMember({"theorem", "direct", "excluded"}));
  add("verify-hecke", "check relations in the Hecke algebra");
  add("verify-moy", "check relations on compiled factorizations");
  add("stabilize", "stabilize a complete intersection");
  add("reduce", "reduce a factorization given as JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : input_error;
  }
  if (o.n < 1) {
    std::cerr << "error: --n must be positive\n";
    return input_error;
  }
  if (o.unit < 0) {
    std::cerr << "error: --unit must be positive\n";
    return input_error;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  Json out;
  int code = ok;
  try {
    ReportOptions ro{o.n, o.unit, parse_window(o.window), o.certify, o.route};
    std::string text = read_input(o.input);
    Status s;
    if (verb == "compile") s = compile_report(text, ro, out);
    else if (verb == "close") s = close_report(text, ro, out);
    else if (verb == "verify-hecke") s = verify_hecke_report(text, ro, out);
    else if (verb == "verify-moy") s = verify_moy_report(text, ro, out);
    else if (verb == "stabilize") s = stabilize_report(text, ro, out);
    else s = reduce_report(text, ro, out);
    code = s == Status::ok ? ok : s == Status::partial ? partial : invariant;
  } catch (const GraphError& e) {
    Json err = {{"error", e.what()}, {"problems", e.problems}};
    std::cerr << err.dump(2) << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json{{"error", e.what()}}.dump(2) << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump(2) << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "invariant"}}.dump(2) << "\n";
    return invariant;
  }
  if (o.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    render_text(out, "", std::cout);
  return code;
}
