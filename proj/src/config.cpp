#include "nlcl/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "nlcl/error.hpp"
#include "nlcl/grid.hpp"

namespace nlcl {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

// Keys by "section.key", in the canonical emission order.
const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model.name",     "model.v_max",        "model.a",
      "model.b",        "model.width",        "grid.x_min",
      "grid.x_max",     "grid.n_cells",       "grid.lambda",
      "grid.ghost_radius", "datum.pieces",    "run.name",
      "run.t_final",    "run.snapshot_times", "run.output_dir",
      "run.mode",       "run.diagnostics",    "run.diagnostics_stride",
      "run.check_conservation",
  };
  return keys;
}

const std::vector<std::string>& required_keys() {
  static const std::vector<std::string> keys = {"model.name", "grid.x_min", "grid.x_max",
                                                "grid.n_cells", "datum.pieces", "run.t_final"};
  return keys;
}

bool is_known(const std::string& key) {
  const auto& k = known_keys();
  return std::find(k.begin(), k.end(), key) != k.end();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

using RawConfig = std::map<std::string, Entry>;

RawConfig parse_raw(std::string_view text) {
  RawConfig raw;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (content.front() == '[') {
      if (content.back() != ']') parse_error(line_no, "unterminated section header");
      section = trim(std::string_view(content).substr(1, content.size() - 2));
      if (section != "model" && section != "grid" && section != "datum" && section != "run") {
        parse_error(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) parse_error(line_no, "expected 'key = value'");
    if (section.empty()) parse_error(line_no, "key outside of a [section]");
    const std::string key = section + "." + trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (!is_known(key)) parse_error(line_no, "unknown key '" + key + "'");
    if (value.empty()) parse_error(line_no, "empty value for '" + key + "'");
    if (raw.contains(key)) {
      parse_error(line_no, "duplicate key '" + key + "' (first set on line " +
                               std::to_string(raw[key].line) + ")");
    }
    raw[key] = {value, line_no};
    if (end == text.size()) break;
  }
  return raw;
}

double to_real(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    parse_error(e.line, "'" + key + "' expects a number, got '" + e.value + "'");
  }
  return v;
}

long to_integer(const std::string& key, const Entry& e) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc() || ptr != e.value.data() + e.value.size()) {
    parse_error(e.line, "'" + key + "' expects an integer, got '" + e.value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const Entry& e) {
  if (e.value == "true" || e.value == "on" || e.value == "yes" || e.value == "1") return true;
  if (e.value == "false" || e.value == "off" || e.value == "no" || e.value == "0") return false;
  parse_error(e.line, "'" + key + "' expects true/false, got '" + e.value + "'");
}

std::vector<double> to_real_list(const std::string& key, const Entry& e) {
  std::vector<double> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    out.push_back(to_real(key, Entry{t, e.line}));
  }
  return out;
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string three_digits(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

RunConfig interpret(const RawConfig& raw) {
  std::vector<std::string> missing;
  for (const auto& k : required_keys()) {
    if (!raw.contains(k)) missing.push_back(k);
  }
  if (!missing.empty()) {
    std::string msg = "missing required keys:";
    for (const auto& k : missing) msg += " " + k;
    throw Error(ErrorKind::config, msg);
  }

  RunConfig c;
  for (const auto& [key, e] : raw) {
    if (key == "model.name") c.model = e.value;
    else if (key == "model.v_max") c.params.v_max = to_real(key, e);
    else if (key == "model.a") c.params.a = to_real(key, e);
    else if (key == "model.b") c.params.b = to_real(key, e);
    else if (key == "model.width") c.params.width = to_real(key, e);
    else if (key == "grid.x_min") c.x_min = to_real(key, e);
    else if (key == "grid.x_max") c.x_max = to_real(key, e);
    else if (key == "grid.n_cells") c.n_cells = to_integer(key, e);
    else if (key == "grid.lambda") {
      if (e.value == "auto") c.lambda.reset();
      else c.lambda = to_real(key, e);
    } else if (key == "grid.ghost_radius") c.ghost_radius = to_real(key, e);
    else if (key == "datum.pieces") {
      try {
        c.datum = parse_pieces(e.value);
      } catch (const Error& err) {
        parse_error(e.line, err.what());
      }
    } else if (key == "run.name") c.name = e.value;
    else if (key == "run.t_final") c.t_final = to_real(key, e);
    else if (key == "run.snapshot_times") c.snapshot_times = to_real_list(key, e);
    else if (key == "run.output_dir") c.output_dir = e.value;
    else if (key == "run.mode") {
      if (e.value == "nonlocal") c.mode = Mode::nonlocal;
      else if (e.value == "local") c.mode = Mode::local;
      else parse_error(e.line, "'run.mode' must be nonlocal or local");
    } else if (key == "run.diagnostics") c.diagnostics = to_bool(key, e);
    else if (key == "run.diagnostics_stride") c.diagnostics_stride = to_integer(key, e);
    else if (key == "run.check_conservation") c.check_conservation = to_bool(key, e);
  }
  return c;
}

std::string emit(const RawConfig& raw) {
  std::string out;
  std::string section;
  for (const auto& key : known_keys()) {
    const auto it = raw.find(key);
    if (it == raw.end()) continue;
    const std::string s = key.substr(0, key.find('.'));
    if (s != section) {
      if (!section.empty()) out += "\n";
      out += "[" + s + "]\n";
      section = s;
    }
    out += key.substr(key.find('.') + 1) + " = " + it->second.value + "\n";
  }
  return out;
}

bool is_flat(double value, const ModelSpec& model) {
  if (value == 0.0) return true;
  return std::find(model.flat_levels.begin(), model.flat_levels.end(), value) !=
         model.flat_levels.end();
}

}  // namespace

ModelSpec make_model(const RunConfig& config) { return builtin_model(config.model, config.params); }

double resolved_lambda(const RunConfig& config, const ModelSpec& model) {
  if (config.lambda) return *config.lambda;
  return kAutoLambdaFraction * max_stable_lambda(model).value;
}

void validate(const RunConfig& c) {
  if (c.model == "traffic_forward" || c.model == "traffic_backward") {
    if (!(c.params.v_max > 0.0)) throw Error(ErrorKind::config, "model: v_max must be positive");
  }
  const ModelSpec model = make_model(c);
  if (!(c.x_max > c.x_min)) throw Error(ErrorKind::config, "grid: x_min must be below x_max");
  if (c.n_cells < 2) throw Error(ErrorKind::config, "grid: n_cells must be at least 2");
  if (c.ghost_radius < 0.0) throw Error(ErrorKind::config, "grid: ghost_radius must be >= 0");
  if (!(c.t_final >= 0.0)) throw Error(ErrorKind::config, "run: t_final must be >= 0");
  for (double t : c.snapshot_times) {
    if (t < 0.0) throw Error(ErrorKind::config, "run: snapshot times must be >= 0");
  }
  if (c.diagnostics_stride < 1) throw Error(ErrorKind::config, "run: diagnostics_stride must be >= 1");

  const double lambda = resolved_lambda(c, model);
  if (!(lambda > 0.0)) throw Error(ErrorKind::config, "grid: lambda must be positive");
  const StableLambda star = max_stable_lambda(model);
  if (lambda > star.value) {
    throw Error(ErrorKind::cfl,
                "CFL: lambda " + three_digits(lambda) + " > lambda* " + three_digits(star.value));
  }
  const double h = (c.x_max - c.x_min) / static_cast<double>(c.n_cells);
  if (model.C > 0.0 && !(h < 1.0 / model.C)) {
    throw Error(ErrorKind::mesh_condition,
                "mesh: h " + three_digits(h) + " >= 1/C " + three_digits(1.0 / model.C));
  }
  if (c.check_conservation) {
    if (!is_flat(c.datum.left_far_field(), model) || !is_flat(c.datum.right_far_field(), model)) {
      throw Error(ErrorKind::config,
                  "datum: far-field values must be flat levels of the flux for conservation checks");
    }
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig c = interpret(parse_raw(text));
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string apply_override(std::string_view text, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorKind::parse, "override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  if (!is_known(key)) throw Error(ErrorKind::parse, "override of unknown key '" + key + "'");
  if (value.empty()) throw Error(ErrorKind::parse, "override of '" + key + "' has no value");
  RawConfig raw = parse_raw(text);
  raw[key] = {value, 0};
  return emit(raw);
}

std::string to_config_text(const RunConfig& c) {
  RawConfig raw;
  raw["model.name"] = {c.model, 0};
  if (c.model == "traffic_forward" || c.model == "traffic_backward") {
    raw["model.v_max"] = {shortest(c.params.v_max), 0};
  } else if (c.model == "tv_example") {
    raw["model.a"] = {shortest(c.params.a), 0};
    raw["model.b"] = {shortest(c.params.b), 0};
  } else if (c.model == "limit_family") {
    raw["model.width"] = {shortest(c.params.width), 0};
  }
  raw["grid.x_min"] = {shortest(c.x_min), 0};
  raw["grid.x_max"] = {shortest(c.x_max), 0};
  raw["grid.n_cells"] = {std::to_string(c.n_cells), 0};
  raw["grid.lambda"] = {c.lambda ? shortest(*c.lambda) : "auto", 0};
  if (c.ghost_radius != 0.0) raw["grid.ghost_radius"] = {shortest(c.ghost_radius), 0};
  raw["datum.pieces"] = {format_pieces(c.datum), 0};
  raw["run.name"] = {c.name, 0};
  raw["run.t_final"] = {shortest(c.t_final), 0};
  if (!c.snapshot_times.empty()) {
    std::string times;
    for (double t : c.snapshot_times) times += (times.empty() ? "" : ", ") + shortest(t);
    raw["run.snapshot_times"] = {times, 0};
  }
  raw["run.output_dir"] = {c.output_dir, 0};
  raw["run.mode"] = {c.mode == Mode::local ? "local" : "nonlocal", 0};
  raw["run.diagnostics"] = {c.diagnostics ? "true" : "false", 0};
  raw["run.diagnostics_stride"] = {std::to_string(c.diagnostics_stride), 0};
  raw["run.check_conservation"] = {c.check_conservation ? "true" : "false", 0};
  return emit(raw);
}

}  // namespace nlcl
