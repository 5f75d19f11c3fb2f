#include "plap/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace plap::harness {

namespace {

std::string trim(const std::string& s) {
  const auto first = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  const auto last = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return first < last ? std::string(first, last) : std::string();
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

template <class T>
T parse_number(const std::string& text, const std::string& source, int line) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) fail(source, line, "not a number: '" + text + "'");
  return value;
}

template <class T>
std::vector<T> parse_list(const std::string& value, const std::string& source, int line) {
  std::vector<T> out;
  if (value.empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(source, line, "empty list element");
    out.push_back(parse_number<T>(item, source, line));
  }
  return out;
}

bool parse_bool(const std::string& v, const std::string& source, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(source, line, "expected a boolean, got '" + v + "'");
}

}  // namespace

SolveMethod parse_method(const std::string& name) {
  if (name == "shoot") return SolveMethod::shoot;
  if (name == "rayleigh") return SolveMethod::rayleigh;
  throw ConfigError("unknown method '" + name + "' (expected shoot or rayleigh)");
}

const char* method_name(SolveMethod m) { return m == SolveMethod::shoot ? "shoot" : "rayleigh"; }

SweepSpec parse_sweep_config(std::istream& in, const std::string& source) {
  SweepSpec spec;
  bool schema_seen = false;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(source, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!seen.insert(key).second) fail(source, line, "duplicate key '" + key + "'");

    if (key == "schema") {
      if (value != kSweepSchema) fail(source, line, "unsupported schema '" + value + "', expected " + kSweepSchema);
      schema_seen = true;
    } else if (key == "n") {
      spec.n = parse_list<int>(value, source, line);
    } else if (key == "p") {
      spec.p = parse_list<double>(value, source, line);
    } else if (key == "K") {
      spec.K = parse_list<double>(value, source, line);
    } else if (key == "R") {
      spec.R = parse_list<double>(value, source, line);
    } else if (key == "tol") {
      spec.tol = parse_number<double>(value, source, line);
    } else if (key == "mesh") {
      spec.mesh = parse_number<std::size_t>(value, source, line);
    } else if (key == "method") {
      try {
        spec.method = parse_method(value);
      } catch (const ConfigError& e) {
        fail(source, line, e.what());
      }
    } else if (key == "grad_lambda_fraction") {
      spec.grad_lambda_fraction = parse_number<double>(value, source, line);
    } else if (key == "out") {
      spec.out = value;
    } else if (key == "plot_dir") {
      spec.plot_dir = value;
    } else if (key == "check") {
      spec.check = parse_bool(value, source, line);
    } else {
      fail(source, line, "unknown key '" + key + "'");
    }
  }
  if (!schema_seen) throw ConfigError(source + ": missing 'schema = " + std::string(kSweepSchema) + "' line");
  if (!(spec.tol > 0.0)) throw ConfigError(source + ": tol must be > 0");
  if (!(spec.grad_lambda_fraction > 0.0 && spec.grad_lambda_fraction < 1.0)) {
    throw ConfigError(source + ": grad_lambda_fraction must lie in (0, 1)");
  }
  return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_sweep_config(in, path);
}

}  // namespace plap::harness
