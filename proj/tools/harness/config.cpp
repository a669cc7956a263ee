#include "harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace shallowpack::harness {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    parts.push_back(trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <class T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

const std::map<std::string, std::set<std::string>, std::less<>>& kind_keys() {
  static const std::set<std::string> common{"kind", "seed", "trials", "output", "format"};
  static const auto with = [](std::initializer_list<std::string> extra) {
    std::set<std::string> keys = common;
    keys.insert(extra.begin(), extra.end());
    return keys;
  };
  static const std::map<std::string, std::set<std::string>, std::less<>> table{
      {"packing-scaling", with({"generator", "dim", "n", "k", "delta", "sweep"})},
      {"tail", with({"n", "k", "m", "t"})},
      {"net", with({"generator", "dim", "n", "delta", "d", "c", "failure", "epsilon"})},
      {"approx", with({"generator", "dim", "n", "delta", "d", "c", "failure", "epsilon", "eta"})},
      {"projection", with({"generator", "dim", "n", "delta", "d0"})},
      {"mst", with({"generator", "dim", "n", "k", "m", "factors", "mu", "eta"})},
      {"measures", with({"n", "dim", "clusters", "spread", "m", "measure"})},
      {"discrepancy", with({"generator", "dim", "n", "k", "delta", "d"})},
      {"grid-lowerbound", with({"n", "delta"})},
  };
  return table;
}

std::size_t line_of(const ExperimentConfig& exp, std::string_view key) {
  const auto* e = exp.find(key);
  return e ? e->line : exp.line;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? std::string() : "'" + field + "': ") + message),
      line_(line),
      field_(std::move(field)) {}

const Entry* ExperimentConfig::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

void ExperimentConfig::set(std::string_view key, std::string value) {
  for (auto& e : entries) {
    if (e.key == key) {
      e.value = std::move(value);
      return;
    }
  }
  entries.push_back({std::string(key), std::move(value), 0});
}

std::string ExperimentConfig::kind() const { return get_string("kind"); }

std::string ExperimentConfig::get_string(std::string_view key) const {
  const auto* e = find(key);
  if (!e) throw ConfigError(line, std::string(key), "missing required key in [" + name + "]");
  return e->value;
}

std::string ExperimentConfig::get_string(std::string_view key, std::string fallback) const {
  const auto* e = find(key);
  return e ? e->value : std::move(fallback);
}

std::size_t ExperimentConfig::get_size(std::string_view key) const {
  const auto value = get_string(key);
  const auto parsed = parse_number<std::size_t>(trim(value));
  if (!parsed) throw ConfigError(line_of(*this, key), std::string(key), "expected a non-negative integer, got '" + value + "'");
  return *parsed;
}

std::size_t ExperimentConfig::get_size(std::string_view key, std::size_t fallback) const {
  return has(key) ? get_size(key) : fallback;
}

std::uint64_t ExperimentConfig::get_u64(std::string_view key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const auto value = get_string(key);
  const auto parsed = parse_number<std::uint64_t>(trim(value));
  if (!parsed) throw ConfigError(line_of(*this, key), std::string(key), "expected an unsigned 64-bit integer, got '" + value + "'");
  return *parsed;
}

double ExperimentConfig::get_double(std::string_view key, double fallback) const {
  return get_optional_double(key).value_or(fallback);
}

std::optional<double> ExperimentConfig::get_optional_double(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  const auto value = get_string(key);
  const auto parsed = parse_number<double>(trim(value));
  if (!parsed || !std::isfinite(*parsed)) {
    throw ConfigError(line_of(*this, key), std::string(key), "expected a real number, got '" + value + "'");
  }
  return parsed;
}

std::vector<std::size_t> ExperimentConfig::get_sizes(std::string_view key) const {
  std::vector<std::size_t> out;
  for (auto part : split_list(get_string(key))) {
    const auto parsed = parse_number<std::size_t>(part);
    if (!parsed) throw ConfigError(line_of(*this, key), std::string(key), "expected a list of non-negative integers, got '" + std::string(part) + "'");
    out.push_back(*parsed);
  }
  return out;
}

std::vector<double> ExperimentConfig::get_doubles(std::string_view key) const {
  std::vector<double> out;
  for (auto part : split_list(get_string(key))) {
    auto parsed = parse_number<double>(part);
    if (!parsed && part.size() >= 2 && part.back() == 'e') {
      parsed = parse_number<double>(part.substr(0, part.size() - 1));
      if (parsed) *parsed *= std::numbers::e;
    }
    if (!parsed || !std::isfinite(*parsed)) {
      throw ConfigError(line_of(*this, key), std::string(key), "expected a list of real numbers, got '" + std::string(part) + "'");
    }
    out.push_back(*parsed);
  }
  return out;
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  if (a.name != b.name || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].key != b.entries[i].key || a.entries[i].value != b.entries[i].value) return false;
  }
  return true;
}

ConfigFile parse_config(std::istream& in) {
  ConfigFile config;
  std::set<std::string, std::less<>> names;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ConfigError(line_no, "", "empty section name");
      if (!names.emplace(name).second) throw ConfigError(line_no, "", "duplicate section [" + std::string(name) + "]");
      config.experiments.push_back({std::string(name), line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "", "empty key");
    if (config.experiments.empty()) throw ConfigError(line_no, std::string(key), "key outside of any [section]");
    auto& exp = config.experiments.back();
    if (exp.has(key)) throw ConfigError(line_no, std::string(key), "duplicate key");
    exp.entries.push_back({std::string(key), std::string(value), line_no});
  }
  if (config.experiments.empty()) throw ConfigError(line_no, "", "no [section] found");
  return config;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "", "cannot open config '" + path.string() + "'");
  return parse_config(in);
}

std::string serialize(const ConfigFile& config) {
  std::ostringstream out;
  bool first = true;
  for (const auto& exp : config.experiments) {
    if (!first) out << '\n';
    first = false;
    out << '[' << exp.name << "]\n";
    for (const auto& e : exp.entries) out << e.key << " = " << e.value << '\n';
  }
  return out.str();
}

void validate(const ExperimentConfig& exp) {
  const auto kind = exp.kind();
  const auto& table = kind_keys();
  const auto it = table.find(kind);
  if (it == table.end()) throw ConfigError(line_of(exp, "kind"), "kind", "unknown experiment kind '" + kind + "'");
  for (const auto& e : exp.entries) {
    if (!it->second.contains(e.key)) {
      throw ConfigError(e.line, e.key, "not a key of kind '" + kind + "'");
    }
  }
  if (exp.get_size("trials", 1) < 1) throw ConfigError(line_of(exp, "trials"), "trials", "must be at least 1");
  exp.get_u64("seed", 0);
  const auto format = exp.get_string("format", "csv");
  if (format != "csv" && format != "json") throw ConfigError(line_of(exp, "format"), "format", "must be csv or json");
  // Every numeric key must parse under the type its kind reads.
  static const std::set<std::string> size_keys{"dim", "m", "d0", "mu", "clusters"};
  static const std::set<std::string> size_list_keys{"n", "k", "delta", "factors"};
  static const std::set<std::string> real_keys{"c", "failure", "epsilon", "eta", "spread", "d"};
  for (const auto& e : exp.entries) {
    if (size_keys.contains(e.key)) exp.get_size(e.key);
    if (size_list_keys.contains(e.key)) exp.get_sizes(e.key);
    if (real_keys.contains(e.key)) exp.get_optional_double(e.key);
    if (e.key == "t") exp.get_doubles(e.key);
  }
}

void apply(ConfigFile& config, const Overrides& overrides) {
  for (auto& exp : config.experiments) {
    if (overrides.seed) exp.set("seed", std::to_string(*overrides.seed));
    if (overrides.trials) exp.set("trials", std::to_string(*overrides.trials));
    if (overrides.format) exp.set("format", *overrides.format);
  }
}

}  // namespace shallowpack::harness
