#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shallowpack::harness {

/// Invalid configuration. `line` is 0 when the problem has no source line
/// (for example a missing key or a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, std::string field, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// One [section] of a config file.
class ExperimentConfig {
 public:
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;

  const Entry* find(std::string_view key) const;
  bool has(std::string_view key) const { return find(key) != nullptr; }
  /// Replaces the value, or appends a new entry with line 0.
  void set(std::string_view key, std::string value);

  std::string kind() const;

  // Typed accessors. Each throws ConfigError naming the key and its line.
  std::string get_string(std::string_view key) const;
  std::string get_string(std::string_view key, std::string fallback) const;
  std::size_t get_size(std::string_view key) const;
  std::size_t get_size(std::string_view key, std::size_t fallback) const;
  std::uint64_t get_u64(std::string_view key, std::uint64_t fallback) const;
  double get_double(std::string_view key, double fallback) const;
  std::optional<double> get_optional_double(std::string_view key) const;
  /// Comma-separated list; a single value is a one-element list.
  std::vector<std::size_t> get_sizes(std::string_view key) const;
  /// As get_sizes; a trailing 'e' multiplies by Euler's number ("2e").
  std::vector<double> get_doubles(std::string_view key) const;

  friend bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
};

struct ConfigFile {
  std::vector<ExperimentConfig> experiments;
  friend bool operator==(const ConfigFile& a, const ConfigFile& b) {
    return a.experiments == b.experiments;
  }
};

// Format: '#' or ';' comments, "[name]" section headers, "key = value"
// lines. Keys are unique within a section and sections are unique by name.
ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::filesystem::path& path);
std::string serialize(const ConfigFile& config);

inline constexpr std::string_view kKinds[] = {
    "packing-scaling", "tail", "net", "approx", "projection",
    "mst", "measures", "discrepancy", "grid-lowerbound"};

/// Checks the kind, rejects keys the kind does not use, and parses every
/// value that the kind reads.
void validate(const ExperimentConfig& exp);

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::string> format;
};

/// Overwrites seed/trials/format in every experiment.
void apply(ConfigFile& config, const Overrides& overrides);

}  // namespace shallowpack::harness
