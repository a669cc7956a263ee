#include "shallowpack/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "shallowpack/errors.hpp"

namespace shallowpack {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t parse_size(std::string_view text, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what);
  }
  return value;
}

double parse_double(std::string_view text, std::size_t line) {
  const std::string owned(trim(text));
  if (owned.empty()) throw ParseError(line, "empty coordinate");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "malformed coordinate '" + owned + "'");
  }
  if (used != owned.size()) throw ParseError(line, "malformed coordinate '" + owned + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite coordinate");
  return value;
}

/// Parses "key=value" expecting the given key.
std::string_view expect_field(std::string_view token, std::string_view key, std::size_t line) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos || token.substr(0, eq) != key) {
    throw ParseError(line, "expected '" + std::string(key) + "=<int>'");
  }
  return token.substr(eq + 1);
}

template <typename Fn>
auto with_file(const std::filesystem::path& path, std::ios::openmode mode, Fn fn) {
  std::fstream file(path, mode);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "'");
  return fn(file);
}

}  // namespace

void write_set_system(std::ostream& out, const SetSystem& sys) {
  out << "n=" << sys.ground_size() << " m=" << sys.size() << '\n';
  for (const auto& v : sys) out << v.to_string() << '\n';
}

SetSystem read_set_system(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header 'n=<int> m=<int>'");
  std::istringstream header{std::string(trim(line))};
  std::string n_tok;
  std::string m_tok;
  std::string extra;
  if (!(header >> n_tok >> m_tok) || (header >> extra)) {
    throw ParseError(1, "header must be 'n=<int> m=<int>'");
  }
  const std::size_t n = parse_size(expect_field(n_tok, "n", 1), 1, "n");
  const std::size_t m = parse_size(expect_field(m_tok, "m", 1), 1, "m");
  std::vector<IncidenceVector> vectors;
  vectors.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lineno = i + 2;
    if (!std::getline(in, line)) throw ParseError(lineno, "fewer vector lines than m");
    const auto bits = trim(line);
    if (bits.size() != n) {
      throw ParseError(lineno, "vector has length " + std::to_string(bits.size()) +
                                   ", expected " + std::to_string(n));
    }
    try {
      vectors.push_back(IncidenceVector::from_string(bits));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  SetSystem sys(n, std::move(vectors));
  if (sys.size() != m) throw ParseError(0, "duplicate vectors in set system file");
  return sys;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_point_set(std::ostream& out, const PointSet& pts) {
  out << "dim=" << pts.dim() << '\n';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto p = pts[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

PointSet read_point_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header 'dim=<d>'");
  const std::size_t dim = parse_size(expect_field(trim(line), "dim", 1), 1, "dim");
  if (dim == 0) throw ParseError(1, "dim must be positive");
  PointSet pts(dim);
  std::size_t lineno = 1;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    row.clear();
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      row.push_back(parse_double(body.substr(start, comma - start), lineno));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (row.size() != dim) {
      throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates, got " +
                                   std::to_string(row.size()));
    }
    pts.push_back(row);
  }
  return pts;
}

SetSystem load_set_system(const std::filesystem::path& path) {
  return with_file(path, std::ios::in, [](std::istream& in) { return read_set_system(in); });
}

void save_set_system(const std::filesystem::path& path, const SetSystem& sys) {
  with_file(path, std::ios::out | std::ios::trunc, [&](std::ostream& out) {
    write_set_system(out, sys);
    return 0;
  });
}

PointSet load_point_set(const std::filesystem::path& path) {
  return with_file(path, std::ios::in, [](std::istream& in) { return read_point_set(in); });
}

void save_point_set(const std::filesystem::path& path, const PointSet& pts) {
  with_file(path, std::ios::out | std::ios::trunc, [&](std::ostream& out) {
    write_point_set(out, pts);
    return 0;
  });
}

}  // namespace shallowpack
