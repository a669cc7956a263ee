#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "shallowpack/point_set.hpp"
#include "shallowpack/set_system.hpp"

namespace shallowpack {

// Set systems are newline-delimited text:
//   n=<int> m=<int>
//   <0/1 string of length n>   (m lines, canonical order)
void write_set_system(std::ostream& out, const SetSystem& sys);
/// Throws ParseError carrying the offending line number.
SetSystem read_set_system(std::istream& in);

// Point sets are CSV with a "dim=<d>" header line and one point per row.
void write_point_set(std::ostream& out, const PointSet& pts);
PointSet read_point_set(std::istream& in);

SetSystem load_set_system(const std::filesystem::path& path);
void save_set_system(const std::filesystem::path& path, const SetSystem& sys);
PointSet load_point_set(const std::filesystem::path& path);
void save_point_set(const std::filesystem::path& path, const PointSet& pts);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

}  // namespace shallowpack
