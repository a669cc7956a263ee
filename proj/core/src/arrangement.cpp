#include "arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shallowpack::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParallelTol = 1e-12;
constexpr double kMergeTol = 1e-11;

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 scaled(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Unit normal with a canonical sign (first significant component positive);
// duplicates removed. Degenerate (zero-normal) planes are dropped.
std::vector<Hyperplane> normalize(const std::vector<Hyperplane>& planes, int dim) {
  std::vector<Hyperplane> out;
  out.reserve(planes.size());
  for (auto h : planes) {
    for (int k = dim; k < 3; ++k) h.normal[k] = 0.0;
    const double len = norm(h.normal);
    if (len < kParallelTol) continue;
    h.normal = scaled(h.normal, 1.0 / len);
    h.offset /= len;
    for (int k = 0; k < dim; ++k) {
      if (std::abs(h.normal[k]) > kParallelTol) {
        if (h.normal[k] < 0) {
          h.normal = scaled(h.normal, -1.0);
          h.offset = -h.offset;
        }
        break;
      }
    }
    out.push_back(h);
  }
  auto key_less = [](const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  };
  std::sort(out.begin(), out.end(), key_less);
  std::vector<Hyperplane> unique;
  for (const auto& h : out) {
    const bool same = std::any_of(unique.rbegin(),
                                  unique.rbegin() + std::min<std::ptrdiff_t>(unique.size(), 8),
                                  [&](const Hyperplane& u) {
                                    return norm(sub(u.normal, h.normal)) < kMergeTol &&
                                           std::abs(u.offset - h.offset) < kMergeTol;
                                  });
    if (!same) unique.push_back(h);
  }
  return unique;
}

std::vector<CellSample> sample_line(const std::vector<Hyperplane>& planes) {
  std::vector<double> cuts;
  for (const auto& h : planes) {
    if (std::abs(h.normal[0]) > kParallelTol) cuts.push_back(h.offset / h.normal[0]);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> merged;
  for (double t : cuts) {
    if (merged.empty() || t - merged.back() > kMergeTol) merged.push_back(t);
  }
  if (merged.empty()) return {CellSample{{0.0, 0.0, 0.0}, kInf}};
  std::vector<CellSample> out;
  out.push_back({{merged.front() - 1.0, 0.0, 0.0}, 1.0});
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double half = 0.5 * (merged[i + 1] - merged[i]);
    out.push_back({{merged[i] + half, 0.0, 0.0}, half});
  }
  out.push_back({{merged.back() + 1.0, 0.0, 0.0}, 1.0});
  return out;
}

// Every cell of a line arrangement is bounded by at least one edge, so it is
// enough to step off the midpoint of every edge to both sides.
std::vector<CellSample> sample_plane(const std::vector<Hyperplane>& lines) {
  if (lines.empty()) return {CellSample{{0.0, 0.0, 0.0}, kInf}};
  std::vector<CellSample> out;
  std::vector<double> cuts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Vec3& ni = lines[i].normal;
    const Vec3 dir{-ni[1], ni[0], 0.0};
    const Vec3 base = scaled(ni, lines[i].offset);
    double min_sin = kInf;
    double min_gap = kInf;
    cuts.clear();
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      const Vec3& nj = lines[j].normal;
      const double cross = dot(nj, dir);
      if (std::abs(cross) > kParallelTol) {
        cuts.push_back((lines[j].offset - dot(nj, base)) / cross);
        min_sin = std::min(min_sin, std::abs(cross));
      } else {
        min_gap = std::min(min_gap, std::abs(lines[j].offset - lines[i].offset * dot(nj, ni)));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> stops;  // (parameter, half edge length)
    if (cuts.empty()) {
      stops.emplace_back(0.0, kInf);
    } else {
      stops.emplace_back(cuts.front() - 1.0, 1.0);
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double half = 0.5 * (cuts[k + 1] - cuts[k]);
        if (half > kMergeTol) stops.emplace_back(cuts[k] + half, half);
      }
      stops.emplace_back(cuts.back() + 1.0, 1.0);
    }
    for (const auto& [t, half] : stops) {
      double eps = 0.5 * std::min(half * min_sin, min_gap);
      if (!std::isfinite(eps)) eps = 1.0;
      const Vec3 mid = add(base, scaled(dir, t));
      out.push_back({add(mid, scaled(ni, eps)), eps});
      out.push_back({sub(mid, scaled(ni, eps)), eps});
    }
  }
  return out;
}

// Same idea one dimension up: sample the induced line arrangement inside each
// plane, then step off the plane to both sides.
std::vector<CellSample> sample_space(const std::vector<Hyperplane>& planes) {
  if (planes.empty()) return {CellSample{{0.0, 0.0, 0.0}, kInf}};
  std::vector<CellSample> out;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const Vec3& ni = planes[i].normal;
    // Orthonormal basis of the plane's direction space.
    Vec3 seed = std::abs(ni[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 e1 = sub(seed, scaled(ni, dot(seed, ni)));
    e1 = scaled(e1, 1.0 / norm(e1));
    const Vec3 e2{ni[1] * e1[2] - ni[2] * e1[1], ni[2] * e1[0] - ni[0] * e1[2],
                  ni[0] * e1[1] - ni[1] * e1[0]};
    const Vec3 base = scaled(ni, planes[i].offset);
    double min_sin = kInf;
    double min_gap = kInf;
    std::vector<Hyperplane> induced;
    for (std::size_t j = 0; j < planes.size(); ++j) {
      if (j == i) continue;
      const Vec3& nj = planes[j].normal;
      const Vec3 in_plane{dot(nj, e1), dot(nj, e2), 0.0};
      const double s = norm(in_plane);
      if (s > kParallelTol) {
        induced.push_back({in_plane, planes[j].offset - dot(nj, base)});
        min_sin = std::min(min_sin, s);
      } else {
        min_gap = std::min(min_gap, std::abs(planes[j].offset - planes[i].offset * dot(nj, ni)));
      }
    }
    for (const auto& cell : sample_plane(normalize(induced, 2))) {
      double eps = 0.5 * std::min(cell.clearance * min_sin, min_gap);
      if (!std::isfinite(eps)) eps = 1.0;
      const Vec3 on_plane = add(base, add(scaled(e1, cell.point[0]), scaled(e2, cell.point[1])));
      out.push_back({add(on_plane, scaled(ni, eps)), eps});
      out.push_back({sub(on_plane, scaled(ni, eps)), eps});
    }
  }
  return out;
}

}  // namespace

std::vector<CellSample> sample_cells(const std::vector<Hyperplane>& planes, int dim) {
  const auto unique = normalize(planes, dim);
  switch (dim) {
    case 1:
      return sample_line(unique);
    case 2:
      return sample_plane(unique);
    case 3:
      return sample_space(unique);
    default:
      throw std::invalid_argument("sample_cells: dimension must be 1, 2 or 3");
  }
}

std::vector<Vec3> sample_directions(const std::vector<Vec3>& normals, int dim) {
  if (dim == 1) return {Vec3{1.0, 0.0, 0.0}};
  if (dim != 2 && dim != 3) throw std::invalid_argument("sample_directions: bad dimension");
  // A full-dimensional cone meets the slice a_dim = 1 or its mirror does.
  std::vector<Hyperplane> slice;
  slice.reserve(normals.size());
  for (const auto& w : normals) {
    Vec3 reduced{w[0], dim == 3 ? w[1] : 0.0, 0.0};
    slice.push_back({reduced, -w[dim - 1]});
  }
  std::vector<Vec3> out;
  for (const auto& cell : sample_cells(slice, dim - 1)) {
    Vec3 a{};
    for (int k = 0; k < dim - 1; ++k) a[k] = cell.point[k];
    a[dim - 1] = 1.0;
    out.push_back(a);
  }
  return out;
}

AffineFrame affine_hull(const std::vector<Vec3>& points, int dim, double tol) {
  AffineFrame frame;
  if (points.empty()) return frame;
  frame.origin = points.front();
  for (const auto& p : points) {
    if (static_cast<int>(frame.basis.size()) == dim) break;
    Vec3 r = sub(p, frame.origin);
    for (int k = dim; k < 3; ++k) r[k] = 0.0;
    // Two passes of Gram-Schmidt for numerical stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : frame.basis) r = sub(r, scaled(b, dot(r, b)));
    }
    const double len = norm(r);
    if (len > tol) frame.basis.push_back(scaled(r, 1.0 / len));
  }
  return frame;
}

}  // namespace shallowpack::detail
