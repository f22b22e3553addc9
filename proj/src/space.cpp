#include "ultraforest/space.hpp"

#include "ultraforest/error.hpp"

#include <algorithm>
#include <cctype>

namespace ultraforest {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::size_t si = i, sj = j;
      while (si + 1 < ei && a[si] == '0') ++si;
      while (sj + 1 < ej && b[sj] == '0') ++sj;
      if (ei - si != ej - sj) return ei - si < ej - sj;
      for (std::size_t k = 0; k < ei - si; ++k)
        if (a[si + k] != b[sj + k]) return a[si + k] < b[sj + k];
      // equal numeric value: the shorter run (fewer leading zeros) first
      if (ei - i != ej - j) return ei - i < ej - j;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

PointSet make_point_set(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end(), natural_less);
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::size_t Space::index_of(const PointId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(Errc::UnknownPoint, "point '" + id + "' is not in the space", {id});
  return it->second;
}

bool operator==(const Space& a, const Space& b) {
  return a.points_ == b.points_ && a.spectrum_ == b.spectrum_ && a.rank_ == b.rank_;
}

Space Space::from_ranks(std::vector<PointId> points, std::vector<Rational> spectrum, std::vector<std::uint32_t> ranks) {
  Space s;
  s.points_ = std::move(points);
  for (std::size_t i = 0; i < s.points_.size(); ++i) s.index_.emplace(s.points_[i], i);
  s.spectrum_ = std::move(spectrum);
  s.rank_ = std::move(ranks);
  return s;
}

Space validate_space(const std::vector<std::vector<Rational>>& matrix, const std::vector<PointId>& points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::EmptySpace, "a space needs at least one point");
  if (matrix.size() != n)
    throw Error(Errc::NotSquare, "matrix has " + std::to_string(matrix.size()) + " rows for " +
                                     std::to_string(n) + " points");
  for (std::size_t i = 0; i < n; ++i)
    if (matrix[i].size() != n)
      throw Error(Errc::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) +
                                       " entries, expected " + std::to_string(n));

  std::unordered_map<PointId, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(points[i], i).second)
      throw Error(Errc::DuplicatePoint, "point '" + points[i] + "' appears twice", {points[i]});

  for (std::size_t i = 0; i < n; ++i)
    if (matrix[i][i] != Rational(0))
      throw Error(Errc::DiagonalNonzero, "d(" + points[i] + "," + points[i] + ") = " + to_string(matrix[i][i]),
                  {points[i]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix[i][j] < Rational(0))
        throw Error(Errc::NegativeDistance, "d(" + points[i] + "," + points[j] + ") = " + to_string(matrix[i][j]),
                    {points[i], points[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix[i][j] != matrix[j][i])
        throw Error(Errc::NotSymmetric,
                    "d(" + points[i] + "," + points[j] + ") = " + to_string(matrix[i][j]) + " but d(" + points[j] +
                        "," + points[i] + ") = " + to_string(matrix[j][i]),
                    {points[i], points[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix[i][j] == Rational(0))
        throw Error(Errc::OffDiagonalZero, "d(" + points[i] + "," + points[j] + ") = 0 for distinct points",
                    {points[i], points[j]});

  std::vector<Rational> values;
  values.reserve(n * (n - 1) / 2 + 1);
  values.emplace_back(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(matrix[i][j]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::uint32_t> ranks(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto r = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), matrix[i][j]) - values.begin());
      ranks[i * n + j] = r;
      ranks[j * n + i] = r;
    }

  // d(x,y) <= max(d(x,z), d(z,y)) on ranks, which preserve order.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::uint32_t dxy = ranks[x * n + y];
      const std::uint32_t* rx = &ranks[x * n];
      const std::uint32_t* ry = &ranks[y * n];
      for (std::size_t z = 0; z < n; ++z)
        if (dxy > std::max(rx[z], ry[z]))
          throw Error(Errc::StrongTriangleViolation,
                      "d(" + points[x] + "," + points[y] + ") = " + to_string(values[dxy]) + " exceeds max(d(" +
                          points[x] + "," + points[z] + "), d(" + points[z] + "," + points[y] + ")) = " +
                          to_string(values[std::max(rx[z], ry[z])]),
                      {points[x], points[y], points[z]});
    }

  return Space::from_ranks(points, std::move(values), std::move(ranks));
}

const std::vector<Rational>& spectrum(const Space& space) { return space.spectrum(); }

PointSpectrum point_spectrum(const Space& space, const PointId& x) {
  const std::size_t i = space.index_of(x);
  std::vector<std::uint32_t> ranks;
  ranks.reserve(space.size());
  for (std::size_t j = 0; j < space.size(); ++j) ranks.push_back(space.rank(i, j));
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  PointSpectrum out{x, {}};
  for (auto r : ranks) out.values.push_back(space.spectrum()[r]);
  return out;
}

Rational diameter(const Space& space) { return space.spectrum().back(); }

Space restrict(const Space& space, const std::vector<PointId>& subset) {
  if (subset.empty()) throw Error(Errc::EmptySubset, "cannot restrict to an empty subset");
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& id : subset) idx.push_back(space.index_of(id));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  const std::size_t m = idx.size();
  std::vector<std::uint32_t> used;
  used.push_back(0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) used.push_back(space.rank(idx[a], idx[b]));
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<Rational> spec;
  spec.reserve(used.size());
  for (auto r : used) spec.push_back(space.spectrum()[r]);
  std::vector<std::uint32_t> ranks(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      ranks[a * m + b] = static_cast<std::uint32_t>(
          std::lower_bound(used.begin(), used.end(), space.rank(idx[a], idx[b])) - used.begin());
  std::vector<PointId> pts;
  pts.reserve(m);
  for (auto i : idx) pts.push_back(space.point(i));
  return Space::from_ranks(std::move(pts), std::move(spec), std::move(ranks));
}

Space reorder(const Space& space, const std::vector<PointId>& order) {
  const std::size_t n = space.size();
  if (order.size() != n) throw Error(Errc::InvalidArgument, "reorder needs a permutation of the points");
  std::vector<std::size_t> idx;
  std::vector<char> used(n, 0);
  for (const auto& id : order) {
    auto i = space.index_of(id);
    if (used[i]) throw Error(Errc::InvalidArgument, "point '" + id + "' listed twice", {id});
    used[i] = 1;
    idx.push_back(i);
  }
  std::vector<std::uint32_t> ranks(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ranks[a * n + b] = space.rank(idx[a], idx[b]);
  return Space::from_ranks(order, space.spectrum(), std::move(ranks));
}

std::vector<std::vector<Rational>> distance_matrix(const Space& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = space.dist(i, j);
  return m;
}

}  // namespace ultraforest
