#pragma once

#include "ultraforest/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ultraforest {

using PointId = std::string;

/// Sorted (by natural_less), duplicate-free list of point ids.
using PointSet = std::vector<PointId>;

/// Orders ids so that embedded digit runs compare numerically: "x2" < "x10".
bool natural_less(const std::string& a, const std::string& b);

PointSet make_point_set(std::vector<PointId> ids);

/// A validated finite ultrametric space. Immutable; the only ways to obtain
/// one are validate_space() and operations that preserve the axioms.
///
/// Besides the exact matrix the space keeps its spectrum and, for each pair,
/// the index of the distance in the spectrum. Every algorithm that only needs
/// to compare distances works on those indices.
class Space {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<PointId>& points() const noexcept { return points_; }
  const PointId& point(std::size_t i) const { return points_[i]; }

  /// Index of `id` in points(); throws Error(UnknownPoint).
  std::size_t index_of(const PointId& id) const;
  bool contains(const PointId& id) const { return index_.count(id) != 0; }

  const Rational& dist(std::size_t i, std::size_t j) const { return spectrum_[rank_[i * size() + j]]; }
  const Rational& dist(const PointId& a, const PointId& b) const { return dist(index_of(a), index_of(b)); }

  /// Position of dist(i, j) in spectrum(); 0 iff i == j.
  std::uint32_t rank(std::size_t i, std::size_t j) const { return rank_[i * size() + j]; }

  /// Strictly increasing distinct distances, starting with 0.
  const std::vector<Rational>& spectrum() const noexcept { return spectrum_; }

  /// Same points, same order, bit-identical distances.
  friend bool operator==(const Space& a, const Space& b);

 private:
  friend Space validate_space(const std::vector<std::vector<Rational>>& matrix, const std::vector<PointId>& points);
  friend Space restrict(const Space& space, const std::vector<PointId>& subset);
  friend Space reorder(const Space& space, const std::vector<PointId>& order);

  Space() = default;
  static Space from_ranks(std::vector<PointId> points, std::vector<Rational> spectrum, std::vector<std::uint32_t> ranks);

  std::vector<PointId> points_;
  std::unordered_map<PointId, std::size_t> index_;
  std::vector<Rational> spectrum_;
  std::vector<std::uint32_t> rank_;
};

struct PointSpectrum {
  PointId center;
  std::vector<Rational> values;
};

/// Checks the ultrametric axioms in the order: shape, diagonal, sign,
/// symmetry, positivity off the diagonal, strong triangle inequality. The
/// first failure is reported with its witness points.
Space validate_space(const std::vector<std::vector<Rational>>& matrix, const std::vector<PointId>& points);

const std::vector<Rational>& spectrum(const Space& space);
PointSpectrum point_spectrum(const Space& space, const PointId& x);
Rational diameter(const Space& space);

/// Induced subspace; points keep their relative order from `space`.
Space restrict(const Space& space, const std::vector<PointId>& subset);

/// Same space with points listed in `order`, which must be a permutation of
/// points(). Throws Error(InvalidArgument) otherwise.
Space reorder(const Space& space, const std::vector<PointId>& order);

std::vector<std::vector<Rational>> distance_matrix(const Space& space);

}  // namespace ultraforest
