#pragma once

#include "orbitope/root_system.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace orbitope {

/// Default bound on |W|; the environment variable ORBITOPE_CAP overrides it.
constexpr std::size_t kDefaultWeylCap = 2000;

std::size_t default_weyl_cap();

/// The Weyl group as explicit rank x rank matrices acting on coroot coordinates.
struct WeylGroup {
  /// elements[0] is the identity; ordered by (length, shortlex reduced word).
  std::vector<QMatrix> elements;
  /// generators[j] is the simple reflection s_j.
  std::vector<QMatrix> generators;
  /// Shortlex-minimal reduced word of each element (0-based letters).
  std::vector<std::vector<int>> words;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const QMatrix& m) const;
  /// Elements whose reduced word only uses letters from `subset`.
  std::vector<std::size_t> parabolic_subgroup(const RootSubset& subset) const;

  std::map<QVector, std::size_t, LexLess> lookup;  // flattened matrix -> index
};

/// Simple reflection s_j: h -> h - alpha_j(h) h_j.
QMatrix simple_reflection(const RootSystem& rs, int j);

WeylGroup build_weyl_group(const RootSystem& rs, std::size_t cap = default_weyl_cap());

/// Deduplicated orbit W.y, listed by first occurrence in element order (y first).
std::vector<QVector> weyl_orbit(const WeylGroup& w, const QVector& y);
std::vector<QVector> weyl_orbit(const WeylGroup& w, const ChamberPoint& x);

}  // namespace orbitope
