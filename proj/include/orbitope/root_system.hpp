#pragma once

// Root data over the rationals.
//
// Coordinates: a Cartan vector h is stored by its coefficients in the basis of
// simple coroots h_1..h_r. A root is stored by its integer coefficients in the
// basis of simple roots; as a functional on the Cartan it is the row vector
// a with a_i = alpha(h_i), so alpha(h) = a . y. All of this is exact.

#include "orbitope/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace orbitope {

/// Sorted list of 0-based simple-root indices.
using RootSubset = std::vector<int>;

struct RootSystem {
  char type_label = 'A';
  int rank = 0;
  /// Standard (Bourbaki) realization in an ambient Q^m.
  std::vector<QVector> simple_roots;
  /// Positive roots in the ambient realization; ordered by height, then lex.
  std::vector<QVector> positive_roots;
  /// Positive roots as nonnegative integer combinations of simple roots.
  std::vector<Eigen::VectorXi> positive_coefficients;
  /// cartan_matrix(i, j) = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  Eigen::MatrixXi cartan_matrix;
  /// Killing form on the simple coroots: sum over all roots of alpha(h_i) alpha(h_j).
  QMatrix killing_gram;
  QMatrix killing_gram_inverse;
  /// Row k holds the functional of positive root k on the coroot basis.
  QMatrix positive_functionals;

  int num_positive() const { return static_cast<int>(positive_coefficients.size()); }
  /// dim K = rank + 2 |positive roots|.
  int group_dimension() const { return rank + 2 * num_positive(); }
  std::string name() const { return std::string(1, type_label) + std::to_string(rank); }
};

/// Builds the root system of the given type and rank (rank <= 8).
/// Throws InputError for pairs that do not name a reduced irreducible system.
RootSystem build_root_system(char type_label, int rank);

/// Killing form <h1, h2> = sum over all roots alpha(h1) alpha(h2).
Rational killing_pairing(const RootSystem& rs, const QVector& h1, const QVector& h2);

/// Values alpha_1(h) .. alpha_r(h) of the simple roots.
QVector simple_root_values(const RootSystem& rs, const QVector& h);

/// Functional (a_i = alpha(h_i)) of the root with the given simple-root coefficients.
QVector root_functional(const RootSystem& rs, const Eigen::VectorXi& coefficients);

/// Vector u with alpha_j(u) = 1 for j in `subset` and 0 otherwise, i.e. a sum
/// of fundamental coweights.
QVector coweight_sum(const RootSystem& rs, const RootSubset& subset);

/// Dual-form length <alpha, alpha> = a^T G^{-1} a of a root functional.
Rational root_norm_squared(const RootSystem& rs, const QVector& functional);

bool simple_roots_orthogonal(const RootSystem& rs, int i, int j);

/// Connected components of the Dynkin subdiagram spanned by `subset`,
/// each sorted, listed by smallest member.
std::vector<RootSubset> dynkin_components(const RootSystem& rs, const RootSubset& subset);

/// Indices of the positive roots lying in the span of `subset`.
std::vector<int> positive_roots_in_span(const RootSystem& rs, const RootSubset& subset);

/// Cartan-Killing type of a single connected subdiagram, e.g. "A3", "B2", "G2".
std::string component_type(const RootSystem& rs, const RootSubset& component);

/// Type of an arbitrary subdiagram, e.g. "A1xA2"; "T" (torus only) when empty.
std::string subsystem_type(const RootSystem& rs, const RootSubset& subset);

/// Nodes of a connected type-A component listed along the path, starting at
/// the end with the smaller index. Empty for other types.
RootSubset path_order(const RootSystem& rs, const RootSubset& component);

/// Point in the closed positive chamber.
struct ChamberPoint {
  /// Coordinates in the fundamental-weight basis: <x, h_i> = coords_i.
  QVector coords;
  /// The point itself in simple-coroot coordinates.
  QVector vector;
  /// Simple roots vanishing on the point.
  RootSubset singular_set;

  bool is_regular() const { return singular_set.empty(); }
};

/// Builds the chamber point with the given fundamental-weight coordinates.
/// Rejects negative coordinates and non-full points (a simple component on
/// which the point vanishes identically).
ChamberPoint make_chamber_point(const RootSystem& rs, const QVector& coords);

}  // namespace orbitope
