#pragma once

// Exact convex geometry over the rationals. Points live in Q^r with an inner
// product given by a Gram matrix (the Killing form for orbit polytopes).

#include "orbitope/rational.hpp"
#include "orbitope/weyl_group.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitope {

constexpr std::size_t kDefaultHullCap = 200;

/// Inequality <p, normal> <= offset, tight exactly on `vertices`.
struct Facet {
  QVector normal;
  Rational offset;
  std::vector<int> vertices;
};

struct FaceRecord {
  std::vector<int> vertices;  // sorted vertex indices
  int dim = 0;
  std::vector<int> parents;   // faces of dimension dim + 1 containing this one
  std::vector<int> children;  // faces of dimension dim - 1 contained in this one
};

struct ExactPolytope {
  std::vector<QVector> vertices;
  int ambient_dim = 0;
  int affine_dim = 0;
  std::vector<Facet> facets;
  /// All nonempty faces, sorted by (dim, vertex list); the last one is the polytope.
  std::vector<FaceRecord> faces;
  /// levels[d] lists the ids of the d-dimensional faces.
  std::vector<std::vector<int>> levels;
  QMatrix gram;
  std::string origin_note;

  std::map<std::vector<int>, int> face_index;
  std::map<QVector, int, LexLess> vertex_lookup;

  int top_face() const { return static_cast<int>(faces.size()) - 1; }
  std::optional<int> find_face(const std::vector<int>& sorted_vertices) const;
  std::optional<int> vertex_index(const QVector& p) const;
  /// Number of faces in each dimension 0..affine_dim.
  std::vector<int> f_vector() const;
  Rational pairing(const QVector& a, const QVector& b) const { return a.dot(gram * b); }
};

/// Convex hull with facets and the complete face lattice.
/// Throws InputError for an empty point set or more than `cap` points.
ExactPolytope hull(const std::vector<QVector>& points, const QMatrix& gram, std::size_t cap = kDefaultHullCap);
ExactPolytope hull(const std::vector<QVector>& points);

struct PolytopeFace {
  int id = -1;
  std::vector<int> vertex_indices;
  int dim = 0;
  /// Basis of the direction space of the affine hull of the face.
  std::vector<QVector> direction_basis;
  /// Basis of its orthogonal complement in the ambient space.
  std::vector<QVector> perp_basis;
};

PolytopeFace describe_face(const ExactPolytope& p, int face_id);

struct SupportResult {
  PolytopeFace face;
  Rational value;  // support function h_P(u)
};

/// Exposed face F_u(P) = argmax of <., u> together with h_P(u). Rejects u = 0.
SupportResult support_set(const ExactPolytope& p, const QVector& u);

/// perms[k][i] = index of elements[k] * vertices[i]. Throws InputError if the
/// vertex set is not stable under the group.
std::vector<std::vector<int>> vertex_permutations(const WeylGroup& w, const ExactPolytope& p);

std::vector<int> apply_permutation(const std::vector<int>& perm, const std::vector<int>& face);

struct FaceOrbit {
  int representative = -1;  // face id with the lexicographically smallest vertex list
  int dim = 0;
  std::vector<int> members;
};

struct FaceOrbits {
  std::vector<std::vector<int>> permutations;
  std::vector<int> orbit_of_face;
  /// Sorted by (dim, representative vertex list).
  std::vector<FaceOrbit> orbits;

  /// Orbits of a given dimension.
  std::vector<int> orbits_of_dim(int d) const;
};

/// Partition of the face lattice into W-orbits.
FaceOrbits act_on_faces(const WeylGroup& w, const ExactPolytope& p);

struct Stabilizer {
  std::vector<std::size_t> elements;   // indices into WeylGroup::elements
  std::vector<QVector> fixed_subspace;  // basis of the fixed vectors of the stabilizer
};

Stabilizer face_stabilizer(const ExactPolytope& p, int face_id, const WeylGroup& w,
                           const std::vector<std::vector<int>>& perms);
Stabilizer face_stabilizer(const ExactPolytope& p, int face_id, const WeylGroup& w);

/// Sum of the normals of the facets through the face.
QVector facet_normal_sum(const ExactPolytope& p, int face_id);

/// Stabilizer-fixed vector exposing exactly the given proper face, obtained by
/// averaging facet_normal_sum over the face stabilizer.
QVector fixed_vector_in_cone(const ExactPolytope& p, int face_id, const WeylGroup& w,
                             const std::vector<std::vector<int>>& perms);
QVector fixed_vector_in_cone(const ExactPolytope& p, int face_id, const WeylGroup& w);

}  // namespace orbitope
