#pragma once

// Faces of conv(K.x) up to conjugation, encoded by pairs (I, J) of simple-root
// subsets, and their matching with Weyl classes of faces of the momentum
// polytope P = conv(W.x).

#include "orbitope/polytope.hpp"
#include "orbitope/root_system.hpp"
#include "orbitope/weyl_group.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitope {

struct FaceDescriptor {
  RootSubset I;
  RootSubset I_prime;
  RootSubset J;
  /// Positive roots (indices into RootSystem::positive_roots) in the span of each subset.
  std::vector<int> sub_roots_I;
  std::vector<int> sub_roots_Iprime;
  std::vector<int> sub_roots_J;
  int dim_KF = 0;
  int dim_KprimeF = 0;
  int dim_ZF = 0;
  int dim_face = 0;
  /// conv(W_J . x) as a face of the momentum polytope.
  PolytopeFace sigma;
  int sigma_orbit = -1;
  /// alpha(u) = 0 on J and 1 on the remaining simple roots; empty for the improper face.
  QVector exposing_u;
  RootSubset parabolic_E;
  bool improper = false;
};

/// Every component of I contains a simple root with alpha(x) != 0.
bool is_x_connected(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I);

/// All x-connected subsets, ordered by size and then lexicographically; starts with the empty set.
std::vector<RootSubset> x_connected_subsets(const RootSystem& rs, const ChamberPoint& x);

struct Saturation {
  RootSubset I_prime;
  RootSubset J;
};

/// I' = simple roots vanishing on x and orthogonal to I; J = I u I'.
/// Throws InputError when I is not x-connected.
Saturation saturate(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I);

/// Largest x-connected subset of E: the union of its components meeting supp(x).
RootSubset x_connected_part(const RootSystem& rs, const ChamberPoint& x, const RootSubset& E);

/// Descriptor data that does not depend on the polytope (sigma left empty).
FaceDescriptor make_descriptor(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I);

struct FaceMatch {
  int orbit = -1;       // proper W-class of polytope faces
  int descriptor = -1;  // index into FaceClassification::descriptors
};

struct FaceClassification {
  RootSystem rs;
  WeylGroup weyl;
  ChamberPoint x;
  ExactPolytope polytope;
  FaceOrbits orbits;
  int x_vertex = -1;
  std::vector<FaceDescriptor> descriptors;
  std::vector<FaceMatch> matching;
  bool bijection_verified = false;

  std::vector<int> proper_descriptors() const;
  int improper_descriptor() const;
  /// W-classes of faces other than the whole polytope.
  std::vector<int> proper_orbits() const;
};

/// Builds P, its face classes and all descriptors, and checks exposedness and
/// the bijection. Throws TheoremViolation if any check fails.
FaceClassification classify_faces(const RootSystem& rs, const WeylGroup& w, const ChamberPoint& x,
                                  std::size_t hull_cap = kDefaultHullCap);

struct PsiResult {
  int descriptor = -1;
  std::size_t conjugator = 0;  // element w with w.sigma in fundamental position
  int conjugated_face = -1;
  QVector fixed_u;             // stabilizer-fixed exposing vector of sigma
  RootSubset E;                // simple roots vanishing on the orthogonal complement of w.sigma
};

/// psi: the descriptor of Z_K(sigma^perp).sigma. Rejects the whole polytope;
/// throws TheoremViolation when no descriptor matches.
PsiResult psi_of_polytope_face(const FaceClassification& c, int face_id);

/// phi: the W-class of sigma(d), as an index into c.orbits.orbits.
int phi_of_descriptor(const FaceClassification& c, int descriptor);

struct ParabolicData {
  RootSubset E;
  std::string levi_type;
  int levi_positive_roots = 0;
  int nilradical_dim = 0;  // |positive roots| - |positive roots of J|
  std::string extreme_set;  // homogeneous type of ext F = K_I . x
  bool improper = false;
};

ParabolicData parabolic_report(const RootSystem& rs, const ChamberPoint& x, const FaceDescriptor& d);

/// Per component of I: "P^k" (first node of a type A path marked), "Gr(m,k+1)"
/// (node m marked) or "<type>/{marked nodes}"; joined by "x", "point" when I is empty.
std::string extreme_set_type(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I);

}  // namespace orbitope
