#pragma once

// Floating-point cross-checks on the adjoint orbits of su(n). The Cartan
// subalgebra is the diagonal; a real vector d stands for i diag(d), and the
// trace form <A, B> = -Re tr(AB) is 1/(2n) times the Killing form.

#include "orbitope/faces.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitope::numeric {

using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple-coroot coordinates y (rank n-1) to the diagonal d = sum y_j (e_j - e_{j+1}).
RVector diagonal_realization(const RVector& y);
/// Inverse of diagonal_realization on traceless d.
RVector coroot_coordinates(const RVector& d);

CMatrix skew_diagonal(const RVector& d);
double trace_pairing(const CMatrix& a, const CMatrix& b);
/// Real diagonal of -i X.
RVector cartan_projection(const CMatrix& x);
/// Eigenvalues of -i X in decreasing order.
RVector spectrum(const CMatrix& x);

CMatrix random_special_unitary(int n, std::mt19937_64& rng);

struct MatrixOrbitPoint {
  int n = 0;
  RVector x0;  // diagonal of the base point
  CMatrix g;
  CMatrix point;  // g i diag(x0) g^*
};

MatrixOrbitPoint random_orbit_point(const RVector& x0, std::uint64_t seed);

struct AscentOptions {
  double gradient_tolerance = 1e-10;
  int max_iterations = 10000;
};

struct AscentResult {
  CMatrix start;
  CMatrix point;
  double value = 0;  // trace-form value <point, i diag(u)>
  int iterations = 0;
  double gradient_norm = 0;
  double max_spectral_drift = 0;  // largest per-step change of the spectrum
};

/// Riemannian gradient ascent of X -> <X, i diag(u)> on the orbit of i diag(x0),
/// started at a Haar-random conjugate. Throws ConvergenceError on the iteration cap.
AscentResult ascend(const RVector& x0, const RVector& u, std::uint64_t seed, const AscentOptions& opts = {});

struct HessianBlock {
  int i = 0;
  int j = 0;
  bool tangent = true;      // alpha(x) != 0
  double predicted = 0;     // -alpha(x) alpha(u), trace-form units
  double finite_difference[2] = {0, 0};  // along (E_ij - E_ji)/sqrt2 and i(E_ij + E_ji)/sqrt2
};

struct HessianSignature {
  std::vector<HessianBlock> blocks;
  int negative = 0;
  int positive = 0;
  int zero = 0;
  double max_fd_error = 0;

  bool is_max() const { return positive == 0; }
  bool is_min() const { return negative == 0; }
};

/// Hessian of mu_u at the diagonal critical point x_crit, block by root plane.
HessianSignature hessian_signature(const RVector& x_crit, const RVector& u, double fd_step = 1e-4);

struct Tolerances {
  double commutator = 1e-8;
  double value = 1e-8;
  double membership = 1e-9;
  double vertex = 1e-6;
  double fd = 1e-5;
  double drift = 1e-9;
};

struct NumericFaceReport {
  int descriptor = -1;
  int samples = 0;
  double exact_support = 0;  // h_P(u) in Killing units
  double scale = 0;          // Killing / trace form
  double max_commutator = 0;
  double max_value_error = 0;
  double max_membership_violation = 0;
  double max_start_excess = 0;  // value ceiling and containment at the random starts
  double max_vertex_distance = 0;
  double max_drift = 0;
  int max_iterations = 0;
  HessianSignature hessian_at_x;
  bool passed = false;
};

/// Multi-seed ascent for the exposing vector of a proper descriptor (type A only).
NumericFaceReport verify_face_numeric(const FaceClassification& c, int descriptor, int samples, std::uint64_t seed,
                                      const Tolerances& tol = {});

struct FlagComponent {
  std::string name;
  double third_eigenvalue = 0;
  double value = 0;
  HessianSignature hessian;
  std::string kind;  // max, min or saddle
  std::vector<int> vertices;
  bool lattice_face = false;
  bool exposed_by_u = false;
  bool exposed_by_minus_u = false;
};

struct FlagExampleReport {
  std::vector<FlagComponent> components;
  int samples = 0;
  int ascents_reaching_max = 0;
  bool passed = false;
};

/// Critical components of mu_u for u = diag(1,1,-2) on a regular su(3) orbit.
FlagExampleReport flag_example(const FaceClassification& c, int samples, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace orbitope::numeric
