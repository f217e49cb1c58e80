#include "orbitope/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

namespace orbitope::numeric {

namespace {

using cd = std::complex<double>;

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

// exp(tA) for skew-Hermitian A, via the spectral decomposition of iA.
CMatrix skew_exp(const CMatrix& a, double t) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(cd(0, 1) * a);
  const auto& lambda = es.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::exp(cd(0, -t * lambda(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix cayley(const CMatrix& a, double tau) {
  const auto n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  return (id - 0.5 * tau * a).partialPivLu().solve(id + 0.5 * tau * a);
}

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CMatrix skew_part(const CMatrix& x) { return 0.5 * (x - x.adjoint()); }

RVector killing_realization(const QVector& y) { return diagonal_realization(to_double(y)); }

Eigen::MatrixXd gram_double(const QMatrix& g) {
  Eigen::MatrixXd out(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) out(i, j) = to_double(g(i, j));
  return out;
}

// Largest violation of the facet inequalities of P by a point in coroot coordinates.
double membership_violation(const ExactPolytope& p, const Eigen::MatrixXd& gram, const RVector& y) {
  double worst = 0;
  for (const auto& f : p.facets) {
    const double lhs = y.dot(gram * to_double(f.normal));
    const double rhs = to_double(f.offset);
    worst = std::max(worst, (lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  return worst;
}

}  // namespace

RVector diagonal_realization(const RVector& y) {
  const auto r = y.size();
  RVector d = RVector::Zero(r + 1);
  for (Eigen::Index j = 0; j < r; ++j) {
    d(j) += y(j);
    d(j + 1) -= y(j);
  }
  return d;
}

RVector coroot_coordinates(const RVector& d) {
  RVector y(d.size() - 1);
  double acc = 0;
  for (Eigen::Index j = 0; j + 1 < d.size(); ++j) {
    acc += d(j);
    y(j) = acc;
  }
  return y;
}

CMatrix skew_diagonal(const RVector& d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) m(k, k) = cd(0, d(k));
  return m;
}

double trace_pairing(const CMatrix& a, const CMatrix& b) { return -(a * b).trace().real(); }

RVector cartan_projection(const CMatrix& x) {
  RVector d(x.rows());
  for (Eigen::Index k = 0; k < x.rows(); ++k) d(k) = x(k, k).imag();
  return d;
}

RVector spectrum(const CMatrix& x) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(cd(0, -1) * x, Eigen::EigenvaluesOnly);
  RVector ev = es.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
  return ev;
}

CMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cd(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const cd rk = r(k, k);
    q.col(k) *= rk / std::abs(rk);
  }
  const cd det = q.determinant();
  q *= std::pow(det, -1.0 / n);
  return q;
}

MatrixOrbitPoint random_orbit_point(const RVector& x0, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MatrixOrbitPoint p;
  p.n = static_cast<int>(x0.size());
  p.x0 = x0;
  p.g = random_special_unitary(p.n, rng);
  p.point = skew_part(p.g * skew_diagonal(x0) * p.g.adjoint());
  return p;
}

AscentResult ascend(const RVector& x0, const RVector& u, std::uint64_t seed, const AscentOptions& opts) {
  const CMatrix umat = skew_diagonal(u);
  const auto start = random_orbit_point(x0, seed);
  AscentResult res;
  res.start = start.point;
  CMatrix x = start.point;
  double f = trace_pairing(x, umat);
  double tau = 1.0 / std::max(u.norm() * x0.norm(), 1e-300);
  RVector spec = spectrum(x);
  const double scale = 1.0 + std::abs(f) + u.norm() * x0.norm();

  for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
    const CMatrix a = commutator(x, umat);
    const double g2 = a.squaredNorm();
    res.gradient_norm = std::sqrt(g2);
    if (res.gradient_norm < opts.gradient_tolerance) break;
    bool accepted = false;
    for (int tries = 0; tries < 60 && !accepted; ++tries) {
      const CMatrix q = cayley(a, tau);
      CMatrix xn = skew_part(q * x * q.adjoint());
      const double fn = trace_pairing(xn, umat);
      // Once the expected gain drops below the resolution of f, sufficient
      // decrease of the gradient replaces the Armijo test.
      bool ok = false;
      if (tau * g2 > 1e-10 * scale) ok = fn >= f + 1e-4 * tau * g2;
      else ok = commutator(xn, umat).norm() <= (1 - 1e-3) * res.gradient_norm;
      if (ok) {
        const RVector spec_n = spectrum(xn);
        res.max_spectral_drift = std::max(res.max_spectral_drift, (spec_n - spec).cwiseAbs().maxCoeff());
        spec = spec_n;
        x = std::move(xn);
        f = fn;
        accepted = true;
        tau *= 2;
      } else {
        tau *= 0.5;
      }
    }
    if (!accepted) break;
  }
  res.point = x;
  res.value = f;
  res.gradient_norm = commutator(x, umat).norm();
  if (res.gradient_norm >= opts.gradient_tolerance)
    throw ConvergenceError("ascent did not converge: gradient norm " + fmt_sci(res.gradient_norm) + " after " +
                           std::to_string(res.iterations) + " iterations");
  return res;
}

HessianSignature hessian_signature(const RVector& x_crit, const RVector& u, double fd_step) {
  const auto n = x_crit.size();
  const CMatrix x = skew_diagonal(x_crit);
  const CMatrix umat = skew_diagonal(u);
  auto mu = [&](const CMatrix& a, double t) {
    const CMatrix e = skew_exp(a, t);
    return trace_pairing(e * x * e.adjoint(), umat);
  };
  HessianSignature sig;
  const double scale = 1.0 + x_crit.cwiseAbs().maxCoeff() * u.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      HessianBlock b;
      b.i = static_cast<int>(i);
      b.j = static_cast<int>(j);
      const double ax = x_crit(i) - x_crit(j);
      const double au = u(i) - u(j);
      b.tangent = std::abs(ax) > 1e-12 * scale;
      b.predicted = -ax * au;
      CMatrix dirs[2] = {CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
      dirs[0](i, j) = 1 / std::sqrt(2.0);
      dirs[0](j, i) = -1 / std::sqrt(2.0);
      dirs[1](i, j) = cd(0, 1 / std::sqrt(2.0));
      dirs[1](j, i) = cd(0, 1 / std::sqrt(2.0));
      const double f0 = trace_pairing(x, umat);
      for (int k = 0; k < 2; ++k) {
        b.finite_difference[k] = (mu(dirs[k], fd_step) - 2 * f0 + mu(dirs[k], -fd_step)) / (fd_step * fd_step);
        if (b.tangent) sig.max_fd_error = std::max(sig.max_fd_error, std::abs(b.finite_difference[k] - b.predicted));
      }
      if (b.tangent) {
        if (std::abs(b.predicted) <= 1e-12 * scale) ++sig.zero;
        else if (b.predicted < 0) ++sig.negative;
        else ++sig.positive;
      }
      sig.blocks.push_back(b);
    }
  }
  return sig;
}

NumericFaceReport verify_face_numeric(const FaceClassification& c, int descriptor, int samples, std::uint64_t seed,
                                      const Tolerances& tol) {
  if (c.rs.type_label != 'A') throw InputError("numeric verification needs a type A root system");
  const auto& d = c.descriptors.at(static_cast<std::size_t>(descriptor));
  if (d.improper) throw InputError("numeric verification needs a proper face");

  NumericFaceReport rep;
  rep.descriptor = descriptor;
  rep.samples = samples;
  const int n = c.rs.rank + 1;
  rep.scale = 2.0 * n;
  const auto support = support_set(c.polytope, d.exposing_u);
  rep.exact_support = to_double(support.value);
  const RVector x0 = killing_realization(c.x.vector);
  const RVector u = killing_realization(d.exposing_u);
  const Eigen::MatrixXd gram = gram_double(c.rs.killing_gram);
  const CMatrix x0mat = skew_diagonal(x0);
  const CMatrix umat = skew_diagonal(u);
  const double ref = 1.0 + std::abs(rep.exact_support);

  for (int s = 0; s < samples; ++s) {
    const auto run = ascend(x0, u, seed + static_cast<std::uint64_t>(s));
    rep.max_commutator = std::max(rep.max_commutator, commutator(run.point, umat).norm());
    rep.max_value_error = std::max(rep.max_value_error, std::abs(rep.scale * run.value - rep.exact_support));
    const RVector p = coroot_coordinates(cartan_projection(run.point));
    rep.max_membership_violation = std::max(rep.max_membership_violation, membership_violation(c.polytope, gram, p));
    const RVector p0 = coroot_coordinates(cartan_projection(run.start));
    rep.max_start_excess = std::max(rep.max_start_excess, membership_violation(c.polytope, gram, p0));
    rep.max_start_excess =
        std::max(rep.max_start_excess, (rep.scale * trace_pairing(run.start, umat) - rep.exact_support) / ref);
    if (d.sigma.dim == 0) rep.max_vertex_distance = std::max(rep.max_vertex_distance, (run.point - x0mat).norm());
    rep.max_drift = std::max(rep.max_drift, run.max_spectral_drift);
    rep.max_iterations = std::max(rep.max_iterations, run.iterations);
  }
  rep.hessian_at_x = hessian_signature(x0, u);
  rep.passed = rep.max_commutator <= tol.commutator && rep.max_value_error <= tol.value &&
               rep.max_membership_violation <= tol.membership && rep.max_start_excess <= tol.membership &&
               rep.max_vertex_distance <= tol.vertex && rep.max_drift <= tol.drift && rep.hessian_at_x.is_max() &&
               rep.hessian_at_x.max_fd_error <= tol.fd;
  return rep;
}

FlagExampleReport flag_example(const FaceClassification& c, int samples, std::uint64_t seed, const Tolerances& tol) {
  if (c.rs.type_label != 'A' || c.rs.rank != 2 || !c.x.is_regular())
    throw InputError("the flag example needs a regular point of A2");
  FlagExampleReport rep;
  rep.samples = samples;
  const RVector x0 = killing_realization(c.x.vector);  // decreasing: a > b > c
  RVector u(3);
  u << 1, 1, -2;
  QVector u_exact(2);
  u_exact << 1, 2;  // coroot coordinates of diag(1,1,-2)
  const int face_u = support_set(c.polytope, u_exact).face.id;
  const int face_minus_u = support_set(c.polytope, QVector(-u_exact)).face.id;

  std::vector<RVector> vertex_diag;
  for (const auto& v : c.polytope.vertices) vertex_diag.push_back(killing_realization(v));
  auto vertex_of = [&](const RVector& d) {
    for (std::size_t k = 0; k < vertex_diag.size(); ++k)
      if ((vertex_diag[k] - d).cwiseAbs().maxCoeff() < 1e-9) return static_cast<int>(k);
    throw TheoremViolation("diagonal critical point is not an orbit vertex");
  };

  // C1: e3 carries the middle eigenvalue; C2: the smallest; C3: the largest.
  const std::pair<const char*, int> layout[3] = {{"C1", 1}, {"C2", 2}, {"C3", 0}};
  for (const auto& [name, third] : layout) {
    FlagComponent comp;
    comp.name = name;
    RVector rest(2);
    int k = 0;
    for (int e = 0; e < 3; ++e)
      if (e != third) rest(k++) = x0(e);
    RVector crit(3);
    crit << rest(0), rest(1), x0(third);
    RVector swapped(3);
    swapped << rest(1), rest(0), x0(third);
    comp.third_eigenvalue = x0(third);
    comp.value = crit.dot(u);
    comp.hessian = hessian_signature(crit, u);
    comp.kind = comp.hessian.is_max() ? "max" : comp.hessian.is_min() ? "min" : "saddle";
    comp.vertices = {vertex_of(crit), vertex_of(swapped)};
    std::sort(comp.vertices.begin(), comp.vertices.end());
    const auto id = c.polytope.find_face(comp.vertices);
    comp.lattice_face = id.has_value();
    comp.exposed_by_u = id && *id == face_u;
    comp.exposed_by_minus_u = id && *id == face_minus_u;
    rep.components.push_back(comp);
  }

  const auto& c2 = rep.components[1];
  for (int s = 0; s < samples; ++s) {
    const auto run = ascend(x0, u, seed + static_cast<std::uint64_t>(s));
    if (std::abs(run.value - c2.value) <= tol.value * (1 + std::abs(c2.value)) &&
        std::abs(run.point(2, 2).imag() - c2.third_eigenvalue) <= tol.vertex)
      ++rep.ascents_reaching_max;
  }

  const auto& c1 = rep.components[0];
  const auto& c3 = rep.components[2];
  bool fd_ok = true;
  for (const auto& comp : rep.components) fd_ok = fd_ok && comp.hessian.max_fd_error <= tol.fd;
  rep.passed = c1.kind == "saddle" && !c1.lattice_face && c2.kind == "max" && c2.exposed_by_u && c3.kind == "min" &&
               c3.exposed_by_minus_u && !c3.exposed_by_u && rep.ascents_reaching_max == samples && fd_ok;
  return rep;
}

}  // namespace orbitope::numeric
