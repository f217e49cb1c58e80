#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the hull, face or Weyl-group code under test.

#include "orbitope/rational.hpp"
#include "orbitope/root_system.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using orbitope::QMatrix;
using orbitope::QVector;
using orbitope::Rational;

// Determinant by Gaussian elimination over Q.
inline Rational det(QMatrix a) {
  const auto n = a.rows();
  Rational d = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      d = -d;
    }
    d *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

inline int rank(QMatrix a) {
  int r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(r));
    for (Eigen::Index q = 0; q < a.rows(); ++q) {
      if (q == r || a(q, c) == 0) continue;
      const Rational f = a(q, c) / a(r, c);
      a.row(q) -= f * a.row(r);
    }
    ++r;
  }
  return r;
}

// Facets of the hull of full-dimensional points in Q^k: every k-subset that
// spans a hyperplane with all points on one side. Facets are given by their
// tight vertex sets. Exponential; only for small inputs.
inline std::set<std::vector<int>> brute_facets(const std::vector<QVector>& pts) {
  const int n = static_cast<int>(pts.size());
  const auto k = pts.front().size();
  std::set<std::vector<int>> facets;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) idx.push_back(i);
    QMatrix m(k - 1, k);
    for (Eigen::Index r = 1; r < k; ++r) m.row(r - 1) = (pts[idx[r]] - pts[idx[0]]).transpose();
    QVector normal(k);
    for (Eigen::Index c = 0; c < k; ++c) {
      QMatrix minor(k - 1, k - 1);
      for (Eigen::Index r = 0; r < k - 1; ++r) {
        Eigen::Index cc = 0;
        for (Eigen::Index j = 0; j < k; ++j)
          if (j != c) minor(r, cc++) = m(r, j);
      }
      normal(c) = ((c % 2) ? -1 : 1) * det(minor);
    }
    if (normal.isZero()) continue;
    const Rational level = normal.dot(pts[idx[0]]);
    bool above = false, below = false;
    std::vector<int> tight;
    for (int i = 0; i < n; ++i) {
      const Rational v = normal.dot(pts[static_cast<std::size_t>(i)]);
      if (v > level) above = true;
      else if (v < level) below = true;
      else tight.push_back(i);
    }
    if (!(above && below)) facets.insert(tight);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return facets;
}

// Faces as intersections of facets, together with the whole point set, and
// their dimensions. Returns counts per dimension.
inline std::vector<int> brute_f_vector(const std::vector<QVector>& pts) {
  const auto facets = brute_facets(pts);
  std::set<std::vector<int>> faces(facets.begin(), facets.end());
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<std::vector<int>> current(faces.begin(), faces.end());
    for (const auto& a : current)
      for (const auto& f : facets) {
        std::vector<int> meet;
        std::set_intersection(a.begin(), a.end(), f.begin(), f.end(), std::back_inserter(meet));
        if (!meet.empty() && faces.insert(meet).second) grown = true;
      }
  }
  const auto k = pts.front().size();
  std::vector<int> f(static_cast<std::size_t>(k + 1), 0);
  for (const auto& face : faces) {
    QMatrix d(static_cast<Eigen::Index>(face.size()) - 1, k);
    for (std::size_t j = 1; j < face.size(); ++j)
      d.row(static_cast<Eigen::Index>(j - 1)) = (pts[static_cast<std::size_t>(face[j])] - pts[static_cast<std::size_t>(face[0])]).transpose();
    ++f[static_cast<std::size_t>(face.size() == 1 ? 0 : rank(d))];
  }
  ++f[static_cast<std::size_t>(k)];
  return f;
}

// Killing Gram on the simple coroots computed in the ambient realization:
// alpha(h_i) = 2 (alpha, alpha_i) / (alpha_i, alpha_i), summed over +-alpha.
inline QMatrix ambient_killing_gram(const orbitope::RootSystem& rs) {
  const int r = rs.rank;
  QMatrix g = QMatrix::Zero(r, r);
  for (const auto& a : rs.positive_roots) {
    QVector vals(r);
    for (int i = 0; i < r; ++i) {
      const auto& s = rs.simple_roots[static_cast<std::size_t>(i)];
      vals(i) = 2 * a.dot(s) / s.dot(s);
    }
    g += 2 * vals * vals.transpose();
  }
  return g;
}

inline long classical_weyl_order(char type, int n) {
  auto fact = [](int m) {
    long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1L << n) * fact(n);
    case 'D': return (1L << (n - 1)) * fact(n);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  }
  return 0;
}

inline int classical_positive_roots(char type, int n) {
  switch (type) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'G': return 6;
    case 'F': return 24;
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

// CP^n orbitope: the face for an m-dimensional subspace W is the set of
// trace-one positive operators on W (dimension m^2 - 1), and W ranges over
// Gr(m, n+1) (dimension 2m(n+1-m)).
inline int projective_stratum_dim(int n, int m) { return 2 * m * (n + 1) - m * m - 1; }

}  // namespace oracle
