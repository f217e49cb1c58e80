#include "orbitope/polytope.hpp"

#include "orbitope/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace orbitope {

namespace {

using Bits = boost::dynamic_bitset<>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Scales a ray to the primitive integer vector on the same half-line.
void make_primitive(QVector& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v(i)));
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Integer n = boost::multiprecision::numerator(v(i)) * (l / boost::multiprecision::denominator(v(i)));
    g = boost::multiprecision::gcd(g, n);
  }
  if (g == 0) return;
  const Rational scale(l, g);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= scale;
}

struct Ray {
  QVector z;
  Bits tight;
};

struct RawFacet {
  QVector functional;  // a with a.(z - c) <= 1
  std::vector<int> tight;
};

// Facets of the full-dimensional hull of the columns of z (k x n), found as the
// vertices of the polar {a : a.(z_i - c) <= 1} by the double-description method
// on the homogenized cone {(a, t) : t - a.(z_i - c) >= 0}.
std::vector<RawFacet> enumerate_facets(const QMatrix& z, QVector& centroid) {
  const Eigen::Index k = z.rows();
  const int n = static_cast<int>(z.cols());
  const Eigen::Index d = k + 1;
  centroid = z.rowwise().sum() / Rational(n);

  QMatrix rows(n, d);
  for (int i = 0; i < n; ++i) {
    rows.row(i).head(k) = -(z.col(i) - centroid).transpose();
    rows(i, k) = 1;
  }

  const auto basis_rows = linalg::independent_columns(QMatrix(rows.transpose()));
  if (static_cast<Eigen::Index>(basis_rows.size()) != d)
    throw std::logic_error("enumerate_facets: points are not full-dimensional");
  QMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) m.row(j) = rows.row(basis_rows[static_cast<std::size_t>(j)]);
  const QMatrix minv = *linalg::inverse(m);

  std::vector<Ray> rays;
  for (Eigen::Index l = 0; l < d; ++l) {
    Ray r{minv.col(l), Bits(static_cast<std::size_t>(n))};
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != l) r.tight.set(static_cast<std::size_t>(basis_rows[static_cast<std::size_t>(j)]));
    make_primitive(r.z);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(static_cast<std::size_t>(n), false);
  for (auto b : basis_rows) processed[static_cast<std::size_t>(b)] = true;

  for (int i = 0; i < n; ++i) {
    if (processed[static_cast<std::size_t>(i)]) continue;
    processed[static_cast<std::size_t>(i)] = true;
    const auto h = rows.row(i);
    std::vector<Rational> vals(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = h.dot(rays[r].z);
      if (vals[r] > 0) plus.push_back(r);
      else if (vals[r] < 0) minus.push_back(r);
      else zero.push_back(r);
    }
    for (auto r : zero) rays[r].tight.set(static_cast<std::size_t>(i));
    if (minus.empty()) continue;

    std::vector<Ray> next;
    next.reserve(plus.size() + zero.size());
    for (auto r : plus) next.push_back(rays[r]);
    for (auto r : zero) next.push_back(rays[r]);
    for (auto p : plus) {
      for (auto q : minus) {
        const Bits common = rays[p].tight & rays[q].tight;
        if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{QVector(vals[p] * rays[q].z - vals[q] * rays[p].z), common};
        nr.tight.set(static_cast<std::size_t>(i));
        make_primitive(nr.z);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<RawFacet> facets;
  for (const auto& r : rays) {
    const Rational t = r.z(k);
    if (t <= 0) throw std::logic_error("enumerate_facets: unbounded polar, hull is degenerate");
    RawFacet f;
    f.functional = r.z.head(k) / t;
    for (int i = 0; i < n; ++i)
      if (r.tight.test(static_cast<std::size_t>(i))) f.tight.push_back(i);
    facets.push_back(std::move(f));
  }
  return facets;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int affine_rank(const std::vector<int>& ids, const QMatrix& z) {
  if (ids.size() <= 1 || z.rows() == 0) return 0;
  QMatrix diffs(z.rows(), static_cast<Eigen::Index>(ids.size() - 1));
  for (std::size_t j = 1; j < ids.size(); ++j) diffs.col(static_cast<Eigen::Index>(j - 1)) = z.col(ids[j]) - z.col(ids[0]);
  return static_cast<int>(linalg::rank(diffs));
}

}  // namespace

std::optional<int> ExactPolytope::find_face(const std::vector<int>& sorted_vertices) const {
  const auto it = face_index.find(sorted_vertices);
  if (it == face_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ExactPolytope::vertex_index(const QVector& p) const {
  const auto it = vertex_lookup.find(p);
  if (it == vertex_lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ExactPolytope::f_vector() const {
  std::vector<int> f;
  for (const auto& level : levels) f.push_back(static_cast<int>(level.size()));
  return f;
}

ExactPolytope hull(const std::vector<QVector>& points) {
  if (points.empty()) throw InputError("hull of an empty point set");
  const auto r = points.front().size();
  return hull(points, QMatrix::Identity(r, r));
}

ExactPolytope hull(const std::vector<QVector>& input, const QMatrix& gram, std::size_t cap) {
  if (input.empty()) throw InputError("hull of an empty point set");
  if (input.size() > cap)
    throw InputError("hull: " + std::to_string(input.size()) + " points exceed the cap of " + std::to_string(cap));

  std::vector<QVector> pts;
  {
    std::set<QVector, LexLess> seen;
    for (const auto& p : input)
      if (seen.insert(p).second) pts.push_back(p);
  }
  const Eigen::Index r = pts.front().size();
  const int n = static_cast<int>(pts.size());

  // Affine hull: basis of the difference vectors and affine coordinates.
  QMatrix diffs(r, std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) diffs.col(i - 1) = pts[static_cast<std::size_t>(i)] - pts[0];
  const auto indep = linalg::independent_columns(diffs);
  const Eigen::Index k = static_cast<Eigen::Index>(indep.size());
  QMatrix basis(r, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = diffs.col(indep[static_cast<std::size_t>(j)]);

  QMatrix z(k, n);
  QMatrix normal_inv;  // (B^T G B)^{-1}
  if (k > 0) {
    const QMatrix btb = basis.transpose() * basis;
    const QMatrix left = (*linalg::inverse(btb)) * basis.transpose();
    for (int i = 0; i < n; ++i) z.col(i) = left * (pts[static_cast<std::size_t>(i)] - pts[0]);
    normal_inv = *linalg::inverse(QMatrix(basis.transpose() * gram * basis));
  }

  ExactPolytope poly;
  poly.ambient_dim = static_cast<int>(r);
  poly.affine_dim = static_cast<int>(k);
  poly.gram = gram;

  std::vector<RawFacet> raw;
  QVector centroid;
  if (k > 0) raw = enumerate_facets(z, centroid);

  // Extreme points: those cut out exactly by the facets through them.
  std::vector<int> keep;
  if (k == 0) {
    keep.push_back(0);
  } else {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t f = 0; f < raw.size(); ++f)
      for (int v : raw[f].tight) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    for (int i = 0; i < n; ++i) {
      const auto& inc = incident[static_cast<std::size_t>(i)];
      if (inc.empty()) continue;
      std::vector<int> meet = raw[static_cast<std::size_t>(inc[0])].tight;
      for (std::size_t j = 1; j < inc.size(); ++j) meet = intersect(meet, raw[static_cast<std::size_t>(inc[j])].tight);
      if (meet.size() == 1) keep.push_back(i);
    }
  }
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < keep.size(); ++j) new_index[static_cast<std::size_t>(keep[j])] = static_cast<int>(j);
  QMatrix zk(k, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    poly.vertices.push_back(pts[static_cast<std::size_t>(keep[j])]);
    poly.vertex_lookup.emplace(poly.vertices.back(), static_cast<int>(j));
    zk.col(static_cast<Eigen::Index>(j)) = z.col(keep[j]);
  }

  for (const auto& f : raw) {
    Facet facet;
    for (int v : f.tight)
      if (new_index[static_cast<std::size_t>(v)] >= 0) facet.vertices.push_back(new_index[static_cast<std::size_t>(v)]);
    facet.normal = basis * (normal_inv * f.functional);
    facet.offset = poly.pairing(pts[0], facet.normal) + 1 + f.functional.dot(centroid);
    poly.facets.push_back(std::move(facet));
  }
  std::sort(poly.facets.begin(), poly.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });

  // Face lattice: close the facets under intersection, then add the top face.
  std::set<std::vector<int>> lattice;
  std::deque<std::vector<int>> queue;
  for (const auto& f : poly.facets)
    if (lattice.insert(f.vertices).second) queue.push_back(f.vertices);
  while (!queue.empty()) {
    const auto face = queue.front();
    queue.pop_front();
    for (const auto& f : poly.facets) {
      auto meet = intersect(face, f.vertices);
      if (meet.empty()) continue;
      if (lattice.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<int> all(poly.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  lattice.insert(all);

  for (const auto& verts : lattice) {
    FaceRecord rec;
    rec.vertices = verts;
    rec.dim = affine_rank(verts, zk);
    poly.faces.push_back(std::move(rec));
  }
  std::sort(poly.faces.begin(), poly.faces.end(), [](const FaceRecord& a, const FaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  poly.levels.assign(static_cast<std::size_t>(k + 1), {});
  for (std::size_t id = 0; id < poly.faces.size(); ++id) {
    poly.face_index.emplace(poly.faces[id].vertices, static_cast<int>(id));
    poly.levels[static_cast<std::size_t>(poly.faces[id].dim)].push_back(static_cast<int>(id));
  }
  for (std::size_t d = 0; d + 1 < poly.levels.size(); ++d) {
    for (int lo : poly.levels[d]) {
      for (int hi : poly.levels[d + 1]) {
        const auto& a = poly.faces[static_cast<std::size_t>(lo)].vertices;
        const auto& b = poly.faces[static_cast<std::size_t>(hi)].vertices;
        if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          poly.faces[static_cast<std::size_t>(lo)].parents.push_back(hi);
          poly.faces[static_cast<std::size_t>(hi)].children.push_back(lo);
        }
      }
    }
  }
  return poly;
}

PolytopeFace describe_face(const ExactPolytope& p, int face_id) {
  const auto& rec = p.faces.at(static_cast<std::size_t>(face_id));
  PolytopeFace face;
  face.id = face_id;
  face.vertex_indices = rec.vertices;
  face.dim = rec.dim;
  const auto r = static_cast<Eigen::Index>(p.ambient_dim);
  QMatrix diffs(r, static_cast<Eigen::Index>(rec.vertices.size()) - 1);
  for (std::size_t j = 1; j < rec.vertices.size(); ++j)
    diffs.col(static_cast<Eigen::Index>(j - 1)) =
        p.vertices[static_cast<std::size_t>(rec.vertices[j])] - p.vertices[static_cast<std::size_t>(rec.vertices[0])];
  QMatrix dir(r, 0);
  if (diffs.cols() > 0) {
    const auto cols = linalg::independent_columns(diffs);
    dir.resize(r, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) dir.col(static_cast<Eigen::Index>(j)) = diffs.col(cols[j]);
  }
  for (Eigen::Index j = 0; j < dir.cols(); ++j) face.direction_basis.push_back(dir.col(j));
  const QMatrix perp = linalg::orthogonal_complement(dir, p.gram);
  for (Eigen::Index j = 0; j < perp.cols(); ++j) face.perp_basis.push_back(perp.col(j));
  return face;
}

SupportResult support_set(const ExactPolytope& p, const QVector& u) {
  if (u.isZero()) throw InputError("exposed faces require nonzero u");
  const QVector gu = p.gram * u;
  std::vector<int> argmax;
  Rational best = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Rational v = p.vertices[i].dot(gu);
    if (argmax.empty() || v > best) {
      best = v;
      argmax.assign(1, static_cast<int>(i));
    } else if (v == best) {
      argmax.push_back(static_cast<int>(i));
    }
  }
  const auto id = p.find_face(argmax);
  if (!id) throw TheoremViolation("support set is not a face of the computed lattice");
  return {describe_face(p, *id), best};
}

std::vector<std::vector<int>> vertex_permutations(const WeylGroup& w, const ExactPolytope& p) {
  std::vector<std::vector<int>> perms;
  perms.reserve(w.order());
  for (const auto& m : w.elements) {
    std::vector<int> perm(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      const auto j = p.vertex_index(QVector(m * p.vertices[i]));
      if (!j) throw InputError("vertex set is not stable under the Weyl group");
      perm[i] = *j;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::vector<int> apply_permutation(const std::vector<int>& perm, const std::vector<int>& face) {
  std::vector<int> out;
  out.reserve(face.size());
  for (int v : face) out.push_back(perm[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FaceOrbits::orbits_of_dim(int d) const {
  std::vector<int> out;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (orbits[o].dim == d) out.push_back(static_cast<int>(o));
  return out;
}

FaceOrbits act_on_faces(const WeylGroup& w, const ExactPolytope& p) {
  FaceOrbits result;
  result.permutations = vertex_permutations(w, p);
  result.orbit_of_face.assign(p.faces.size(), -1);
  for (std::size_t id = 0; id < p.faces.size(); ++id) {
    if (result.orbit_of_face[id] >= 0) continue;
    FaceOrbit orbit;
    orbit.representative = static_cast<int>(id);
    orbit.dim = p.faces[id].dim;
    std::set<int> members;
    for (const auto& perm : result.permutations) {
      const auto image = p.find_face(apply_permutation(perm, p.faces[id].vertices));
      if (!image) throw TheoremViolation("Weyl image of a face is not a face");
      members.insert(*image);
    }
    orbit.members.assign(members.begin(), members.end());
    for (int m : orbit.members) result.orbit_of_face[static_cast<std::size_t>(m)] = static_cast<int>(result.orbits.size());
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

Stabilizer face_stabilizer(const ExactPolytope& p, int face_id, const WeylGroup& w,
                           const std::vector<std::vector<int>>& perms) {
  Stabilizer s;
  const auto& face = p.faces.at(static_cast<std::size_t>(face_id)).vertices;
  const auto r = static_cast<Eigen::Index>(p.ambient_dim);
  QMatrix constraints(0, r);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (apply_permutation(perms[k], face) != face) continue;
    s.elements.push_back(k);
    const QMatrix diff = w.elements[k] - QMatrix::Identity(r, r);
    QMatrix stacked(constraints.rows() + r, r);
    stacked << constraints, diff;
    constraints = linalg::reduced_row_echelon(stacked).reduced.topRows(std::min<Eigen::Index>(stacked.rows(), r));
  }
  const QMatrix fixed = linalg::nullspace(constraints);
  for (Eigen::Index j = 0; j < fixed.cols(); ++j) s.fixed_subspace.push_back(fixed.col(j));
  return s;
}

Stabilizer face_stabilizer(const ExactPolytope& p, int face_id, const WeylGroup& w) {
  return face_stabilizer(p, face_id, w, vertex_permutations(w, p));
}

QVector facet_normal_sum(const ExactPolytope& p, int face_id) {
  const auto& face = p.faces.at(static_cast<std::size_t>(face_id)).vertices;
  QVector u = QVector::Zero(p.ambient_dim);
  for (const auto& f : p.facets)
    if (std::includes(f.vertices.begin(), f.vertices.end(), face.begin(), face.end())) u += f.normal;
  return u;
}

QVector fixed_vector_in_cone(const ExactPolytope& p, int face_id, const WeylGroup& w,
                             const std::vector<std::vector<int>>& perms) {
  if (face_id == p.top_face()) throw InputError("the whole polytope is not exposed by any nonzero vector");
  const QVector base = facet_normal_sum(p, face_id);
  const auto stab = face_stabilizer(p, face_id, w, perms);
  QVector u = QVector::Zero(p.ambient_dim);
  for (auto k : stab.elements) u += w.elements[k] * base;
  u /= Rational(static_cast<long>(stab.elements.size()));
  if (support_set(p, u).face.id != face_id)
    throw TheoremViolation("averaged normal-cone vector does not expose the face");
  return u;
}

QVector fixed_vector_in_cone(const ExactPolytope& p, int face_id, const WeylGroup& w) {
  return fixed_vector_in_cone(p, face_id, w, vertex_permutations(w, p));
}

}  // namespace orbitope
