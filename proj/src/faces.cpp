#include "orbitope/faces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orbitope {

namespace {

bool contains(const RootSubset& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

std::string subset_string(const RootSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

}  // namespace

bool is_x_connected(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I) {
  for (const auto& comp : dynkin_components(rs, I)) {
    bool alive = false;
    for (int i : comp)
      if (x.coords(i) != 0) alive = true;
    if (!alive) return false;
  }
  return true;
}

std::vector<RootSubset> x_connected_subsets(const RootSystem& rs, const ChamberPoint& x) {
  std::vector<RootSubset> out;
  const int r = rs.rank;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    RootSubset s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (is_x_connected(rs, x, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const RootSubset& a, const RootSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Saturation saturate(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I) {
  if (!is_x_connected(rs, x, I)) throw InputError("subset " + subset_string(I) + " is not x-connected");
  Saturation s;
  for (int j = 0; j < rs.rank; ++j) {
    if (x.coords(j) != 0 || contains(I, j)) continue;
    bool orthogonal = true;
    for (int i : I)
      if (!simple_roots_orthogonal(rs, i, j)) orthogonal = false;
    if (orthogonal) s.I_prime.push_back(j);
  }
  std::set_union(I.begin(), I.end(), s.I_prime.begin(), s.I_prime.end(), std::back_inserter(s.J));
  return s;
}

RootSubset x_connected_part(const RootSystem& rs, const ChamberPoint& x, const RootSubset& E) {
  RootSubset out;
  for (const auto& comp : dynkin_components(rs, E)) {
    bool alive = false;
    for (int i : comp)
      if (x.coords(i) != 0) alive = true;
    if (alive) out.insert(out.end(), comp.begin(), comp.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

FaceDescriptor make_descriptor(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I) {
  FaceDescriptor d;
  d.I = I;
  const auto sat = saturate(rs, x, I);
  d.I_prime = sat.I_prime;
  d.J = sat.J;
  d.sub_roots_I = positive_roots_in_span(rs, d.I);
  d.sub_roots_Iprime = positive_roots_in_span(rs, d.I_prime);
  d.sub_roots_J = positive_roots_in_span(rs, d.J);
  d.dim_KF = static_cast<int>(d.I.size() + 2 * d.sub_roots_I.size());
  d.dim_KprimeF = static_cast<int>(d.I_prime.size() + 2 * d.sub_roots_Iprime.size());
  d.dim_ZF = rs.rank - static_cast<int>(d.J.size());
  d.dim_face = d.dim_KF;
  d.parabolic_E = d.J;
  d.improper = static_cast<int>(d.J.size()) == rs.rank;
  if (!d.improper) {
    RootSubset rest;
    for (int j = 0; j < rs.rank; ++j)
      if (!contains(d.J, j)) rest.push_back(j);
    d.exposing_u = coweight_sum(rs, rest);
  }
  return d;
}

std::vector<int> FaceClassification::proper_descriptors() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < descriptors.size(); ++k)
    if (!descriptors[k].improper) out.push_back(static_cast<int>(k));
  return out;
}

int FaceClassification::improper_descriptor() const {
  for (std::size_t k = 0; k < descriptors.size(); ++k)
    if (descriptors[k].improper) return static_cast<int>(k);
  return -1;
}

std::vector<int> FaceClassification::proper_orbits() const {
  std::vector<int> out;
  const int top = orbits.orbit_of_face[static_cast<std::size_t>(polytope.top_face())];
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
    if (static_cast<int>(o) != top) out.push_back(static_cast<int>(o));
  return out;
}

FaceClassification classify_faces(const RootSystem& rs, const WeylGroup& w, const ChamberPoint& x,
                                  std::size_t hull_cap) {
  FaceClassification c;
  c.rs = rs;
  c.weyl = w;
  c.x = x;
  const auto orbit = weyl_orbit(w, x);
  c.polytope = hull(orbit, rs.killing_gram, hull_cap);
  c.polytope.origin_note = "conv(W.x) for " + rs.name() + ", x = (" + [&] {
    std::string s;
    for (const auto& t : to_strings(x.coords)) s += (s.empty() ? "" : ",") + t;
    return s;
  }() + ")";
  if (c.polytope.vertices.size() != orbit.size())
    throw TheoremViolation("some Weyl orbit point is not a vertex of its hull");
  c.orbits = act_on_faces(w, c.polytope);
  c.x_vertex = *c.polytope.vertex_index(x.vector);

  for (const auto& I : x_connected_subsets(rs, x)) {
    auto d = make_descriptor(rs, x, I);
    std::vector<int> verts;
    for (auto k : w.parabolic_subgroup(d.J)) verts.push_back(*c.polytope.vertex_index(QVector(w.elements[k] * x.vector)));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const auto id = c.polytope.find_face(verts);
    if (!id) throw TheoremViolation("conv(W_J.x) is not a face of P for J = " + subset_string(d.J));
    d.sigma = describe_face(c.polytope, *id);
    d.sigma_orbit = c.orbits.orbit_of_face[static_cast<std::size_t>(*id)];
    if (d.sigma.dim != static_cast<int>(d.I.size()))
      throw TheoremViolation("face for I = " + subset_string(d.I) + " has dimension " + std::to_string(d.sigma.dim));
    if (d.improper != (*id == c.polytope.top_face()))
      throw TheoremViolation("improper descriptor does not match the whole polytope");
    if (!d.improper && support_set(c.polytope, d.exposing_u).face.id != *id)
      throw TheoremViolation("exposing vector for I = " + subset_string(d.I) + " does not expose sigma");
    c.descriptors.push_back(std::move(d));
  }

  std::set<int> seen_orbits;
  for (int k : c.proper_descriptors())
    if (!seen_orbits.insert(c.descriptors[static_cast<std::size_t>(k)].sigma_orbit).second)
      throw TheoremViolation("two descriptors give conjugate polytope faces");

  const auto proper = c.proper_orbits();
  std::vector<int> hit(c.descriptors.size(), 0);
  for (int o : proper) {
    const auto psi = psi_of_polytope_face(c, c.orbits.orbits[static_cast<std::size_t>(o)].representative);
    if (phi_of_descriptor(c, psi.descriptor) != o) throw TheoremViolation("phi(psi(sigma)) differs from the class of sigma");
    ++hit[static_cast<std::size_t>(psi.descriptor)];
    c.matching.push_back({o, psi.descriptor});
  }
  for (int k : c.proper_descriptors()) {
    if (hit[static_cast<std::size_t>(k)] != 1) throw TheoremViolation("psi is not a bijection onto the proper descriptors");
    const int o = phi_of_descriptor(c, k);
    if (psi_of_polytope_face(c, c.orbits.orbits[static_cast<std::size_t>(o)].representative).descriptor != k)
      throw TheoremViolation("psi(phi(d)) differs from d");
  }
  c.bijection_verified = proper.size() == c.proper_descriptors().size();
  if (!c.bijection_verified) throw TheoremViolation("descriptor and face-class counts differ");
  return c;
}

PsiResult psi_of_polytope_face(const FaceClassification& c, int face_id) {
  const auto& p = c.polytope;
  if (face_id == p.top_face()) throw InputError("psi is defined on proper faces only");
  PsiResult res;
  res.fixed_u = fixed_vector_in_cone(p, face_id, c.weyl, c.orbits.permutations);
  const auto& face = p.faces.at(static_cast<std::size_t>(face_id)).vertices;

  bool found = false;
  for (std::size_t k = 0; k < c.weyl.order() && !found; ++k) {
    const QVector wu = c.weyl.elements[k] * res.fixed_u;
    const QVector vals = simple_root_values(c.rs, wu);
    if ((vals.array() < 0).any()) continue;
    const auto image = apply_permutation(c.orbits.permutations[k], face);
    if (!std::binary_search(image.begin(), image.end(), c.x_vertex)) continue;
    found = true;
    res.conjugator = k;
    res.conjugated_face = *p.find_face(image);

    const auto moved = describe_face(p, res.conjugated_face);
    for (int j = 0; j < c.rs.rank; ++j) {
      bool vanishes = true;
      for (const auto& v : moved.perp_basis)
        if (simple_root_values(c.rs, v)(j) != 0) vanishes = false;
      if (vanishes) res.E.push_back(j);
    }
    const auto I = x_connected_part(c.rs, c.x, res.E);
    const auto J = saturate(c.rs, c.x, I).J;
    RootSubset zeros;
    for (int j = 0; j < c.rs.rank; ++j)
      if (vals(j) == 0) zeros.push_back(j);
    if (zeros != J) throw TheoremViolation("fixed exposing vector does not vanish exactly on the saturation");
    for (std::size_t d = 0; d < c.descriptors.size(); ++d) {
      if (c.descriptors[d].I != I) continue;
      if (c.descriptors[d].sigma.id != res.conjugated_face)
        throw TheoremViolation("conjugated face differs from conv(W_J.x) for I = " + subset_string(I));
      res.descriptor = static_cast<int>(d);
    }
  }
  if (!found) throw TheoremViolation("no Weyl element moves the face into fundamental position");
  if (res.descriptor < 0) throw TheoremViolation("no descriptor matches the face");
  return res;
}

int phi_of_descriptor(const FaceClassification& c, int descriptor) {
  return c.orbits.orbit_of_face.at(static_cast<std::size_t>(c.descriptors.at(static_cast<std::size_t>(descriptor)).sigma.id));
}

std::string extreme_set_type(const RootSystem& rs, const ChamberPoint& x, const RootSubset& I) {
  if (I.empty()) return "point";
  std::string out;
  for (const auto& comp : dynkin_components(rs, I)) {
    RootSubset marks;
    for (int i : comp)
      if (x.coords(i) != 0) marks.push_back(i);
    std::string part;
    const auto path = path_order(rs, comp);
    const int k = static_cast<int>(comp.size());
    if (!path.empty() && marks.size() == 1) {
      const int m = static_cast<int>(std::find(path.begin(), path.end(), marks[0]) - path.begin()) + 1;
      part = m == 1 ? "P^" + std::to_string(k) : "Gr(" + std::to_string(m) + "," + std::to_string(k + 1) + ")";
    } else {
      part = component_type(rs, comp) + "/" + subset_string(marks);
    }
    out += (out.empty() ? "" : "x") + part;
  }
  return out;
}

ParabolicData parabolic_report(const RootSystem& rs, const ChamberPoint& x, const FaceDescriptor& d) {
  ParabolicData p;
  p.E = d.J;
  p.levi_type = subsystem_type(rs, d.J);
  p.levi_positive_roots = static_cast<int>(d.sub_roots_J.size());
  p.nilradical_dim = rs.num_positive() - p.levi_positive_roots;
  p.extreme_set = extreme_set_type(rs, x, d.I);
  p.improper = d.improper;
  return p;
}

}  // namespace orbitope
