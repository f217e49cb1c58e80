#include "orbitope/report.hpp"

#include <Eigen/Cholesky>
#include <fmt/format.h>

#include <sstream>

namespace orbitope::report {

namespace {

std::string subset_label(const RootSubset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

std::string vector_label(const QVector& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) out += (k ? "," : "") + to_string(v(k));
  return out + ")";
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

// Orthonormal coordinates for plotting rank-2 polytopes: L^T y with G = L L^T.
Json plane_coordinates(const FaceClassification& c) {
  Eigen::Matrix2d g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = to_double(c.rs.killing_gram(i, j));
  const Eigen::LLT<Eigen::Matrix2d> llt(g);
  const Eigen::Matrix2d lt = llt.matrixL().transpose();
  Json out = Json::array();
  for (const auto& v : c.polytope.vertices) {
    const Eigen::Vector2d p = lt * to_double(v);
    out.push_back({p(0), p(1)});
  }
  return out;
}

Json table_json(const RootSystem& rs, const IntegralityTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["root"] = Json::array();
    for (Eigen::Index i = 0; i < rs.rank; ++i) row["root"].push_back(rs.positive_coefficients[static_cast<std::size_t>(r.root)](i));
    row["pairing"] = to_string(r.value);
    row["displayed_pairing"] = to_string(r.displayed);
    row["integral"] = r.integral;
    rows.push_back(row);
  }
  return rows;
}

Json hessian_json(const numeric::HessianSignature& h) {
  Json j;
  j["negative"] = h.negative;
  j["positive"] = h.positive;
  j["zero"] = h.zero;
  j["max_fd_error"] = h.max_fd_error;
  return j;
}

}  // namespace

Json subset_json(const RootSubset& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

Json vector_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& s : to_strings(v)) a.push_back(s);
  return a;
}

Json root_system_json(const RootSystem& rs, const WeylGroup& w) {
  Json j;
  j["type"] = std::string(1, rs.type_label);
  j["rank"] = rs.rank;
  j["positive_roots"] = rs.num_positive();
  j["weyl_order"] = w.order();
  j["dim_K"] = rs.group_dimension();
  return j;
}

Json point_json(const ChamberPoint& x) {
  Json j;
  j["coords"] = vector_json(x.coords);
  j["coroot_coords"] = vector_json(x.vector);
  j["singular_set"] = subset_json(x.singular_set);
  j["regular"] = x.is_regular();
  return j;
}

Json polytope_json(const FaceClassification& c, bool detailed) {
  const auto& p = c.polytope;
  Json j;
  j["n_vertices"] = p.vertices.size();
  j["f_vector"] = ints(p.f_vector());
  j["affine_dim"] = p.affine_dim;
  j["n_facets"] = p.facets.size();
  std::vector<int> classes(static_cast<std::size_t>(p.affine_dim + 1), 0);
  for (const auto& o : c.orbits.orbits) ++classes[static_cast<std::size_t>(o.dim)];
  j["face_classes"] = ints(classes);
  j["origin"] = p.origin_note;
  if (detailed) {
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(vector_json(v));
    j["vertices"] = verts;
    Json facets = Json::array();
    for (const auto& f : p.facets) {
      Json fj;
      fj["normal"] = vector_json(f.normal);
      fj["offset"] = to_string(f.offset);
      fj["vertices"] = ints(f.vertices);
      facets.push_back(fj);
    }
    j["facets"] = facets;
    Json orbits = Json::array();
    for (const auto& o : c.orbits.orbits) {
      Json oj;
      oj["dim"] = o.dim;
      oj["size"] = o.members.size();
      oj["representative"] = ints(p.faces[static_cast<std::size_t>(o.representative)].vertices);
      orbits.push_back(oj);
    }
    j["classes"] = orbits;
  }
  if (c.rs.rank == 2) j["vertices_2d"] = plane_coordinates(c);
  return j;
}

Json faces_json(const FaceClassification& c, const StratumPoset& poset, const WeightData* weights) {
  Json faces = Json::array();
  for (std::size_t k = 0; k < c.descriptors.size(); ++k) {
    const auto& d = c.descriptors[k];
    const auto& node = poset.nodes[k];
    Json f;
    f["I"] = subset_json(d.I);
    f["I_prime"] = subset_json(d.I_prime);
    f["J"] = subset_json(d.J);
    f["improper"] = d.improper;
    f["dim_face"] = d.dim_face;
    f["dim_KF"] = d.dim_KF;
    f["dim_KprimeF"] = d.dim_KprimeF;
    f["dim_ZF"] = d.dim_ZF;
    f["dim_stratum"] = node.stratum_dim ? Json(*node.stratum_dim) : Json(nullptr);
    f["dim_base"] = node.stratum_dim ? Json(node.base_dim) : Json(nullptr);
    Json sc;
    const auto& orbit = c.orbits.orbits[static_cast<std::size_t>(d.sigma_orbit)];
    sc["class"] = d.sigma_orbit;
    sc["dim"] = d.sigma.dim;
    sc["size"] = orbit.members.size();
    sc["vertices"] = ints(d.sigma.vertex_indices);
    f["sigma_class"] = sc;
    f["exposing_u"] = d.improper ? Json(nullptr) : vector_json(d.exposing_u);
    const auto par = parabolic_report(c.rs, c.x, d);
    Json pj;
    pj["E"] = subset_json(par.E);
    pj["levi_type"] = par.levi_type;
    pj["nilradical_dim"] = par.nilradical_dim;
    pj["extreme_set"] = par.extreme_set;
    f["parabolic"] = pj;
    if (weights) {
      const auto it = std::find(weights->face_descriptors.begin(), weights->face_descriptors.end(), static_cast<int>(k));
      if (it == weights->face_descriptors.end()) {
        f["integral"] = nullptr;
      } else {
        const auto& fw = weights->face_weights[static_cast<std::size_t>(it - weights->face_descriptors.begin())];
        f["integral"] = fw.table.is_integral;
      }
    }
    faces.push_back(f);
  }
  return faces;
}

Json poset_json(const FaceClassification& c, const StratumPoset& poset) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : poset.nodes) {
    Json nj;
    nj["I"] = subset_json(c.descriptors[static_cast<std::size_t>(n.descriptor)].I);
    nj["top"] = n.top;
    nj["dim_face"] = n.dim_face;
    nj["dim_stratum"] = n.stratum_dim ? Json(*n.stratum_dim) : Json(nullptr);
    nodes.push_back(nj);
  }
  j["dim_K"] = poset.group_dim;
  j["nodes"] = nodes;
  Json order = Json::array();
  for (const auto& [a, b] : poset.order) order.push_back({a, b});
  j["order"] = order;
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers) covers.push_back({a, b});
  j["covers"] = covers;
  return j;
}

Json integrality_json(const FaceClassification& c, const WeightData& w) {
  Json j;
  j["lambda"] = vector_json(w.lambda);
  j["is_integral"] = w.table.is_integral;
  j["pairings"] = table_json(c.rs, w.table);
  Json faces = Json::array();
  for (std::size_t k = 0; k < w.face_weights.size(); ++k) {
    const auto& fw = w.face_weights[k];
    Json f;
    f["I"] = subset_json(fw.I);
    f["x1"] = vector_json(fw.x1);
    f["x0"] = vector_json(fw.x0);
    f["x1_prime"] = vector_json(fw.x1_prime);
    f["integral"] = fw.table.is_integral;
    f["pairings"] = table_json(c.rs, fw.table);
    faces.push_back(f);
  }
  j["faces"] = faces;
  return j;
}

Json numeric_face_json(const FaceClassification& c, const numeric::NumericFaceReport& r) {
  Json j;
  j["I"] = subset_json(c.descriptors[static_cast<std::size_t>(r.descriptor)].I);
  j["samples"] = r.samples;
  j["exact_support"] = r.exact_support;
  j["scale"] = r.scale;
  j["max_commutator"] = r.max_commutator;
  j["max_value_error"] = r.max_value_error;
  j["max_membership_violation"] = r.max_membership_violation;
  j["max_start_excess"] = r.max_start_excess;
  j["max_vertex_distance"] = r.max_vertex_distance;
  j["max_spectral_drift"] = r.max_drift;
  j["max_iterations"] = r.max_iterations;
  j["hessian_at_x"] = hessian_json(r.hessian_at_x);
  j["passed"] = r.passed;
  return j;
}

Json flag_json(const numeric::FlagExampleReport& r) {
  Json j;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["name"] = c.name;
    cj["third_eigenvalue"] = c.third_eigenvalue;
    cj["value"] = c.value;
    cj["kind"] = c.kind;
    cj["hessian"] = hessian_json(c.hessian);
    cj["vertices"] = ints(c.vertices);
    cj["lattice_face"] = c.lattice_face;
    cj["exposed_by_u"] = c.exposed_by_u;
    cj["exposed_by_minus_u"] = c.exposed_by_minus_u;
    comps.push_back(cj);
  }
  j["components"] = comps;
  j["samples"] = r.samples;
  j["ascents_reaching_max"] = r.ascents_reaching_max;
  j["passed"] = r.passed;
  return j;
}

std::string faces_text(const FaceClassification& c, const StratumPoset& poset) {
  std::ostringstream out;
  out << fmt::format("{} at x = {}  |W| = {}  vertices = {}\n", c.rs.name(), vector_label(c.x.coords), c.weyl.order(),
                     c.polytope.vertices.size());
  out << fmt::format("{:<4} {:<12} {:<12} {:<12} {:>5} {:>8} {:>6} {:<12} {:<14}\n", "#", "I", "I'", "J", "dimF",
                     "stratum", "sigma", "Levi", "ext F");
  for (std::size_t k = 0; k < c.descriptors.size(); ++k) {
    const auto& d = c.descriptors[k];
    const auto par = parabolic_report(c.rs, c.x, d);
    const auto& node = poset.nodes[k];
    out << fmt::format("{:<4} {:<12} {:<12} {:<12} {:>5} {:>8} {:>6} {:<12} {:<14}{}\n", k, subset_label(d.I),
                       subset_label(d.I_prime), subset_label(d.J), d.dim_face,
                       node.stratum_dim ? std::to_string(*node.stratum_dim) : "-", d.sigma.dim, par.levi_type,
                       par.extreme_set, d.improper ? "  (whole orbitope)" : "");
  }
  out << fmt::format("proper classes: {}  bijection verified: {}\n", c.proper_descriptors().size(),
                     c.bijection_verified ? "yes" : "no");
  return out.str();
}

std::string polytope_text(const FaceClassification& c) {
  std::ostringstream out;
  const auto& p = c.polytope;
  out << p.origin_note << "\n";
  out << fmt::format("vertices {}  facets {}  affine dim {}\n", p.vertices.size(), p.facets.size(), p.affine_dim);
  const auto f = p.f_vector();
  out << "f-vector:";
  for (int v : f) out << " " << v;
  out << "\nface classes:\n";
  for (const auto& o : c.orbits.orbits)
    out << fmt::format("  dim {}  size {:>4}  representative {}\n", o.dim, o.members.size(),
                       subset_label(p.faces[static_cast<std::size_t>(o.representative)].vertices));
  return out.str();
}

std::string poset_text(const FaceClassification& c, const StratumPoset& poset) {
  std::ostringstream out;
  out << fmt::format("dim K = {}\n", poset.group_dim);
  for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
    const auto& n = poset.nodes[k];
    out << fmt::format("  {:<3} I = {:<12} dim F = {:>3}  dim S = {:>3}\n", k,
                       subset_label(c.descriptors[static_cast<std::size_t>(n.descriptor)].I), n.dim_face,
                       n.stratum_dim ? std::to_string(*n.stratum_dim) : "-");
  }
  out << "covers:";
  for (const auto& [a, b] : poset.covers) out << fmt::format(" {}<{}", a, b);
  out << "\n";
  return out.str();
}

std::string integrality_text(const FaceClassification& c, const WeightData& w) {
  std::ostringstream out;
  out << fmt::format("lambda = {}  integral: {}\n", vector_label(w.lambda), w.table.is_integral ? "yes" : "no");
  for (std::size_t k = 0; k < w.face_weights.size(); ++k) {
    const auto& fw = w.face_weights[k];
    out << fmt::format("  I = {:<12} x1' = {:<20} integral: {}\n", subset_label(fw.I), vector_label(fw.x1_prime),
                       fw.table.is_integral ? "yes" : "no");
  }
  (void)c;
  return out.str();
}

std::string numeric_text(const FaceClassification& c, const std::vector<numeric::NumericFaceReport>& reports,
                         const numeric::FlagExampleReport* flag) {
  std::ostringstream out;
  for (const auto& r : reports)
    out << fmt::format("  I = {:<12} samples {:>3}  |[u,X]| {:.1e}  value err {:.1e}  iters {:>5}  {}\n",
                       subset_label(c.descriptors[static_cast<std::size_t>(r.descriptor)].I), r.samples,
                       r.max_commutator, r.max_value_error, r.max_iterations, r.passed ? "ok" : "FAIL");
  if (flag) {
    for (const auto& comp : flag->components)
      out << fmt::format("  {}  value {:+.6f}  {:<6}  face of P: {}  exposed by u: {}\n", comp.name, comp.value,
                         comp.kind, comp.lattice_face ? "yes" : "no", comp.exposed_by_u ? "yes" : "no");
  }
  return out.str();
}

}  // namespace orbitope::report
