#include "orbitope/strata.hpp"

#include <algorithm>
#include <string>

namespace orbitope {

StratumDims stratum_dim(const RootSystem& rs, const FaceDescriptor& d) {
  if (d.improper) throw InputError("stratum dimension is defined for proper faces only");
  StratumDims s;
  s.stratum_dim = rs.group_dimension() - d.dim_KprimeF - d.dim_ZF;
  s.dim_face = d.dim_KF;
  s.base_dim = rs.group_dimension() - (rs.rank + 2 * static_cast<int>(d.sub_roots_J.size()));
  return s;
}

bool StratumPoset::less(int a, int b) const {
  return std::binary_search(order.begin(), order.end(), std::make_pair(a, b));
}

StratumPoset build_poset(const FaceClassification& c) {
  StratumPoset p;
  p.group_dim = c.rs.group_dimension();
  std::vector<int> ids;
  for (int k : c.proper_descriptors()) ids.push_back(k);
  ids.push_back(c.improper_descriptor());
  const int n = static_cast<int>(ids.size());
  for (int k : ids) {
    const auto& d = c.descriptors[static_cast<std::size_t>(k)];
    StratumNode node;
    node.descriptor = k;
    node.top = d.improper;
    node.dim_face = d.dim_face;
    if (!d.improper) {
      const auto s = stratum_dim(c.rs, d);
      node.stratum_dim = s.stratum_dim;
      node.base_dim = s.base_dim;
    }
    p.nodes.push_back(node);
  }

  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a) {
    const auto& da = c.descriptors[static_cast<std::size_t>(ids[static_cast<std::size_t>(a)])];
    const auto& members = c.orbits.orbits[static_cast<std::size_t>(da.sigma_orbit)].members;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& target = c.descriptors[static_cast<std::size_t>(ids[static_cast<std::size_t>(b)])].sigma.vertex_indices;
      for (int m : members) {
        const auto& verts = c.polytope.faces[static_cast<std::size_t>(m)].vertices;
        if (std::includes(target.begin(), target.end(), verts.begin(), verts.end())) {
          rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
          break;
        }
      }
    }
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rel[a][k] && rel[k][b] && a != b) rel[a][b] = true;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      if (rel[b][a]) throw TheoremViolation("face-type order is not antisymmetric");
      p.order.emplace_back(a, b);
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (rel[a][k] && rel[k][b]) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

void check_stratification(const FaceClassification& c, const StratumPoset& poset) {
  for (const auto& [a, b] : poset.order) {
    const auto& na = poset.nodes[static_cast<std::size_t>(a)];
    const auto& nb = poset.nodes[static_cast<std::size_t>(b)];
    if (na.dim_face >= nb.dim_face) throw TheoremViolation("face dimension does not increase along the order");
    if (na.stratum_dim && nb.stratum_dim && *na.stratum_dim >= *nb.stratum_dim)
      throw TheoremViolation("stratum dimension does not increase along the order");
  }
  for (const auto& d : c.descriptors) {
    const int total = d.dim_ZF + d.dim_KF + d.dim_KprimeF +
                      2 * (c.rs.num_positive() - static_cast<int>(d.sub_roots_J.size()));
    if (total != c.rs.group_dimension())
      throw TheoremViolation("dimension bookkeeping fails for a face with |J| = " + std::to_string(d.J.size()));
  }
}

}  // namespace orbitope
