#include "orbitope/integrality.hpp"

#include "orbitope/linalg.hpp"

namespace orbitope {

namespace {

void add_row(IntegralityTable& t, int root, const Rational& value_at_x, const Rational& norm) {
  PairingRow row;
  row.root = root;
  row.value = 2 * value_at_x / norm;
  row.displayed = value_at_x / norm;
  row.integral = is_integer(row.value);
  if (!row.integral) t.is_integral = false;
  t.rows.push_back(row);
}

}  // namespace

IntegralityTable check_integral(const RootSystem& rs, const ChamberPoint& x) {
  IntegralityTable t;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const QVector a = rs.positive_functionals.row(k).transpose();
    add_row(t, k, a.dot(x.vector), root_norm_squared(rs, a));
  }
  return t;
}

FaceWeight induce_face_weight(const RootSystem& rs, const ChamberPoint& x, const FaceDescriptor& d) {
  if (d.I.empty()) throw InputError("vertex faces carry the trivial group K_F");
  FaceWeight fw;
  fw.I = d.I;
  const auto r = static_cast<Eigen::Index>(rs.rank);
  const auto m = static_cast<Eigen::Index>(d.I.size());

  auto span_of = [&](const RootSubset& s) {
    QMatrix b = QMatrix::Zero(r, static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k) b(s[k], static_cast<Eigen::Index>(k)) = 1;
    return b;
  };
  fw.x1 = linalg::project(span_of(d.I), rs.killing_gram, x.vector);
  const QVector xi = linalg::project(span_of(d.I_prime), rs.killing_gram, x.vector);
  if (!xi.isZero()) throw TheoremViolation("x has a component along t cap k'_F");
  fw.x0 = x.vector - fw.x1;
  const QVector on_j = simple_root_values(rs, fw.x0);
  for (int j : d.J)
    if (on_j(j) != 0) throw TheoremViolation("x - x1 is not central in h_J");

  // Restrictions of the roots of Delta_I to span{h_i : i in I}.
  std::vector<QVector> restricted;
  fw.sub_gram = QMatrix::Zero(m, m);
  for (int k : d.sub_roots_I) {
    QVector a(m);
    for (Eigen::Index i = 0; i < m; ++i) a(i) = rs.positive_functionals(k, d.I[static_cast<std::size_t>(i)]);
    fw.sub_gram += 2 * a * a.transpose();
    restricted.push_back(a);
  }
  const auto sub_inv = linalg::inverse(fw.sub_gram);
  if (!sub_inv) throw TheoremViolation("Killing form of k_F is degenerate");
  QVector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) rhs(i) = x.coords(d.I[static_cast<std::size_t>(i)]);
  fw.x1_prime = (*sub_inv) * rhs;

  for (std::size_t k = 0; k < restricted.size(); ++k) {
    const auto& a = restricted[k];
    add_row(fw.table, d.sub_roots_I[k], a.dot(fw.x1_prime), a.dot((*sub_inv) * a));
  }
  return fw;
}

WeightData weight_data(const FaceClassification& c) {
  WeightData w;
  w.lambda = c.x.coords;
  w.table = check_integral(c.rs, c.x);
  for (std::size_t k = 0; k < c.descriptors.size(); ++k) {
    if (c.descriptors[k].I.empty()) continue;
    w.face_descriptors.push_back(static_cast<int>(k));
    w.face_weights.push_back(induce_face_weight(c.rs, c.x, c.descriptors[k]));
  }
  return w;
}

}  // namespace orbitope
