#include "orbitope/root_system.hpp"

#include "orbitope/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orbitope {

namespace {

QVector ambient(std::initializer_list<Rational> entries) {
  QVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

QVector e_minus_e(int dim, int i, int j) {
  QVector v = QVector::Zero(dim);
  v(i) = 1;
  v(j) = -1;
  return v;
}

// Bourbaki simple roots of E8 in R^8; E6 and E7 are the first 6 / 7.
std::vector<QVector> e8_simple_roots() {
  const Rational h(1, 2);
  std::vector<QVector> s;
  s.push_back(ambient({h, -h, -h, -h, -h, -h, -h, h}));
  s.push_back(ambient({1, 1, 0, 0, 0, 0, 0, 0}));
  for (int i = 0; i < 6; ++i) s.push_back(e_minus_e(8, i + 1, i));
  return s;
}

std::vector<QVector> ambient_simple_roots(char type, int n) {
  std::vector<QVector> s;
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(e_minus_e(n + 1, i, i + 1));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_minus_e(n, i, i + 1));
      s.push_back(unit_vector(n, n - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_minus_e(n, i, i + 1));
      s.push_back(QVector(2 * unit_vector(n, n - 1)));
      break;
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_minus_e(n, i, i + 1));
      QVector last = QVector::Zero(n);
      last(n - 2) = 1;
      last(n - 1) = 1;
      s.push_back(last);
      break;
    }
    case 'E': {
      auto e8 = e8_simple_roots();
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case 'F': {
      const Rational h(1, 2);
      s.push_back(ambient({0, 1, -1, 0}));
      s.push_back(ambient({0, 0, 1, -1}));
      s.push_back(ambient({0, 0, 0, 1}));
      s.push_back(ambient({h, -h, -h, -h}));
      break;
    }
    case 'G':
      s.push_back(ambient({1, -1, 0}));
      s.push_back(ambient({-2, 1, 1}));
      break;
    default:
      break;
  }
  return s;
}

void validate_pair(char type, int rank) {
  const std::string label = std::string(1, type) + std::to_string(rank);
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw InputError("unknown root system type '" + std::string(1, type) + "' (expected one of A-G)");
  }
  if (!ok || rank > 8) throw InputError("invalid root system " + label);
}

int height(const Eigen::VectorXi& c) { return c.sum(); }

}  // namespace

RootSystem build_root_system(char type_label, int rank) {
  validate_pair(type_label, rank);
  RootSystem rs;
  rs.type_label = type_label;
  rs.rank = rank;
  rs.simple_roots = ambient_simple_roots(type_label, rank);

  rs.cartan_matrix.resize(rank, rank);
  for (int i = 0; i < rank; ++i) {
    const Rational ii = rs.simple_roots[i].dot(rs.simple_roots[i]);
    for (int j = 0; j < rank; ++j) {
      const Rational v = 2 * rs.simple_roots[i].dot(rs.simple_roots[j]) / ii;
      rs.cartan_matrix(i, j) = static_cast<int>(boost::multiprecision::numerator(v).convert_to<long>());
    }
  }

  // Close the simple roots under simple reflections s_i(b) = b - b(h_i) alpha_i.
  auto key = [](const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); };
  std::set<std::vector<int>> seen;
  std::vector<Eigen::VectorXi> frontier;
  for (int i = 0; i < rank; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(rank);
    e(i) = 1;
    seen.insert(key(e));
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const auto& b : frontier) {
      const Eigen::VectorXi values = rs.cartan_matrix * b;
      for (int i = 0; i < rank; ++i) {
        Eigen::VectorXi r = b;
        r(i) -= values(i);
        if (seen.insert(key(r)).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& k : seen) {
    Eigen::VectorXi c = Eigen::Map<const Eigen::VectorXi>(k.data(), rank);
    if ((c.array() >= 0).all()) rs.positive_coefficients.push_back(c);
  }
  std::sort(rs.positive_coefficients.begin(), rs.positive_coefficients.end(),
            [&](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
              if (height(a) != height(b)) return height(a) < height(b);
              return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
            });

  const auto dim = rs.simple_roots.front().size();
  for (const auto& c : rs.positive_coefficients) {
    QVector v = QVector::Zero(dim);
    for (int j = 0; j < rank; ++j) v += Rational(c(j)) * rs.simple_roots[j];
    rs.positive_roots.push_back(v);
  }

  rs.positive_functionals.resize(rs.num_positive(), rank);
  for (int k = 0; k < rs.num_positive(); ++k)
    rs.positive_functionals.row(k) = root_functional(rs, rs.positive_coefficients[k]).transpose();

  rs.killing_gram = QMatrix(2 * rs.positive_functionals.transpose() * rs.positive_functionals);
  auto inv = linalg::inverse(rs.killing_gram);
  if (!inv) throw std::logic_error("Killing form is degenerate for " + rs.name());
  rs.killing_gram_inverse = *inv;
  return rs;
}

Rational killing_pairing(const RootSystem& rs, const QVector& h1, const QVector& h2) {
  Rational total = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Rational a = rs.positive_functionals.row(k).dot(h1);
    const Rational b = rs.positive_functionals.row(k).dot(h2);
    total += a * b;
  }
  // alpha and -alpha contribute equally.
  return 2 * total;
}

QVector simple_root_values(const RootSystem& rs, const QVector& h) {
  QVector out(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i) s += Rational(rs.cartan_matrix(i, j)) * h(i);
    out(j) = s;
  }
  return out;
}

QVector root_functional(const RootSystem& rs, const Eigen::VectorXi& coefficients) {
  QVector a(rs.rank);
  const Eigen::VectorXi v = rs.cartan_matrix * coefficients;
  for (int i = 0; i < rs.rank; ++i) a(i) = v(i);
  return a;
}

QVector coweight_sum(const RootSystem& rs, const RootSubset& subset) {
  QMatrix ct(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) ct(j, i) = rs.cartan_matrix(i, j);
  QVector rhs = QVector::Zero(rs.rank);
  for (int j : subset) rhs(j) = 1;
  const auto inv = linalg::inverse(ct);
  return (*inv) * rhs;
}

Rational root_norm_squared(const RootSystem& rs, const QVector& functional) {
  return functional.dot(rs.killing_gram_inverse * functional);
}

bool simple_roots_orthogonal(const RootSystem& rs, int i, int j) {
  return i != j && rs.cartan_matrix(i, j) == 0;
}

std::vector<RootSubset> dynkin_components(const RootSystem& rs, const RootSubset& subset) {
  std::vector<RootSubset> comps;
  std::set<int> remaining(subset.begin(), subset.end());
  while (!remaining.empty()) {
    RootSubset comp;
    std::vector<int> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (rs.cartan_matrix(v, *it) != 0) {
          stack.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> positive_roots_in_span(const RootSystem& rs, const RootSubset& subset) {
  std::vector<bool> allowed(static_cast<std::size_t>(rs.rank), false);
  for (int i : subset) allowed[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  for (int k = 0; k < rs.num_positive(); ++k) {
    bool inside = true;
    for (int j = 0; j < rs.rank; ++j)
      if (rs.positive_coefficients[k](j) != 0 && !allowed[static_cast<std::size_t>(j)]) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

namespace {

int degree(const RootSystem& rs, const RootSubset& comp, int v) {
  int d = 0;
  for (int w : comp)
    if (w != v && rs.cartan_matrix(v, w) != 0) ++d;
  return d;
}

int arm_length(const RootSystem& rs, const RootSubset& comp, int from, int start) {
  int len = 0;
  int prev = from;
  int cur = start;
  while (cur >= 0) {
    ++len;
    int next = -1;
    for (int w : comp)
      if (w != cur && w != prev && rs.cartan_matrix(cur, w) != 0) next = w;
    prev = cur;
    cur = next;
  }
  return len;
}

}  // namespace

RootSubset path_order(const RootSystem& rs, const RootSubset& component) {
  if (component.size() == 1) return component;
  for (int v : component)
    if (degree(rs, component, v) > 2) return {};
  for (std::size_t a = 0; a < component.size(); ++a)
    for (std::size_t b = a + 1; b < component.size(); ++b)
      if (rs.cartan_matrix(component[a], component[b]) * rs.cartan_matrix(component[b], component[a]) > 1)
        return {};
  int start = -1;
  for (int v : component)
    if (degree(rs, component, v) == 1) {
      start = v;
      break;
    }
  RootSubset order;
  int prev = -1;
  int cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    int next = -1;
    for (int w : component)
      if (w != cur && w != prev && rs.cartan_matrix(cur, w) != 0) next = w;
    prev = cur;
    cur = next;
  }
  return order;
}

std::string component_type(const RootSystem& rs, const RootSubset& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return "A1";
  int max_bond = 1;
  std::pair<int, int> multi_edge{-1, -1};
  for (int a : comp)
    for (int b : comp) {
      if (a >= b) continue;
      const int m = rs.cartan_matrix(a, b) * rs.cartan_matrix(b, a);
      if (m > max_bond) {
        max_bond = m;
        multi_edge = {a, b};
      }
    }
  if (max_bond == 3) return "G2";
  int branch = -1;
  for (int v : comp)
    if (degree(rs, comp, v) == 3) branch = v;
  if (branch >= 0) {
    std::vector<int> arms;
    for (int w : comp)
      if (w != branch && rs.cartan_matrix(branch, w) != 0) arms.push_back(arm_length(rs, comp, branch, w));
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    return "E" + std::to_string(n);
  }
  if (max_bond == 1) return "A" + std::to_string(n);
  if (n == 2) return "B2";
  auto len2 = [&](int v) { return rs.simple_roots[v].dot(rs.simple_roots[v]); };
  const int a = multi_edge.first;
  const int b = multi_edge.second;
  const bool a_end = degree(rs, comp, a) == 1;
  const bool b_end = degree(rs, comp, b) == 1;
  if (!a_end && !b_end) return "F4";
  const int end = a_end ? a : b;
  const int other = a_end ? b : a;
  return len2(end) < len2(other) ? "B" + std::to_string(n) : "C" + std::to_string(n);
}

std::string subsystem_type(const RootSystem& rs, const RootSubset& subset) {
  if (subset.empty()) return "T";
  std::string out;
  for (const auto& comp : dynkin_components(rs, subset)) {
    if (!out.empty()) out += "x";
    out += component_type(rs, comp);
  }
  return out;
}

ChamberPoint make_chamber_point(const RootSystem& rs, const QVector& coords) {
  if (coords.size() != rs.rank)
    throw InputError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(rs.rank));
  for (int i = 0; i < rs.rank; ++i)
    if (coords(i) < 0)
      throw InputError("coordinate " + std::to_string(i + 1) + " is negative: point is outside the closed chamber");

  RootSubset all(static_cast<std::size_t>(rs.rank));
  std::iota(all.begin(), all.end(), 0);
  for (const auto& comp : dynkin_components(rs, all)) {
    bool alive = false;
    for (int i : comp)
      if (coords(i) != 0) alive = true;
    if (!alive) {
      std::string names;
      for (int i : comp) names += (names.empty() ? "alpha_" : ", alpha_") + std::to_string(i + 1);
      throw InputError("point is not full: it vanishes on the simple component {" + names +
                       "}; reduce to the factors acting nontrivially first");
    }
  }

  ChamberPoint x;
  x.coords = coords;
  x.vector = rs.killing_gram_inverse * coords;
  const QVector values = simple_root_values(rs, x.vector);
  for (int i = 0; i < rs.rank; ++i) {
    if ((values(i) == 0) != (coords(i) == 0))
      throw std::logic_error("simple root value and weight coordinate disagree in sign");
    if (values(i) == 0) x.singular_set.push_back(i);
  }
  return x;
}

}  // namespace orbitope
