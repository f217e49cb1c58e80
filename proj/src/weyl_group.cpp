#include "orbitope/weyl_group.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace orbitope {

namespace {

QVector flatten(const QMatrix& m) {
  QVector v(m.size());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) v(c * m.rows() + r) = m(r, c);
  return v;
}

}  // namespace

std::size_t default_weyl_cap() {
  if (const char* env = std::getenv("ORBITOPE_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("ORBITOPE_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultWeylCap;
}

std::optional<std::size_t> WeylGroup::index_of(const QMatrix& m) const {
  const auto it = lookup.find(flatten(m));
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> WeylGroup::parabolic_subgroup(const RootSubset& subset) const {
  std::vector<bool> allowed(generators.size(), false);
  for (int j : subset) allowed[static_cast<std::size_t>(j)] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    bool inside = true;
    for (int letter : words[k])
      if (!allowed[static_cast<std::size_t>(letter)]) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

QMatrix simple_reflection(const RootSystem& rs, int j) {
  QMatrix s = QMatrix::Identity(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i) s(j, i) -= Rational(rs.cartan_matrix(i, j));
  return s;
}

WeylGroup build_weyl_group(const RootSystem& rs, std::size_t cap) {
  WeylGroup w;
  for (int j = 0; j < rs.rank; ++j) w.generators.push_back(simple_reflection(rs, j));

  // Breadth-first search in shortlex order: appending letters in increasing
  // order to shortlex-minimal words of the previous level yields the
  // shortlex-minimal word of every newly found element.
  auto add = [&](QMatrix m, std::vector<int> word) {
    w.lookup.emplace(flatten(m), w.elements.size());
    w.elements.push_back(std::move(m));
    w.words.push_back(std::move(word));
    if (w.elements.size() > cap)
      throw InputError("Weyl group of " + rs.name() + " exceeds the order cap " + std::to_string(cap) +
                       " (set ORBITOPE_CAP to raise it)");
  };
  add(QMatrix::Identity(rs.rank, rs.rank), {});
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int j = 0; j < rs.rank; ++j) {
        QMatrix m = w.elements[k] * w.generators[static_cast<std::size_t>(j)];
        if (w.lookup.count(flatten(m))) continue;
        auto word = w.words[k];
        word.push_back(j);
        add(std::move(m), std::move(word));
      }
    }
    level_begin = level_end;
    level_end = w.elements.size();
  }
  return w;
}

std::vector<QVector> weyl_orbit(const WeylGroup& w, const QVector& y) {
  std::vector<QVector> orbit;
  std::set<QVector, LexLess> seen;
  for (const auto& m : w.elements) {
    QVector p = m * y;
    if (seen.insert(p).second) orbit.push_back(std::move(p));
  }
  return orbit;
}

std::vector<QVector> weyl_orbit(const WeylGroup& w, const ChamberPoint& x) { return weyl_orbit(w, x.vector); }

}  // namespace orbitope
