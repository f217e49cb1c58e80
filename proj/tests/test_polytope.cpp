#include "oracles.hpp"

#include "orbitope/polytope.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitope;

namespace {

QVector vec(std::initializer_list<long> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

struct Orbit {
  RootSystem rs;
  WeylGroup w;
  ExactPolytope p;
};

Orbit orbit_polytope(char t, int n, std::initializer_list<long> c) {
  Orbit o;
  o.rs = build_root_system(t, n);
  o.w = build_weyl_group(o.rs);
  o.p = hull(weyl_orbit(o.w, make_chamber_point(o.rs, vec(c))), o.rs.killing_gram);
  return o;
}

QVector random_vector(std::mt19937_64& rng, int n) {
  QVector u(n);
  for (int i = 0; i < n; ++i) u(i) = Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
  return u;
}

}  // namespace

TEST(Hull, UnitSquare) {
  const auto p = hull({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})});
  EXPECT_EQ(p.facets.size(), 4u);
  EXPECT_EQ(p.f_vector(), (std::vector<int>{4, 4, 1}));
}

TEST(Hull, DropsInteriorAndDuplicatePoints) {
  const auto p = hull({vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({1, 1}), vec({1, 0}), vec({0, 0}), vec({1, 1}) / 2});
  EXPECT_EQ(p.vertices.size(), 3u);
  EXPECT_EQ(p.f_vector(), (std::vector<int>{3, 3, 1}));
}

TEST(Hull, LowerDimensionalInput) {
  // A square in the plane z = 1 inside Q^3, and a segment.
  const auto sq = hull({vec({0, 0, 1}), vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 1})});
  EXPECT_EQ(sq.affine_dim, 2);
  EXPECT_EQ(sq.f_vector(), (std::vector<int>{4, 4, 1}));
  const auto seg = hull({vec({0, 0, 0}), vec({1, 2, 3}), vec({2, 4, 6})});
  EXPECT_EQ(seg.affine_dim, 1);
  EXPECT_EQ(seg.vertices.size(), 2u);
  const auto pt = hull({vec({3, 3}), vec({3, 3})});
  EXPECT_EQ(pt.affine_dim, 0);
  EXPECT_EQ(pt.f_vector(), (std::vector<int>{1}));
}

TEST(Hull, RejectsEmptyAndOversizedInput) {
  EXPECT_THROW(hull({}), InputError);
  std::vector<QVector> many;
  for (long i = 0; i < 201; ++i) many.push_back(vec({i, i * i}));
  EXPECT_THROW(hull(many, QMatrix::Identity(2, 2)), InputError);
}

TEST(Hull, OrbitPolytopesMatchBruteForce) {
  const std::vector<std::tuple<char, int, std::initializer_list<long>>> cases = {
      {'A', 2, {1, 1}}, {'A', 2, {1, 0}}, {'B', 2, {1, 1}}, {'B', 2, {0, 1}}, {'G', 2, {1, 1}},
      {'G', 2, {1, 0}}, {'A', 3, {1, 1, 1}}, {'A', 3, {0, 1, 0}}, {'B', 3, {1, 0, 0}}, {'B', 3, {0, 1, 1}}};
  for (const auto& [t, n, c] : cases) {
    const auto o = orbit_polytope(t, n, c);
    const auto pts = weyl_orbit(o.w, make_chamber_point(o.rs, vec(c)));
    EXPECT_EQ(o.p.f_vector(), oracle::brute_f_vector(pts)) << t << n;
    std::set<std::vector<int>> facets;
    for (const auto& f : o.p.facets) facets.insert(f.vertices);
    EXPECT_EQ(facets, oracle::brute_facets(pts));
  }
}

TEST(Hull, HexagonAndTriangle) {
  const auto hex = orbit_polytope('A', 2, {1, 1});
  EXPECT_EQ(hex.p.f_vector(), (std::vector<int>{6, 6, 1}));
  const auto tri = orbit_polytope('A', 2, {1, 0});
  EXPECT_EQ(tri.p.f_vector(), (std::vector<int>{3, 3, 1}));
}

TEST(Hull, RegularOrbitFVectorFormula) {
  // Faces of a regular orbit polytope of dimension k: sum over |J| = k of |W| / |W_J|.
  for (const auto& [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'D', 4}, {'A', 4}}) {
    const auto rs = build_root_system(t, n);
    const auto w = build_weyl_group(rs);
    QVector ones = QVector::Ones(n);
    const auto p = hull(weyl_orbit(w, make_chamber_point(rs, ones)), rs.killing_gram);
    std::vector<int> expected(static_cast<std::size_t>(n + 1), 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      RootSubset J;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) J.push_back(i);
      expected[J.size()] += static_cast<int>(w.order() / w.parabolic_subgroup(J).size());
    }
    EXPECT_EQ(p.f_vector(), expected) << t << n;
  }
}

TEST(Hull, LatticeInvariants) {
  const auto o = orbit_polytope('B', 3, {1, 1, 1});
  const auto& p = o.p;
  for (const auto& f : p.facets) {
    for (const auto& v : p.vertices) EXPECT_LE(p.pairing(v, f.normal), f.offset);
    for (int v : f.vertices) EXPECT_EQ(p.pairing(p.vertices[static_cast<std::size_t>(v)], f.normal), f.offset);
    EXPECT_EQ(p.faces[static_cast<std::size_t>(*p.find_face(f.vertices))].dim, p.affine_dim - 1);
  }
  EXPECT_EQ(static_cast<std::size_t>(p.f_vector()[0]), p.vertices.size());
  for (std::size_t id = 0; id + 1 < p.faces.size(); ++id) {
    // Each proper face is the intersection of the facets containing it.
    std::vector<int> meet;
    bool first = true;
    for (const auto& f : p.facets) {
      const auto& a = p.faces[id].vertices;
      if (!std::includes(f.vertices.begin(), f.vertices.end(), a.begin(), a.end())) continue;
      if (first) meet = f.vertices;
      else {
        std::vector<int> tmp;
        std::set_intersection(meet.begin(), meet.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(tmp));
        meet = tmp;
      }
      first = false;
    }
    EXPECT_EQ(meet, p.faces[id].vertices);
    for (int parent : p.faces[id].parents) EXPECT_EQ(p.faces[static_cast<std::size_t>(parent)].dim, p.faces[id].dim + 1);
  }
}

TEST(Hull, DirectionAndPerpBases) {
  const auto o = orbit_polytope('A', 3, {1, 0, 1});
  for (std::size_t id = 0; id < o.p.faces.size(); ++id) {
    const auto f = describe_face(o.p, static_cast<int>(id));
    EXPECT_EQ(static_cast<int>(f.direction_basis.size()), f.dim);
    EXPECT_EQ(f.direction_basis.size() + f.perp_basis.size(), 3u);
    for (const auto& a : f.direction_basis)
      for (const auto& b : f.perp_basis) EXPECT_EQ(o.p.pairing(a, b), 0);
  }
}

TEST(SupportSet, Examples) {
  const auto o = orbit_polytope('A', 2, {1, 1});
  const auto x = make_chamber_point(o.rs, vec({1, 1}));
  const auto s = support_set(o.p, x.vector);
  ASSERT_EQ(s.face.vertex_indices.size(), 1u);
  EXPECT_EQ(o.p.vertices[static_cast<std::size_t>(s.face.vertex_indices[0])], x.vector);
  // The six inner products with x: x is the unique maximizer.
  int at_max = 0;
  for (const auto& v : o.p.vertices) at_max += (o.p.pairing(v, x.vector) == o.p.pairing(x.vector, x.vector));
  EXPECT_EQ(at_max, 1);
  for (const auto& f : o.p.facets) EXPECT_EQ(support_set(o.p, f.normal).face.vertex_indices, f.vertices);
  EXPECT_THROW(support_set(o.p, QVector::Zero(2)), InputError);
}

TEST(SupportSet, AgreesWithArgmaxForRandomDirections) {
  const auto o = orbit_polytope('B', 3, {1, 0, 1});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const QVector u = random_vector(rng, 3);
    if (u.isZero()) continue;
    const auto s = support_set(o.p, u);
    Rational best = o.p.pairing(o.p.vertices[0], u);
    for (const auto& v : o.p.vertices) best = std::max(best, o.p.pairing(v, u));
    EXPECT_EQ(s.value, best);
    std::vector<int> argmax;
    for (std::size_t k = 0; k < o.p.vertices.size(); ++k)
      if (o.p.pairing(o.p.vertices[k], u) == best) argmax.push_back(static_cast<int>(k));
    EXPECT_EQ(s.face.vertex_indices, argmax);
  }
}

TEST(FaceOrbits, HexagonAndTriangle) {
  const auto hex = orbit_polytope('A', 2, {1, 1});
  const auto oh = act_on_faces(hex.w, hex.p);
  ASSERT_EQ(oh.orbits_of_dim(0).size(), 1u);
  EXPECT_EQ(oh.orbits[static_cast<std::size_t>(oh.orbits_of_dim(0)[0])].members.size(), 6u);
  ASSERT_EQ(oh.orbits_of_dim(1).size(), 2u);
  for (int o : oh.orbits_of_dim(1)) EXPECT_EQ(oh.orbits[static_cast<std::size_t>(o)].members.size(), 3u);
  const auto tri = orbit_polytope('A', 2, {1, 0});
  const auto ot = act_on_faces(tri.w, tri.p);
  EXPECT_EQ(ot.orbits_of_dim(0).size(), 1u);
  EXPECT_EQ(ot.orbits_of_dim(1).size(), 1u);
}

TEST(FaceOrbits, TrivialGroupAndRepresentatives) {
  const auto hex = orbit_polytope('A', 2, {1, 1});
  WeylGroup trivial;
  trivial.elements.push_back(QMatrix::Identity(2, 2));
  trivial.words.push_back({});
  const auto o = act_on_faces(trivial, hex.p);
  EXPECT_EQ(o.orbits.size(), hex.p.faces.size());
  const auto full = act_on_faces(hex.w, hex.p);
  for (const auto& orb : full.orbits)
    for (int m : orb.members)
      EXPECT_LE(hex.p.faces[static_cast<std::size_t>(orb.representative)].vertices, hex.p.faces[static_cast<std::size_t>(m)].vertices);
}

TEST(FaceOrbits, RejectsUnstableVertexSet) {
  const auto rs = build_root_system('A', 2);
  const auto w = build_weyl_group(rs);
  const auto p = hull({vec({0, 0}), vec({1, 0}), vec({0, 1})}, rs.killing_gram);
  EXPECT_THROW(act_on_faces(w, p), InputError);
}

TEST(Stabilizer, HexagonExamples) {
  const auto hex = orbit_polytope('A', 2, {1, 1});
  const auto x = make_chamber_point(hex.rs, vec({1, 1}));
  const int vx = *hex.p.find_face({*hex.p.vertex_index(x.vector)});
  EXPECT_EQ(face_stabilizer(hex.p, vx, hex.w).elements.size(), 1u);
  for (int e : hex.p.levels[1]) {
    const auto s = face_stabilizer(hex.p, e, hex.w);
    ASSERT_EQ(s.elements.size(), 2u);
    // The nontrivial element swaps the two endpoints and fixes the edge normal direction.
    const auto& m = hex.w.elements[s.elements[1]];
    const auto& verts = hex.p.faces[static_cast<std::size_t>(e)].vertices;
    EXPECT_EQ(QVector(m * hex.p.vertices[static_cast<std::size_t>(verts[0])]), hex.p.vertices[static_cast<std::size_t>(verts[1])]);
    EXPECT_EQ(s.fixed_subspace.size(), 1u);
  }
  EXPECT_EQ(face_stabilizer(hex.p, hex.p.top_face(), hex.w).elements.size(), 6u);
}

TEST(FixedVector, ExposesFaceAndIsStabilizerFixed) {
  for (const auto& [t, n, c] : std::vector<std::tuple<char, int, std::initializer_list<long>>>{
           {'A', 2, {1, 1}}, {'A', 2, {1, 0}}, {'B', 3, {1, 1, 0}}, {'G', 2, {0, 1}}}) {
    const auto o = orbit_polytope(t, n, c);
    const auto perms = vertex_permutations(o.w, o.p);
    for (int id = 0; id < o.p.top_face(); ++id) {
      const QVector u = fixed_vector_in_cone(o.p, id, o.w, perms);
      EXPECT_EQ(support_set(o.p, u).face.id, id);
      for (auto k : face_stabilizer(o.p, id, o.w, perms).elements) EXPECT_EQ(QVector(o.w.elements[k] * u), u);
    }
    EXPECT_THROW(fixed_vector_in_cone(o.p, o.p.top_face(), o.w, perms), InputError);
  }
}

TEST(NormalCone, ConvexCombinationsExposeSameFace) {
  const auto o = orbit_polytope('A', 3, {1, 1, 0});
  const auto perms = vertex_permutations(o.w, o.p);
  std::mt19937_64 rng(5);
  for (int id = 0; id < o.p.top_face(); ++id) {
    const QVector u1 = fixed_vector_in_cone(o.p, id, o.w, perms);
    const QVector u2 = facet_normal_sum(o.p, id);
    for (int trial = 0; trial < 20; ++trial) {
      const Rational l1(static_cast<long>(rng() % 10), 1 + static_cast<long>(rng() % 7));
      const Rational l2(static_cast<long>(rng() % 10) + (l1 == 0 ? 1 : 0), 1 + static_cast<long>(rng() % 7));
      EXPECT_EQ(support_set(o.p, QVector(l1 * u1 + l2 * u2)).face.id, id);
    }
  }
}

TEST(Exposedness, EveryProperFaceIsExposed) {
  const auto o = orbit_polytope('D', 4, {0, 1, 0, 0});
  for (int id = 0; id < o.p.top_face(); ++id) EXPECT_EQ(support_set(o.p, facet_normal_sum(o.p, id)).face.id, id);
}

TEST(Kostant, OrbitPointsAreExactlyTheVertices) {
  for (const auto& [t, n, c] : std::vector<std::tuple<char, int, std::initializer_list<long>>>{
           {'A', 3, {2, 0, 1}}, {'B', 2, {3, 1}}, {'G', 2, {1, 2}}, {'D', 4, {1, 0, 0, 1}}}) {
    const auto o = orbit_polytope(t, n, c);
    const auto orbit = weyl_orbit(o.w, make_chamber_point(o.rs, vec(c)));
    EXPECT_EQ(o.p.vertices.size(), orbit.size());
    for (const auto& v : orbit) EXPECT_TRUE(o.p.vertex_index(v).has_value());
  }
}
