#include "oracles.hpp"

#include "orbitope/linalg.hpp"
#include "orbitope/weyl_group.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace orbitope;

namespace {

const std::vector<std::pair<char, int>> kTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                  {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}};

QVector vec(std::initializer_list<long> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(to_string(parse_rational("3/6")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-4")), "-4");
  EXPECT_EQ(to_string(parse_rational(" 7/1 ")), "7");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
  const auto v = parse_rational_list("1,0,3/2");
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v(2), Rational(3, 2));
}

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(build_root_system('A', 2).num_positive(), 3);
  EXPECT_EQ(build_root_system('G', 2).num_positive(), 6);
  EXPECT_EQ(build_root_system('B', 3).num_positive(), 9);
  for (const auto& [t, n] : kTypes) EXPECT_EQ(build_root_system(t, n).num_positive(), oracle::classical_positive_roots(t, n)) << t << n;
}

TEST(RootSystem, RejectsInvalidPairs) {
  EXPECT_THROW(build_root_system('G', 3), InputError);
  EXPECT_THROW(build_root_system('D', 3), InputError);
  EXPECT_THROW(build_root_system('B', 1), InputError);
  EXPECT_THROW(build_root_system('E', 5), InputError);
  EXPECT_THROW(build_root_system('A', 9), InputError);
  EXPECT_THROW(build_root_system('A', 0), InputError);
  EXPECT_THROW(build_root_system('X', 2), InputError);
}

TEST(RootSystem, RootsAreSignedIntegerCombinations) {
  for (const auto& [t, n] : kTypes) {
    const auto rs = build_root_system(t, n);
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
      QVector combo = QVector::Zero(rs.positive_roots[k].size());
      for (int i = 0; i < rs.rank; ++i) {
        EXPECT_GE(rs.positive_coefficients[k](i), 0);
        combo += Rational(rs.positive_coefficients[k](i)) * rs.simple_roots[static_cast<std::size_t>(i)];
      }
      EXPECT_EQ(combo, rs.positive_roots[k]);
    }
  }
}

TEST(RootSystem, KillingGramMatchesAmbientSum) {
  for (const auto& [t, n] : kTypes) {
    const auto rs = build_root_system(t, n);
    EXPECT_EQ(rs.killing_gram, oracle::ambient_killing_gram(rs)) << t << n;
    EXPECT_EQ(rs.killing_gram, rs.killing_gram.transpose());
    for (Eigen::Index k = 1; k <= rs.rank; ++k) EXPECT_GT(oracle::det(rs.killing_gram.topLeftCorner(k, k)), 0);
  }
}

TEST(RootSystem, KillingPairingExamples) {
  const auto a1 = build_root_system('A', 1);
  const QVector h = vec({1});
  // alpha(h) = 2 on the coroot, summed over +-alpha.
  EXPECT_EQ(killing_pairing(a1, h, h), Rational(8));
  EXPECT_EQ(killing_pairing(a1, QVector::Zero(1), h), Rational(0));
  const auto a2 = build_root_system('A', 2);
  // alpha_1, alpha_2, alpha_1+alpha_2 take values (2,-1,1) on h_1 and (-1,2,1) on h_2.
  EXPECT_EQ(killing_pairing(a2, vec({1, 0}), vec({0, 1})), Rational(2 * (2 * -1 + -1 * 2 + 1 * 1)));
  EXPECT_EQ(killing_pairing(a2, vec({1, 0}), vec({1, 0})), Rational(2 * (4 + 1 + 1)));
}

TEST(WeylGroup, ClassicalOrders) {
  EXPECT_EQ(build_weyl_group(build_root_system('A', 2)).order(), 6u);
  EXPECT_EQ(build_weyl_group(build_root_system('B', 2)).order(), 8u);
  EXPECT_EQ(build_weyl_group(build_root_system('D', 4)).order(), 192u);
  for (const auto& [t, n] : kTypes) {
    const auto expected = oracle::classical_weyl_order(t, n);
    if (expected > 2000) continue;
    EXPECT_EQ(static_cast<long>(build_weyl_group(build_root_system(t, n)).order()), expected) << t << n;
  }
}

TEST(WeylGroup, CapIsEnforced) {
  const auto e6 = build_root_system('E', 6);
  EXPECT_THROW(build_weyl_group(e6), InputError);
  EXPECT_THROW(build_weyl_group(build_root_system('A', 3), 10), InputError);
  EXPECT_EQ(build_weyl_group(build_root_system('A', 3), 24).order(), 24u);
}

TEST(WeylGroup, ElementsAreKillingOrthogonalAndPermuteRoots) {
  for (const auto& [t, n] : kTypes) {
    const auto rs = build_root_system(t, n);
    if (oracle::classical_weyl_order(t, n) > 2000) continue;
    const auto w = build_weyl_group(rs);
    std::set<QVector, LexLess> roots;
    for (int k = 0; k < rs.num_positive(); ++k) {
      const QVector a = rs.positive_functionals.row(k).transpose();
      roots.insert(a);
      roots.insert(QVector(-a));
    }
    for (const auto& m : w.elements) {
      EXPECT_EQ(QMatrix(m.transpose() * rs.killing_gram * m), rs.killing_gram);
      // Roots act as functionals, so w sends a to a w^{-1}.
      const auto inv = *linalg::inverse(m);
      for (const auto& a : roots) EXPECT_TRUE(roots.count(QVector(inv.transpose() * a)));
    }
  }
}

TEST(WeylGroup, ReflectionsFixHyperplaneAndNegateCoroot) {
  for (const auto& [t, n] : kTypes) {
    const auto rs = build_root_system(t, n);
    for (int j = 0; j < rs.rank; ++j) {
      const auto s = simple_reflection(rs, j);
      EXPECT_EQ(QMatrix(s * s), QMatrix::Identity(rs.rank, rs.rank));
      EXPECT_EQ(QVector(s * unit_vector(rs.rank, j)), QVector(-unit_vector(rs.rank, j)));
      // Vectors killed by alpha_j are fixed.
      QMatrix aj(1, rs.rank);
      for (int i = 0; i < rs.rank; ++i) aj(0, i) = rs.cartan_matrix(i, j);
      const auto kernel = linalg::nullspace(aj);
      for (Eigen::Index c = 0; c < kernel.cols(); ++c) EXPECT_EQ(QVector(s * kernel.col(c)), QVector(kernel.col(c)));
    }
  }
}

TEST(WeylGroup, DeterministicShortlexWords) {
  const auto rs = build_root_system('B', 3);
  const auto a = build_weyl_group(rs);
  const auto b = build_weyl_group(rs);
  EXPECT_EQ(a.words, b.words);
  for (std::size_t k = 1; k < a.words.size(); ++k) EXPECT_LE(a.words[k - 1].size(), a.words[k].size());
  EXPECT_TRUE(a.words.front().empty());
}

TEST(WeylOrbit, SizesAndStability) {
  const auto a2 = build_root_system('A', 2);
  const auto w = build_weyl_group(a2);
  EXPECT_EQ(weyl_orbit(w, make_chamber_point(a2, vec({1, 1}))).size(), 6u);
  EXPECT_EQ(weyl_orbit(w, make_chamber_point(a2, vec({1, 0}))).size(), 3u);
  const auto g2 = build_root_system('G', 2);
  EXPECT_EQ(weyl_orbit(build_weyl_group(g2), make_chamber_point(g2, vec({1, 1}))).size(), 12u);
}

TEST(WeylOrbit, GeneratorStableWithZeroBarycenter) {
  for (const auto& [t, n] : kTypes) {
    if (oracle::classical_weyl_order(t, n) > 2000) continue;
    const auto rs = build_root_system(t, n);
    const auto w = build_weyl_group(rs);
    std::mt19937_64 rng(7);
    QVector c(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c(i) = static_cast<long>(rng() % 3);
    c(0) = 1;
    const auto x = make_chamber_point(rs, c);
    const auto orbit = weyl_orbit(w, x);
    EXPECT_EQ(orbit.front(), x.vector);
    std::set<QVector, LexLess> set(orbit.begin(), orbit.end());
    QVector sum = QVector::Zero(rs.rank);
    for (const auto& p : orbit) {
      sum += p;
      for (const auto& g : w.generators) EXPECT_TRUE(set.count(QVector(g * p)));
    }
    EXPECT_TRUE(sum.isZero());
    // |orbit| = |W| / |Stab(x)| and the stabilizer is W_{singular set}.
    EXPECT_EQ(orbit.size() * w.parabolic_subgroup(x.singular_set).size(), w.order());
  }
}

TEST(ChamberPoint, SingularSetAndRejections) {
  const auto a4 = build_root_system('A', 4);
  const auto x = make_chamber_point(a4, vec({0, 5, 0, 0}));
  EXPECT_EQ(x.singular_set, (RootSubset{0, 2, 3}));
  EXPECT_FALSE(x.is_regular());
  EXPECT_THROW(make_chamber_point(a4, vec({1, -1, 0, 0})), InputError);
  EXPECT_THROW(make_chamber_point(a4, vec({1, 0, 0})), InputError);
  EXPECT_THROW(make_chamber_point(a4, vec({0, 0, 0, 0})), InputError);
  // Simple root values agree with the fundamental-weight coordinates in sign.
  const auto vals = simple_root_values(a4, x.vector);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(vals(i) == 0, x.coords(i) == 0);
}

TEST(RootSystem, SubsystemTypes) {
  const auto a4 = build_root_system('A', 4);
  EXPECT_EQ(subsystem_type(a4, {}), "T");
  EXPECT_EQ(subsystem_type(a4, {0, 1, 3}), "A2xA1");
  const auto b3 = build_root_system('B', 3);
  EXPECT_EQ(subsystem_type(b3, {0, 1, 2}), "B3");
  EXPECT_EQ(subsystem_type(b3, {1, 2}), "B2");
  EXPECT_EQ(subsystem_type(build_root_system('D', 4), {0, 1, 2, 3}), "D4");
  EXPECT_EQ(subsystem_type(build_root_system('G', 2), {0, 1}), "G2");
  EXPECT_EQ(subsystem_type(build_root_system('C', 3), {0, 1, 2}), "C3");
}
