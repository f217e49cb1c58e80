#pragma once

// Algebraic integrality of the weight <x, .> and of the weights induced on the
// semisimple parts K_F of the faces.

#include "orbitope/faces.hpp"

#include <vector>

namespace orbitope {

struct PairingRow {
  int root = -1;        // positive-root index of the ambient system
  Rational value;       // 2 <lambda, alpha> / <alpha, alpha>
  Rational displayed;   // <lambda, alpha> / <alpha, alpha>
  bool integral = false;
};

struct IntegralityTable {
  std::vector<PairingRow> rows;
  bool is_integral = true;
};

IntegralityTable check_integral(const RootSystem& rs, const ChamberPoint& x);

struct FaceWeight {
  RootSubset I;
  QVector x0;        // component in the centre t_J
  QVector x1;        // orthogonal projection onto span{h_i : i in I}
  QVector x1_prime;  // coefficients on h_i (i in I) with <x1', y>_F = <x1, y>
  QMatrix sub_gram;  // Killing form of k_F on span{h_i : i in I}
  IntegralityTable table;  // rows over the positive roots of Delta_I
};

/// Throws InputError when I is empty.
FaceWeight induce_face_weight(const RootSystem& rs, const ChamberPoint& x, const FaceDescriptor& d);

struct WeightData {
  QVector lambda;
  IntegralityTable table;
  std::vector<int> face_descriptors;  // descriptors with nonempty I
  std::vector<FaceWeight> face_weights;
};

WeightData weight_data(const FaceClassification& c);

}  // namespace orbitope
