#pragma once

// JSON and plain-text renderings of the computed data. Simple roots are
// numbered from 1 in all output; rationals are "p/q" strings.

#include "orbitope/faces.hpp"
#include "orbitope/integrality.hpp"
#include "orbitope/numeric.hpp"
#include "orbitope/strata.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace orbitope::report {

using Json = nlohmann::ordered_json;

Json subset_json(const RootSubset& s);
Json vector_json(const QVector& v);

Json root_system_json(const RootSystem& rs, const WeylGroup& w);
Json point_json(const ChamberPoint& x);
/// Summary; with `detailed` also vertices, facets and face classes.
Json polytope_json(const FaceClassification& c, bool detailed);
Json faces_json(const FaceClassification& c, const StratumPoset& poset, const WeightData* weights);
Json poset_json(const FaceClassification& c, const StratumPoset& poset);
Json integrality_json(const FaceClassification& c, const WeightData& w);
Json numeric_face_json(const FaceClassification& c, const numeric::NumericFaceReport& r);
Json flag_json(const numeric::FlagExampleReport& r);

std::string faces_text(const FaceClassification& c, const StratumPoset& poset);
std::string polytope_text(const FaceClassification& c);
std::string poset_text(const FaceClassification& c, const StratumPoset& poset);
std::string integrality_text(const FaceClassification& c, const WeightData& w);
std::string numeric_text(const FaceClassification& c, const std::vector<numeric::NumericFaceReport>& reports,
                         const numeric::FlagExampleReport* flag);

}  // namespace orbitope::report
