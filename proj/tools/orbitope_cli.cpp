// orbitope: faces of coadjoint orbitopes from root data and a chamber point.
//
// Exit status: 0 all checks pass, 1 input error, 2 internal inconsistency.

#include "orbitope/faces.hpp"
#include "orbitope/integrality.hpp"
#include "orbitope/numeric.hpp"
#include "orbitope/report.hpp"
#include "orbitope/strata.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace orbitope;
using report::Json;

struct RunConfig {
  std::string command;
  std::string type_label;
  int rank = 0;
  std::string point;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  int samples = 20;
  std::size_t hull_cap = kDefaultHullCap;
  std::optional<std::size_t> weyl_cap;
  numeric::Tolerances tol;
};

struct Pipeline {
  FaceClassification cls;
  StratumPoset poset;
};

Pipeline build(const RunConfig& cfg) {
  if (cfg.type_label.size() != 1) throw InputError("--type must be a single letter A-G");
  const auto rs = build_root_system(cfg.type_label[0], cfg.rank);
  const auto x = make_chamber_point(rs, parse_rational_list(cfg.point));
  const auto w = build_weyl_group(rs, cfg.weyl_cap.value_or(default_weyl_cap()));
  Pipeline p{classify_faces(rs, w, x, cfg.hull_cap), {}};
  p.poset = build_poset(p.cls);
  check_stratification(p.cls, p.poset);
  return p;
}

Json header(const Pipeline& p) {
  Json j;
  j["root_system"] = report::root_system_json(p.cls.rs, p.cls.weyl);
  j["point"] = report::point_json(p.cls.x);
  return j;
}

Json cover_edges(const StratumPoset& poset) {
  Json edges = Json::array();
  for (const auto& [a, b] : poset.covers)
    edges.push_back({poset.nodes[static_cast<std::size_t>(a)].descriptor, poset.nodes[static_cast<std::size_t>(b)].descriptor});
  return edges;
}

// Integral x forces every induced face weight to be integral.
void check_descent(const WeightData& w) {
  if (!w.table.is_integral) return;
  for (const auto& fw : w.face_weights)
    if (!fw.table.is_integral) throw TheoremViolation("induced face weight is not integral");
}

struct NumericRun {
  std::vector<numeric::NumericFaceReport> faces;
  std::optional<numeric::FlagExampleReport> flag;
  bool passed = true;
};

NumericRun run_numeric(const Pipeline& p, const RunConfig& cfg) {
  NumericRun r;
  for (int k : p.cls.proper_descriptors()) {
    r.faces.push_back(numeric::verify_face_numeric(p.cls, k, cfg.samples, cfg.seed, cfg.tol));
    r.passed = r.passed && r.faces.back().passed;
  }
  if (p.cls.rs.rank == 2 && p.cls.x.is_regular()) {
    r.flag = numeric::flag_example(p.cls, cfg.samples, cfg.seed, cfg.tol);
    r.passed = r.passed && r.flag->passed;
  }
  return r;
}

Json numeric_json(const Pipeline& p, const NumericRun& r) {
  Json j;
  j["inner_product_scale"] = 2 * (p.cls.rs.rank + 1);
  Json faces = Json::array();
  for (const auto& f : r.faces) faces.push_back(report::numeric_face_json(p.cls, f));
  j["faces"] = faces;
  if (r.flag) j["flag_example"] = report::flag_json(*r.flag);
  j["passed"] = r.passed;
  return j;
}

int run(const RunConfig& cfg, std::ostream& out) {
  const auto p = build(cfg);
  const bool json = cfg.format == "json";
  int status = 0;
  Json j = header(p);
  std::string text;

  if (cfg.command == "polytope") {
    j["polytope"] = report::polytope_json(p.cls, true);
    text = report::polytope_text(p.cls);
  } else if (cfg.command == "faces") {
    j["polytope"] = report::polytope_json(p.cls, false);
    j["faces"] = report::faces_json(p.cls, p.poset, nullptr);
    j["bijection_verified"] = p.cls.bijection_verified;
    j["poset_edges"] = cover_edges(p.poset);
    text = report::faces_text(p.cls, p.poset);
  } else if (cfg.command == "strata") {
    j["strata"] = report::poset_json(p.cls, p.poset);
    text = report::poset_text(p.cls, p.poset);
  } else if (cfg.command == "integrality") {
    const auto w = weight_data(p.cls);
    check_descent(w);
    j["integrality"] = report::integrality_json(p.cls, w);
    text = report::integrality_text(p.cls, w);
  } else if (cfg.command == "verify-numeric") {
    const auto r = run_numeric(p, cfg);
    j["numeric"] = numeric_json(p, r);
    text = report::numeric_text(p.cls, r.faces, r.flag ? &*r.flag : nullptr);
    if (!r.passed) status = 2;
  } else {  // verify-all
    const auto w = weight_data(p.cls);
    check_descent(w);
    j["polytope"] = report::polytope_json(p.cls, false);
    j["faces"] = report::faces_json(p.cls, p.poset, &w);
    j["bijection_verified"] = p.cls.bijection_verified;
    j["poset_edges"] = cover_edges(p.poset);
    j["integrality"] = report::integrality_json(p.cls, w);
    text = report::faces_text(p.cls, p.poset) + report::integrality_text(p.cls, w);
    bool numeric_ok = true;
    if (p.cls.rs.type_label == 'A') {
      const auto r = run_numeric(p, cfg);
      j["numeric"] = numeric_json(p, r);
      text += report::numeric_text(p.cls, r.faces, r.flag ? &*r.flag : nullptr);
      numeric_ok = r.passed;
    }
    Json checks;
    checks["bijection"] = p.cls.bijection_verified;
    checks["exposedness"] = true;
    checks["stratification"] = true;
    checks["integrality_descent"] = true;
    checks["numeric"] = p.cls.rs.type_label == 'A' ? Json(numeric_ok) : Json(nullptr);
    j["checks"] = checks;
    text += numeric_ok ? "all checks passed\n" : "numeric check FAILED\n";
    if (!numeric_ok) status = 2;
  }

  const std::string rendered = json ? j.dump(2) + "\n" : text;
  if (cfg.out.empty()) {
    out << rendered;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw InputError("cannot write " + cfg.out);
    f << rendered;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faces of coadjoint orbitopes"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t weyl_cap = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"faces", "classify faces up to conjugation"},
      {"polytope", "momentum polytope, facets and face classes"},
      {"strata", "face-type poset and stratum dimensions"},
      {"integrality", "integrality of x and of the induced face weights"},
      {"verify-numeric", "gradient ascent cross-check on su(n)"},
      {"verify-all", "run every check"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", cfg.type_label, "root system type A-G")->required();
    sub->add_option("--rank", cfg.rank, "rank")->required();
    sub->add_option("--point", cfg.point, "fundamental-weight coordinates, e.g. 1,0,3/2")->required();
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write the report to this file");
    sub->add_option("--seed", cfg.seed, "base seed for the numeric checks");
    sub->add_option("--samples", cfg.samples, "ascent runs per face")->check(CLI::PositiveNumber);
    sub->add_option("--hull-cap", cfg.hull_cap, "largest admissible orbit");
    sub->add_option("--weyl-cap", weyl_cap, "largest admissible Weyl group (default ORBITOPE_CAP or 2000)");
    sub->add_option("--tol-commutator", cfg.tol.commutator);
    sub->add_option("--tol-value", cfg.tol.value);
    sub->add_option("--tol-fd", cfg.tol.fd);
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (weyl_cap > 0) cfg.weyl_cap = weyl_cap;

  try {
    return run(cfg, std::cout);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const numeric::ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
}
