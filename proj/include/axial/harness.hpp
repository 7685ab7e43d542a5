#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/complex.hpp"
#include "axial/config.hpp"
#include "axial/projections.hpp"

namespace axial {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

// Full run description, one scenario per config file.
struct Scenario {
  ModelPtr model;
  GroupElement g;
  bool pullback = false;
  EquivariantMap pullback_map;

  TruncationParams trunc;

  std::vector<long> K_list;  // empty = default threshold from the axiom report
  int depth = 8;
  int n_max = 8;
  int coset_radius = 4;
  std::size_t graph_capacity = 400;

  std::vector<std::string> suites;       // canonical order, deduped
  std::vector<std::string> probe_extra;  // extra Axiom-2 probe words
  std::vector<std::string> census_h;     // large_proj subjects

  std::string out_dir = "out";
  bool dot = false;
};

const std::vector<std::string>& all_suites();

Scenario load_scenario(const std::string& path);     // throws ConfigError
Scenario scenario_from_config(const Config& cfg);

struct AuditVerdict {
  Verdict axiom1 = Verdict::Inconclusive;
  std::vector<long> axiom1_counts;             // |F_hat| at R-2, R-1, R
  std::vector<std::string> axiom1_witnesses;   // F_hat at R (on FAIL)
  Verdict axiom2 = Verdict::Inconclusive;
  long axiom2_probes = 0;
  long axiom2_unstable = 0;
  std::string axiom2_witness;                  // probe with exhausted window
  bool virtually_cyclic = false;
  ConstantEstimates constants;
};

struct SuiteReport {
  std::string id;
  Verdict verdict = Verdict::Pass;
  long checked = 0;
  long violations = 0;
  long unstable = 0;    // checks skipped for unstabilized estimates
  std::string worst;
  json details = json::object();
};

// Owns the engine/projection stack for one scenario and runs the pipeline.
class Harness {
 public:
  explicit Harness(Scenario sc);

  const Scenario& scenario() const { return sc_; }
  WildnessEngine& engine() { return *eng_; }
  ProjectionSystem& projections();   // lazy; throws InsufficientCosets

  const AuditVerdict& audit();
  SuiteReport verify_lemma(const std::string& suite_id);  // throws UnknownSuite
  json complex_section();            // diagnostics for every configured K

  json audit_json();
  json constants_json();
  const std::map<std::string, std::string>& dot_exports() const {
    return dot_files_;
  }

 private:
  Scenario sc_;
  BallCache cache_;
  ActionModel action_;
  std::unique_ptr<WildnessEngine> eng_;
  std::unique_ptr<ProjectionSystem> ps_;
  std::optional<AuditVerdict> audit_;
  std::optional<AxiomReport> axioms_;
  std::optional<json> complex_;
  std::map<std::string, std::string> dot_files_;

  const AxiomReport& axioms();
  std::optional<long> stable_m(const GroupElement& h);

  SuiteReport suite_axiom(const std::string& id);
  SuiteReport suite_subadditivity();
  SuiteReport suite_interval_diameter();
  SuiteReport suite_coarse_lip();
  SuiteReport suite_behrstock();
  SuiteReport suite_large_proj();
  SuiteReport suite_bbf_axioms();
  SuiteReport suite_complex_diag();
};

struct RunOptions {
  std::string config_path;
  std::string command = "report";  // audit | verify | complex | report
  std::string suite = "all";       // for verify
  int radius_override = 0;         // 0 = keep scenario value
  std::string out_override;
  bool dot_override = false;
};

// Full pipeline behind the CLI. Writes report.json (and .dot/.tsv files)
// under the output directory. Exit codes: 0 all PASS, 2 any FAIL,
// 3 any INCONCLUSIVE without FAIL, 1 configuration/runtime error.
int run_scenario(const RunOptions& opts);

}  // namespace axial
