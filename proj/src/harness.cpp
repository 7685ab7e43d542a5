#include "axial/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace axial {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> ids = {
      "axiom1",    "axiom2",     "subadditivity",
      "interval_diameter", "coarse_lip", "behrstock",
      "large_proj", "bbf_axioms", "complex_diag"};
  return ids;
}

namespace {

std::string describe(const ModelPtr& model) {
  switch (model->family) {
    case Family::FreeGroup:
      return "free(" + std::to_string(model->rank) + ")";
    case Family::FreeAbelian:
      return "free_abelian(" + std::to_string(model->rank) + ")";
    case Family::CyclicTimesFinite:
      return "cyclic_times_finite(" + std::to_string(model->finite_order) + ")";
    case Family::DirectProduct: {
      std::string s = "product(";
      for (std::size_t i = 0; i < model->factors.size(); ++i) {
        if (i) s += ", ";
        s += describe(model->factors[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

ModelPtr factor_from(const std::string& item) {
  std::size_t colon = item.find(':');
  std::string name = item.substr(0, colon);
  int arg = 1;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("group.factors: bad entry: " + item);
    }
  }
  if (name == "free") return GroupModel::free_group(arg);
  if (name == "free_abelian") return GroupModel::free_abelian(arg);
  if (name == "cyclic_times_finite") return GroupModel::cyclic_times_finite(arg);
  throw ConfigError("group.factors: unknown family: " + name);
}

ModelPtr model_from(const Config& cfg) {
  std::string family = cfg.str("group.family", "free");
  if (family == "free") {
    return GroupModel::free_group(
        static_cast<int>(cfg.integer("group.rank", 2)));
  }
  if (family == "free_abelian") {
    return GroupModel::free_abelian(
        static_cast<int>(cfg.integer("group.rank", 2)));
  }
  if (family == "cyclic_times_finite") {
    return GroupModel::cyclic_times_finite(
        static_cast<int>(cfg.integer("group.order", 2)));
  }
  if (family == "product") {
    std::vector<ModelPtr> parts;
    for (const auto& item : cfg.list("group.factors")) {
      parts.push_back(factor_from(item));
    }
    if (parts.empty()) throw ConfigError("group.factors: empty product");
    return GroupModel::direct_product(std::move(parts));
  }
  throw ConfigError("group.family: unknown family: " + family);
}

Verdict worst_of(const std::vector<Verdict>& vs) {
  Verdict w = Verdict::Pass;
  for (Verdict v : vs) {
    if (v == Verdict::Fail) return Verdict::Fail;
    if (v == Verdict::Inconclusive) w = Verdict::Inconclusive;
  }
  return w;
}

int exit_code(const std::vector<Verdict>& vs) {
  switch (worst_of(vs)) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 2;
    default: return 3;
  }
}

json suite_json(const SuiteReport& sr) {
  json out;
  out["id"] = sr.id;
  out["verdict"] = to_string(sr.verdict);
  out["checked"] = sr.checked;
  out["violations"] = sr.violations;
  out["unstable"] = sr.unstable;
  out["worst"] = sr.worst;
  out["details"] = sr.details;
  return out;
}

json scenario_json(const Scenario& sc) {
  json out;
  out["group"] = describe(sc.model);
  out["g"] = to_string(sc.g);
  out["action"] = sc.pullback ? "pull_back" : "left_regular";
  if (sc.pullback) {
    switch (sc.pullback_map.kind) {
      case EquivariantMap::Kind::Identity: out["map"] = "identity"; break;
      case EquivariantMap::Kind::RightMult: out["map"] = "right_mult"; break;
      case EquivariantMap::Kind::LeftMult: out["map"] = "left_mult"; break;
    }
    out["map_arg"] = to_string(sc.pullback_map.arg);
  }
  out["radius"] = sc.trunc.radius;
  out["tau_slope"] = sc.trunc.tau_slope;
  out["window"] = sc.trunc.effective_window();
  out["tau"] = sc.trunc.tau(sc.trunc.radius);
  out["coset_radius"] = sc.coset_radius;
  out["K"] = sc.K_list.empty() ? json("auto") : json(sc.K_list);
  out["depth"] = sc.depth;
  out["n_max"] = sc.n_max;
  out["suites"] = sc.suites;
  return out;
}

}  // namespace

Scenario scenario_from_config(const Config& cfg) {
  Scenario sc;
  sc.model = model_from(cfg);
  sc.g = parse_word(cfg.str("action.g", "a"), sc.model);

  std::string kind = cfg.str("action.kind", "left_regular");
  if (kind == "pull_back") {
    sc.pullback = true;
    std::string map = cfg.str("action.map", "right_mult");
    if (map == "identity") {
      sc.pullback_map.kind = EquivariantMap::Kind::Identity;
    } else if (map == "right_mult") {
      sc.pullback_map.kind = EquivariantMap::Kind::RightMult;
    } else if (map == "left_mult") {
      sc.pullback_map.kind = EquivariantMap::Kind::LeftMult;
    } else {
      throw ConfigError("action.map: unknown map kind: " + map);
    }
    if (sc.pullback_map.kind != EquivariantMap::Kind::Identity) {
      std::string arg = cfg.str("action.map_arg", "");
      if (arg.empty()) throw ConfigError("action.map_arg: required");
      sc.pullback_map.arg = parse_word(arg, sc.model);
    }
  } else if (kind != "left_regular") {
    throw ConfigError("action.kind: unknown kind: " + kind);
  }

  sc.trunc.radius = static_cast<int>(cfg.integer("truncation.radius", 6));
  if (sc.trunc.radius < 2) throw ConfigError("truncation.radius: must be >= 2");
  sc.trunc.tau_slope = cfg.real("truncation.tau_slope", 0.5);
  if (sc.trunc.tau_slope <= 0) {
    throw ConfigError("truncation.tau_slope: must be positive");
  }
  sc.trunc.window = static_cast<int>(cfg.integer("truncation.window", 0));

  for (const auto& item : cfg.list("complex.K")) {
    try {
      sc.K_list.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw ConfigError("complex.K: not an integer: " + item);
    }
  }
  sc.depth = static_cast<int>(cfg.integer("complex.depth", 8));
  sc.n_max = static_cast<int>(cfg.integer("complex.n_max", 8));
  sc.coset_radius = static_cast<int>(cfg.integer("complex.coset_radius", 4));
  sc.graph_capacity =
      static_cast<std::size_t>(cfg.integer("complex.capacity", 400));

  std::vector<std::string> run = cfg.list("suites.run");
  bool everything =
      run.empty() || std::find(run.begin(), run.end(), "all") != run.end();
  for (const auto& id : run) {
    if (id != "all" &&
        std::find(all_suites().begin(), all_suites().end(), id) ==
            all_suites().end()) {
      throw ConfigError("suites.run: unknown suite: " + id);
    }
  }
  for (const auto& id : all_suites()) {
    if (everything || std::find(run.begin(), run.end(), id) != run.end()) {
      sc.suites.push_back(id);
    }
  }
  sc.probe_extra = cfg.list("suites.probes");
  sc.census_h = cfg.list("suites.census");
  if (sc.census_h.empty() && sc.model->family == Family::FreeGroup &&
      sc.model->rank >= 2) {
    sc.census_h = {"b"};
  }

  sc.out_dir = cfg.str("output.dir", "out");
  sc.dot = cfg.boolean("output.dot", false);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  return scenario_from_config(Config::parse_file(path));
}

Harness::Harness(Scenario sc)
    : sc_(std::move(sc)), cache_(sc_.model) {
  action_ = ActionModel::left_regular(sc_.model, sc_.g);
  if (sc_.pullback) action_ = pull_back(action_, sc_.pullback_map);
  eng_ = std::make_unique<WildnessEngine>(action_, cache_, sc_.trunc);
}

ProjectionSystem& Harness::projections() {
  if (!ps_) ps_ = std::make_unique<ProjectionSystem>(*eng_, sc_.coset_radius);
  return *ps_;
}

const AxiomReport& Harness::axioms() {
  if (!axioms_) {
    ConstantEstimates c = eng_->constants();
    axioms_ = projections().check_axioms(c.M_hat, c.N_hat);
  }
  return *axioms_;
}

std::optional<long> Harness::stable_m(const GroupElement& h) {
  const int R = sc_.trunc.radius;
  MEstimate now = eng_->m_estimate(h, R);
  MEstimate prev = eng_->m_estimate(h, R - 1);
  if (now.window_exhausted || prev.window_exhausted) return std::nullopt;
  if (now.m != prev.m) return std::nullopt;
  return now.m;
}

const AuditVerdict& Harness::audit() {
  if (audit_) return *audit_;
  AuditVerdict out;
  const int R = sc_.trunc.radius;

  // Axiom 1: |F_hat| over three successive radii.
  std::vector<int> radii = {std::max(1, R - 2), std::max(1, R - 1), R};
  std::vector<GroupElement> f_top;
  for (int r : radii) {
    auto ts = eng_->tame_subgroup(r);
    out.axiom1_counts.push_back(static_cast<long>(ts.F_hat.size()));
    if (r == R) f_top = ts.F_hat;
  }
  const auto& c1 = out.axiom1_counts;
  if (c1[0] < c1[1] && c1[1] < c1[2]) {
    out.axiom1 = Verdict::Fail;
    for (const auto& t : f_top) {
      if (out.axiom1_witnesses.size() >= 50) break;
      out.axiom1_witnesses.push_back(to_string(t));
    }
  } else if (c1[0] == c1[1] && c1[1] == c1[2]) {
    out.axiom1 = Verdict::Pass;
  } else {
    out.axiom1 = Verdict::Inconclusive;
  }

  // Axiom 2: m_estimate over the probe set, ball(2) plus configured extras.
  std::vector<GroupElement> probes = cache_.get(std::min(2, R));
  for (const auto& word : sc_.probe_extra) {
    probes.push_back(parse_word(word, sc_.model));
  }
  std::sort(probes.begin(), probes.end(), shortlex_less);
  probes.erase(std::unique(probes.begin(), probes.end(),
                           [](const GroupElement& x, const GroupElement& y) {
                             return equal(x, y);
                           }),
               probes.end());
  out.axiom2 = Verdict::Pass;
  for (const auto& h : probes) {
    ++out.axiom2_probes;
    MEstimate est = eng_->m_estimate(h, R);
    if (est.window_exhausted) {
      out.axiom2 = Verdict::Fail;
      out.axiom2_witness =
          to_string(h) +
          (est.exhausted_w ? " at w = " + to_string(*est.exhausted_w) : "");
      break;
    }
    if (!stable_m(h)) ++out.axiom2_unstable;
  }
  if (out.axiom2 == Verdict::Pass && out.axiom2_unstable > 0) {
    out.axiom2 = Verdict::Inconclusive;
  }

  // T = G detection: exact backend covers the ball and nothing is witnessed
  // wild.
  auto ts = eng_->tame_subgroup(R);
  out.virtually_cyclic = ts.covers_ball;
  if (out.virtually_cyclic) {
    for (const auto& w : cache_.get(R)) {
      if (eng_->profile(w).status == WildStatus::WildWitnessed) {
        out.virtually_cyclic = false;
        break;
      }
    }
  }

  out.constants = eng_->constants();
  audit_ = std::move(out);
  return *audit_;
}

json Harness::audit_json() {
  const AuditVerdict& a = audit();
  json out;
  json a1;
  a1["verdict"] = to_string(a.axiom1);
  a1["counts"] = a.axiom1_counts;
  a1["witnesses"] = a.axiom1_witnesses;
  out["axiom1"] = a1;
  json a2;
  a2["verdict"] = to_string(a.axiom2);
  a2["probes"] = a.axiom2_probes;
  a2["unstable"] = a.axiom2_unstable;
  a2["M_hat"] = a.constants.M_hat;
  a2["witness"] = a.axiom2_witness;
  out["axiom2"] = a2;
  out["virtually_cyclic"] = a.virtually_cyclic;
  return out;
}

json Harness::constants_json() {
  const ConstantEstimates& c = audit().constants;
  json out;
  out["M_hat"] = c.M_hat;
  out["L_hat"] = c.L_hat;
  out["N_hat"] = c.N_hat;
  json gens;
  for (const auto& [label, m] : c.m_generators) gens[label] = m;
  out["m_generators"] = gens;
  json stab;
  for (const auto& [r, m] : c.stability) stab[std::to_string(r)] = m;
  out["stability"] = stab;
  out["stable"] = c.stable;
  out["window_exhausted"] = c.window_exhausted;
  return out;
}

SuiteReport Harness::suite_axiom(const std::string& id) {
  const AuditVerdict& a = audit();
  SuiteReport sr;
  sr.id = id;
  if (id == "axiom1") {
    sr.verdict = a.axiom1;
    sr.checked = static_cast<long>(a.axiom1_counts.size());
    sr.violations = a.axiom1 == Verdict::Fail ? 1 : 0;
    if (!a.axiom1_witnesses.empty()) sr.worst = a.axiom1_witnesses.front();
    sr.details["counts"] = a.axiom1_counts;
    sr.details["witnesses"] = a.axiom1_witnesses;
  } else {
    sr.verdict = a.axiom2;
    sr.checked = a.axiom2_probes;
    sr.violations = a.axiom2 == Verdict::Fail ? 1 : 0;
    sr.unstable = a.axiom2_unstable;
    sr.worst = a.axiom2_witness;
    sr.details["M_hat"] = a.constants.M_hat;
  }
  return sr;
}

SuiteReport Harness::suite_subadditivity() {
  SuiteReport sr;
  sr.id = "subadditivity";
  const int R = sc_.trunc.radius;
  long max_m = 0;
  long out_of_scope = 0;
  const auto& b3 = cache_.get(std::min(3, R));
  for (const auto& h1 : b3) {
    auto m1 = stable_m(h1);
    for (const auto& h2 : b3) {
      ++sr.checked;
      auto m2 = stable_m(h2);
      GroupElement h12 = multiply(h1, h2);
      auto m12 = stable_m(h12);
      if (!m1 || !m2 || !m12) {
        ++sr.unstable;
        continue;
      }
      max_m = std::max(max_m, *m12);
      if (*m12 <= *m1 + *m2) continue;
      // The chain i(w) -> i(h2 w) -> i(h1 h2 w) behind the inequality needs
      // h2 w wild; re-scan the excess on that domain before calling it a
      // violation, and tally witnesses that escape it.
      MEstimate now = eng_->m_estimate_through(h12, h2, R);
      MEstimate prev = eng_->m_estimate_through(h12, h2, R - 1);
      if (now.window_exhausted || prev.window_exhausted || now.m != prev.m) {
        ++sr.unstable;
        continue;
      }
      if (now.m > *m1 + *m2) {
        ++sr.violations;
        if (sr.worst.empty()) {
          sr.worst = "h1 = " + to_string(h1) + ", h2 = " + to_string(h2);
        }
      } else {
        ++out_of_scope;
      }
    }
  }
  sr.details["max_m"] = max_m;
  sr.details["out_of_scope"] = out_of_scope;
  if (sr.violations > 0) {
    sr.verdict = Verdict::Fail;
  } else if (sr.unstable == sr.checked) {
    sr.verdict = Verdict::Inconclusive;
  }
  return sr;
}

SuiteReport Harness::suite_interval_diameter() {
  SuiteReport sr;
  sr.id = "interval_diameter";
  const ConstantEstimates& c = audit().constants;
  const int R = sc_.trunc.radius;
  const long bound = 2 * c.M_hat;
  long max_diam = 0;
  for (const auto& w : cache_.get(std::min(5, R))) {
    const WildProfile& p = eng_->profile(w);
    if (p.status != WildStatus::WildWitnessed) continue;
    ++sr.checked;
    WildProfile prev = eng_->profile_at(w, R - 1);
    if (prev.status != WildStatus::WildWitnessed ||
        prev.interval != p.interval) {
      ++sr.unstable;
      continue;
    }
    long diam = p.interval.back() - p.interval.front();
    max_diam = std::max(max_diam, diam);
    if (diam > bound) {
      ++sr.violations;
      if (sr.worst.empty()) sr.worst = to_string(w);
    }
  }
  sr.details["bound"] = bound;
  sr.details["max_diam"] = max_diam;
  if (sr.violations > 0) {
    sr.verdict = Verdict::Fail;
  } else if (!c.stable) {
    sr.verdict = Verdict::Inconclusive;
  }
  return sr;
}

// Wild elements of the given ball whose interval is stable across R-1, R.
static std::vector<GroupElement> stable_wild(WildnessEngine& eng, BallCache& cache,
                                      int ball_radius, long* skipped) {
  const int R = eng.trunc().radius;
  std::vector<GroupElement> out;
  for (const auto& w : cache.get(ball_radius)) {
    const WildProfile& p = eng.profile(w);
    if (p.status != WildStatus::WildWitnessed) continue;
    WildProfile prev = eng.profile_at(w, R - 1);
    if (prev.status != WildStatus::WildWitnessed ||
        prev.interval != p.interval) {
      if (skipped) ++*skipped;
      continue;
    }
    out.push_back(w);
  }
  return out;
}

SuiteReport Harness::suite_coarse_lip() {
  SuiteReport sr;
  sr.id = "coarse_lip";
  const ConstantEstimates& c = audit().constants;
  long skipped = 0;
  auto wild = stable_wild(*eng_, cache_, std::min(4, sc_.trunc.radius),
                          &skipped);
  long max_gap = 0;
  for (std::size_t i = 0; i < wild.size(); ++i) {
    long iu = eng_->center(wild[i]);
    for (std::size_t j = i + 1; j < wild.size(); ++j) {
      ++sr.checked;
      auto m = stable_m(multiply(wild[i], invert(wild[j])));
      if (!m) {
        ++sr.unstable;
        continue;
      }
      long gap = std::labs(iu - eng_->center(wild[j]));
      max_gap = std::max(max_gap, gap);
      if (gap > *m + 2 * c.M_hat) {
        ++sr.violations;
        if (sr.worst.empty()) {
          sr.worst =
              "u = " + to_string(wild[i]) + ", v = " + to_string(wild[j]);
        }
      }
    }
  }
  sr.unstable += skipped;
  sr.details["wild_elements"] = static_cast<long>(wild.size());
  sr.details["max_gap"] = max_gap;
  if (sr.violations > 0) {
    sr.verdict = Verdict::Fail;
  } else if (!c.stable) {
    sr.verdict = Verdict::Inconclusive;
  }
  return sr;
}

SuiteReport Harness::suite_behrstock() {
  SuiteReport sr;
  sr.id = "behrstock";
  const ConstantEstimates& c = audit().constants;
  const int R = sc_.trunc.radius;
  const long bound = 5 * c.M_hat;
  long skipped = 0;
  auto wild = stable_wild(*eng_, cache_, std::min(4, sc_.trunc.radius),
                          &skipped);

  auto stable_center = [&](const GroupElement& w) -> std::optional<long> {
    const WildProfile& p = eng_->profile(w);
    if (p.status != WildStatus::WildWitnessed) return std::nullopt;
    WildProfile prev = eng_->profile_at(w, R - 1);
    if (prev.status != WildStatus::WildWitnessed ||
        prev.interval != p.interval) {
      return std::nullopt;
    }
    return *p.center;
  };

  long max_min = 0;
  for (std::size_t i = 0; i < wild.size(); ++i) {
    for (std::size_t j = i + 1; j < wild.size(); ++j) {
      const GroupElement& u = wild[i];
      const GroupElement& v = wild[j];
      auto ivu = stable_center(multiply(invert(v), u));
      if (!ivu) continue;  // u^-1 v not (stably) wild: triple out of scope
      auto iuv = stable_center(multiply(invert(u), v));
      if (!iuv) {
        ++sr.unstable;
        continue;
      }
      ++sr.checked;
      long lhs = std::min(std::labs(eng_->center(u) - *ivu),
                          std::labs(eng_->center(v) - *iuv));
      max_min = std::max(max_min, lhs);
      if (lhs > bound) {
        ++sr.violations;
        if (sr.worst.empty()) {
          sr.worst = "u = " + to_string(u) + ", v = " + to_string(v);
        }
      }
    }
  }
  sr.unstable += skipped;
  sr.details["bound"] = bound;
  sr.details["max_min"] = max_min;
  if (sr.violations > 0) {
    sr.verdict = Verdict::Fail;
  } else if (!c.stable) {
    sr.verdict = Verdict::Inconclusive;
  }
  return sr;
}

SuiteReport Harness::suite_large_proj() {
  SuiteReport sr;
  sr.id = "large_proj";
  const ConstantEstimates& c = audit().constants;
  json records = json::array();
  bool all_stable = true;
  for (const auto& word : sc_.census_h) {
    GroupElement h = parse_word(word, sc_.model);
    CensusRecord rec = projections().large_projection_census(h, c.N_hat);
    ++sr.checked;
    json r;
    r["h"] = to_string(h);
    r["threshold"] = rec.threshold;
    r["size"] = rec.size;
    r["size_prev"] = rec.size_prev;
    r["delta"] = rec.delta;
    json members = json::array();
    for (const auto& m : rec.members) members.push_back(to_string(m));
    r["members"] = members;
    records.push_back(r);
    if (rec.delta != 0) {
      all_stable = false;
      ++sr.unstable;
      if (sr.worst.empty()) sr.worst = to_string(h);
    }
  }
  sr.details["records"] = records;
  if (!all_stable || !c.stable) sr.verdict = Verdict::Inconclusive;
  return sr;
}

SuiteReport Harness::suite_bbf_axioms() {
  SuiteReport sr;
  sr.id = "bbf_axioms";
  const ConstantEstimates& c = audit().constants;
  const AxiomReport& ax = axioms();
  sr.checked = static_cast<long>(projections().cosets().size());
  sr.violations = ax.p1_violations;
  sr.worst = ax.p1_worst;
  sr.details["theta_hat"] = ax.theta_hat;
  sr.details["theta_stable"] = ax.theta_stable;
  sr.details["p1_max"] = ax.p1_max;
  sr.details["p1_bound"] = ax.p1_bound;
  json census = json::array();
  for (const auto& e : ax.p2) {
    json r;
    r["pair"] = e.pair;
    r["count"] = e.count;
    r["count_prev"] = e.count_prev;
    r["stable"] = e.stable;
    census.push_back(r);
  }
  sr.details["p2"] = census;
  sr.details["p2_stable"] = ax.p2_stable;
  sr.details["p2_threshold"] = ax.p2_threshold;
  if (ax.p1_violations > 0) {
    sr.verdict = Verdict::Fail;
  } else if (!ax.theta_stable || !ax.p2_stable || !c.stable) {
    sr.verdict = Verdict::Inconclusive;
  }
  return sr;
}

json Harness::complex_section() {
  if (complex_) return *complex_;
  ProjectionSystem& ps = projections();
  const AxiomReport& ax = axioms();
  json out;
  out["cosets"] = static_cast<long>(ps.cosets().size());
  long def_k = default_edge_threshold(ax);
  out["default_K"] = def_k;
  std::vector<long> ks = sc_.K_list.empty() ? std::vector<long>{def_k}
                                            : sc_.K_list;
  const long diag_k = ks.front();

  json entries = json::array();
  for (long k : ks) {
    TruncGraph pc = build_projection_complex(ps, k, ax);
    json e;
    e["K"] = k;
    e["vertices"] = static_cast<long>(pc.vertex_count());
    e["edges"] = static_cast<long>(pc.edge_count());
    bool conn = is_connected(pc);
    e["connected"] = conn;
    if (k == diag_k) {
      if (conn && pc.vertex_count() <= sc_.graph_capacity) {
        e["delta"] = hyperbolicity_delta(pc, sc_.graph_capacity);
        int found = -1;
        for (int d = 0; d <= 3 && found < 0; ++d) {
          if (bottleneck_check(pc, d, sc_.graph_capacity).ok) found = d;
        }
        e["bottleneck_delta"] = found;  // -1: none up to 3
      } else {
        e["delta"] = nullptr;
        e["bottleneck_delta"] = nullptr;
      }
      e["growth"] = translation_growth(pc, ps, sc_.n_max);
      if (sc_.dot) dot_files_["complex_K" + std::to_string(k) + ".dot"] =
          dot_export(pc);

      TruncGraph qt = build_quasi_tree_of_spaces(ps, k, sc_.depth, ax);
      json q;
      q["vertices"] = static_cast<long>(qt.vertex_count());
      q["edges"] = static_cast<long>(qt.edge_count());
      q["connected"] = is_connected(qt);
      q["growth"] = translation_growth(qt, ps, sc_.n_max);
      e["quasi_tree"] = q;
      if (sc_.dot) dot_files_["quasi_tree_K" + std::to_string(k) + ".dot"] =
          dot_export(qt);
    }
    entries.push_back(e);
  }
  out["graphs"] = entries;
  complex_ = std::move(out);
  return *complex_;
}

SuiteReport Harness::suite_complex_diag() {
  SuiteReport sr;
  sr.id = "complex_diag";
  try {
    json section = complex_section();
    sr.details = section;
    const json& diag = section["graphs"][0];
    sr.checked = static_cast<long>(section["graphs"].size());
    bool ok = diag["connected"].get<bool>() &&
              diag["quasi_tree"]["connected"].get<bool>();
    if (!ok) {
      sr.verdict = Verdict::Inconclusive;
      sr.worst = "disconnected at K = " + diag["K"].dump();
    }
  } catch (const AxiomsFailed& e) {
    sr.verdict = Verdict::Fail;
    sr.violations = 1;
    sr.worst = e.what();
  }
  return sr;
}

SuiteReport Harness::verify_lemma(const std::string& suite_id) {
  if (suite_id == "axiom1" || suite_id == "axiom2") return suite_axiom(suite_id);
  if (suite_id == "subadditivity") return suite_subadditivity();
  if (suite_id == "interval_diameter") return suite_interval_diameter();
  if (suite_id == "coarse_lip") return suite_coarse_lip();
  if (suite_id == "behrstock") return suite_behrstock();
  if (suite_id == "large_proj") return suite_large_proj();
  if (suite_id == "bbf_axioms") return suite_bbf_axioms();
  if (suite_id == "complex_diag") return suite_complex_diag();
  throw UnknownSuite("unknown suite: " + suite_id);
}

int run_scenario(const RunOptions& opts) {
  try {
    Scenario sc = load_scenario(opts.config_path);
    if (opts.radius_override > 0) {
      if (opts.radius_override < 2) {
        throw ConfigError("--radius: must be >= 2");
      }
      sc.trunc.radius = opts.radius_override;
    }
    if (!opts.out_override.empty()) sc.out_dir = opts.out_override;
    if (opts.dot_override) sc.dot = true;

    const std::string out_dir = sc.out_dir;
    const bool run_audit =
        opts.command == "audit" || opts.command == "report";
    const bool run_suites =
        opts.command == "verify" || opts.command == "report";
    const bool run_complex =
        opts.command == "complex" ||
        (opts.command == "report" &&
         std::find(sc.suites.begin(), sc.suites.end(), "complex_diag") !=
             sc.suites.end());

    Harness h(std::move(sc));
    json report;
    report["schema"] = 1;
    report["scenario"] = scenario_json(h.scenario());
    std::vector<Verdict> verdicts;

    if (run_audit) {
      report["audit"] = h.audit_json();
      report["constants"] = h.constants_json();
      verdicts.push_back(h.audit().axiom1);
      verdicts.push_back(h.audit().axiom2);
    }
    if (run_suites) {
      std::vector<std::string> selected = h.scenario().suites;
      if (opts.command == "verify" && opts.suite != "all") {
        selected = {opts.suite};
      }
      json arr = json::array();
      for (const auto& id : selected) {
        SuiteReport sr = h.verify_lemma(id);
        verdicts.push_back(sr.verdict);
        arr.push_back(suite_json(sr));
      }
      report["suites"] = arr;
    }
    if (run_complex) {
      report["complex"] = h.complex_section();
      if (opts.command == "complex") {
        bool conn = report["complex"]["graphs"][0]["connected"].get<bool>();
        verdicts.push_back(conn ? Verdict::Pass : Verdict::Inconclusive);
      }
    }

    int code = exit_code(verdicts);
    report["exit"] = code;

    std::filesystem::create_directories(out_dir);
    {
      std::ofstream f(out_dir + "/report.json", std::ios::binary);
      f << report.dump(2) << "\n";
    }
    for (const auto& [name, content] : h.dot_exports()) {
      std::ofstream f(out_dir + "/" + name, std::ios::binary);
      f << content;
    }
    if (run_complex) {
      std::ofstream f(out_dir + "/projections.tsv", std::ios::binary);
      f << h.projections().projection_table_tsv();
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace axial
