// Acceptance checks for the shipped scenarios: one PASS/FAIL line each,
// nonzero exit iff anything failed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "axial/harness.hpp"

using namespace axial;
namespace fs = std::filesystem;

static int failures = 0;

static void line(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) ++failures;
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int main() {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();

  Scenario sc = load_scenario(SCENARIO_DIR "/f2.cfg");
  Harness h(sc);

  // 1: audit PASS, M_hat = 0 stable across R in {4,5,6}, within the budget.
  {
    const AuditVerdict& a = h.audit();
    bool ok = a.axiom1 == Verdict::Pass && a.axiom2 == Verdict::Pass &&
              a.constants.M_hat == 0 && a.constants.stable;
    for (int r = 4; r <= 6; ++r) {
      ok = ok && a.constants.stability.count(r) &&
           a.constants.stability.at(r) == 0;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ok = ok && secs < 60.0;
    line(1, ok, "F2 audit PASS, M_hat = 0 stable over R = 4..6, " +
                    std::to_string(secs).substr(0, 4) + " s");
  }

  // 2: classification against the <a>-membership oracle on ball(5).
  {
    WildnessEngine& eng = h.engine();
    bool ok = true;
    long unknown_short = 0;
    for (const auto& x : eng.cache().get(5)) {
      bool in_a = true;
      for (int32_t l : x.word) {
        if (l != 1 && l != -1) in_a = false;
      }
      WildStatus s = eng.classify(x);
      if (in_a != (s == WildStatus::TameCertified)) ok = false;
      if (x.len <= 3 && s == WildStatus::Unknown) ++unknown_short;
    }
    ok = ok && unknown_short == 0;
    line(2, ok, "classify = TameCertified iff h in <a> on ball(5), no short "
                "Unknowns");
  }

  // 3: the four lemma suites, zero violations at stabilized constants.
  {
    bool ok = true;
    std::string detail;
    for (const char* id :
         {"subadditivity", "interval_diameter", "coarse_lip", "behrstock"}) {
      SuiteReport sr = h.verify_lemma(id);
      if (sr.verdict != Verdict::Pass || sr.violations != 0) {
        ok = false;
        detail += std::string(" ") + id;
      }
    }
    line(3, ok, "lemma suites zero-violation" +
                    (detail.empty() ? "" : " (failing:" + detail + ")"));
  }

  // 4: census sizes identical at R = 5 and R = 6 for b, ab, bab.
  {
    SuiteReport sr = h.verify_lemma("large_proj");
    bool ok = sr.verdict == Verdict::Pass && sr.checked == 3;
    line(4, ok, "large-projection census stable for h in {b, ab, bab}");
  }

  // 5: BBF axiom report on cosets {wT : w in ball(4)}.
  {
    SuiteReport sr = h.verify_lemma("bbf_axioms");
    bool ok = sr.verdict == Verdict::Pass &&
              sr.details.at("theta_stable").get<bool>() &&
              sr.details.at("p1_max").get<long>() <=
                  sr.details.at("p1_bound").get<long>() &&
              sr.details.at("p2_stable").get<bool>();
    line(5, ok, "theta stable, P1 within 5*M_hat + theta, P2 census stable");
  }

  // 6 + 7: complex diagnostics and translation growth.
  {
    json cx = h.complex_section();
    const json& g0 = cx.at("graphs").at(0);
    bool connected = g0.at("connected").get<bool>();
    double delta = g0.at("delta").get<double>();
    long bneck = g0.at("bottleneck_delta").get<long>();
    line(6, connected && delta <= 1.0 && bneck >= 0 && bneck <= 2,
         "projection complex connected, delta <= 1, bottleneck at Delta <= 2");

    std::vector<long> pc_growth = g0.at("growth").get<std::vector<long>>();
    std::vector<long> qt_growth =
        g0.at("quasi_tree").at("growth").get<std::vector<long>>();
    bool ok = pc_growth.size() == 8 && qt_growth.size() == 8;
    for (std::size_t i = 0; ok && i < 8; ++i) {
      ok = pc_growth[i] == 0 && qt_growth[i] == static_cast<long>(i) + 1;
    }
    line(7, ok, "d(e, a^n e) = n in the quasi-tree, a fixes T in the complex");
  }

  fs::path out = fs::temp_directory_path() / "axial-acceptance";
  fs::remove_all(out);

  // 8: negative controls.
  {
    RunOptions z2;
    z2.config_path = SCENARIO_DIR "/z2.cfg";
    z2.command = "audit";
    z2.out_override = (out / "z2").string();
    int code = run_scenario(z2);
    json rep = json::parse(slurp(out / "z2" / "report.json"));
    auto counts =
        rep.at("audit").at("axiom1").at("counts").get<std::vector<long>>();
    bool ok = code == 2 && counts.size() == 3;
    // Radii 3, 4, 5: strictly increasing, >= 2R + 1.
    for (std::size_t i = 0; ok && i < counts.size(); ++i) {
      long r = 3 + static_cast<long>(i);
      ok = counts[i] >= 2 * r + 1 && (i == 0 || counts[i] > counts[i - 1]);
    }

    RunOptions z1;
    z1.config_path = SCENARIO_DIR "/z1.cfg";
    z1.command = "audit";
    z1.out_override = (out / "z1").string();
    run_scenario(z1);
    json rep1 = json::parse(slurp(out / "z1" / "report.json"));
    ok = ok && rep1.at("audit").at("virtually_cyclic").get<bool>();
    line(8, ok, "Z^2 exits 2 with growing F_hat, Z reports G = T");
  }

  // 9: pull-back along f(x) = x b matches the base audit.
  {
    Scenario psc = load_scenario(SCENARIO_DIR "/f2_pullback.cfg");
    Harness ph(psc);
    const AuditVerdict& pa = ph.audit();
    const AuditVerdict& ba = h.audit();
    bool ok = pa.axiom1 == ba.axiom1 && pa.axiom2 == ba.axiom2 &&
              pa.constants.M_hat == ba.constants.M_hat;
    line(9, ok, "pulled-back action: same verdict and M_hat as the base");
  }

  // 10: byte-identical report.json across two full runs.
  {
    RunOptions r1;
    r1.config_path = SCENARIO_DIR "/f2.cfg";
    r1.out_override = (out / "r1").string();
    RunOptions r2 = r1;
    r2.out_override = (out / "r2").string();
    int c1 = run_scenario(r1);
    int c2 = run_scenario(r2);
    std::string a = slurp(out / "r1" / "report.json");
    std::string b = slurp(out / "r2" / "report.json");
    line(10, c1 == 0 && c2 == 0 && !a.empty() && a == b,
         "two F2 runs produce byte-identical report.json");
  }

  fs::remove_all(out);
  return failures == 0 ? 0 : 1;
}
