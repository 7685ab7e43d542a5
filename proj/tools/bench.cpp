#include <chrono>
#include <cstdio>

#include "axial/complex.hpp"
#include "axial/harness.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  using namespace axial;

  ModelPtr f2 = GroupModel::free_group(2);
  BallCache cache(f2);
  ActionModel act = ActionModel::left_regular(f2, parse_word("a", f2));
  TruncationParams trunc;
  trunc.radius = 6;
  WildnessEngine eng(act, cache, trunc);

  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms",
              "speedup");

  {
    GroupElement h = parse_word("b a b", f2);
    auto t0 = Clock::now();
    MEstimate serial = eng.m_scan(h, 6, false);
    double ts = ms_since(t0);
    t0 = Clock::now();
    MEstimate par = eng.m_scan(h, 6, true);
    double tp = ms_since(t0);
    bool same = serial.m == par.m &&
                serial.window_exhausted == par.window_exhausted;
    std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "m_scan(b a b, R=6)", ts, tp,
                ts / tp, same ? "" : "  MISMATCH");
  }

  ProjectionSystem ps(eng, 4);
  ConstantEstimates c = eng.constants();
  AxiomReport ax = ps.check_axioms(c.M_hat, c.N_hat);

  {
    auto t0 = Clock::now();
    P1Scan serial = ps.p1_scan(ax.p1_bound, false);
    double ts = ms_since(t0);
    t0 = Clock::now();
    P1Scan par = ps.p1_scan(ax.p1_bound, true);
    double tp = ms_since(t0);
    bool same = serial.max == par.max && serial.violations == par.violations &&
                serial.worst == par.worst;
    std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "p1_scan(cosets ball 4)", ts,
                tp, ts / tp, same ? "" : "  MISMATCH");
  }

  TruncGraph pc = build_projection_complex(ps, default_edge_threshold(ax), ax);
  {
    auto t0 = Clock::now();
    auto serial = all_pairs_distances(pc, false);
    double ts = ms_since(t0);
    t0 = Clock::now();
    auto par = all_pairs_distances(pc, true);
    double tp = ms_since(t0);
    std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "all_pairs_bfs", ts, tp,
                ts / tp, serial == par ? "" : "  MISMATCH");
  }
  {
    auto t0 = Clock::now();
    double ds = hyperbolicity_delta_serial(pc);
    double ts = ms_since(t0);
    t0 = Clock::now();
    double dp = hyperbolicity_delta(pc);
    double tp = ms_since(t0);
    std::printf("%-28s %10.1f %10.1f %7.2fx%s\n", "hyperbolicity_delta", ts, tp,
                ts / tp, ds == dp ? "" : "  MISMATCH");
  }
  return 0;
}
