// Times the exhaustive theorem sweep: serial reference vs OpenMP driver.
// Usage: bench_verify [max_n] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "subreg/oracle.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
  int threads = argc > 2 ? std::atoi(argv[2]) : 0;
  subreg::EnumerationOptions opts;
  opts.connected_only = true;

  auto t0 = Clock::now();
  subreg::VerifySummary serial =
      subreg::verify_enumeration_serial(max_n, opts, true);
  double ts = seconds_since(t0);
  std::printf("serial   n<=%d: %lld graphs, %lld failures, %.3fs\n", max_n,
              serial.graphs_checked, serial.failures, ts);

  t0 = Clock::now();
  subreg::VerifySummary parallel =
      subreg::verify_enumeration(max_n, opts, true, threads);
  double tp = seconds_since(t0);
  std::printf("parallel n<=%d: %lld graphs, %lld failures, %.3fs (x%.2f)\n",
              max_n, parallel.graphs_checked, parallel.failures, tp,
              tp > 0 ? ts / tp : 0.0);

  bool same = serial.graphs_checked == parallel.graphs_checked &&
              serial.failures == parallel.failures &&
              serial.failure_reports == parallel.failure_reports;
  std::printf("summaries %s\n", same ? "identical" : "DIFFER");
  return same && serial.failures == 0 ? 0 : 1;
}
