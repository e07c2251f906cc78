#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "ffgenus/genus.hpp"
#include "ffgenus/kernels.hpp"
#include "ffgenus/report.hpp"
#include "ffgenus/suites.hpp"

using namespace ffg;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

void kernel_rows(const std::string& name, const FieldPtr& F, const std::string& f_text, std::size_t count, int threads,
                 int reps) {
  const DefiningPoly f = DefiningPoly::parse(f_text, F);
  const std::vector<Poly>& coeffs = f.poly().coeffs();
  std::vector<u64> points(count);
  for (std::size_t i = 0; i < count; ++i) points[i] = F->from_int(static_cast<i64>(i));

  std::vector<u64> vs, vo, is, io;
  const double ds = time_ms(reps, [&] { vs = kernels::disc_values_serial(coeffs, points); });
  const double dp = time_ms(reps, [&] { vo = kernels::disc_values_omp(coeffs, points, threads); });
  const double is_ms = time_ms(reps, [&] { is = kernels::interpolate_serial(*F, points, vs); });
  const double ip_ms = time_ms(reps, [&] { io = kernels::interpolate_omp(*F, points, vs, threads); });
  std::printf("%-10s %-13s %7zu %11.2f %11.2f %8.2f  %s\n", name.c_str(), "disc_values", count, ds, dp, ds / dp,
              vs == vo ? "equal" : "DIFFERENT");
  std::printf("%-10s %-13s %7zu %11.2f %11.2f %8.2f  %s\n", name.c_str(), "interpolate", count, is_ms, ip_ms,
              is_ms / ip_ms, is == io ? "equal" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial against OpenMP kernels, and timed example families"};
  int threads = 4, reps = 3;
  std::string suite_name;
  bool all_rows = false;
  app.add_option("--threads", threads, "OpenMP threads")->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "Repetitions per kernel (best time is reported)")->check(CLI::PositiveNumber);
  app.add_option("--suite", suite_name, "Also time a family with 1 and N threads ('all' for every family)");
  app.add_flag("--all", all_rows, "Include the large rows of the family");
  CLI11_PARSE(app, argc, argv);

  std::printf("%-10s %-13s %7s %11s %11s %8s  %s\n", "input", "kernel", "points", "serial ms", "omp ms", "speedup",
              "check");
  kernel_rows("ex7", Field::make(10007), "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x", 400, threads, reps);
  kernel_rows("ex10", Field::make(100003),
              "x^40 + (t+1)x^23 + t^9 x + (t+1)x^13 + (t^5-3t^2)x^7 + t^62 x^3 + t + 1", 2500, threads, reps);

  if (suite_name.empty()) return 0;
  std::printf("\n%-6s %-22s %8s %12s %12s %12s %12s\n", "suite", "row", "genus", "1 thread ms", "N threads ms",
              "I.C. ms", "montes ms");
  std::vector<std::string> names = suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
  for (const auto& name : names)
    for (const auto& row : suite(name)) {
      if (row.heavy && !all_rows) continue;
      const FieldPtr F = field_of_size(row.q);
      GenusInput in{DefiningPoly::parse(row.f, F)};
      const GenusReport one = genus_compute(in);
      in.threads = threads;
      const GenusReport many = genus_compute(in);
      std::printf("%-6s %-22s %8lld %12.1f %12.1f %12.1f %12.1f%s\n", name.c_str(), row.label.c_str(),
                  static_cast<long long>(one.g), one.timings.total_ms, many.timings.total_ms,
                  one.timings.disc_ms + one.timings.factor_ms, one.timings.montes_ms,
                  one.g == many.g ? "" : "  THREAD MISMATCH");
    }
  return 0;
}
