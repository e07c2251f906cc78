#include "ffgenus/genus.hpp"

#include <chrono>

#include "ffgenus/factor.hpp"

namespace ffg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

GenusReport index_breakdown(const GenusInput& in) {
  if (in.constant_degree < 1) throw std::invalid_argument("constant degree must be >= 1");
  const auto start = Clock::now();
  GenusReport rep;
  rep.n = in.f.n();
  rep.constant_degree = in.constant_degree;

  auto t0 = Clock::now();
  const Validation val = validate(in.f, in.threads);
  rep.warnings = val.warnings;
  const CurveProfile prof = curve_profile(in.f, in.threads);
  rep.Cf = prof.Cf;
  rep.delta = prof.delta;
  rep.delta_inf = prof.delta_inf;
  rep.timings.disc_ms = ms_since(t0);

  t0 = Clock::now();
  const Factorization fac = factorize(prof.disc, in.seed);
  for (const auto& [p, mult] : fac.factors) rep.primes.push_back({p, p.degree(), mult, 0});
  rep.timings.factor_ms = ms_since(t0);

  t0 = Clock::now();
  const std::size_t count = rep.primes.size();
  std::vector<std::vector<std::string>> traces(count + 1);
  std::vector<std::string> errors(count + 1);
  MontesOptions base;
  base.seed = in.seed;
  base.trace = in.trace;
#pragma omp parallel for schedule(dynamic) num_threads(in.threads > 0 ? in.threads : 1)
  for (std::size_t i = 0; i <= count; ++i) {
    try {
      MontesOptions opts = base;
      if (i < count) {
        auto& e = rep.primes[i];
        if (e.delta_p < 2) continue;
        opts.delta_p = e.delta_p;
        auto res = montes_ind(in.f, PrimeLocal::make(e.p), opts);
        e.ind_p = res.ind;
        traces[i] = std::move(res.trace);
      } else {
        opts.delta_p = rep.delta_inf;
        auto res = montes_ind(prof.f_inf, PrimeLocal::make(Poly::var(in.f.field()), true), opts);
        rep.ind_inf = res.ind;
        traces[i] = std::move(res.trace);
      }
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  for (const auto& e : rep.primes) rep.finite_index += e.deg * e.ind_p;
  for (auto& t : traces)
    for (auto& line : t) rep.trace.push_back(std::move(line));
  rep.timings.montes_ms = ms_since(t0);
  rep.timings.total_ms = ms_since(start);
  return rep;
}

GenusReport genus_compute(const GenusInput& in) {
  GenusReport rep = index_breakdown(in);
  const i64 n = rep.n;
  const i64 num = in.constant_degree - n - rep.finite_index - rep.ind_inf + rep.Cf * n * (n - 1) / 2;
  if (num < 0 || num % in.constant_degree != 0)
    throw std::runtime_error("constant field assumption violated: genus numerator " + std::to_string(num) +
                             " for constant degree " + std::to_string(in.constant_degree));
  rep.g = num / in.constant_degree;
  return rep;
}

}  // namespace ffg
