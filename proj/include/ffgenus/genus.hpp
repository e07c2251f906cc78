#pragma once

#include <string>
#include <vector>

#include "ffgenus/curve.hpp"
#include "ffgenus/montes.hpp"

namespace ffg {

struct GenusInput {
  DefiningPoly f;
  int constant_degree = 1;  // [k0:k]
  int threads = 1;
  u64 seed = 0x5eed5eedULL;
  bool trace = false;
};

struct PrimeEntry {
  Poly p;
  int deg = 0;
  i64 delta_p = 0;
  i64 ind_p = 0;
};

struct Timings {
  double disc_ms = 0, factor_ms = 0, montes_ms = 0, total_ms = 0;
};

struct GenusReport {
  int n = 0;
  int Cf = 0;
  i64 delta = 0, delta_inf = 0;
  std::vector<PrimeEntry> primes;
  i64 finite_index = 0;
  i64 ind_inf = 0;
  i64 g = 0;
  int constant_degree = 1;
  Timings timings;
  std::vector<std::string> warnings;
  std::vector<std::string> trace;
};

/// The full table without the final formula (g is left at 0).
GenusReport index_breakdown(const GenusInput& in);

GenusReport genus_compute(const GenusInput& in);

}  // namespace ffg
