#include "ffgenus/kernels.hpp"

#include <omp.h>

#include <stdexcept>

namespace ffg::kernels {

namespace {

u64 disc_at(const std::vector<Poly>& f, u64 z) {
  const auto& field = f.back().field();
  const auto& F = *field;
  std::vector<u64> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i].eval(z);
  Poly fz(field, std::move(c));
  const u64 n = f.size() - 1;
  const u64 r = resultant(fz, fz.derivative());
  return (n * (n - 1) / 2) % 2 ? F.neg(r) : r;
}

void check_monic(const std::vector<Poly>& f) {
  if (f.empty() || !f.back().is_one()) throw std::invalid_argument("discriminant kernel needs a monic polynomial");
}

}  // namespace

std::vector<u64> disc_values_serial(const std::vector<Poly>& f, const std::vector<u64>& points) {
  check_monic(f);
  std::vector<u64> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = disc_at(f, points[i]);
  return out;
}

std::vector<u64> disc_values_omp(const std::vector<Poly>& f, const std::vector<u64>& points, int threads) {
  check_monic(f);
  std::vector<u64> out(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long i = 0; i < n; ++i) out[i] = disc_at(f, points[i]);
  return out;
}

namespace {

// next[i] = (c[i] - c[i-1]) / (x[i] - x[i-j]) for lo <= i < hi, one inversion per call.
void divided_level(const Field& F, const std::vector<u64>& x, const std::vector<u64>& c, std::vector<u64>& next,
                   std::size_t j, std::size_t lo, std::size_t hi, std::vector<u64>& scratch) {
  if (lo >= hi) return;
  scratch.resize(hi - lo);
  u64 acc = 1;
  for (std::size_t i = lo; i < hi; ++i) {
    const u64 den = F.sub(x[i], x[i - j]);
    if (den == 0) throw std::invalid_argument("interpolation: repeated point");
    scratch[i - lo] = acc;
    acc = F.mul(acc, den);
  }
  u64 inv = F.inv(acc);
  for (std::size_t i = hi; i-- > lo;) {
    const u64 den = F.sub(x[i], x[i - j]);
    next[i] = F.mul(F.sub(c[i], c[i - 1]), F.mul(inv, scratch[i - lo]));
    inv = F.mul(inv, den);
  }
}

}  // namespace

// Newton divided differences, then expansion of the Newton form to the monomial basis.
std::vector<u64> interpolate_serial(const Field& F, const std::vector<u64>& x, const std::vector<u64>& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("interpolation: size mismatch");
  std::vector<u64> c = y, next(n), scratch;
  for (std::size_t j = 1; j < n; ++j) {
    divided_level(F, x, c, next, j, j, n, scratch);
    for (std::size_t i = j; i < n; ++i) c[i] = next[i];
  }
  std::vector<u64> poly(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // poly <- poly * (t - x_k) + c_k
    for (std::size_t i = n - 1; i > 0; --i) poly[i] = F.sub(poly[i - 1], F.mul(poly[i], x[k]));
    poly[0] = F.sub(c[k], F.mul(poly[0], x[k]));
  }
  return poly;
}

std::vector<u64> interpolate_omp(const Field& F, const std::vector<u64>& x, const std::vector<u64>& y, int threads) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("interpolation: size mismatch");
  std::vector<u64> c = y, next(n), poly(n, 0), tmp(n, 0);
  bool failed = false;
#pragma omp parallel num_threads(threads)
  {
    std::vector<u64> scratch;
    const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t id = static_cast<std::size_t>(omp_get_thread_num());
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t len = n - j;
      const std::size_t lo = j + len * id / nt, hi = j + len * (id + 1) / nt;
      try {
        divided_level(F, x, c, next, j, lo, hi, scratch);
      } catch (const std::invalid_argument&) {
#pragma omp atomic write
        failed = true;
      }
#pragma omp barrier
      for (std::size_t i = lo; i < hi; ++i) c[i] = next[i];
#pragma omp barrier
    }
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t lo = 1 + (n - 1) * id / nt, hi = 1 + (n - 1) * (id + 1) / nt;
      for (std::size_t i = lo; i < hi; ++i) tmp[i] = F.sub(poly[i - 1], F.mul(poly[i], x[k]));
#pragma omp barrier
#pragma omp single
      {
        tmp[0] = F.sub(c[k], F.mul(poly[0], x[k]));
        poly.swap(tmp);
      }
    }
  }
  if (failed) throw std::invalid_argument("interpolation: repeated point");
  return poly;
}

}  // namespace ffg::kernels
