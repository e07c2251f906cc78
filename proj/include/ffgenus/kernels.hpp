#pragma once

#include <vector>

#include "ffgenus/poly.hpp"

namespace ffg::kernels {

/// Values of (-1)^(n(n-1)/2) Res_x(f, f_x) at each point, where f is monic in x
/// with coefficient i (a polynomial in t over the field) multiplying x^i.
std::vector<u64> disc_values_serial(const std::vector<Poly>& f, const std::vector<u64>& points);
std::vector<u64> disc_values_omp(const std::vector<Poly>& f, const std::vector<u64>& points, int threads);

/// Coefficients of the unique polynomial of degree < points.size() through
/// (points[i], values[i]); points must be distinct.
std::vector<u64> interpolate_serial(const Field& F, const std::vector<u64>& points, const std::vector<u64>& values);
std::vector<u64> interpolate_omp(const Field& F, const std::vector<u64>& points, const std::vector<u64>& values,
                                 int threads);

}  // namespace ffg::kernels
