#include "ffgenus/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ffg {

using nlohmann::ordered_json;

FieldPtr field_of_size(u64 q) {
  if (q < 2) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  u64 p = q;
  for (u64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  u64 rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  return Field::make(p, m);
}

ordered_json report_to_json(const GenusReport& r, const ReportContext& ctx, bool has_genus) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["q"] = ctx.q;
  j["f"] = ctx.f;
  j["n"] = r.n;
  j["Cf"] = r.Cf;
  j["delta"] = r.delta;
  j["delta_inf"] = r.delta_inf;
  ordered_json primes = ordered_json::array();
  for (const auto& e : r.primes)
    primes.push_back({{"p", e.p.to_string()}, {"deg", e.deg}, {"delta_p", e.delta_p}, {"ind_p", e.ind_p}});
  j["primes"] = primes;
  j["ind_inf"] = r.ind_inf;
  j["finite_index"] = r.finite_index;
  j["genus"] = has_genus ? ordered_json(r.g) : ordered_json(nullptr);
  if (ctx.timings)
    j["timings"] = {{"disc_ms", r.timings.disc_ms},
                    {"factor_ms", r.timings.factor_ms},
                    {"montes_ms", r.timings.montes_ms},
                    {"total_ms", r.timings.total_ms}};
  j["warnings"] = r.warnings;
  return j;
}

GenusReport report_from_json(const ordered_json& j) {
  if (j.at("version").get<int>() != kReportVersion) throw std::invalid_argument("unsupported report version");
  const FieldPtr F = field_of_size(j.at("q").get<u64>());
  GenusReport r;
  r.n = j.at("n").get<int>();
  r.Cf = j.at("Cf").get<int>();
  r.delta = j.at("delta").get<i64>();
  r.delta_inf = j.at("delta_inf").get<i64>();
  for (const auto& e : j.at("primes"))
    r.primes.push_back({parse_poly(e.at("p").get<std::string>(), F), e.at("deg").get<int>(),
                        e.at("delta_p").get<i64>(), e.at("ind_p").get<i64>()});
  r.ind_inf = j.at("ind_inf").get<i64>();
  r.finite_index = j.at("finite_index").get<i64>();
  if (!j.at("genus").is_null()) r.g = j.at("genus").get<i64>();
  if (j.contains("timings")) {
    const auto& t = j.at("timings");
    r.timings = {t.at("disc_ms").get<double>(), t.at("factor_ms").get<double>(), t.at("montes_ms").get<double>(),
                 t.at("total_ms").get<double>()};
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

bool same_report(const GenusReport& a, const GenusReport& b) {
  if (a.n != b.n || a.Cf != b.Cf || a.delta != b.delta || a.delta_inf != b.delta_inf || a.ind_inf != b.ind_inf ||
      a.finite_index != b.finite_index || a.g != b.g || a.warnings != b.warnings || a.primes.size() != b.primes.size())
    return false;
  for (std::size_t i = 0; i < a.primes.size(); ++i) {
    const auto &x = a.primes[i], &y = b.primes[i];
    if (!(x.p == y.p) || x.deg != y.deg || x.delta_p != y.delta_p || x.ind_p != y.ind_p) return false;
  }
  const auto& s = a.timings;
  const auto& t = b.timings;
  return s.disc_ms == t.disc_ms && s.factor_ms == t.factor_ms && s.montes_ms == t.montes_ms && s.total_ms == t.total_ms;
}

std::string report_to_text(const GenusReport& r, const ReportContext& ctx, bool has_genus) {
  std::ostringstream os;
  os << "q = " << ctx.q << "\n";
  os << "f = " << ctx.f << "\n";
  os << "n = " << r.n << ", Cf = " << r.Cf << ", delta = " << r.delta << ", delta_inf = " << r.delta_inf << "\n";
  if (!r.primes.empty()) {
    os << "primes:\n";
    for (const auto& e : r.primes)
      os << "  " << e.p.to_string() << "  deg " << e.deg << "  delta_p " << e.delta_p << "  ind_p " << e.ind_p << "\n";
  }
  os << "finite index = " << r.finite_index << ", ind_inf = " << r.ind_inf << "\n";
  if (has_genus) os << "genus = " << r.g << " (constant degree " << r.constant_degree << ")\n";
  if (ctx.timings) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "time: disc %.1f ms, factor %.1f ms, montes %.1f ms, total %.1f ms\n",
                  r.timings.disc_ms, r.timings.factor_ms, r.timings.montes_ms, r.timings.total_ms);
    os << buf;
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace ffg
