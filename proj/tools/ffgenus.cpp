#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffgenus/bipoly.hpp"
#include "ffgenus/genus.hpp"
#include "ffgenus/lattice.hpp"
#include "ffgenus/report.hpp"
#include "ffgenus/suites.hpp"

using namespace ffg;
using nlohmann::ordered_json;

namespace {

struct Common {
  u64 q = 0;
  std::string f;
  u64 seed = 0x5eed5eedULL;
  int threads = 1;
  int constant_degree = 1;
  bool trace = false, json = false, strict = false, omit_timings = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_poly) {
  if (needs_poly) {
    cmd->add_option("--q", c.q, "Field size (a prime power)")->required();
    cmd->add_option("--f", c.f, "Defining polynomial in t and x, monic in x")->required();
    cmd->add_option("--constant-degree", c.constant_degree, "Degree of the exact constant field over F_q")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", c.strict, "Exit with status 2 when warnings are reported");
    cmd->add_flag("--trace", c.trace, "Print Montes trace lines to stderr (also MONTES_TRACE=1)");
  }
  cmd->add_option("--seed", c.seed, "Seed for randomized factorization");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", c.json, "Emit JSON");
  cmd->add_flag("--omit-timings", c.omit_timings, "Leave timings out of the output");
}

bool env_trace() {
  const char* v = std::getenv("MONTES_TRACE");
  return v && std::string(v) == "1";
}

GenusInput make_input(const Common& c) {
  const FieldPtr F = field_of_size(c.q);
  GenusInput in{DefiningPoly::parse(c.f, F)};
  in.constant_degree = c.constant_degree;
  in.threads = c.threads;
  in.seed = c.seed;
  in.trace = c.trace || env_trace();
  return in;
}

int finish(const GenusReport& r, const Common& c, bool has_genus) {
  for (const auto& line : r.trace) std::cerr << line << "\n";
  const ReportContext ctx{c.q, c.f, !c.omit_timings};
  if (c.json)
    std::cout << report_to_json(r, ctx, has_genus).dump(2) << "\n";
  else
    std::cout << report_to_text(r, ctx, has_genus);
  return c.strict && !r.warnings.empty() ? 2 : 0;
}

int run_disc(const Common& c) {
  const FieldPtr F = field_of_size(c.q);
  const DefiningPoly f = DefiningPoly::parse(c.f, F);
  const CurveProfile prof = curve_profile(f, c.threads);
  if (c.json) {
    ordered_json j;
    j["version"] = kReportVersion;
    j["q"] = c.q;
    j["f"] = c.f;
    j["n"] = f.n();
    j["Cf"] = prof.Cf;
    j["delta"] = prof.delta;
    j["delta_inf"] = prof.delta_inf;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n = " << f.n() << ", Cf = " << prof.Cf << ", delta = " << prof.delta
              << ", delta_inf = " << prof.delta_inf << "\n";
  }
  return 0;
}

RationalFunc parse_entry(const std::string& s, const FieldPtr& F) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return RationalFunc(parse_poly(s, F));
  return RationalFunc(parse_poly(s.substr(0, slash), F), parse_poly(s.substr(slash + 1), F));
}

Q parse_weight(const ordered_json& w) {
  if (w.is_number_integer()) return Q(w.get<i64>());
  const std::string s = w.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Q(std::stoll(s));
  return Q(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

int run_lattice_demo(u64 q, const std::string& basis_text, const std::string& weights_text) {
  const FieldPtr F = field_of_size(q);
  const auto bj = ordered_json::parse(basis_text);
  const auto wj = ordered_json::parse(weights_text);
  WeightedNorm N;
  for (const auto& w : wj) N.w.push_back(parse_weight(w));
  Basis B;
  for (const auto& v : bj) {
    Vec b;
    for (const auto& e : v) b.push_back(parse_entry(e.is_string() ? e.get<std::string>() : e.dump(), F));
    B.push_back(std::move(b));
  }
  std::cout << "weights:";
  for (const auto& w : N.w) std::cout << " " << q_to_string(w);
  std::cout << "\ninput basis:\n";
  for (std::size_t i = 0; i < B.size(); ++i)
    std::cout << "  b" << i + 1 << " = " << vec_to_string(B[i]) << ", length " << q_to_string(*norm_eval(N, B[i]))
              << "\n";
  std::cout << "reduced: " << (is_reduced(B, N) ? "yes" : "no") << "\n";
  const auto R = reduce_basis(B, N, [](const std::string& line) { std::cout << "  " << line << "\n"; });
  std::cout << "reduced basis:\n";
  for (std::size_t i = 0; i < R.basis.size(); ++i)
    std::cout << "  b" << i + 1 << " = " << vec_to_string(R.basis[i]) << ", length " << q_to_string(R.lengths[i])
              << ", ceiling " << R.ceil_lengths[i] << "\n";
  std::cout << "det degree: " << R.det_degree << "\n";
  std::cout << "orthonormal basis:\n";
  const auto O = orthonormalize(R);
  for (std::size_t i = 0; i < O.size(); ++i) std::cout << "  " << vec_to_string(O[i]) << "\n";
  return 0;
}

std::string cell(i64 expected, i64 got) {
  return expected == got ? std::to_string(got) : std::to_string(got) + " (" + std::to_string(expected) + ")";
}

int run_bench(const std::string& name, bool all, const Common& c) {
  std::vector<std::string> names;
  if (name == "all")
    names = suite_names();
  else
    names = {name};
  ordered_json out = ordered_json::array();
  int mismatches = 0;
  if (!c.json)
    std::printf("%-6s %-22s %6s %8s %12s %12s %10s %10s %10s  %s\n", "suite", "row", "q", "genus", "delta", "delta_inf",
                "I.C. ms", "montes ms", "total ms", "status");
  for (const auto& sname : names) {
    for (const auto& row : suite(sname)) {
      if (row.heavy && !all) continue;
      const FieldPtr F = field_of_size(row.q);
      GenusInput in{DefiningPoly::parse(row.f, F)};
      in.threads = c.threads;
      in.seed = c.seed;
      GenusReport r;
      std::string error;
      try {
        r = genus_compute(in);
      } catch (const std::exception& ex) {
        error = ex.what();
      }
      const bool ok = error.empty() && r.g == row.g && r.delta == row.delta &&
                      (!row.delta_inf || r.delta_inf == *row.delta_inf);
      mismatches += !ok;
      if (c.json) {
        ordered_json j;
        j["suite"] = sname;
        j["row"] = row.label;
        j["expected"] = {{"genus", row.g}, {"delta", row.delta}, {"delta_inf", row.delta_inf.value_or(-1)}};
        if (error.empty())
          j["report"] = report_to_json(r, {row.q, row.f, !c.omit_timings});
        else
          j["error"] = error;
        j["match"] = ok;
        out.push_back(j);
        continue;
      }
      if (!error.empty()) {
        std::printf("%-6s %-22s %6llu error: %s\n", sname.c_str(), row.label.c_str(),
                    static_cast<unsigned long long>(row.q), error.c_str());
        continue;
      }
      std::printf("%-6s %-22s %6llu %8s %12s %12s %10.1f %10.1f %10.1f  %s\n", sname.c_str(), row.label.c_str(),
                  static_cast<unsigned long long>(row.q), cell(row.g, r.g).c_str(), cell(row.delta, r.delta).c_str(),
                  cell(row.delta_inf.value_or(r.delta_inf), r.delta_inf).c_str(),
                  c.omit_timings ? 0.0 : r.timings.disc_ms + r.timings.factor_ms,
                  c.omit_timings ? 0.0 : r.timings.montes_ms, c.omit_timings ? 0.0 : r.timings.total_ms,
                  ok ? "match" : "MISMATCH");
    }
  }
  if (c.json) std::cout << out.dump(2) << "\n";
  return c.strict && mismatches ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus of global function fields"};
  app.require_subcommand(1);

  Common gc, ic, dc, bc;
  auto* genus = app.add_subcommand("genus", "Compute the genus");
  add_common(genus, gc, true);
  auto* index = app.add_subcommand("index", "Index contributions of every prime, without the genus");
  add_common(index, ic, true);
  auto* disc = app.add_subcommand("disc", "delta and delta_inf only");
  disc->add_option("--q", dc.q, "Field size (a prime power)")->required();
  disc->add_option("--f", dc.f, "Defining polynomial")->required();
  disc->add_option("--threads", dc.threads, "Worker threads")->check(CLI::PositiveNumber);
  disc->add_flag("--json", dc.json, "Emit JSON");

  u64 lq = 5;
  std::string basis = R"([["1","0"],["t","1"]])", weights = "[0,0]";
  auto* lattice = app.add_subcommand("lattice-demo", "Reduce a basis under a weighted norm and trace the steps");
  lattice->add_option("--q", lq, "Field size (a prime power)");
  lattice->add_option("--basis", basis, "JSON list of basis vectors; entries are polynomials or num/den");
  lattice->add_option("--weights", weights, "JSON list of weights; integers or \"a/b\" strings");

  std::string suite_name;
  bool all_rows = false;
  auto* bench = app.add_subcommand("bench", "Run a published example family and compare");
  bench->add_option("--suite", suite_name, "Suite name or 'all'")->required();
  bench->add_flag("--all", all_rows, "Include the large rows");
  bench->add_flag("--strict", bc.strict, "Exit with status 2 on any mismatch");
  add_common(bench, bc, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (genus->parsed()) return finish(genus_compute(make_input(gc)), gc, true);
    if (index->parsed()) return finish(index_breakdown(make_input(ic)), ic, false);
    if (disc->parsed()) return run_disc(dc);
    if (lattice->parsed()) return run_lattice_demo(lq, basis, weights);
    if (bench->parsed()) return run_bench(suite_name, all_rows, bc);
  } catch (const ParseError& ex) {
    std::cerr << "error: parse failure at line 1, " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
