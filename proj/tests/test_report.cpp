#include "doctest.h"
#include "ffgenus/report.hpp"
#include "ffgenus/suites.hpp"

using namespace ffg;

TEST_CASE("field sizes") {
  CHECK(field_of_size(9)->characteristic() == 3);
  CHECK(field_of_size(9)->degree() == 2);
  CHECK(field_of_size(10007)->degree() == 1);
  CHECK(field_of_size(1024)->size() == 1024);
  CHECK_THROWS_AS(field_of_size(6), std::invalid_argument);
  CHECK_THROWS_AS(field_of_size(1), std::invalid_argument);
  CHECK_THROWS_AS(field_of_size(0), std::invalid_argument);
}

TEST_CASE("json round trip") {
  const FieldPtr F = field_of_size(13);
  const std::string f = "(x^2+t)^2 + (t-1)t^3 x";
  const GenusReport r = genus_compute(GenusInput{DefiningPoly::parse(f, F)});
  for (bool timings : {true, false}) {
    const auto j = report_to_json(r, {13, f, timings});
    CHECK(j.contains("timings") == timings);
    GenusReport expect = r;
    if (!timings) expect.timings = {};
    const GenusReport back = report_from_json(nlohmann::ordered_json::parse(j.dump()));
    CHECK(same_report(back, expect));
    CHECK(report_to_json(back, {13, f, timings}).dump() == j.dump());
  }
  const auto j = report_to_json(r, {13, f, false});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "q", "f", "n", "Cf", "delta", "delta_inf", "primes", "ind_inf",
                                         "finite_index", "genus", "warnings"});
  CHECK(j["genus"] == 3);
  CHECK(report_to_json(r, {13, f, false}, false)["genus"].is_null());
}

TEST_CASE("text report") {
  const FieldPtr F = field_of_size(5);
  const GenusReport r = genus_compute(GenusInput{DefiningPoly::parse("x^2 - t^3", F)});
  const std::string s = report_to_text(r, {5, "x^2 - t^3", false});
  CHECK(s.find("genus = 0") != std::string::npos);
  CHECK(s.find("delta = 3, delta_inf = 1") != std::string::npos);
  CHECK(s.find("time:") == std::string::npos);
}

TEST_CASE("suite rows parse") {
  for (const auto& name : suite_names()) {
    const auto rows = suite(name);
    CHECK(!rows.empty());
    for (const auto& row : rows) {
      const FieldPtr F = field_of_size(row.q);
      CHECK_NOTHROW(DefiningPoly::parse(row.f, F));
    }
  }
  CHECK(DefiningPoly::parse(suite("ex6")[4].f, field_of_size(13)).n() == 72);
  CHECK(DefiningPoly::parse(suite("ex5")[1].f, field_of_size(13)).n() == 42);
  CHECK(DefiningPoly::parse(suite("ex2")[0].f, field_of_size(3)).n() == 12);
  CHECK_THROWS_AS(suite("ex99"), std::invalid_argument);
}
