#include "ffgenus/suites.hpp"

#include <stdexcept>

namespace ffg {

namespace {

// x^d + x^(d-1) + ... + 1 in the variable v
std::string geometric(char v, int d) {
  std::string s;
  for (int i = d; i >= 2; --i) s += std::string(1, v) + "^" + std::to_string(i) + " + ";
  if (d >= 1) s += std::string(1, v) + " + ";
  return s + "1";
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::vector<SuiteRow> ex1() {
  return {{"n=5 k=7 r=10", 37, "(x + " + geometric('t', 10) + ")^5 + t^7", 0, 28, 172, false}};
}

std::vector<SuiteRow> ex2() {
  const auto row = [](int m, int k, i64 g, i64 d, i64 di, bool heavy) {
    const std::string ms = std::to_string(m);
    const std::string inner = "x^" + ms + " (x + t)^" + ms + " (x + 2t)^" + ms + " + t (t^2 + 1)^" + std::to_string(k);
    return SuiteRow{"m=" + ms + " k=" + std::to_string(k), 3,
                    paren(inner) + "^" + ms + " + t (t^2 + 1)^" + std::to_string(3 * m * k), g, d, di, heavy};
  };
  return {row(2, 2, 50, 264, 132, false), row(4, 5, 528, 5640, 1128, true), row(5, 7, 1136, 15510, 1140, true),
          row(7, 1, 1198, 7854, 13608, true)};
}

std::vector<SuiteRow> ex3() {
  const auto row = [](u64 q, const std::string& p, int k, i64 g, i64 d, i64 di, bool heavy) {
    return SuiteRow{"q=" + std::to_string(q) + " p=" + p + " k=" + std::to_string(k), q,
                    "(x^2 - 2x + 4)^3 + (" + p + ")^" + std::to_string(k), g, d, di, heavy};
  };
  return {row(7, "t+2", 7, 0, 35, 25, false), row(7, "t+2", 122, 60, 610, 20, false),
          row(101, "t+1", 901, 450, 4505, 25, false), row(73, "t^2+1", 3511, 3512, 35510, 20, true)};
}

std::vector<SuiteRow> ex4() {
  const auto row = [](u64 q, const std::string& p, int k, i64 g, i64 d, i64 di) {
    const std::string P = paren(p);
    const std::string inner = "(x^6 + 4" + P + "x^3 + 3" + P + "^2 x^2 + 4" + P + "^2)^2 + " + P + "^6";
    return SuiteRow{"q=" + std::to_string(q) + " p=" + p + " k=" + std::to_string(k), q,
                    paren(inner) + "^3 + " + P + "^" + std::to_string(k), g, d, di, true};
  };
  return {row(13, "t^2+1", 11, 85, 924, 336), row(101, "t+17", 112, 519, 3920, 1120),
          row(53, "t^2+2", 323, 3379, 22610, 70)};
}

std::vector<SuiteRow> ex5() {
  const auto row = [](u64 q, int m, int l, int k, i64 g, i64 d, i64 di, bool heavy) {
    return SuiteRow{"q=" + std::to_string(q) + " m=" + std::to_string(m) + " l=" + std::to_string(l) +
                        " k=" + std::to_string(k),
                    q, paren(geometric('x', l - 1)) + "^" + std::to_string(m) + " + t^" + std::to_string(k), g, d, di,
                    heavy};
  };
  return {row(101, 4, 3, 13, 6, 91, 21, false), row(13, 7, 7, 13, 0, 533, 1189, false),
          row(3, 13, 21, 2, 2, 518, 66822, true), row(13, 21, 21, 5, 36, 2095, 173885, true)};
}

std::vector<SuiteRow> ex6() {
  std::vector<std::string> f(7);
  f[1] = "x^2 + t";
  f[2] = paren(f[1]) + "^2 + (t-1) t^3 x";
  f[3] = paren(f[2]) + "^3 + t^11";
  f[4] = paren(f[3]) + "^3 + t^29 x " + paren(f[2]);
  f[5] = paren(f[4]) + "^2 + (t-1) t^42 x " + paren(f[1]) + paren(f[3]) + "^2";
  f[6] = paren(f[5]) + "^2 + t^88 x " + paren(f[3]) + paren(f[4]);
  const i64 g[] = {0, 0, 3, 9, 40, 133, 329};
  const i64 d[] = {0, 1, 16, 136, 1223, 4964, 19618};
  const i64 di[] = {0, 1, 8, 128, 1297, 4671, 21566};
  std::vector<SuiteRow> rows;
  for (int l = 1; l <= 6; ++l) rows.push_back({"l=" + std::to_string(l), 13, f[l], g[l], d[l], di[l], l == 6});
  return rows;
}

std::vector<SuiteRow> ex7() {
  const std::string f = "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x";
  std::vector<SuiteRow> rows;
  for (u64 q : {3, 97, 10007}) rows.push_back({"q=" + std::to_string(q), q, f, 140, 328, 1312, false});
  return rows;
}

std::vector<SuiteRow> ex10() {
  const std::string f = "x^40 + (t+1)x^23 + t^9 x + (t+1)x^13 + (t^5-3t^2)x^7 + t^62 x^3 + t + 1";
  return {{"q=5", 5, f, 1220, 2482, 638, false},
          {"q=125", 125, f, 1220, 2482, 638, true},
          {"q=3137", 3137, f, 1221, 2482, 638, true}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ex1", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "ex10"};
  return names;
}

std::vector<SuiteRow> suite(std::string_view name) {
  if (name == "ex1") return ex1();
  if (name == "ex2") return ex2();
  if (name == "ex3") return ex3();
  if (name == "ex4") return ex4();
  if (name == "ex5") return ex5();
  if (name == "ex6") return ex6();
  if (name == "ex7") return ex7();
  if (name == "ex10") return ex10();
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace ffg
