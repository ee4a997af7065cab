// Copyright 2026 The qsnake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qsnake: q-deformed rationals, snake graphs and Kasteleyn determinants.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "qsnake/qsnake.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("QSNAKE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring QSNAKE_JOBS=" << env << "\n";
  }
  return 1;
}

void require_coprime(std::int64_t r, std::int64_t s) {
  if (s == 0) throw UsageError("s must be nonzero");
  if (std::gcd(r, s) != 1) throw UsageError("r and s must be coprime");
}

void require_snake_pair(std::int64_t r, std::int64_t s) {
  require_coprime(r, s);
  if (s < 1 || r < s) throw UsageError("snake graphs need r >= s >= 1");
}

using qsnake::Json;
using qsnake::LaurentPoly;

std::string fraction_text(const LaurentPoly& num, const LaurentPoly& den) {
  return "(" + qsnake::to_string(num) + ") / (" + qsnake::to_string(den) + ")";
}

int cmd_compute(std::int64_t r, std::int64_t s, const std::string& format, bool all_routes) {
  require_coprime(r, s);
  const bool json = format == "json";
  if (all_routes) {
    if (s < 1 || r < s) throw UsageError("--all-routes needs r >= s >= 1");
    const auto cmp = qsnake::q_rational_all_routes(r, s);
    if (json) {
      Json out = qsnake::qrational_json(r, s, cmp.cf, cmp.matrix);
      out["routes"] = {{"matrix", qsnake::qrational_json(r, s, cmp.cf, cmp.matrix)},
                       {"continued_fraction", qsnake::qrational_json(r, s, cmp.cf, cmp.cf_eval)},
                       {"continuant", cmp.continuant},
                       {"psl2z", qsnake::qrational_json(r, s, cmp.cf, cmp.general)}};
      out["agree"] = cmp.agree;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "cf                 " << cmp.cf << "\n"
                << "matrix             " << fraction_text(cmp.matrix.num, cmp.matrix.den) << "\n"
                << "continued fraction " << fraction_text(cmp.cf_eval.num, cmp.cf_eval.den) << "\n"
                << "continuant         " << qsnake::to_string(cmp.continuant) << "\n"
                << "psl2z              " << fraction_text(cmp.general.num, cmp.general.den) << "\n"
                << "agree              " << (cmp.agree ? "yes" : "no") << "\n";
    }
    return cmp.agree ? kOk : kVerifyFailed;
  }

  qsnake::QRational x;
  if (s >= 1 && r >= s) {
    x = qsnake::q_rational(r, s);
  } else {
    x = qsnake::to_qrational(qsnake::q_map_general(qsnake::Rational::make(r, s)));
  }
  if (json) {
    Json out{{"r", r}, {"s", s}};
    if (s >= 1 && r >= s) out["cf"] = qsnake::cf_expand(r, s);
    out["num"] = x.num;
    out["den"] = x.den;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "[" << r << "/" << s << "]_q = " << fraction_text(x.num, x.den) << "\n";
  }
  return kOk;
}

int cmd_snake(std::int64_t r, std::int64_t s, const std::string& render, const std::string& out_path) {
  require_snake_pair(r, s);
  const auto cf = qsnake::cf_expand(r, s);
  const auto g = qsnake::make_snake(cf);
  std::string text;
  if (render == "ascii") {
    text = qsnake::render_ascii(g);
  } else if (render == "svg") {
    text = qsnake::render_svg(g);
  } else if (render == "tikz") {
    text = qsnake::render_tikz(g);
  } else {
    text = qsnake::snake_json(cf, g).dump(2) + "\n";
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + out_path);
    f << text;
  }
  return kOk;
}

int cmd_matchings(std::int64_t r, std::int64_t s) {
  require_snake_pair(r, s);
  std::cout << qsnake::matchings_json(r, s).dump(2) << "\n";
  return kOk;
}

int cmd_kasteleyn(std::int64_t r, std::int64_t s) {
  require_snake_pair(r, s);
  const auto rep = qsnake::verify_kasteleyn(r, s);
  std::cout << qsnake::kasteleyn_json(rep).dump(2) << "\n";
  return rep.pass() ? kOk : kVerifyFailed;
}

int cmd_fibonacci(std::int64_t n, const std::string& format) {
  if (n < 1) throw UsageError("n must be >= 1");
  const auto table = qsnake::fibonacci_table(n + 1);
  bool all_ok = true;
  Json rows = Json::array();
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t top = qsnake::fibonacci_number(k + 1);
    const std::int64_t bottom = qsnake::fibonacci_number(k);
    const LaurentPoly& num = table[static_cast<std::size_t>(k + 1)].numerator;
    const LaurentPoly& den = table[static_cast<std::size_t>(k)].denominator;
    const auto direct = qsnake::q_rational(top, bottom);
    const bool route_ok = direct.num == num && direct.den == den;
    const bool kast_ok = k < 2 || qsnake::fibonacci_numerator_via_kasteleyn(k) == num;
    all_ok = all_ok && route_ok && kast_ok;
    if (format == "json") {
      rows.push_back({{"k", k},
                      {"r", top},
                      {"s", bottom},
                      {"num", num},
                      {"den", den},
                      {"matches_q_rational", route_ok},
                      {"matches_kasteleyn", kast_ok}});
    } else {
      std::cout << "k=" << k << "  [" << top << "/" << bottom << "]_q = " << fraction_text(num, den)
                << "  route:" << (route_ok ? "ok" : "FAIL")
                << "  kasteleyn:" << (k < 2 ? "-" : (kast_ok ? "ok" : "FAIL")) << "\n";
    }
  }
  if (format == "json") std::cout << Json{{"rows", rows}, {"pass", all_ok}}.dump(2) << "\n";
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_verify(std::int64_t max_r, unsigned jobs) {
  if (max_r < 2) throw UsageError("--max-r must be >= 2");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  const auto sum = qsnake::run_sweep(max_r, jobs);
  std::cout << "pairs " << sum.pairs << " (coprime, 1 <= s < r <= " << max_r << ")\n"
            << "passed " << sum.passed << "\n"
            << "failed " << sum.pairs - sum.passed << "\n"
            << "denominator candidate vs S(q): equal " << sum.denominators_equal << ", mirror "
            << sum.denominators_mirror << ", shift " << sum.denominators_shift << ", unrelated "
            << sum.denominators_unrelated << "\n";
  if (sum.first_failure) {
    std::cout << "first counterexample " << sum.first_failure->r << "/" << sum.first_failure->s
              << " (" << sum.first_failure->failures() << ")\n";
  }
  std::cout << (sum.pass() ? "PASS" : "FAIL") << "\n";
  return sum.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed rationals, snake graphs and Kasteleyn determinants"};
  app.require_subcommand(1);

  std::int64_t r = 0, s = 0, n = 0, max_r = 0;
  std::string format = "text", render = "ascii", out_path, fib_format = "text";
  bool all_routes = false;
  unsigned jobs = default_jobs();

  auto* compute = app.add_subcommand("compute", "Print [r/s]_q");
  compute->add_option("r", r)->required();
  compute->add_option("s", s)->required();
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  compute->add_flag("--all-routes", all_routes, "Compare all four computation routes");

  auto* snake = app.add_subcommand("snake", "Draw the weighted snake graph of r/s");
  snake->add_option("r", r)->required();
  snake->add_option("s", s)->required();
  snake->add_option("--render", render)->check(CLI::IsMember({"ascii", "svg", "tikz", "json"}));
  snake->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* matchings = app.add_subcommand("matchings", "List the perfect matchings of the snake of r/s");
  matchings->add_option("r", r)->required();
  matchings->add_option("s", s)->required();

  auto* kasteleyn = app.add_subcommand("kasteleyn", "Kasteleyn matrix and determinant of r/s");
  kasteleyn->add_option("r", r)->required();
  kasteleyn->add_option("s", s)->required();

  auto* fibonacci = app.add_subcommand("fibonacci", "q-Fibonacci table up to n");
  fibonacci->add_option("n", n)->required();
  fibonacci->add_option("--format", fib_format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Check every identity on all coprime pairs up to --max-r");
  verify->add_option("--max-r", max_r)->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: $QSNAKE_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(r, s, format, all_routes);
    if (*snake) return cmd_snake(r, s, render, out_path);
    if (*matchings) return cmd_matchings(r, s);
    if (*kasteleyn) return cmd_kasteleyn(r, s);
    if (*fibonacci) return cmd_fibonacci(n, fib_format);
    if (*verify) return cmd_verify(max_r, jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
