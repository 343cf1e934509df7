// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Usage: divdiff_acceptance <path to divdiff binary> <fixtures dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "divdiff/cascade.hpp"
#include "divdiff/constraint_system.hpp"
#include "divdiff/differences.hpp"
#include "divdiff/interpolation.hpp"
#include "divdiff/min_lipschitz.hpp"
#include "divdiff/nullspace.hpp"
#include "divdiff/proof_probes.hpp"
#include "../unit/test_support.hpp"

using namespace divdiff;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string tool_path;
std::string fixtures_dir;

// Positive on [0,1] so no knot or shifted point hits a pole.
FuncSpec random_rational_function(testing::RandomRationals& gen) {
  RationalPolynomial den{gen.positive(5, 4), Rational(0), gen.positive(5, 4)};
  return FuncSpec::rational_function(gen.polynomial(gen.integer(0, 6)), den);
}

FuncSpec random_spec(testing::RandomRationals& gen, int kind) {
  switch (kind % 3) {
    case 0: return FuncSpec::polynomial(gen.polynomial(gen.integer(0, 10)));
    case 1: return random_rational_function(gen);
    default: return FuncSpec::piecewise_linear(gen.grid_function(gen.integer(1, 12)));
  }
}

Outcome identity_suite() {
  Outcome out;
  testing::RandomRationals gen(1001);
  std::vector<FuncSpec> corpus;
  for (int d = 0; d <= 10; ++d) corpus.push_back(FuncSpec::polynomial(gen.polynomial(d)));
  for (int i = 0; i < 60; ++i) corpus.push_back(random_spec(gen, i));
  for (const auto& f : corpus) {
    for (int n = 1; n <= 12; ++n) {
      const auto check = check_equispaced_identity(f, n);
      out.require(check.equal && check.lhs == check.rhs, f.describe() + " n=" + std::to_string(n));
    }
  }
  out.detail = out.ok ? std::to_string(corpus.size()) + " functions x n=1..12" : out.detail;
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  testing::RandomRationals gen(1002);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto knots = gen.distinct(static_cast<std::size_t>(gen.integer(1, 11)));
    std::vector<Rational> values;
    for (std::size_t k = 0; k < knots.size(); ++k) values.push_back(gen.next());
    const KnotValueList<Rational> kv(knots, values);
    out.require(divided_difference_direct(kv) == divided_difference_recursive(kv), "trial " + std::to_string(trial));
  }
  return out;
}

Outcome integral_representation() {
  Outcome out;
  testing::RandomRationals gen(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalPolynomial p = gen.polynomial(gen.integer(0, 10));
    const int n = gen.integer(1, 8);
    const Rational x = gen.next(), h = gen.positive();
    const Rational direct = finite_difference(p, x, h, n);
    out.require(direct == finite_difference_via_integral(p, x, h, n), "trial " + std::to_string(trial));
  }
  return out;
}

Outcome leading_coefficient_bridge() {
  Outcome out;
  testing::RandomRationals gen(1004);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 10);
    RationalVector v(n + 1);
    for (int k = 0; k <= n; ++k) v(k) = gen.next();
    const EquispacedSample<Rational> s(n, std::vector<Rational>(v.begin(), v.end()));
    // A grid function on the knots k/n takes exactly these values there.
    const FuncSpec f = FuncSpec::piecewise_linear(GridFunction(n, v));
    out.require(leading_coefficient(lagrange_equispaced(s), n) == equispaced_divided_difference(f, n),
                "trial " + std::to_string(trial));
  }
  return out;
}

Outcome polynomial_theorem() {
  Outcome out;
  out.require(polynomial_cascade(RationalPolynomial{}).zero_polynomial(), "zero polynomial");
  testing::RandomRationals gen(1005);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = gen.integer(0, 10);
    const auto res = polynomial_cascade(gen.polynomial(degree));
    out.require(res.nonzero_order == degree, "trial " + std::to_string(trial));
  }
  return out;
}

Outcome nullspace_fixtures() {
  Outcome out;
  const std::array<std::int64_t, 4> dims{0, 0, 3, 8};
  for (int N = 1; N <= 4; ++N) {
    const auto ns = nullspace(build_constraint_system(N));
    out.require(ns.dimension() == dims[N - 1], "dimension at N=" + std::to_string(N));
  }
  const auto three = nullspace(build_constraint_system(3));
  out.require(three.forced_zero_points() == std::vector<std::int64_t>{0, 3, 6}, "forced zeros at N=3");
  for (const auto& g : three.basis()) out.require(g.value(2) == g.value(4), "f(1/3) = f(2/3)");
  // the relation is the only one left among the free points
  out.require(three.free_columns() == std::vector<std::int64_t>{1, 4, 5}, "free columns at N=3");
  return out;
}

Outcome min_lipschitz_fixture() {
  Outcome out;
  out.require(min_lipschitz_unit_norm(2).infeasible(), "N=2 feasible");
  const auto three = min_lipschitz_unit_norm(3);
  out.require(three.value == Rational(6), "N=3 value");
  if (three.witness) {
    const auto& w = *three.witness;
    const auto system = build_constraint_system(3);
    out.require((system.rows * w.values()).isZero(), "witness violates constraints");
    out.require(w.sup_norm() == Rational(1), "witness norm");
    out.require(w.lipschitz_constant() == Rational(6), "witness Lipschitz constant");
  } else {
    out.require(false, "no witness");
  }
  return out;
}

Outcome telescoping() {
  Outcome out;
  testing::RandomRationals gen(1008);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen.integer(1, 6);
    const int j = gen.integer(1, n);
    const FuncSpec g = random_spec(gen, trial).with_zero_extension();
    const Rational x(Integer(gen.integer(0, 20)), Integer(20));
    const Rational h(Integer(1), Integer(gen.integer(1, 2000)));
    const auto check = telescope_shift_identity(g, x, n, j, h, gen.integer(1, 50));
    out.require(check.equal, "trial " + std::to_string(trial));
  }
  return out;
}

Outcome averaging_decay() {
  Outcome out;
  testing::RandomRationals gen(1009);
  for (int trial = 0; trial < 20; ++trial) {
    const FuncSpec f = random_spec(gen, trial).with_zero_extension();
    const Rational x(Integer(gen.integer(0, 19)), Integer(20));
    const Rational h(Integer(1), Integer(gen.integer(2, 60)));
    const int n = gen.integer(0, 6);
    std::optional<Rational> frozen;
    for (std::int64_t N = 4; N <= 256; N *= 2) {
      const auto r = averaging_probe(f, x, h, n, N);
      const std::string where = "trial " + std::to_string(trial) + " N=" + std::to_string(N);
      out.require(abs(r.residual) <= r.bound, where + " exceeds bound");
      if (N >= r.cutoff) {
        const Rational scaled = r.residual * Rational(N);
        if (!frozen) frozen = scaled;
        out.require(scaled == *frozen, where + " residual*N moved");
      }
    }
  }
  return out;
}

std::string capture(const std::string& command, int& status) {
  std::string text;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return text;
  }
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), got);
  status = pclose(pipe);
  return text;
}

void check_exact_strings(const nlohmann::json& node, Outcome& out, const std::string& where) {
  static const std::regex rational(R"(-?\d+(/\d+)?)");
  if (node.is_structured()) {
    for (const auto& child : node) check_exact_strings(child, out, where);
  } else if (node.is_string() && std::regex_match(node.get_ref<const std::string&>(), rational)) {
    const auto& s = node.get_ref<const std::string&>();
    out.require(Rational::parse(s).to_string() == s, where + " does not re-parse: " + s);
  }
}

Outcome cli_round_trip() {
  Outcome out;
  if (tool_path.empty()) {
    out.require(false, "no divdiff binary given");
    return out;
  }
  const std::string hat = "pl:" + fixtures_dir + "/hat.csv";
  const std::string hat6 = "pl:" + fixtures_dir + "/hat6.csv";
  const std::vector<std::string> invocations{
      "eval --knots 0,1,3 --values 1,2,-1",
      "eval --func 'ratfun:1;2,1' --knots 0,1/3,1/2,1",
      "uniform --func poly:1/2,0,-3,0,1 --n 4",
      "fd --func " + hat + " --x 1/8 --h 1/8 --n 3",
      "identity --func 'ratfun:1,1;3,0,1' --n 6",
      "interp --func " + hat6 + " --n 3",
      "cascade --func poly:0,-1,1",
      "nullspace --N 3 --basis",
      "minlip --N 3",
      "probe --func " + hat + " --x 0 --h 1/4 --n 1 --N 4 --Nmax 64",
      "telescope --func " + hat6 + " --extend-zero --x 1/10 --h 1/100 --n 4 --j 3 --N 20",
      "walkthrough --func " + hat6 + " --x 1/2 --h 1/10 --n 3 --N 16",
  };
  for (const auto& args : invocations) {
    for (const char* format : {"json", "csv"}) {
      const std::string command = "'" + tool_path + "' " + args + " --decimals --format " + format + " 2>/dev/null";
      int first_status = 0, second_status = 0;
      const std::string first = capture(command, first_status);
      const std::string second = capture(command, second_status);
      out.require(first_status == 0 && second_status == 0, args + " exited nonzero");
      out.require(!first.empty() && first == second, args + " (" + format + ") differs between runs");
      if (std::string(format) == "json" && !first.empty()) {
        try {
          check_exact_strings(nlohmann::json::parse(first), out, args);
        } catch (const nlohmann::json::exception& e) {
          out.require(false, args + ": " + e.what());
        }
      }
    }
  }
  return out;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) tool_path = argv[1];
  if (argc > 2) fixtures_dir = argv[2];

  const std::vector<Criterion> criteria{
      {"equispaced identity suite", 10, identity_suite},
      {"direct and recursive divided differences agree", 5, oracle_equivalence},
      {"integral representation of finite differences", 10, integral_representation},
      {"leading coefficient equals divided difference", 5, leading_coefficient_bridge},
      {"polynomial cascade", 5, polynomial_theorem},
      {"null space fixtures", 1, nullspace_fixtures},
      {"minimal Lipschitz fixture", 5, min_lipschitz_fixture},
      {"telescoping identity", 10, telescoping},
      {"averaging decay", 20, averaging_decay},
      {"CLI round trip", 10, cli_round_trip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) outcome.require(false, "over the time budget");
    if (!outcome.ok) ++failures;
    std::ostringstream line;
    line << (outcome.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.name;
    line.precision(3);
    line << "  [" << std::fixed << seconds << " s / " << c.budget_seconds << " s]";
    if (!outcome.detail.empty()) line << "  " << outcome.detail;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
