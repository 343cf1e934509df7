#include "cli.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "divdiff/cascade.hpp"
#include "divdiff/combinatorics.hpp"
#include "divdiff/differences.hpp"
#include "divdiff/func_spec_io.hpp"
#include "divdiff/interpolation.hpp"
#include "divdiff/min_lipschitz.hpp"
#include "divdiff/nullspace.hpp"
#include "divdiff/proof_probes.hpp"
#include "report.hpp"

namespace divdiff::cli {

const char* const kVersion = "0.1.0";

namespace {

/// Raised for usage problems detected after argument parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

std::string degree_text(const RationalPolynomial& p) {
  return p.is_zero() ? "-inf" : std::to_string(p.degree());
}

nlohmann::json coefficient_array(const RationalPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

class Dispatcher {
 public:
  explicit Dispatcher(const RunConfig& config) : cfg_(config), report_(config.command, config.decimals) {
    echo_inputs();
  }

  /// Fills the report; returns the exit status.
  int dispatch() {
    static const std::map<std::string, int (Dispatcher::*)()> table = {
        {"eval", &Dispatcher::eval},           {"uniform", &Dispatcher::uniform},
        {"fd", &Dispatcher::fd},               {"identity", &Dispatcher::identity},
        {"interp", &Dispatcher::interp},       {"cascade", &Dispatcher::cascade},
        {"nullspace", &Dispatcher::nullspace}, {"minlip", &Dispatcher::minlip},
        {"probe", &Dispatcher::probe},         {"telescope", &Dispatcher::telescope},
        {"walkthrough", &Dispatcher::walkthrough},
    };
    const auto it = table.find(cfg_.command);
    if (it == table.end()) throw UsageError("unknown command '" + cfg_.command + "'");
    return (this->*(it->second))();
  }

  const Report& report() const { return report_; }

 private:
  void echo_inputs() {
    auto& in = report_.inputs();
    if (cfg_.func) in["func"] = *cfg_.func;
    if (cfg_.n) in["n"] = *cfg_.n;
    if (cfg_.N) in["N"] = *cfg_.N;
    if (cfg_.N_max) in["Nmax"] = *cfg_.N_max;
    if (cfg_.j) in["j"] = *cfg_.j;
    if (cfg_.x) in["x"] = *cfg_.x;
    if (cfg_.h) in["h"] = *cfg_.h;
    if (cfg_.knots) in["knots"] = *cfg_.knots;
    if (cfg_.values) in["values"] = *cfg_.values;
    if (cfg_.max_N_override) in["max_N"] = *cfg_.max_N_override;
    in["extend_zero"] = cfg_.extend_zero;
  }

  FuncSpec func() const { return parse_func_spec(require(cfg_.func, "--func"), cfg_.extend_zero); }
  Rational x() const { return Rational::parse(require(cfg_.x, "--x")); }
  Rational h() const { return Rational::parse(require(cfg_.h, "--h")); }
  int n() const { return require(cfg_.n, "--n"); }
  std::int64_t N() const { return require(cfg_.N, "--N"); }

  int capped_order(int default_cap) const {
    const int order = static_cast<int>(N());
    const int cap = cfg_.max_N_override.value_or(default_cap);
    if (order > cap) {
      throw UsageError("N = " + std::to_string(order) + " exceeds the cap " + std::to_string(cap) +
                       " (raise it with --max-N)");
    }
    return order;
  }

  int eval() {
    const auto knots = parse_rational_list(require(cfg_.knots, "--knots"));
    std::vector<Rational> values;
    if (cfg_.values) {
      values = parse_rational_list(*cfg_.values);
    } else {
      const FuncSpec f = func();
      for (const Rational& k : knots) values.push_back(f(k));
    }
    const KnotValueList<Rational> kv(knots, values);
    const Rational direct = divided_difference_direct(kv);
    const Rational recursive = divided_difference_recursive(kv);
    auto& r = report_.results();
    r["order"] = kv.order();
    report_.put(r, "direct", direct);
    report_.put(r, "recursive", recursive);
    r["equal"] = direct == recursive;
    return kExitOk;
  }

  int uniform() {
    const FuncSpec f = func();
    const int order = n();
    const auto knots = equispaced_knots<Rational>(order);
    std::vector<Rational> values;
    for (const Rational& k : knots) values.push_back(f(k));
    const KnotValueList<Rational> kv(knots, values);
    auto& r = report_.results();
    r["order"] = order;
    report_.put(r, "divided_difference", divided_difference_direct(kv));
    report_.put(r, "recursive", divided_difference_recursive(kv));
    return kExitOk;
  }

  int fd() {
    const FiniteDifferenceRequest req(func(), x(), h(), n());
    auto& r = report_.results();
    report_.put(r, "finite_difference", finite_difference(req));
    if (const auto* p = std::get_if<RationalPolynomial>(&req.f.variant()); p && req.n >= 1 && !req.f.extended_by_zero()) {
      report_.put(r, "via_integral", finite_difference_via_integral(*p, req.x, req.h, req.n));
    }
    return kExitOk;
  }

  int identity() {
    const auto check = check_equispaced_identity(func(), n());
    auto& r = report_.results();
    report_.put(r, "lhs", check.lhs);
    report_.put(r, "rhs", check.rhs);
    r["equal"] = check.equal;
    return kExitOk;
  }

  int interp() {
    const FuncSpec f = func();
    const int order = n();
    const auto sample = EquispacedSample<Rational>::of(f, order);
    const RationalPolynomial q = lagrange_equispaced(sample);
    auto& r = report_.results();
    r["coefficients"] = coefficient_array(q);
    r["degree"] = degree_text(q);
    report_.put(r, "leading_coefficient", leading_coefficient(q, order));
    if (order >= 1) {
      report_.put(r, "divided_difference", equispaced_divided_difference(f, order));
      r["degree_reduced"] = degree_reduced(sample);
    }
    return kExitOk;
  }

  int cascade() {
    const FuncSpec f = func();
    const auto* p = std::get_if<RationalPolynomial>(&f.variant());
    if (!p) throw UsageError("cascade needs a poly: function");
    const CascadeResult res = polynomial_cascade(*p);
    auto& r = report_.results();
    r["rows"] = nlohmann::json::array();
    for (const auto& check : res.checks) {
      nlohmann::json row;
      row["order"] = check.order;
      report_.put(row, "difference", check.difference);
      r["rows"].push_back(row);
    }
    r["degree"] = degree_text(*p);
    r["verdict"] = res.zero_polynomial() ? "ZeroPolynomial" : "NonzeroAtOrder";
    if (res.nonzero_order) r["nonzero_order"] = *res.nonzero_order;
    return kExitOk;
  }

  int nullspace() {
    const int order = capped_order(kDefaultNullspaceCap);
    const NullspaceReport ns = divdiff::nullspace(build_constraint_system(order));
    const std::int64_t L = ns.grid_denominator();
    auto& r = report_.results();
    r["N"] = order;
    r["L"] = L;
    r["rank"] = ns.rank();
    r["dimension"] = ns.dimension();
    r["forced_zero_points"] = ns.forced_zero_points();
    nlohmann::json knots = nlohmann::json::array();
    for (auto k : ns.forced_zero_points()) knots.push_back((Rational(k) / Rational(L)).to_string());
    r["forced_zero_knots"] = knots;
    if (cfg_.basis) {
      r["free_columns"] = ns.free_columns();
      r["basis"] = nlohmann::json::array();
      for (const GridFunction& g : ns.basis()) r["basis"].push_back(report_.exact_array(g.values()));
    }
    return kExitOk;
  }

  int minlip() {
    const int order = capped_order(kDefaultMinLipschitzCap);
    const MinLipschitzResult res = min_lipschitz_unit_norm(order);
    auto& r = report_.results();
    r["N"] = order;
    r["L"] = res.grid_denominator;
    r["programs_solved"] = res.programs_solved;
    if (res.infeasible()) {
      r["value"] = "Infeasible";
      return kExitDomain;
    }
    report_.put(r, "value", *res.value);
    r["peak"] = *res.peak;
    r["witness"] = report_.exact_array(res.witness->values());
    return kExitOk;
  }

  int probe() {
    const FuncSpec f = func();
    const Rational px = x();
    const Rational ph = h();
    const int order = n();
    const std::int64_t first = cfg_.N.value_or(1);
    const std::int64_t last = cfg_.N_max.value_or(first);
    if (first < 1 || last < first) throw UsageError("need 1 <= N <= Nmax");
    auto& r = report_.results();
    r["rows"] = nlohmann::json::array();
    for (std::int64_t count = first; count <= last; count *= 2) {
      const AveragingProbeResult res = averaging_probe(f, px, ph, order, count);
      if (count == first) {
        report_.put(r, "target", res.target);
        report_.put(r, "sup_bound", res.sup_bound);
        r["cutoff"] = res.cutoff;
      }
      nlohmann::json row;
      row["N"] = count;
      report_.put(row, "average", res.average);
      report_.put(row, "residual", res.residual);
      report_.put(row, "bound", res.bound);
      report_.put(row, "residual_times_N", res.residual * Rational(count));
      row["within_bound"] = abs(res.residual) <= res.bound;
      row["matches_boundary_sum"] = res.residual_matches_boundary;
      r["rows"].push_back(row);
    }
    return kExitOk;
  }

  int telescope() {
    const TelescopeCheck res = telescope_shift_identity(func(), x(), n(), require(cfg_.j, "--j"), h(), N());
    auto& r = report_.results();
    report_.put(r, "y", res.shifted_point);
    r["j_prime"] = res.cofactor;
    report_.put(r, "lhs", res.lhs);
    report_.put(r, "rhs", res.rhs);
    r["equal"] = res.equal;
    return kExitOk;
  }

  int walkthrough() {
    const ProofWalkthrough w = proof_walkthrough(func(), n(), h(), N(), x());
    auto& r = report_.results();
    report_.put(r, "y", w.shifted_point);
    r["factorial"] = w.factorial.get_str();
    r["interpolant"] = coefficient_array(w.interpolant);
    report_.put(r, "leading_coefficient", w.leading_coefficient);
    r["degree_reduced"] = w.degree_reduced;
    report_.put(r, "f_at_x", w.f_at_x);
    report_.put(r, "interpolant_at_x", w.interpolant_at_x);
    report_.put(r, "r_at_x", w.r_at_x);
    report_.put(r, "r_at_y", w.r_at_y);
    report_.put(r, "average_x", w.average_x);
    report_.put(r, "average_y", w.average_y);
    report_.put(r, "first_term", w.first_term);
    report_.put(r, "second_term", w.second_term);
    report_.put(r, "second_term_bound", w.second_term_bound);
    report_.put(r, "decomposition_lhs", w.decomposition_lhs);
    r["decomposition_holds"] = w.decomposition_holds;
    report_.put(r, "averaging_target", w.averaging_target);
    report_.put(r, "averaging_residual", w.averaging_residual);
    report_.put(r, "averaging_gap", w.averaging_gap);
    report_.put(r, "averaging_bound", w.averaging_bound);
    r["closing_j_prime"] = w.closing_cofactor;
    report_.put(r, "closing_interpolant_term", w.closing_interpolant_term);
    report_.put(r, "telescope_residual", w.telescope_residual);
    report_.put(r, "closing_lhs", w.closing_lhs);
    report_.put(r, "closing_rhs", w.closing_rhs);
    report_.put(r, "closing_residual", w.closing_residual);
    report_.put(r, "closing_gap", w.closing_gap);
    r["terms"] = nlohmann::json::array();
    for (const auto& t : w.terms) {
      nlohmann::json row;
      row["j"] = t.j;
      row["j_prime"] = t.cofactor;
      report_.put(row, "weight", t.weight);
      report_.put(row, "window_x", t.window_x);
      report_.put(row, "window_y", t.window_y);
      report_.put(row, "head_x", t.head_x);
      report_.put(row, "tail_x", t.tail_x);
      report_.put(row, "literal_block_x", t.literal_block_x);
      report_.put(row, "literal_block_y", t.literal_block_y);
      row["telescopes"] = t.telescopes;
      report_.put(row, "weighted_interpolant", t.weighted_interpolant);
      r["terms"].push_back(row);
    }
    r["notes"] = w.notes;
    return kExitOk;
  }

  const RunConfig& cfg_;
  Report report_;
};

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome out;
  try {
    Dispatcher d(config);
    out.exit_code = d.dispatch();
    out.data = config.format == OutputFormat::csv ? d.report().to_csv() : d.report().to_json();
    if (out.exit_code == kExitDomain) out.diagnostic = config.command + ": infeasible";
  } catch (const DomainError& e) {
    out = {kExitDomain, "", config.command + ": " + e.what()};
  } catch (const std::exception& e) {
    out = {kExitUsage, "", config.command + ": " + e.what()};
  }
  return out;
}

}  // namespace divdiff::cli
