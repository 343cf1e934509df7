#include "divdiff/func_spec_io.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace divdiff {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, const std::string& what) {
  s = trim(s);
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed integer '" + std::string(s) + "' in " + what);
  }
  return out;
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(Rational::parse(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

GridFunction read_grid_function(std::istream& in) {
  std::string line;
  std::int64_t denominator = -1;
  RationalVector values;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::string where = "grid file line " + std::to_string(line_no);
    if (denominator < 0) {
      if (view.substr(0, 2) != "L=") throw ParseError(where + ": expected header 'L=<integer>'");
      denominator = parse_int(view.substr(2), where);
      if (denominator < 1) throw ParseError(where + ": L must be >= 1");
      values = RationalVector::Constant(denominator + 1, Rational(0));
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos) throw ParseError(where + ": expected 'k,<p/q>'");
    const std::int64_t k = parse_int(view.substr(0, comma), where);
    if (k < 0 || k > denominator) {
      throw ParseError(where + ": index " + std::to_string(k) + " outside 0.." + std::to_string(denominator));
    }
    values(static_cast<Eigen::Index>(k)) = Rational::parse(trim(view.substr(comma + 1)));
  }
  if (denominator < 0) throw ParseError("grid file has no 'L=<integer>' header");
  return GridFunction(denominator, std::move(values));
}

GridFunction read_grid_function(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid file '" + path.string() + "'");
  return read_grid_function(in);
}

FuncSpec parse_func_spec(std::string_view text, bool extend_by_zero) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("function spec '" + std::string(text) + "' lacks a 'kind:' prefix");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "poly") {
    return FuncSpec(RationalPolynomial(parse_rational_list(body)), extend_by_zero);
  }
  if (kind == "ratfun") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("ratfun spec needs 'numerator;denominator' coefficients");
    }
    RationalPolynomial num(parse_rational_list(body.substr(0, semi)));
    RationalPolynomial den(parse_rational_list(body.substr(semi + 1)));
    if (den.is_zero()) throw ParseError("ratfun spec has a zero denominator polynomial");
    return FuncSpec(RationalFunction(std::move(num), std::move(den)), extend_by_zero);
  }
  if (kind == "pl") {
    return FuncSpec(read_grid_function(std::filesystem::path(std::string(body))), extend_by_zero);
  }
  throw ParseError("unknown function kind '" + std::string(kind) + "' (poly, ratfun, pl)");
}

}  // namespace divdiff
