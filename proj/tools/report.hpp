#pragma once

#include <json.hpp>
#include <string>

#include "divdiff/rational.hpp"

namespace divdiff::cli {

/// Command echo, input echo, results and provenance. Exact numbers are
/// `p/q` strings; with decimals enabled each gets a sibling `<key>_approx`.
class Report {
 public:
  Report(std::string command, bool decimals);

  nlohmann::json& inputs() { return doc_["inputs"]; }
  nlohmann::json& results() { return doc_["results"]; }

  /// obj[key] = exact string, plus obj[key_approx] when decimals are on.
  void put(nlohmann::json& obj, const std::string& key, const Rational& value) const;
  nlohmann::json exact_array(const RationalVector& values) const;

  std::string to_json() const;

  /// Tabular reports (a `rows` array of flat objects) become header + rows,
  /// with the remaining scalar results as leading `# key,value` lines.
  /// Everything else is flattened to `field,value` lines.
  std::string to_csv() const;

  const nlohmann::json& document() const { return doc_; }

 private:
  nlohmann::json finalized() const;

  bool decimals_;
  nlohmann::json doc_;
};

}  // namespace divdiff::cli
