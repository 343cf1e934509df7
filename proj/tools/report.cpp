#include "report.hpp"

#include <map>
#include <sstream>

#include "cli.hpp"

namespace divdiff::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void collect_fields(const nlohmann::json& node, const std::string& path, std::map<std::string, std::string>& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) collect_fields(child, path + "." + key, out);
  } else if (node.is_array()) {
    for (const auto& child : node) collect_fields(child, path + "[]", out);
  } else {
    out[path] = ends_with(path, "_approx") ? "approx" : "exact";
  }
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const nlohmann::json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) flatten(child, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& child : node) flatten(child, path + "[" + std::to_string(i++) + "]", out);
  } else {
    out << csv_escape(path) << ',' << csv_escape(scalar_text(node)) << '\n';
  }
}

}  // namespace

Report::Report(std::string command, bool decimals) : decimals_(decimals) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = nlohmann::json::object();
  doc_["results"] = nlohmann::json::object();
}

void Report::put(nlohmann::json& obj, const std::string& key, const Rational& value) const {
  obj[key] = value.to_string();
  if (decimals_) obj[key + "_approx"] = value.to_decimal();
}

nlohmann::json Report::exact_array(const RationalVector& values) const {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : values) out.push_back(v.to_string());
  return out;
}

nlohmann::json Report::finalized() const {
  nlohmann::json doc = doc_;
  std::map<std::string, std::string> fields;
  collect_fields(doc["results"], "results", fields);
  doc["provenance"] = {
      {"library", "divdiff"},
      {"version", kVersion},
      {"arithmetic", "exact rational"},
      {"fields", fields},
  };
  return doc;
}

std::string Report::to_json() const { return finalized().dump(2) + "\n"; }

std::string Report::to_csv() const {
  std::ostringstream out;
  const nlohmann::json& results = doc_["results"];
  out << "# command," << csv_escape(doc_["command"].get<std::string>()) << '\n';
  const auto rows = results.find("rows");
  if (rows != results.end() && rows->is_array() && !rows->empty() && rows->front().is_object()) {
    nlohmann::json rest = results;
    rest.erase("rows");
    std::ostringstream scalars;
    flatten(rest, "", scalars);
    std::istringstream lines(scalars.str());
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
    std::vector<std::string> columns;
    for (const auto& [key, _] : rows->front().items()) columns.push_back(key);
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : *rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << csv_escape(scalar_text(row.at(columns[c])));
      }
      out << '\n';
    }
  } else {
    out << "field,value\n";
    flatten(results, "", out);
  }
  return out.str();
}

}  // namespace divdiff::cli
