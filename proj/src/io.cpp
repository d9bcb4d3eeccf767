#include "dihedral/io.hpp"

#include "dihedral/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace dihedral::io {

using nlohmann::json;

namespace {

Scalar scalar_from(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  throw Error(ErrorKind::Parse, "expected a scalar string or integer, got " + v.dump());
}

MarginVector vector_from(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (v.is_string()) return MarginVector::parse(v.get<std::string>());
  if (!v.is_array()) throw Error(ErrorKind::Parse, std::string("field \"") + key + "\" must be an array");
  std::vector<Scalar> entries;
  for (const auto& x : v) entries.push_back(scalar_from(x));
  return MarginVector(std::move(entries));
}

json margin_json(const MarginVector& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(format_scalar(x));
  return out;
}

json matrix_json(const DenseMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(format_scalar(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

DenseMatrix matrix_from(const json& rows) {
  if (!rows.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
  std::vector<std::vector<Scalar>> cells;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "matrix row must be an array");
    auto& out = cells.emplace_back();
    for (const auto& x : row) out.push_back(scalar_from(x));
  }
  const std::size_t n = cells.empty() ? 0 : cells.front().size();
  DenseMatrix a(cells.size(), n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() != n) throw Error(ErrorKind::Parse, "ragged matrix at row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cells[i][j];
  }
  return a;
}

std::string enum_text(const std::string& key, const json& doc) {
  if (!doc.contains(key) || !doc.at(key).is_string()) {
    throw Error(ErrorKind::Parse, "missing string field \"" + key + "\"");
  }
  return doc.at(key).get<std::string>();
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "instance must be a JSON object");
  Instance inst;
  inst.margins = MarginPair(vector_from(doc, "rows"), vector_from(doc, "cols"));
  const auto cls = parse_matrix_class(enum_text("class", doc));
  if (!cls) throw Error(ErrorKind::Parse, "unknown class \"" + enum_text("class", doc) + "\"");
  inst.matrix_class = *cls;
  const auto h = parse_subgroup(enum_text("subgroup", doc));
  if (!h) throw Error(ErrorKind::Parse, "unknown subgroup \"" + enum_text("subgroup", doc) + "\"");
  inst.subgroup = *h;
  return inst;
}

std::string instance_json(const Instance& inst) {
  json doc;
  doc["rows"] = margin_json(inst.margins.rows());
  doc["cols"] = margin_json(inst.margins.cols());
  doc["class"] = std::string(name(inst.matrix_class));
  doc["subgroup"] = std::string(name(inst.subgroup));
  return doc.dump();
}

DenseMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object()) {
      if (!doc.contains("witness") || doc.at("witness").is_null()) {
        throw Error(ErrorKind::Parse, "JSON object has no witness");
      }
      return matrix_from(doc.at("witness"));
    }
    return matrix_from(doc);
  }
  std::vector<std::vector<Scalar>> cells;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::vector<Scalar> row;
    std::string word;
    while (words >> word) row.push_back(parse_scalar(word));
    if (!row.empty()) cells.push_back(std::move(row));
  }
  const std::size_t n = cells.empty() ? 0 : cells.front().size();
  DenseMatrix a(cells.size(), n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() != n) throw Error(ErrorKind::Parse, "ragged matrix at row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cells[i][j];
  }
  return a;
}

std::string matrix_text(const DenseMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string report_json(const Instance& inst, const FeasibilityReport& report) {
  json doc;
  doc["rows"] = margin_json(inst.margins.rows());
  doc["cols"] = margin_json(inst.margins.cols());
  doc["class"] = std::string(name(inst.matrix_class));
  doc["subgroup"] = std::string(name(inst.subgroup));
  doc["theorem"] = report.theorem;
  doc["feasible"] = report.feasible;
  json conds = json::array();
  for (const auto& c : report.conditions) conds.push_back({{"label", c.label}, {"holds", c.holds}, {"detail", c.detail}});
  doc["conditions"] = std::move(conds);
  doc["witness"] = report.witness ? matrix_json(*report.witness) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string report_text(const Instance& inst, const FeasibilityReport& report) {
  std::string out = "class " + std::string(name(inst.matrix_class)) + ", subgroup " + std::string(name(inst.subgroup)) +
                    ", theorem " + report.theorem + "\n";
  for (const auto& c : report.conditions) {
    out += c.label + ": " + (c.holds ? "true" : "false");
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += '\n';
  }
  out += report.feasible ? "feasible\n" : "infeasible\n";
  if (report.witness) out += matrix_text(*report.witness);
  return out;
}

std::string verify_json(const oracle::VerifyReport& report) {
  json doc;
  doc["pass"] = report.passed();
  doc["margins_ok"] = report.margins_ok;
  doc["invariant_ok"] = report.invariant_ok;
  doc["domain_ok"] = report.domain_ok;
  json list = json::array();
  for (const auto& m : report.mismatches) {
    list.push_back({{"kind", m.kind}, {"index", m.index}, {"expected", m.expected}, {"actual", m.actual}});
  }
  doc["mismatches"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string verify_text(const oracle::VerifyReport& report) {
  std::string out = std::string(report.passed() ? "pass" : "fail") + "\n";
  out += std::string("margins ") + (report.margins_ok ? "ok" : "wrong") + "\n";
  out += std::string("invariance ") + (report.invariant_ok ? "ok" : "broken") + "\n";
  out += std::string("domain ") + (report.domain_ok ? "ok" : "violated") + "\n";
  for (const auto& m : report.mismatches) {
    out += m.kind + " " + std::to_string(m.index) + ": expected " + m.expected + ", got " + m.actual + "\n";
  }
  return out;
}

}  // namespace dihedral::io
