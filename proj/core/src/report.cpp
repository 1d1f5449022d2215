#include "spex/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spex {

namespace {

double round10(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::atof(buf);
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::string emit_json(const VerificationReport& rep) {
  nlohmann::ordered_json doc;
  doc["theorem"] = rep.theorem;
  doc["pass"] = rep.pass;
  doc["empty_warning"] = rep.empty_warning;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const VerificationRow& row : rep.rows) {
    nlohmann::ordered_json r;
    r["theorem"] = row.theorem;
    r["n"] = row.n;
    r["r"] = row.r;
    r["param"] = row.param;
    r["found"] = round10(row.found);
    r["expected"] = round10(row.expected);
    r["witnesses"] = row.witnesses;
    r["unique"] = row.unique;
    r["pass"] = row.pass;
    r["note"] = row.note;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string emit_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "theorem,n,r,param,found,expected,witnesses,unique,pass\n";
  for (const VerificationRow& row : rep.rows) {
    os << row.theorem << ',' << row.n << ',' << row.r << ',' << row.param << ','
       << format_value(row.found) << ',' << format_value(row.expected) << ','
       << join(row.witnesses, ';') << ',' << (row.unique ? "true" : "false")
       << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string emit_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "theorem " << rep.theorem << "\n";
  for (const VerificationRow& row : rep.rows) {
    os << "  n=" << row.n << " r=" << row.r;
    if (!row.param.empty()) os << " " << row.param;
    os << " found=" << format_value(row.found)
       << " expected=" << format_value(row.expected)
       << " witnesses=" << join(row.witnesses, ';')
       << " unique=" << (row.unique ? "yes" : "no")
       << (row.pass ? " pass" : " FAIL");
    if (!row.note.empty()) os << "  [" << row.note << "]";
    os << "\n";
  }
  if (rep.empty_warning) os << "warning: empty graph class encountered\n";
  os << "overall: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.rows.size()
     << " rows)\n";
  return os.str();
}

}  // namespace

std::string format_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string emit_report(const VerificationReport& rep, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return emit_json(rep);
    case ReportFormat::csv:
      return emit_csv(rep);
    case ReportFormat::text:
      return emit_text(rep);
  }
  throw std::logic_error("unreachable");
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  VerificationReport rep;
  rep.theorem = doc.at("theorem").get<std::string>();
  rep.pass = doc.at("pass").get<bool>();
  rep.empty_warning = doc.at("empty_warning").get<bool>();
  for (const auto& r : doc.at("rows")) {
    VerificationRow row;
    row.theorem = r.at("theorem").get<std::string>();
    row.n = r.at("n").get<int>();
    row.r = r.at("r").get<int>();
    row.param = r.at("param").get<std::string>();
    row.found = r.at("found").get<double>();
    row.expected = r.at("expected").get<double>();
    row.witnesses = r.at("witnesses").get<std::vector<std::string>>();
    row.unique = r.at("unique").get<bool>();
    row.pass = r.at("pass").get<bool>();
    row.note = r.at("note").get<std::string>();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace spex
