#include "ck/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ck/errors.hpp"

namespace ck::report {

namespace {

using ordered = nlohmann::ordered_json;

// JSON has no NaN or infinity; those become null.
ordered number(double x) { return std::isfinite(x) ? ordered(x) : ordered(nullptr); }

double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_header() { return "space,dim,kind,param,r,rep,value,err,convention"; }

std::string csv_row(const OutputRecord& rec) {
  std::string row;
  row += csv_field(rec.space.name()) + ',';
  row += std::to_string(rec.n) + ',';
  row += csv_field(to_string(rec.kind)) + ',';
  row += format_number(rec.param) + ',';
  row += format_number(rec.r) + ',';
  row += csv_field(to_string(rec.rep)) + ',';
  row += format_number(rec.value) + ',';
  row += format_number(rec.err) + ',';
  row += csv_field(to_string(rec.convention));
  return row;
}

void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
  os << csv_header() << "\n";
  for (const auto& r : records) os << csv_row(r) << "\n";
}

nlohmann::ordered_json to_json(const OutputRecord& rec) {
  ordered j;
  j["space"] = rec.space.name();
  j["dim"] = rec.n;
  j["kind"] = to_string(rec.kind);
  j["param"] = number(rec.param);
  j["r"] = number(rec.r);
  j["rep"] = to_string(rec.rep);
  j["value"] = number(rec.value);
  j["err"] = number(rec.err);
  j["n_evals"] = rec.n_evals;
  j["convention"] = to_string(rec.convention);
  j["warnings"] = rec.warnings;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  try {
    OutputRecord r;
    r.space = Space::parse(j.at("space").get<std::string>());
    r.n = j.at("dim").get<int>();
    r.kind = parse_kernel_kind(j.at("kind").get<std::string>());
    r.param = number_from(j.at("param"));
    r.r = number_from(j.at("r"));
    r.rep = parse_rep(j.at("rep").get<std::string>());
    r.value = number_from(j.at("value"));
    r.err = number_from(j.at("err"));
    r.n_evals = j.value("n_evals", 0L);
    r.convention = parse_convention(j.at("convention").get<std::string>());
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
}

nlohmann::ordered_json records_document(const Meta& meta, const std::vector<OutputRecord>& records) {
  ordered doc;
  doc["meta"]["version"] = kVersion;
  doc["meta"]["convention"] = to_string(meta.convention);
  doc["meta"]["tol"] = meta.tol;
  doc["meta"]["sigma"] = meta.sigma ? ordered(*meta.sigma) : ordered(nullptr);
  doc["records"] = ordered::array();
  for (const auto& r : records) doc["records"].push_back(to_json(r));
  return doc;
}

std::vector<OutputRecord> records_from_document(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
    throw DomainError("document has no \"records\" list");
  std::vector<OutputRecord> out;
  for (const auto& j : doc["records"]) out.push_back(record_from_json(j));
  return out;
}

nlohmann::ordered_json to_json(const analysis::ValidationReport& report) {
  ordered j;
  j["suite"] = report.suite;
  j["space"] = report.space.name();
  j["dim"] = report.n;
  j["kind"] = to_string(report.kind);
  j["passed"] = report.passed();
  j["params"] = ordered::array();
  for (double p : report.params) j["params"].push_back(number(p));
  j["r"] = ordered::array();
  for (double r : report.rs) j["r"].push_back(number(r));
  j["reps"] = ordered::array();
  for (Rep r : report.reps) j["reps"].push_back(to_string(r));
  j["pairwise_max_rel_diff"] = ordered::array();
  for (const auto& p : report.pairs)
    j["pairwise_max_rel_diff"].push_back(
        {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"max_rel_diff", number(p.max_rel_diff)},
         {"at_param", number(p.at.param)}, {"at_r", number(p.at.r)}});
  j["cell_errors"] = report.cell_errors;
  j["pde_residual_max"] = report.pde_residual_max ? number(*report.pde_residual_max) : ordered(nullptr);
  if (report.fitted_shift)
    j["fitted_shift"] = {{"slope", number(report.fitted_shift->slope)},
                         {"width", number(report.fitted_shift->width)},
                         {"rms_residual", number(report.fitted_shift->rms_residual)}};
  else
    j["fitted_shift"] = nullptr;
  j["mass_table"] = ordered::array();
  for (const auto& m : report.mass_table) j["mass_table"].push_back({number(m.param), number(m.mass)});
  j["flags"] = ordered::array();
  for (const auto& c : report.flags)
    j["flags"].push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"value", number(c.value)},
                          {"threshold", number(c.threshold)},
                          {"detail", c.detail}});
  return j;
}

nlohmann::ordered_json to_json(const analysis::PairingReport& report) {
  ordered j;
  j["space"] = report.space.name();
  j["dim"] = report.n;
  j["y"] = report.y;
  j["r"] = report.r;
  j["closed"] = number(report.closed);
  j["rows"] = ordered::array();
  for (const auto& row : report.rows)
    j["rows"].push_back({{"convention", to_string(row.convention)},
                         {"shift", row.shift},
                         {"value", number(row.value)},
                         {"rel_diff", number(row.rel_diff)},
                         {"note", row.note}});
  const auto& best = report.rows.at(report.best);
  j["best"] = {{"convention", to_string(best.convention)}, {"shift", best.shift}, {"rel_diff", number(best.rel_diff)}};
  return j;
}

}  // namespace ck::report
