#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ck/analysis.hpp"
#include "ck/geometry.hpp"
#include "ck/representations.hpp"

namespace ck::report {

inline constexpr const char* kVersion = "1.0.0";

struct OutputRecord {
  Space space = Space::euclidean();
  int n = 1;
  KernelKind kind = KernelKind::heat;
  double param = 0.0;
  double r = 0.0;
  Rep rep = Rep::closed;
  double value = 0.0;
  double err = 0.0;
  long n_evals = 0;
  Convention convention = Convention::paper;
  std::vector<std::string> warnings;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct Meta {
  Convention convention = Convention::paper;
  double tol = kDefaultTol;
  std::optional<double> sigma;
};

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x);

/// space,dim,kind,param,r,rep,value,err,convention
std::string csv_header();
std::string csv_row(const OutputRecord& rec);
void write_csv(std::ostream& os, const std::vector<OutputRecord>& records);

nlohmann::ordered_json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const nlohmann::json& j);

/// {"meta": {...}, "records": [...]}
nlohmann::ordered_json records_document(const Meta& meta, const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_document(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const analysis::ValidationReport& report);
nlohmann::ordered_json to_json(const analysis::PairingReport& report);

}  // namespace ck::report
