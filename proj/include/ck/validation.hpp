#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ck/analysis.hpp"
#include "ck/geometry.hpp"

namespace ck::validation {

enum class Suite { representations, pde, mass, subordination, semigroup, all };
/// `strict` tightens the quadrature tolerance; pass thresholds are the same.
enum class TolProfile { standard, strict };

Suite parse_suite(std::string_view name);
TolProfile parse_profile(std::string_view name);  // "default" or "strict"

struct SuiteOptions {
  std::optional<Space> space;
  std::optional<int> n;
  TolProfile profile = TolProfile::standard;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

struct SuiteResult {
  std::vector<analysis::ValidationReport> reports;
  std::vector<analysis::PairingReport> pairings;
  bool passed() const;
};

/// Runs the checks of one suite (or all). Reports come back in a fixed
/// order whatever the thread count.
SuiteResult run(Suite suite, const SuiteOptions& opts = {});

/// Quadrature tolerance used by a profile.
double eval_tol(TolProfile p);

}  // namespace ck::validation
