#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ck/geometry.hpp"
#include "ck/quadrature.hpp"
#include "ck/representations.hpp"

namespace ck::analysis {

using HeatEval = std::function<double(double t, double r)>;
using RadialEval = std::function<double(double r)>;
/// Kernel as a function of (t or y, r).
using KernelEval = std::function<double(double param, double r)>;

/// P(y, r) = (2y/√π) ∫₀^∞ e^{−v²y²} H(1/(4v²), r) dv, the u = v² form of
/// the subordination integral.
QuadResult subordinate(const HeatEval& heat, int n, double y, double r, double tol = kDefaultTol);

/// One candidate pairing: the heat kernel in `convention`, multiplied by
/// e^{−shift·t}, subordinated and compared with the closed Poisson kernel.
struct PairingRow {
  Convention convention = Convention::paper;
  double shift = 0.0;
  double value = std::numeric_limits<double>::quiet_NaN();
  double rel_diff = std::numeric_limits<double>::infinity();
  std::string note;  // set when the integral failed
};

struct PairingReport {
  Space space = Space::euclidean();
  int n = 1;
  double y = 1.0;
  double r = 0.0;
  double closed = 0.0;
  std::vector<PairingRow> rows;
  /// Index into `rows` of the best match.
  std::size_t best = 0;
};

/// Sweeps both conventions against shifts {−|λ|, 0, |λ|}, λ = (n−1)²/4.
PairingReport subordination_sweep(Space space, int n, double y, double r, double tol = kDefaultTol);

/// ∫ kernel(r) ω_{n−1} w(r)^{n−1} dr over the distance domain. `scale` is a
/// typical decay length for unbounded domains.
QuadResult mass(const RadialEval& kernel, Space space, int n, double tol = kDefaultTol, double scale = 1.0);

struct ShiftFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  /// Standard error of the slope.
  double width = 0.0;
};

/// Least-squares slope of ln M(t) against t. Throws DomainError for fewer
/// than three points or a non-positive mass.
ShiftFit fit_spectral_shift(const std::function<double(double)>& mass_of_t, const std::vector<double>& t_grid);

struct GridPoint {
  double param;
  double r;
};

struct Residual {
  double max_rel = 0.0;
  GridPoint at{0.0, 0.0};
};

/// Heat: (A_n + λ)u − ∂_t u. Poisson: ∂_y²u + (A_n + λ)u. Centred second
/// order differences with h_param = rel_h·param and h_r = rel_h·max(1, r);
/// each residual is relative to the sum of the magnitudes of its terms.
Residual pde_residual(const KernelEval& u, Space space, int n, KernelKind kind,
                      const std::vector<GridPoint>& grid, double lambda, double rel_h = 1e-4);

/// Residuals at one point for steps rel_h and rel_h/2 and their ratio
/// (about 4 for a second-order stencil dominated by truncation).
struct Refinement {
  double coarse = 0.0;
  double fine = 0.0;
  double ratio = 0.0;
};
Refinement richardson(const KernelEval& u, Space space, int n, KernelKind kind, GridPoint p,
                      double lambda, double rel_h);

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

struct PairDiff {
  Rep a;
  Rep b;
  double max_rel_diff = 0.0;
  GridPoint at{0.0, 0.0};
};

struct MassRow {
  double param;
  double mass;
};

struct ValidationReport {
  std::string suite;
  Space space = Space::euclidean();
  int n = 1;
  KernelKind kind = KernelKind::heat;
  std::vector<double> params;
  std::vector<double> rs;
  std::vector<Rep> reps;
  std::vector<PairDiff> pairs;
  std::vector<std::string> cell_errors;
  std::optional<double> pde_residual_max;
  std::optional<ShiftFit> fitted_shift;
  std::vector<MassRow> mass_table;
  std::vector<Check> flags;

  bool passed() const;
  Check& add_flag(std::string name, double value, double threshold, std::string detail = {});
};

/// Evaluates every representation on params × rs and records pairwise
/// maximum relative differences. Evaluation failures are recorded per cell
/// and fail the report.
ValidationReport compare(Space space, int n, KernelKind kind, const std::vector<double>& params,
                         const std::vector<double>& rs, const std::vector<Rep>& reps,
                         double threshold, double tol = kDefaultTol);

struct SemigroupResult {
  double convolution = 0.0;
  double reference = 0.0;
  double rel_deviation = 0.0;
  double err_estimate = 0.0;
};

/// ∫ H(t, ·) H(s, ·) over the space, reduced to distances from the two
/// centres, against H(t + s, r). Supports ℝ¹, ℝ³ and ℍ³ with r > 0 (r ≥ 0
/// on ℝ¹); `paper` convention, where the shift factors cancel exactly.
SemigroupResult semigroup_check(Space space, int n, double t, double s, double r, double tol = kDefaultTol);

}  // namespace ck::analysis
