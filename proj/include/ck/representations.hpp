#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ck/geometry.hpp"
#include "ck/quadrature.hpp"

namespace ck {

/// The ways a kernel can be evaluated. Not every (space, kind, n) supports
/// every representation; `supports` says which do.
///
///   closed         explicit formula (ℝⁿ all n; ℍⁿ heat n ∈ {1,3}; all Poisson)
///   raise          dimension raising from n = 1 or 2
///   descent        integral down from dimension n + 1
///   theta          periodised Gaussian on 𝕊¹, its Abel transform on 𝕊²
///   integral       ℝⁿ Poisson as a heat average; 𝕊ⁿ Poisson by doubling
///   gruet          Bromwich contour in the Poisson variable
///   gruet_classic  real-variable form of the hyperbolic contour at σ = π
///   subordinate    Poisson from the heat kernel of the chosen convention
///   automatic      cheapest valid representation, contour as fallback
enum class Rep { closed, raise, descent, theta, integral, gruet, gruet_classic, subordinate, automatic };

std::string_view to_string(Rep rep);
Rep parse_rep(std::string_view name);
const std::vector<Rep>& all_reps();

struct EvalOptions {
  Convention convention = Convention::paper;
  double tol = kDefaultTol;
  /// Contour abscissa; the space's default when empty.
  std::optional<double> sigma;
  /// Extra heat factor e^{log_scale}, folded into the evaluation where the
  /// representation allows (see `sphere::heat_theta_1`).
  double log_scale = 0.0;
};

struct Evaluation {
  Rep rep = Rep::closed;  // as resolved; never `automatic`
  QuadResult result;
  std::vector<std::string> warnings;
};

bool supports(const KernelQuery& q, Rep rep);

/// Evaluates one kernel value. Heat values are converted to `opts.convention`;
/// Poisson kernels have no convention. Throws DomainError for invalid queries
/// or unsupported representations, ConvergenceError when a quadrature fails.
Evaluation evaluate(const KernelQuery& q, Rep rep, const EvalOptions& opts = {});

/// Plain value in the `paper` convention, for analysis code.
double kernel_value(const KernelQuery& q, Rep rep = Rep::automatic, double tol = kDefaultTol);

}  // namespace ck
