#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crinv/quadrature.hpp"

namespace crinv {

inline constexpr const char* kVersion = "1.0.0";

enum class InputKind { line_bundle_metric_h, conformal_factor_e2phi, rigid_defining_F, compact_profile_psi };

InputKind parse_input_kind(const std::string& text);
std::string to_string(InputKind kind);

/// One metric input: exactly one of `expr` or `coeff_file`, truncated at `order`.
struct InputSpec {
  InputKind kind = InputKind::conformal_factor_e2phi;
  std::optional<std::string> expr;
  std::optional<std::filesystem::path> coeff_file;
  int order = 16;

  /// Throws domain_error unless exactly one source is set and order >= 4.
  void validate() const;
};

/// The raw input series (psi inputs are polynomials in u, stored in the z slot).
TruncatedSeries load_input_series(const InputSpec& spec);
/// psi coefficients of a compact_profile_psi input.
CompactMetric compact_metric_from_input(const InputSpec& spec);
/// The surface chart described by any input kind.
SurfaceChart chart_from_input(const InputSpec& spec);

/// Runs `crinv <subcommand> [flags]`; `args` excludes the program name. Returns 0 on success, 2 when an
/// identity residual is nonzero or out of tolerance, 1 on usage and domain
/// errors. The report goes to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crinv
