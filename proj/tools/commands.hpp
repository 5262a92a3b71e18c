#pragma once

#include "table.hpp"

#include "diracwell/eigensolver.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diracwell::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags or an argument the well model rejects; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StateSelector {
    int l = 0;
    int n = 1;
};

/// Parses `l<int>n<int>`, e.g. "l0n1". Throws UsageError.
StateSelector parse_state_selector(std::string_view text);

/// Rows of the `solve` table: l, n, E_kin_meV, zeta_per_m, xi_per_m,
/// ln_kappa, log10_kappa, skin_depth_nm, boundary_residual.
Table eigenstate_table(const std::vector<EigenState>& states);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diracwell::cli
