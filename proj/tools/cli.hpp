#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracineq/funclib.hpp"

namespace fracineq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfigError = 2;

/// Entry point shared by the `fracineq` binary and the tests. `args` excludes
/// the program name. Reads FRACINEQ_QUAD_TOL from the environment.
int run(const std::vector<std::string>& args, const Catalog& catalog, std::ostream& out,
        std::ostream& err);

}  // namespace fracineq::cli
