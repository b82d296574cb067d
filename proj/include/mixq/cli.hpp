#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixq::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. JSON goes to `out`
/// unless a graphics output is requested; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixq::cli
