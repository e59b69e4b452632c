#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dskit::cli {

/// Exit codes.
inline constexpr int kDecided = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInconclusive = 3;

/// Runs one command line (without the program name). Verdict JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace dskit::cli
