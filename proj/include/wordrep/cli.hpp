#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wordrep::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes.
inline constexpr int kOk = 0;            // success, or the answer is "true"
inline constexpr int kNegative = 1;      // "false", exhausted, none
inline constexpr int kUsage = 2;         // bad flags, parse errors, refused sizes
inline constexpr int kVerification = 3;  // a construction failed its own check

/// Key/value lines in insertion order.
class Report {
 public:
  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; "-" inputs read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wordrep::cli
