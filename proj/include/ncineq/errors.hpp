#pragma once

#include <stdexcept>
#include <string>

namespace ncineq {

// Failure classes surfaced by the library. The CLI maps usage to exit code 2
// and everything else to exit code 1.
enum class errc {
  invalid_input,      // malformed data: non-finite entries, bad JSON, shape mismatch
  invalid_parameter,  // out-of-range scalar parameter (p < 1, rho <= 0, ...)
  domain,             // value outside the mathematical domain of the operation
  degenerate_profile, // S = 0 or similar collapse that the formula cannot absorb
  precondition,       // a stated hypothesis of the result being evaluated fails
  window,             // search window does not bracket the optimum
  budget,             // enumeration budget exceeded
  usage,              // CLI-level misuse: unknown flag/subcommand, missing seed
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input:      return "invalid_input";
    case errc::invalid_parameter:  return "invalid_parameter";
    case errc::domain:             return "domain";
    case errc::degenerate_profile: return "degenerate_profile";
    case errc::precondition:       return "precondition";
    case errc::window:             return "window";
    case errc::budget:             return "budget";
    case errc::usage:              return "usage";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ncineq
