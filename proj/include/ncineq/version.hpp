#pragma once

namespace ncineq {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "ncineq-report/1";
inline constexpr const char* kConfigSchema = "ncineq-config/1";

}  // namespace ncineq
