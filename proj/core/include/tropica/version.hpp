#pragma once

namespace tropica {

inline constexpr const char* kVersion = "0.1.0";
/// Bumped whenever a report layout changes; part of every cache key.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace tropica
