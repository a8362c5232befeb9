#pragma once

namespace netcpd {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "netcpd";

}  // namespace netcpd
