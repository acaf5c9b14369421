#pragma once

namespace latosc::cli {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace latosc::cli
