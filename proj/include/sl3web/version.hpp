#pragma once

namespace sl3web {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace sl3web
