#pragma once

namespace mpcodes {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mpcodes
