#pragma once

namespace stackgov {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stackgov
