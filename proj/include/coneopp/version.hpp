#pragma once

namespace coneopp {

inline constexpr const char* kVersion = "0.1.0";

} // namespace coneopp
