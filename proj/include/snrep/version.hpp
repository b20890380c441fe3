#pragma once

namespace snrep {

inline constexpr const char* kVersion = "0.1.0";

} // namespace snrep
