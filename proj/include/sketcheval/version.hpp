#pragma once

namespace sketcheval {

inline constexpr const char* kToolVersion = "sketcheval 0.1.0";

}  // namespace sketcheval
