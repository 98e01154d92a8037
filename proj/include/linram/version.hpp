#pragma once

namespace linram {

inline constexpr const char* version = "1.0.0";

// bumped whenever enumeration or search results could change; keys the result cache
inline constexpr const char* engine_version = "linram-engine-1";

}  // namespace linram
