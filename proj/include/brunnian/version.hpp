#pragma once

namespace brunnian {

inline constexpr const char* kVersion = "0.1.0";

}
