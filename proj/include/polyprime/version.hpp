#pragma once

namespace polyprime {

// Embedded in certificates so outputs can be tied to the engine that made them.
inline constexpr const char* kEngineVersion = "polyprime/1.0.0";

} // namespace polyprime
