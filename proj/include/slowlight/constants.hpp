#pragma once

namespace slowlight {

// CODATA vacuum speed of light, m/s. The library uses SI throughout and
// angular frequencies (rad/s) everywhere.
inline constexpr double speed_of_light = 2.99792458e8;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace slowlight
