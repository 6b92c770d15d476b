#pragma once

#include <numbers>

namespace lwaudit::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double log_pi = 1.1447298858494002;
inline constexpr double log_two_pi = 1.8378770664093453;
inline constexpr double euler_mascheroni = 0.5772156649015329;

}  // namespace lwaudit::constants
