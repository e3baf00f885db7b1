#pragma once

#include <vector>

namespace nhq {

/// 0, step, 2 step, ... up to and including horizon. When horizon is not a
/// multiple of step the last point is horizon itself.
std::vector<double> uniform_grid(double horizon, double step);

}  // namespace nhq
