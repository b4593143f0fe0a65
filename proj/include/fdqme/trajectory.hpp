// trajectory.hpp - sampled density-matrix trajectory

#pragma once

#include <vector>

#include "fdqme/types.hpp"

namespace fdqme {

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec4> states; // vectorized (gg, ge, eg, ee)
};

} // namespace fdqme
