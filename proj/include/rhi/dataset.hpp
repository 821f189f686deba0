// Training corpus for the visual generative models: a uniform grid over the
// joint limits rendered with the centered (offset 0) arm.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhi/arm_env.hpp"
#include "rhi/tensor.hpp"

namespace rhi {

struct Dataset {
    std::size_t grid_shoulder = 0;
    std::size_t grid_elbow = 0;
    std::size_t resolution = 0;
    JointLimits limits;
    std::vector<std::array<double, 2>> angles_norm;  // per-joint, in [-1,1]
    std::vector<Tensor> images;                      // [res,res], values in [0,1]
    std::uint64_t content_hash = 0;

    std::size_t size() const { return images.size(); }
    JointAngles raw_angles(std::size_t i) const;
};

// Normalization between raw radians and the [-1,1] grid coordinates.
std::array<double, 2> normalize_angles(const JointAngles& q, const JointLimits& lim);
JointAngles denormalize_angles(const std::array<double, 2>& n, const JointLimits& lim);

// Inclusive uniform grid (corners are sampled); images rendered at offset 0.
Dataset generate_dataset(std::size_t n_shoulder, std::size_t n_elbow,
                         const EnvConfig& env);

void save_dataset(const std::string& path, const Dataset& ds);
Dataset load_dataset(const std::string& path);

}  // namespace rhi
