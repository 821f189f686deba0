// Native 2-DOF arm environment: planar kinematics, deterministic top-down
// rasterization of the arm, noisy proprioception, visuo-tactile stimulation
// schedules, and clamped actuation for the illusion protocol.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rhi/config.hpp"
#include "rhi/rng.hpp"
#include "rhi/tensor.hpp"

namespace rhi {

struct JointAngles {
    double shoulder = 0.0;  // adduction/abduction, rad
    double elbow = 0.0;     // flexion/extension, rad
};

struct JointLimits {
    double shoulder_min = -0.9, shoulder_max = 0.9;
    double elbow_min = 0.0, elbow_max = 1.2;

    bool contains(const JointAngles& q) const {
        return q.shoulder >= shoulder_min && q.shoulder <= shoulder_max &&
               q.elbow >= elbow_min && q.elbow <= elbow_max;
    }
    JointAngles clamp(const JointAngles& q, double margin = 0.0) const {
        auto clip = [](double v, double lo, double hi) {
            return v < lo ? lo : (v > hi ? hi : v);
        };
        return {clip(q.shoulder, shoulder_min - margin, shoulder_max + margin),
                clip(q.elbow, elbow_min - margin, elbow_max + margin)};
    }
};

struct ArmGeometry {
    double upper_arm_length = 0.30;  // m
    double forearm_length = 0.30;    // m
    double shoulder_x = -0.10;       // m, + rightward from midline
    double shoulder_y = 0.0;         // m, + forward
};

struct VirtualOffset {
    double dx = 0.0;  // m, lateral displacement of the rendered arm
};

struct StimulationEvent {
    double t_v = 0.0;  // visual event time, s
    double t_t = 0.0;  // tactile event time, s (>= t_v)
};

enum class StimulationMode { Sync, Async };

struct ViewWindow {
    double x_min = -0.6, x_max = 0.6;  // m
    double y_min = 0.0, y_max = 0.8;   // m
};

struct RenderConfig {
    std::size_t resolution = 64;       // square image
    ViewWindow view;
    double upper_arm_width = 0.055;    // capsule full width, m
    double forearm_width = 0.045;
    double hand_radius = 0.035;        // round cap at the end effector
};

struct EnvConfig {
    ArmGeometry geom;
    JointLimits limits;
    RenderConfig render;
    double sigma_p = 0.01;             // proprioceptive noise std, rad
    JointAngles resting;               // physical posture during trials
    double offset_left = -0.15;        // m
    double offset_center = 0.0;
    double offset_right = 0.15;
    double event_interval = 2.0;       // s between visual events
    double sync_delay_max = 0.1;       // s, exclusive
    double async_delay_max = 1.0;      // s, exclusive

    static EnvConfig from_config(const Config& cfg);
    Config to_config() const;
};

struct Vec2 {
    double x = 0.0, y = 0.0;
};

struct Mat2 {
    // row-major [ [a,b], [c,d] ]
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

// Planar two-link chain. Zero angles point the arm along +y (forward);
// positive rotation is counterclockwise, so positive angles swing leftward.
Vec2 forward_kinematics(const JointAngles& q, const ArmGeometry& geom);

// Analytic 2x2 Jacobian d(hand)/d(shoulder, elbow), m/rad.
Mat2 fk_jacobian(const JointAngles& q, const ArmGeometry& geom);

// Deterministic top-down rendering: the two arm segments as anti-aliased
// capsules, white on black, whole arm shifted laterally by offset.dx.
// Returns [res, res] tensor with values in [0,1]. Throws if no pixel of the
// arm lands inside the view window (configuration error).
Tensor render_arm(const JointAngles& q, const VirtualOffset& offset,
                  const EnvConfig& cfg);

struct Observation {
    JointAngles s_p;                        // noisy joint readout
    Tensor s_v;                             // [res,res] grayscale image
    std::optional<StimulationEvent> event;  // event completing at this step
};

// Visual events fire every event_interval seconds strictly inside (0,
// duration); the tactile follow-up delay is U[0, 0.1) in sync mode and
// U[0, 1) in async mode.
std::vector<StimulationEvent> stimulation_schedule(StimulationMode mode,
                                                   double duration,
                                                   const EnvConfig& cfg, Rng& rng);

class ArmEnv {
public:
    // clamped: the physical arm never moves (illusion protocol); commanded
    // actions are recorded but have no effect. Free mode integrates joint
    // velocities and exists for tests.
    ArmEnv(const EnvConfig& cfg, VirtualOffset offset, bool clamped, std::uint64_t seed);

    Observation observe();
    void step(const std::array<double, 2>& action, double dt);

    const JointAngles& true_angles() const { return q_; }
    const EnvConfig& config() const { return cfg_; }
    const VirtualOffset& offset() const { return offset_; }
    const std::array<double, 2>& last_action() const { return last_action_; }

private:
    EnvConfig cfg_;
    VirtualOffset offset_;
    bool clamped_;
    JointAngles q_;
    std::array<double, 2> last_action_{0.0, 0.0};
    Rng rng_;
};

}  // namespace rhi
