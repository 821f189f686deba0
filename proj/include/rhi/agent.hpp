// The active-inference agent. Perception descends the free energy in belief
// space; action descends it through the proprioceptive channel. Both are
// first-order Euler updates:
//
//   mu' = mu + lr * [ Sp_inv (s_p - mu) + Jv^T (gamma Sv_inv (s_v - g_v(mu))) ]
//   a'  = a  - lr_a * dt * Sp_inv (s_p - mu)
//
// The internal-dynamics term is identically zero in this setting (no
// dynamics on the brain variables); sigma_mu_inv is kept in the precision
// struct for completeness but multiplies nothing.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "rhi/arm_env.hpp"
#include "rhi/causal.hpp"
#include "rhi/config.hpp"
#include "rhi/model.hpp"

namespace rhi {

struct Precisions {
    double sigma_p_inv = 1.0;   // 1/rad^2, per joint
    double sigma_v_inv = 1.0;   // per normalized pixel^2; divided by pixel
                                // count in use so the visual term is
                                // resolution independent
    double sigma_mu_inv = 0.0;  // dynamics precision; multiplies a zero term
};

struct AgentAction {
    std::array<double, 2> a{0.0, 0.0};  // rad/s
};

enum class DriftMeasure { Final, TimeAveraged };

struct AgentConfig {
    Precisions prec;
    double lr_perception = 0.1;
    double lr_action = 1.0;
    double action_max = 1.0;  // rad/s, per-joint clamp
    double mu_margin = 0.1;   // rad beyond joint limits before clamping
    double gamma0 = 0.01;
    double duration_s = 30.0;
    int iterations = 1500;
    CausalParams causal;      // causal.dt is overwritten with duration/iterations
    int force_smooth_window = 1;
    DriftMeasure drift_measure = DriftMeasure::Final;

    double dt() const { return duration_s / double(iterations); }

    static AgentConfig from_config(const Config& cfg);
    Config to_config() const;
};

struct PerceptionResult {
    std::array<double, 2> mu{0.0, 0.0};
    double free_energy = 0.0;  // evaluated at the pre-update belief
    bool oob = false;          // clamped against limits+margin or the model range
};

// One gradient step of the belief against an observation. gamma scales the
// visual error term only.
PerceptionResult perception_step(const std::array<double, 2>& mu, const Observation& obs,
                                 const VisualModel& model, double gamma,
                                 const Precisions& prec, double lr,
                                 const JointLimits& limits, double mu_margin);

// Action increment from the proprioceptive error; returns the clamped
// updated command.
AgentAction action_step(const AgentAction& a, const std::array<double, 2>& mu,
                        const JointAngles& s_p, const Precisions& prec, double dt,
                        double lr_action, double action_max);

// Precision-weighted squared prediction error (dynamics term omitted:
// f(mu) = 0). Diagnostic; perception_step's direction equals -dF/dmu.
double free_energy(const std::array<double, 2>& mu, const Observation& obs,
                   const VisualModel& model, const Precisions& prec, double gamma);

enum class Condition { Left, Center, Right };

std::string to_string(Condition c);
std::string to_string(StimulationMode m);
Condition condition_from_string(const std::string& s);
StimulationMode mode_from_string(const std::string& s);

struct TraceRow {
    int iter = 0;
    double t_s = 0.0;
    double mu_shoulder = 0.0, mu_elbow = 0.0;
    double sp_shoulder = 0.0, sp_elbow = 0.0;
    double a_shoulder = 0.0, a_elbow = 0.0;
    double gamma = 0.0;
    double free_energy = 0.0;
    double ee_mu_x = 0.0, ee_mu_y = 0.0;
    double ee_accel_x = 0.0;
    int oob = 0;
};

struct TrialTrace {
    std::vector<TraceRow> rows;
    bool aborted = false;
    std::string abort_reason;
    JointAngles initial_mu;  // belief at t = 0, before any update
};

// CSV with the exact column order used by the harness.
void write_trace_csv(const std::string& path, const TrialTrace& trace);
TrialTrace read_trace_csv(const std::string& path);

// Full protocol loop: observe, causal update, perception, action, clamped
// env step, record. The belief starts at the true resting posture.
TrialTrace run_trial(const EnvConfig& env_cfg, const VisualModel& model,
                     const AgentConfig& agent_cfg, Condition condition,
                     StimulationMode mode, std::uint64_t seed);

}  // namespace rhi
