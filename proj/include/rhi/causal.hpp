// Visuo-tactile causal belief: gamma is the posterior probability that the
// seen and felt stimulation events share a single cause. Events trigger a
// two-hypothesis Bayes update on the visuo-tactile delay; between events the
// belief decays exponentially in the time since the last event.
#pragma once

#include <optional>

#include "rhi/arm_env.hpp"

namespace rhi {

inline constexpr double kGammaFloor = 1e-6;

struct CausalBelief {
    double gamma = 0.01;
    std::optional<double> last_event_time;  // max(t_v, t_t) of last processed event
};

enum class DecayTimeScaling {
    MultiplyDt,  // exponent = (t - t_last)^2 * dt * r_decay
    DivideDt,    // exponent = (t - t_last)^2 / dt * r_decay (sensitivity variant)
};

struct CausalParams {
    double sigma_c = 0.15;         // s, Gaussian std of the common-cause delay
    double uniform_density = 0.5;  // 1/s, flat likelihood of independent causes
    double r_decay = 0.1;
    double dt = 0.02;              // s per iteration
    DecayTimeScaling decay_scaling = DecayTimeScaling::MultiplyDt;

    void validate() const;
};

double gaussian_pdf(double x, double mean, double stddev);

// Single Bayes step on the event delay; clamps to [kGammaFloor, 1].
CausalBelief event_update(const CausalBelief& belief, const StimulationEvent& ev,
                          const CausalParams& params);

// Exponential decay toward zero belief since the last event; identity when no
// event has been processed yet. t must not precede the last event.
CausalBelief decay_update(const CausalBelief& belief, double t,
                          const CausalParams& params);

struct GammaTrajectoryStats {
    double tail_mean = 0.0;
    double tail_min = 0.0;
    double tail_max = 0.0;
    std::vector<double> trajectory;  // per-iteration gamma
};

// Simulates a stimulation schedule driving the belief at fixed dt and
// reports statistics over the final half of the trajectory.
GammaTrajectoryStats steady_state_gamma(StimulationMode mode,
                                        const CausalParams& params,
                                        const EnvConfig& env, int n_events,
                                        std::uint64_t seed,
                                        double gamma0 = 0.01);

}  // namespace rhi
