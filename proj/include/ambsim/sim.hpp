#pragma once

// Closed-loop simulation engine. Each cycle samples the noisy position
// measurement, evaluates the controller cascade on measured signals, then
// integrates the four continuous states (z, z_dot, i, i_ref) over one dt
// with the voltage, the estimator slew rate and the disturbances held
// constant (zero-order hold). Records carry the true state alongside the
// measurement and every controller-side signal, one row per step.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ambsim/scenario.hpp"

namespace ambsim {

enum class RunStatus {
    Completed,
    RotorContact,      ///< |z| reached the air gap; the model is singular there
    SingularGradient,  ///< inversion gradient fell below epsilon_grad (abort policy)
    NumericalBlowup,   ///< non-finite state produced by the integrator
};

const char* to_string(RunStatus s);

/// Process exit code associated with a terminal status (0 for Completed).
int exit_code(RunStatus s);

/// One logged step. `sigma` is the sliding variable of the true state (the
/// physical distance to the manifold); the controller internally uses its
/// measured counterpart, which can be reconstructed from z_measured.
struct SimRecord {
    double t = 0.0;
    double z = 0.0;
    double z_dot = 0.0;
    double i = 0.0;
    double i_ref = 0.0;
    double u = 0.0;
    double sigma = 0.0;
    double v_star = 0.0;
    double v_tilde = 0.0;
    double q_z = 0.0;
    double q_i = 0.0;
    double r = 0.0;
    double z_measured = 0.0;
};

/// Out-of-band run event (singularity hits, terminal causes).
struct RunEvent {
    double t = 0.0;
    std::string kind;
    double value = 0.0;
};

struct RunMetrics {
    double sigma_ss_radius = NAN;          ///< max |sigma| over the settling window
    double max_abs_tracking_error = NAN;   ///< max |z - r| over the settling window
    double vtilde_convergence_time = NAN;  ///< first t after which |vtilde| stays < tol_v; NaN if never
    double tol_v = NAN;                    ///< settling band used above
    std::uint64_t singularity_events = 0;
    bool terminated_early = false;
    RunStatus status = RunStatus::Completed;
    bool converged = false;                ///< completed with sigma_ss_radius <= convergence_radius
    double delta1_estimate = NAN;          ///< post-hoc drift bound for the adaptation gain
    bool delta1_exceeds_gamma = false;     ///< warning: measured drift not dominated by gamma
    std::uint64_t steps = 0;
    double final_time = 0.0;
};

struct RunResult {
    std::vector<SimRecord> records;
    std::vector<RunEvent> events;
    RunMetrics metrics;
};

/// Closed-form inverse of the force map at one operating point: the
/// deviation current solving v(z, i) = v_target on the branch where the
/// force gradient dv/di is positive (the branch the adaptive estimator
/// lives on). Used to warm-start i_ref; the per-step inversion is always
/// the adaptive law. Throws std::domain_error when no such current exists.
double invert_force(const PlantParams& p, double z, double v_target);

/// Pull-based stepper: one SimRecord per control cycle.
class Simulator {
public:
    /// cfg must be resolved; the constructor validates it.
    explicit Simulator(const ScenarioConfig& cfg);

    /// Run one control-and-integrate cycle. Returns the record for the
    /// cycle, or std::nullopt once the horizon is exhausted or a terminal
    /// condition fired (see status()).
    std::optional<SimRecord> next();

    RunStatus status() const { return status_; }
    bool finished() const { return finished_; }
    double time() const { return static_cast<double>(step_index_) * cfg_.dt; }
    std::uint64_t steps_taken() const { return step_index_; }
    std::uint64_t singularity_events() const { return singularity_events_; }
    const std::vector<RunEvent>& events() const { return events_; }
    const ScenarioConfig& config() const { return cfg_; }

    /// Current true state (z, z_dot, i).
    PlantState plant_state() const { return PlantState{y_[0], y_[1], y_[2]}; }
    double i_ref() const { return y_[3]; }

private:
    double gaussian();
    void terminate(RunStatus status, const char* event, double value);

    ScenarioConfig cfg_;
    std::uint64_t total_steps_ = 0;
    std::uint64_t step_index_ = 0;
    std::array<double, 4> y_{};  // z, z_dot, i, i_ref
    RunStatus status_ = RunStatus::Completed;
    bool finished_ = false;
    bool stop_pending_ = false;
    std::uint64_t singularity_events_ = 0;
    std::vector<RunEvent> events_;
    std::mt19937_64 rng_;
};

/// Run the whole horizon and compute metrics.
RunResult run(const ScenarioConfig& cfg);

/// Metrics over an arbitrary (possibly truncated) log.
RunMetrics compute_metrics(const ScenarioConfig& cfg,
                           const std::vector<SimRecord>& records,
                           RunStatus status, std::uint64_t singularity_events);

}  // namespace ambsim
