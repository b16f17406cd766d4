#pragma once

#include <cstdint>
#include <vector>

#include "plateau/step_path.hpp"

namespace plateau {

/// Interarrival and service times for one realization of the tandem system.
/// Service times are strictly positive; each job keeps its service time at
/// both queues.
struct TandemInputs {
    std::vector<double> interarrival;  // u_i >= 0
    std::vector<double> service;       // v_i > 0

    std::size_t job_count() const { return interarrival.size(); }
    void validate() const;
};

/// Full event-level solution of the tandem system: per-job arrays plus exact
/// continuous-time queries. Workloads are piecewise linear between events
/// (slope -1 while positive), so all accessors are closed-form per segment.
/// Immutable after construction.
class TandemTrajectory {
public:
    static TandemTrajectory build(const TandemInputs& in);

    std::size_t job_count() const { return arrival_.size(); }

    // Per-job arrays (index i is job i+1).
    const std::vector<double>& interarrival() const { return u_; }
    const std::vector<double>& service() const { return v_; }
    const std::vector<double>& arrival_times() const { return arrival_; }       // U_i
    const std::vector<double>& service_totals() const { return total_work_; }   // V_i
    const std::vector<double>& idleness_at_arrivals() const { return idle_; }   // I_i
    const std::vector<double>& transfer_times() const { return transfer_; }     // D_i
    const std::vector<double>& q2_completions() const { return done_; }         // C_i
    const std::vector<double>& sojourn() const { return sojourn_; }             // M_i
    /// Lindley bracket [M_{i-1} - d_i]^+ ; zero exactly when job i+1 meets an
    /// empty second queue.
    const std::vector<double>& lindley_bracket() const { return bracket_; }

    // Continuous-time queries.
    std::int64_t arrivals_q1(double t) const;  // E(t)
    std::int64_t arrivals_q2(double t) const;  // R(t) = sup{n : D_n <= t}
    double idle_time_q1(double t) const;       // I(t)
    double workload_q1(double t) const;        // W1(t)
    double workload_q2(double t) const;        // W2(t)
    double workload_q2_left(double t) const;   // W2(t-)
    double plateau_at(double t) const;         // M(t) = M_{R(t)}, M_0 = 0

    /// Merged sorted event times: arrivals, transfers, second-queue
    /// completions.
    std::vector<double> event_times() const;

private:
    std::vector<double> u_, v_, arrival_, total_work_, idle_, transfer_, done_, sojourn_, bracket_;
    double q2_work_done(double t) const;
};

TandemTrajectory build_trajectory(const TandemInputs& in);

/// I_n = u_1 + max_{k=1..n} sum_{j=2..k} (u_j - v_{j-1}); the k = 1 empty sum
/// is zero. Index n is 1-based.
double idleness_closed_form(const TandemInputs& in, std::size_t n);
std::vector<double> idleness_closed_form_all(const TandemInputs& in);

/// I_n through the path functional: builds the cumulative step paths U, V and
/// evaluates H(U, V, 1) at integer n.
double idleness_via_H(const TandemInputs& in, std::size_t n);
std::vector<double> idleness_via_H_all(const TandemInputs& in);

/// Sojourn times in the second queue, three independent routes.
std::vector<double> sojourn_lindley(const TandemInputs& in);
std::vector<double> sojourn_maxformula(const TandemInputs& in);
std::vector<double> sojourn_functional(const TandemInputs& in);

/// R(t) as max{m >= 0 : V(m) + H(U,V,1)(m) <= t}, the functional counterpart
/// of the transfer-time definition. Precomputes V(m) + H(m) once.
class Q2ArrivalOracle {
public:
    explicit Q2ArrivalOracle(const TandemInputs& in);
    std::int64_t operator()(double t) const;

private:
    std::vector<double> threshold_;  // V(m) + H(m), m = 1..n
};

/// Cadlag plateau process: value M_n from transfer time D_n onward, 0 before
/// the first transfer. Keeps one breakpoint per transfer.
StepPath plateau_path(const TandemTrajectory& traj);

}  // namespace plateau
