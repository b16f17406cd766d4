#include "plateau/tandem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plateau/numerics.hpp"

namespace plateau {

namespace {

std::int64_t count_leq(const std::vector<double>& sorted, double t) {
    return static_cast<std::int64_t>(std::upper_bound(sorted.begin(), sorted.end(), t) -
                                     sorted.begin());
}

std::int64_t count_lt(const std::vector<double>& sorted, double t) {
    return static_cast<std::int64_t>(std::lower_bound(sorted.begin(), sorted.end(), t) -
                                     sorted.begin());
}

}  // namespace

void TandemInputs::validate() const {
    if (interarrival.size() != service.size())
        throw std::invalid_argument("TandemInputs: length mismatch");
    for (double u : interarrival)
        if (!(u >= 0.0) || !std::isfinite(u))
            throw std::invalid_argument("TandemInputs: interarrival times must be >= 0");
    for (double v : service)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("TandemInputs: service times must be > 0");
}

TandemTrajectory TandemTrajectory::build(const TandemInputs& in) {
    in.validate();
    const std::size_t n = in.job_count();
    TandemTrajectory traj;
    traj.u_ = in.interarrival;
    traj.v_ = in.service;
    traj.arrival_.resize(n);
    traj.total_work_.resize(n);
    traj.idle_.resize(n);
    traj.transfer_.resize(n);
    traj.done_.resize(n);
    traj.sojourn_.resize(n);
    traj.bracket_.resize(n);

    KahanSum arrivals, work, idle;
    double prev_transfer = 0.0;  // D_0 = 0
    double prev_done = 0.0;      // C_0 = 0
    double prev_sojourn = 0.0;   // M_0 = 0
    for (std::size_t i = 0; i < n; ++i) {
        arrivals.add(in.interarrival[i]);
        work.add(in.service[i]);
        traj.arrival_[i] = arrivals.value();
        traj.total_work_[i] = work.value();
        // Server 1 idles over [D_{i-1}, U_i] when the next arrival finds it
        // empty; ties (arrival exactly at a completion) add no idleness.
        const double gap = traj.arrival_[i] - prev_transfer;
        if (gap > 0.0) idle.add(gap);
        traj.idle_[i] = idle.value();
        traj.transfer_[i] = traj.total_work_[i] + traj.idle_[i];  // D_n = V_n + I_n
        prev_transfer = traj.transfer_[i];

        const double start2 = std::max(traj.transfer_[i], prev_done);
        traj.done_[i] = start2 + in.service[i];
        prev_done = traj.done_[i];

        // Lindley recursion on intertransfer times.
        const double d = i == 0 ? traj.transfer_[0] : traj.transfer_[i] - traj.transfer_[i - 1];
        const double bracket = std::max(0.0, prev_sojourn - d);
        traj.bracket_[i] = bracket;
        traj.sojourn_[i] = in.service[i] + bracket;
        prev_sojourn = traj.sojourn_[i];
    }
    return traj;
}

TandemTrajectory build_trajectory(const TandemInputs& in) { return TandemTrajectory::build(in); }

std::int64_t TandemTrajectory::arrivals_q1(double t) const {
    if (t < 0.0) throw std::domain_error("arrivals_q1: negative time");
    return count_leq(arrival_, t);
}

std::int64_t TandemTrajectory::arrivals_q2(double t) const {
    if (t < 0.0) throw std::domain_error("arrivals_q2: negative time");
    return count_leq(transfer_, t);
}

double TandemTrajectory::idle_time_q1(double t) const {
    if (t < 0.0) throw std::domain_error("idle_time_q1: negative time");
    // I(t) = t minus the time served by queue 1 up to t.
    const std::int64_t m = arrivals_q2(t);  // jobs fully served
    double served = m > 0 ? total_work_[static_cast<std::size_t>(m - 1)] : 0.0;
    if (static_cast<std::size_t>(m) < job_count()) {
        const std::size_t next = static_cast<std::size_t>(m);
        const double start1 = std::max(arrival_[next], m > 0 ? transfer_[next - 1] : 0.0);
        if (arrival_[next] <= t) served += std::min(v_[next], std::max(0.0, t - start1));
    }
    return t - served;
}

double TandemTrajectory::workload_q1(double t) const {
    if (t < 0.0) throw std::domain_error("workload_q1: negative time");
    const std::int64_t arrived = arrivals_q1(t);
    const std::int64_t completed = arrivals_q2(t);
    if (arrived == completed) return 0.0;  // every arrived job has transferred
    // Job completed+1 is in service. Remaining work of the in-service job
    // plus the untouched work of later arrivals; both pieces are nonnegative
    // in floating point, clamped against sub-ulp underflow at segment ends.
    const std::size_t cur = static_cast<std::size_t>(completed);
    const double start1 = std::max(arrival_[cur], completed > 0 ? transfer_[cur - 1] : 0.0);
    const double remaining = std::max(0.0, v_[cur] - (t - start1));
    const double queued = total_work_[static_cast<std::size_t>(arrived - 1)] - total_work_[cur];
    return queued + remaining;
}

double TandemTrajectory::q2_work_done(double t) const {
    const std::int64_t finished = count_leq(done_, t);
    double served = finished > 0 ? total_work_[static_cast<std::size_t>(finished - 1)] : 0.0;
    if (static_cast<std::size_t>(finished) < job_count()) {
        const std::size_t cur = static_cast<std::size_t>(finished);
        const double start2 = std::max(transfer_[cur], finished > 0 ? done_[cur - 1] : 0.0);
        if (transfer_[cur] <= t) served += std::min(v_[cur], std::max(0.0, t - start2));
    }
    return served;
}

double TandemTrajectory::workload_q2(double t) const {
    if (t < 0.0) throw std::domain_error("workload_q2: negative time");
    const std::int64_t transferred = arrivals_q2(t);
    const std::int64_t finished = count_leq(done_, t);
    if (transferred == finished) return 0.0;
    const std::size_t cur = static_cast<std::size_t>(finished);
    const double start2 = std::max(transfer_[cur], finished > 0 ? done_[cur - 1] : 0.0);
    const double remaining = std::max(0.0, v_[cur] - std::max(0.0, t - start2));
    const double queued =
        total_work_[static_cast<std::size_t>(transferred - 1)] - total_work_[cur];
    return queued + remaining;
}

double TandemTrajectory::workload_q2_left(double t) const {
    if (t < 0.0) throw std::domain_error("workload_q2_left: negative time");
    if (t == 0.0) return 0.0;
    const std::int64_t transferred = count_lt(transfer_, t);
    const std::int64_t finished = count_lt(done_, t);
    if (transferred == finished) return 0.0;
    const std::size_t cur = static_cast<std::size_t>(finished);
    const double start2 = std::max(transfer_[cur], finished > 0 ? done_[cur - 1] : 0.0);
    const double remaining = std::max(0.0, v_[cur] - std::max(0.0, t - start2));
    const double queued =
        total_work_[static_cast<std::size_t>(transferred - 1)] - total_work_[cur];
    return queued + remaining;
}

double TandemTrajectory::plateau_at(double t) const {
    const std::int64_t r = arrivals_q2(t);
    return r == 0 ? 0.0 : sojourn_[static_cast<std::size_t>(r - 1)];
}

std::vector<double> TandemTrajectory::event_times() const {
    std::vector<double> out;
    out.reserve(3 * job_count());
    out.insert(out.end(), arrival_.begin(), arrival_.end());
    out.insert(out.end(), transfer_.begin(), transfer_.end());
    out.insert(out.end(), done_.begin(), done_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double idleness_closed_form(const TandemInputs& in, std::size_t n) {
    if (n < 1 || n > in.job_count()) throw std::out_of_range("idleness_closed_form: bad index");
    KahanSum partial;
    double best = 0.0;  // k = 1 empty sum
    for (std::size_t j = 2; j <= n; ++j) {
        partial.add(in.interarrival[j - 1] - in.service[j - 2]);
        best = std::max(best, partial.value());
    }
    return in.interarrival[0] + best;
}

std::vector<double> idleness_closed_form_all(const TandemInputs& in) {
    in.validate();
    const std::size_t n = in.job_count();
    std::vector<double> out(n);
    KahanSum partial;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            partial.add(in.interarrival[i] - in.service[i - 1]);
            best = std::max(best, partial.value());
        }
        out[i] = in.interarrival[0] + best;
    }
    return out;
}

std::vector<double> idleness_via_H_all(const TandemInputs& in) {
    in.validate();
    const StepPath u_path = StepPath::cumulative(in.interarrival);
    const StepPath v_path = StepPath::cumulative(in.service);
    const StepPath h = idle_H(u_path, v_path, 1.0);
    std::vector<double> out(in.job_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = h(static_cast<double>(i + 1));
    return out;
}

double idleness_via_H(const TandemInputs& in, std::size_t n) {
    if (n < 1 || n > in.job_count()) throw std::out_of_range("idleness_via_H: bad index");
    return idleness_via_H_all(in)[n - 1];
}

std::vector<double> sojourn_lindley(const TandemInputs& in) {
    in.validate();
    const std::size_t n = in.job_count();
    std::vector<double> out(n);
    const std::vector<double> idle = idleness_closed_form_all(in);
    double prev = 0.0, prev_idle = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // d_{n+1} = v_{n+1} + (I_{n+1} - I_n)
        const double d = in.service[i] + (idle[i] - prev_idle);
        out[i] = i == 0 ? in.service[0] : in.service[i] + std::max(0.0, prev - d);
        prev = out[i];
        prev_idle = idle[i];
    }
    return out;
}

std::vector<double> sojourn_maxformula(const TandemInputs& in) {
    in.validate();
    const std::size_t n = in.job_count();
    std::vector<double> out(n);
    const std::vector<double> idle = idleness_closed_form_all(in);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::max(best, in.service[i] + idle[i]);
        out[i] = best - idle[i];
    }
    return out;
}

std::vector<double> sojourn_functional(const TandemInputs& in) {
    in.validate();
    const StepPath u_path = StepPath::cumulative(in.interarrival);
    const StepPath v_path = StepPath::cumulative(in.service);
    const StepPath f = plateau_F(u_path, v_path, 1.0);
    std::vector<double> out(in.job_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(static_cast<double>(i + 1));
    return out;
}

Q2ArrivalOracle::Q2ArrivalOracle(const TandemInputs& in) {
    const std::vector<double> h = idleness_via_H_all(in);
    const StepPath v_path = StepPath::cumulative(in.service);
    threshold_.resize(in.job_count());
    for (std::size_t i = 0; i < threshold_.size(); ++i)
        threshold_[i] = v_path.values()[i] + h[i];
}

std::int64_t Q2ArrivalOracle::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("Q2ArrivalOracle: negative time");
    return count_leq(threshold_, t);
}

StepPath plateau_path(const TandemTrajectory& traj) {
    return {0.0, traj.transfer_times(), traj.sojourn()};
}

}  // namespace plateau
