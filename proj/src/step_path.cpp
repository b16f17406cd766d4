#include "plateau/step_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "plateau/numerics.hpp"

namespace plateau {

StepPath::StepPath(double value_at_zero, std::vector<double> breakpoints,
                   std::vector<double> values)
    : value_at_zero_(value_at_zero),
      breakpoints_(std::move(breakpoints)),
      values_(std::move(values)) {
    if (breakpoints_.size() != values_.size())
        throw std::invalid_argument("StepPath: breakpoint/value length mismatch");
    if (!std::isfinite(value_at_zero_)) throw std::invalid_argument("StepPath: non-finite value");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i]) || !std::isfinite(values_[i]))
            throw std::invalid_argument("StepPath: non-finite entry");
        if (breakpoints_[i] < 0.0) throw std::invalid_argument("StepPath: negative breakpoint");
        if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1]))
            throw std::invalid_argument("StepPath: breakpoints not strictly increasing");
    }
    // A breakpoint at t = 0 makes value_at_zero unobservable; fold it in.
    if (!breakpoints_.empty() && breakpoints_.front() == 0.0) {
        value_at_zero_ = values_.front();
        breakpoints_.erase(breakpoints_.begin());
        values_.erase(values_.begin());
    }
}

double StepPath::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("StepPath: negative time");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return value_at_zero_;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepPath::left_limit(double t) const {
    if (t < 0.0) throw std::domain_error("StepPath: negative time");
    if (t == 0.0) return value_at_zero_;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return value_at_zero_;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepPath StepPath::canonical(double value_tol) const {
    std::vector<double> bp, val;
    bp.reserve(breakpoints_.size());
    val.reserve(values_.size());
    double prev = value_at_zero_;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (std::abs(values_[i] - prev) <= value_tol) continue;
        bp.push_back(breakpoints_[i]);
        val.push_back(values_[i]);
        prev = values_[i];
    }
    return {value_at_zero_, std::move(bp), std::move(val)};
}

StepPath StepPath::indicator(double from) {
    if (from <= 0.0) return {1.0, {}, {}};
    return {0.0, {from}, {1.0}};
}

StepPath StepPath::cumulative(const std::vector<double>& increments) {
    std::vector<double> bp(increments.size()), val(increments.size());
    KahanSum sum;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        sum.add(increments[i]);
        bp[i] = static_cast<double>(i + 1);
        val[i] = sum.value();
    }
    return {0.0, std::move(bp), std::move(val)};
}

StepPath running_sup(const StepPath& p) {
    std::vector<double> val(p.values());
    double best = p.value_at_zero();
    for (double& v : val) {
        best = std::max(best, v);
        v = best;
    }
    return StepPath(p.value_at_zero(), p.breakpoints(), std::move(val)).canonical();
}

StepPath difference(const StepPath& x, const StepPath& y) {
    const auto& bx = x.breakpoints();
    const auto& by = y.breakpoints();
    std::vector<double> bp, val;
    bp.reserve(bx.size() + by.size());
    val.reserve(bx.size() + by.size());
    std::size_t i = 0, j = 0;
    double vx = x.value_at_zero(), vy = y.value_at_zero();
    while (i < bx.size() || j < by.size()) {
        double t;
        if (j >= by.size() || (i < bx.size() && bx[i] <= by[j]))
            t = bx[i];
        else
            t = by[j];
        if (i < bx.size() && bx[i] == t) vx = x.values()[i++];
        if (j < by.size() && by[j] == t) vy = y.values()[j++];
        bp.push_back(t);
        val.push_back(vx - vy);
    }
    return StepPath(x.value_at_zero() - y.value_at_zero(), std::move(bp), std::move(val))
        .canonical();
}

StepPath translate_G(const StepPath& x, double c) {
    if (c == 0.0) return x;
    const auto& bx = x.breakpoints();
    std::vector<double> bp, val;
    bp.reserve(bx.size());
    val.reserve(bx.size());
    double v0 = x.value_at_zero();
    if (c < 0.0) v0 = x(-c);
    for (std::size_t i = 0; i < bx.size(); ++i) {
        const double t = bx[i] + c;
        if (t <= 0.0) continue;
        bp.push_back(t);
        val.push_back(x.values()[i]);
    }
    return StepPath(v0, std::move(bp), std::move(val)).canonical();
}

StepPath idle_H(const StepPath& x, const StepPath& y, double c) {
    return running_sup(difference(x, translate_G(y, c)));
}

StepPath plateau_F(const StepPath& x, const StepPath& y, double c) {
    const StepPath h = idle_H(x, y, c);
    // K(t) = sup_{s<=t} (y(s) - y(s-) + H(s)). The no-jump values of s
    // contribute sup_{s<=t} H(s) = H(t) since H is nondecreasing; jump terms
    // live on y's breakpoints (there is no jump at 0: y(0-) = y(0)).
    const auto& by = y.breakpoints();
    const auto& bh = h.breakpoints();
    std::vector<double> bp, kval, hval;
    bp.reserve(by.size() + bh.size());
    std::size_t i = 0, j = 0;
    double prev_y = y.value_at_zero();
    double cur_h = h.value_at_zero();
    double best_jump_term = -std::numeric_limits<double>::infinity();
    while (i < by.size() || j < bh.size()) {
        double t;
        if (j >= bh.size() || (i < by.size() && by[i] <= bh[j]))
            t = by[i];
        else
            t = bh[j];
        if (j < bh.size() && bh[j] == t) cur_h = h.values()[j++];
        if (i < by.size() && by[i] == t) {
            const double jump = y.values()[i] - prev_y;
            prev_y = y.values()[i];
            ++i;
            best_jump_term = std::max(best_jump_term, jump + cur_h);
        }
        bp.push_back(t);
        kval.push_back(std::max(cur_h, best_jump_term));
        hval.push_back(cur_h);
    }
    std::vector<double> fval(bp.size());
    for (std::size_t k = 0; k < bp.size(); ++k) fval[k] = kval[k] - hval[k];
    return StepPath(0.0, std::move(bp), std::move(fval)).canonical();
}

StepPath scale_path(const StepPath& p, double a, double n) {
    if (!(a > 0.0) || !(n > 0.0))
        throw std::invalid_argument("scale_path: scale factors must be positive");
    std::vector<double> bp(p.breakpoints()), val(p.values());
    for (double& t : bp) t /= n;
    for (double& v : val) v /= a;
    return {p.value_at_zero() / a, std::move(bp), std::move(val)};
}

bool approx_equal(const StepPath& a, const StepPath& b, double value_abs_tol,
                  double value_rel_tol, double time_tol) {
    const StepPath ca = a.canonical(value_abs_tol);
    const StepPath cb = b.canonical(value_abs_tol);
    if (ca.size() != cb.size()) return false;
    auto close = [&](double u, double v, double abs_tol, double rel_tol) {
        return std::abs(u - v) <= abs_tol + rel_tol * std::max(std::abs(u), std::abs(v));
    };
    if (!close(ca.value_at_zero(), cb.value_at_zero(), value_abs_tol, value_rel_tol)) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!close(ca.breakpoints()[i], cb.breakpoints()[i], time_tol, time_tol)) return false;
        if (!close(ca.values()[i], cb.values()[i], value_abs_tol, value_rel_tol)) return false;
    }
    return true;
}

}  // namespace plateau
