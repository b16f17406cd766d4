#pragma once

#include <cstddef>
#include <vector>

namespace plateau {

/// Right-continuous piecewise-constant path on [0, inf), represented by a
/// strictly increasing breakpoint grid and the value taken from each
/// breakpoint onward. Exact sup/translate/difference algebra stays closed on
/// this class, which is what makes the path-functional identities testable to
/// rounding error rather than discretization error.
///
/// A breakpoint at t = 0 is folded into value_at_zero on construction, so the
/// representation of a given function is unique up to redundant breakpoints.
/// Instances are immutable after construction.
class StepPath {
public:
    /// The zero path.
    StepPath() = default;

    StepPath(double value_at_zero, std::vector<double> breakpoints, std::vector<double> values);

    double value_at_zero() const { return value_at_zero_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return breakpoints_.size(); }

    /// Right-continuous evaluation p(t). Rejects t < 0.
    double operator()(double t) const;

    /// Left limit p(t-) for t > 0; by convention p(0-) = p(0).
    double left_limit(double t) const;

    /// Largest breakpoint, or 0 for a breakpoint-free path.
    double last_time() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

    /// Drops breakpoints whose value matches the preceding value within
    /// value_tol (exact duplicates for the default 0).
    StepPath canonical(double value_tol = 0.0) const;

    /// Indicator of [from, inf).
    static StepPath indicator(double from);

    /// Path of partial sums t -> sum_{i <= floor(t)} inc[i-1], i.e. the
    /// cumulative process with unit-spaced breakpoints 1..n and compensated
    /// summation of the increments.
    static StepPath cumulative(const std::vector<double>& increments);

private:
    double value_at_zero_ = 0.0;
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// t -> sup_{0 <= s <= t} p(s).
StepPath running_sup(const StepPath& p);

/// Pointwise difference x - y on the merged breakpoint grid.
StepPath difference(const StepPath& x, const StepPath& y);

/// Translation G(x, c)(t) = x([t - c]+). Any real c is allowed.
StepPath translate_G(const StepPath& x, double c);

/// H(x, y, c) = (x - G(y, c))^sup, the running supremum of the difference.
StepPath idle_H(const StepPath& x, const StepPath& y, double c);

/// F(x, y, c)(t) = sup_{0<=s<=t} (y(s) - y(s-) + H(x,y,c)(s)) - H(x,y,c)(t).
/// The supremum is exact: the jump term is nonzero only at breakpoints of y
/// and H is piecewise constant, so it reduces to a finite max on the merged
/// grid.
StepPath plateau_F(const StepPath& x, const StepPath& y, double c);

/// t -> p(n t) / a for a, n > 0.
StepPath scale_path(const StepPath& p, double a, double n);

/// Structural comparison of canonical forms: same breakpoint count,
/// breakpoints within time_tol (abs + rel) and values within value tolerances.
bool approx_equal(const StepPath& a, const StepPath& b, double value_abs_tol = 1e-12,
                  double value_rel_tol = 0.0, double time_tol = 0.0);

}  // namespace plateau
