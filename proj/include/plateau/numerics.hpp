#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace plateau {

/// Compensated (Neumaier) accumulator for long running sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
/// Subdivides until the summed error estimate is below
/// max(abs_tol, rel_tol * |integral|) or max_depth is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_depth = 60);

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Root of a continuous increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
/// Bisection with secant acceleration; stops when the bracket is below
/// rel_x * |root| + abs_x or |f| <= f_tol.
RootResult solve_increasing(const std::function<double(double)>& f, double lo, double hi,
                            double f_tol = 0.0, double rel_x = 1e-14, double abs_x = 0.0,
                            int max_iter = 300);

/// Fritsch-Carlson monotone piecewise-cubic interpolant on a strictly
/// increasing grid. Preserves monotonicity of the data on monotone segments;
/// segment integrals are available in closed form.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    /// Integral of the interpolant over [x.front(), x.back()].
    double integral() const;

    const std::vector<double>& grid() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    std::vector<double> x_, y_, slope_;
};

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace plateau
