#include "plateau/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plateau {

namespace {

// G7,K15 nodes/weights on [-1,1] (symmetric; node 0 listed once).
constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000e+00, 2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01, 5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01, 8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01, 9.914553711208126392068546975263285e-01};
constexpr double kKronrodWeights[8] = {
    2.094821410847278280129991748917143e-01, 2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01, 1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01, 1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02, 2.293532201052922496373200805896959e-02};
// Gauss weights for Kronrod nodes 0, 2, 4, 6 (the embedded G7 rule).
constexpr double kGaussWeights[4] = {
    4.179591836734693877551020408163265e-01, 3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01, 1.294849661688696932706114326790820e-01};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kKronrodWeights[0] * fc;
    double gauss = kGaussWeights[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 0) gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    const double diff = std::abs(kronrod - gauss);
    // QUADPACK-style sharpened estimate: (200*diff)^(3/2) when small.
    const double scaled = 200.0 * diff;
    const double err = scaled < 1.0 ? diff * std::sqrt(scaled) : diff;
    return {kronrod, err};
}

struct Panel {
    double a, b, integral, error;
    int depth;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_depth) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    PanelResult first = gk15(f, a, b);
    out.evaluations = 15;
    std::vector<Panel> heap{{a, b, first.integral, first.error, 0}};
    auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    double total = first.integral;
    double total_err = first.error;
    while (true) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol) {
            out.converged = true;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Panel worst = heap.back();
        heap.pop_back();
        if (worst.depth >= max_depth) {
            heap.push_back(worst);  // keep bookkeeping consistent
            break;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        PanelResult left = gk15(f, worst.a, mid);
        PanelResult right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push_back({worst.a, mid, left.integral, left.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back({mid, worst.b, right.integral, right.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
    }
    // Re-sum panels for a tighter total (avoids drift from incremental updates).
    KahanSum s;
    for (const Panel& p : heap) s.add(p.integral);
    out.value = s.value();
    out.error_estimate = total_err;
    return out;
}

RootResult solve_increasing(const std::function<double(double)>& f, double lo, double hi,
                            double f_tol, double rel_x, double abs_x, int max_iter) {
    RootResult out;
    double flo = f(lo);
    double fhi = f(hi);
    out.evaluations = 2;
    if (flo > 0.0 || fhi < 0.0) throw std::invalid_argument("solve_increasing: root not bracketed");
    if (flo == 0.0) {
        out.root = lo;
        out.converged = true;
        return out;
    }
    if (fhi == 0.0) {
        out.root = hi;
        out.converged = true;
        return out;
    }
    double x = lo, fx = flo;
    for (int it = 0; it < max_iter; ++it) {
        // Alternate secant and bisection; secant candidate must fall inside
        // the bracket by a safe margin or we bisect.
        double mid = 0.5 * (lo + hi);
        double cand = mid;
        const double denom = fhi - flo;
        if (denom > 0.0 && (it % 2 == 0)) {
            double sec = lo - flo * (hi - lo) / denom;
            if (sec > lo + 0.01 * (hi - lo) && sec < hi - 0.01 * (hi - lo)) cand = sec;
        }
        x = cand;
        fx = f(x);
        ++out.evaluations;
        if (fx == 0.0) break;
        if (fx < 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        const double width = hi - lo;
        if (width <= rel_x * std::min(std::abs(lo), std::abs(hi)) + abs_x) break;
        if (f_tol > 0.0 && std::abs(fx) <= f_tol) break;
    }
    out.root = x;
    out.residual = fx;
    out.converged = true;
    return out;
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: need >= 2 points");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("MonotoneCubic: grid not increasing");
    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) secant[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    slope_.resize(n);
    slope_[0] = secant[0];
    slope_[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (secant[i - 1] * secant[i] <= 0.0)
            slope_[i] = 0.0;
        else {
            // Harmonic-mean style average keeps the interpolant monotone.
            const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
            const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
            slope_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
        }
    }
    // Fritsch-Carlson limiter at the ends.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (secant[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
            continue;
        }
        const double a = slope_[i] / secant[i];
        const double b = slope_[i + 1] / secant[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            slope_[i] = tau * a * secant[i];
            slope_[i + 1] = tau * b * secant[i];
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] + h * h11 * slope_[i + 1];
}

double MonotoneCubic::integral() const {
    // Hermite segment integral: h/2*(y0+y1) + h^2/12*(m0-m1).
    KahanSum s;
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double h = x_[i + 1] - x_[i];
        s.add(0.5 * h * (y_[i] + y_[i + 1]) + h * h / 12.0 * (slope_[i] - slope_[i + 1]));
    }
    return s.value();
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: bad input");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

}  // namespace plateau
