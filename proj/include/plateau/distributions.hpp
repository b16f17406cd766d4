#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plateau/rng.hpp"

namespace plateau {

/// Distribution of interarrival or service times. Parses from config strings
/// of the form "exp:0.3226", "pareto:1:1.5", "det:2.0", "uniform:0:1".
class DistSpec {
public:
    enum class Kind { Exponential, Pareto, Deterministic, Uniform };

    static DistSpec exponential(double rate);
    /// Pareto with survival (scale/x)^index on [scale, inf). The index must
    /// exceed 1: the model requires finite-mean service and interarrival laws.
    static DistSpec pareto(double scale, double index);
    static DistSpec deterministic(double value);
    static DistSpec uniform(double lo, double hi);
    static DistSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    double param(int i) const { return p_[i]; }
    double mean() const;
    double sample_one(SeededStream& stream) const;
    std::vector<double> sample(SeededStream& stream, std::size_t n) const;
    std::string to_string() const;

private:
    DistSpec(Kind kind, double p0, double p1) : kind_(kind), p_{p0, p1} {}
    Kind kind_;
    double p_[2];
};

struct JumpAtom {
    double time;
    double size;
};

/// Atoms of a Poisson random measure on [0, T] x (eps, inf) with intensity
/// dt x c_alpha x^{-1-alpha} dx. Times are generated through exponential
/// inter-jump gaps, so they come out sorted and the count is Poisson with
/// mean T * c_alpha * eps^{-alpha} / alpha by construction. Jump sizes are
/// inverse-transform Pareto(eps, alpha).
std::vector<JumpAtom> stable_jump_ppm(double alpha, double c_alpha, double horizon, double eps,
                                      SeededStream& stream);

}  // namespace plateau
