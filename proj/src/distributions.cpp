#include "plateau/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace plateau {

namespace {

double parse_number(std::string_view s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("DistSpec: bad number '" + std::string(s) + "'");
    }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

DistSpec DistSpec::exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("DistSpec: exponential rate must be > 0");
    return {Kind::Exponential, rate, 0.0};
}

DistSpec DistSpec::pareto(double scale, double index) {
    if (!(scale > 0.0)) throw std::invalid_argument("DistSpec: pareto scale must be > 0");
    if (!(index > 1.0)) throw std::invalid_argument("DistSpec: pareto index must be > 1");
    return {Kind::Pareto, scale, index};
}

DistSpec DistSpec::deterministic(double value) {
    if (!(value >= 0.0)) throw std::invalid_argument("DistSpec: deterministic value must be >= 0");
    return {Kind::Deterministic, value, 0.0};
}

DistSpec DistSpec::uniform(double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo)) throw std::invalid_argument("DistSpec: need 0 <= lo < hi");
    return {Kind::Uniform, lo, hi};
}

DistSpec DistSpec::parse(std::string_view text) {
    auto parts = split(text, ':');
    if (parts.empty()) throw std::invalid_argument("DistSpec: empty spec");
    const std::string_view name = parts[0];
    auto need = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw std::invalid_argument("DistSpec: wrong parameter count in '" + std::string(text) +
                                        "'");
    };
    if (name == "exp" || name == "exponential") {
        need(1);
        return exponential(parse_number(parts[1]));
    }
    if (name == "pareto") {
        need(2);
        return pareto(parse_number(parts[1]), parse_number(parts[2]));
    }
    if (name == "det" || name == "deterministic") {
        need(1);
        return deterministic(parse_number(parts[1]));
    }
    if (name == "uniform" || name == "unif") {
        need(2);
        return uniform(parse_number(parts[1]), parse_number(parts[2]));
    }
    throw std::invalid_argument("DistSpec: unknown kind '" + std::string(name) + "'");
}

double DistSpec::mean() const {
    switch (kind_) {
        case Kind::Exponential: return 1.0 / p_[0];
        case Kind::Pareto: return p_[1] * p_[0] / (p_[1] - 1.0);
        case Kind::Deterministic: return p_[0];
        case Kind::Uniform: return 0.5 * (p_[0] + p_[1]);
    }
    return 0.0;
}

double DistSpec::sample_one(SeededStream& stream) const {
    switch (kind_) {
        case Kind::Exponential: return stream.next_exponential(p_[0]);
        case Kind::Pareto: return stream.next_pareto(p_[0], p_[1]);
        case Kind::Deterministic: return p_[0];
        case Kind::Uniform: return p_[0] + (p_[1] - p_[0]) * stream.next_unit();
    }
    return 0.0;
}

std::vector<double> DistSpec::sample(SeededStream& stream, std::size_t n) const {
    std::vector<double> out(n);
    for (double& v : out) v = sample_one(stream);
    return out;
}

std::string DistSpec::to_string() const {
    char buf[64];
    switch (kind_) {
        case Kind::Exponential: std::snprintf(buf, sizeof buf, "exp:%.17g", p_[0]); break;
        case Kind::Pareto: std::snprintf(buf, sizeof buf, "pareto:%.17g:%.17g", p_[0], p_[1]); break;
        case Kind::Deterministic: std::snprintf(buf, sizeof buf, "det:%.17g", p_[0]); break;
        case Kind::Uniform: std::snprintf(buf, sizeof buf, "uniform:%.17g:%.17g", p_[0], p_[1]); break;
    }
    return buf;
}

std::vector<JumpAtom> stable_jump_ppm(double alpha, double c_alpha, double horizon, double eps,
                                      SeededStream& stream) {
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw std::invalid_argument("stable_jump_ppm: alpha must be in (1,2)");
    if (!(c_alpha > 0.0)) throw std::invalid_argument("stable_jump_ppm: c_alpha must be > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("stable_jump_ppm: horizon must be > 0");
    if (!(eps > 0.0) || eps >= 1.0)
        throw std::invalid_argument("stable_jump_ppm: eps must lie in (0,1)");
    const double rate = c_alpha * std::pow(eps, -alpha) / alpha;
    std::vector<JumpAtom> atoms;
    atoms.reserve(static_cast<std::size_t>(1.1 * rate * horizon) + 16);
    double t = 0.0;
    for (;;) {
        double next = t + stream.next_exponential(rate);
        if (next <= t) next = std::nextafter(t, horizon + 1.0);  // gap below time resolution
        if (next > horizon) break;
        atoms.push_back({next, stream.next_pareto(eps, alpha)});
        t = next;
    }
    return atoms;
}

}  // namespace plateau
