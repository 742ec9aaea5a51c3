#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tricut/graph.hpp"
#include "tricut/kernel.hpp"

namespace tricut {

/// Canonical wrap onto one period: [-2, 2).
inline double wrap_period(double v) {
    return v - 4.0 * std::floor((v + 2.0) * 0.25);
}

/// Machine state: one real per node, always held in [-2, 2). Construction
/// wraps, so every ContinuousState in circulation satisfies the invariant.
class ContinuousState {
public:
    ContinuousState() = default;
    explicit ContinuousState(std::vector<double> values) : v_(std::move(values)) {
        for (double& x : v_) x = wrap_period(x);
    }

    /// Fresh-start state: i.i.d. uniform on (-1, 1). The all-zero state is a
    /// fixed point of the flow, so starts are always randomized.
    static ContinuousState uniform_random(int n, std::mt19937_64& rng);

    int size() const { return static_cast<int>(v_.size()); }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return v_; }

private:
    std::vector<double> v_;
};

struct DynParams {
    double anisotropy = 1.0;  // K_s, self-coupling toward the binary lattice {0, 2}
    double dt = 0.1;
    int steps = 0;
    Kernel kernel = Kernel::triangular();
};

struct TracePoint {
    int step = 0;
    double energy = 0.0;       // Lyapunov value H
    double relaxed_cut = 0.0;
};

/// One synchronous explicit-Euler step of
///   dv_i/dt = -sum_j A_ij phi(v_i - v_j) + K_s phi(2 v_i),
/// all drifts evaluated on the pre-step state. O(M + N).
ContinuousState step_euler(const ContinuousState& s, const Graph& g, const DynParams& p);

/// `steps` Euler steps; when `trace` is given, records (step, H, relaxed cut)
/// at step 0 and after every step.
ContinuousState evolve(const ContinuousState& s0, const Graph& g, const DynParams& p,
                       std::vector<TracePoint>* trace = nullptr);

/// Lyapunov function of the flow:
///   H(v) = sum_{(i,j) in E} w_ij Phi(v_i - v_j) - (K_s/2) sum_i Phi(2 v_i).
double lyapunov_energy(const ContinuousState& s, const Graph& g, double anisotropy,
                       const Kernel& k);

/// Relaxed cut M/2 - (1/2) sum_{(i,j) in E} w_ij Phi(v_i - v_j); coincides
/// with the integer cut on binary-lattice states.
double relaxed_cut(const ContinuousState& s, const Graph& g, const Kernel& k);

}  // namespace tricut
