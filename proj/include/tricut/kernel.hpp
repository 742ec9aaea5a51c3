#pragma once

#include <string>

namespace tricut {

enum class KernelKind { Triangular, Xy };

/// Coupling-function pair defining the relaxation. `energy` is the even,
/// period-4 pair kernel entering the Lyapunov function, normalized to
/// energy(0) = 1 and energy(+-2) = -1; `coupling` is its derivative, the
/// odd periodic function entering the equations of motion.
///
/// Triangular: energy(v) = 1 - v^2 on [-1, 1], (v-2)^2 - 1 on [1, 3],
/// giving the piecewise-linear coupling 2*{-v; v-2}. Xy: energy(v) =
/// cos(pi v / 2), the rank-2 relaxation written on the same period.
class Kernel {
public:
    static Kernel triangular() { return Kernel(KernelKind::Triangular); }
    static Kernel xy() { return Kernel(KernelKind::Xy); }

    /// Only period 4 is supported; other values are rejected.
    explicit Kernel(KernelKind kind, double period = 4.0);

    KernelKind kind() const { return kind_; }
    double period() const { return 4.0; }

    double energy(double v) const;    // Phi
    double coupling(double v) const;  // phi = dPhi/dv

    /// Performance-ratio constant (4/P) * min_{0<|v|<=2} |v| / (1 - energy(v)),
    /// computed to ~1e-9 by grid search plus golden-section refinement.
    /// Triangular: (2 + sqrt(2))/4 = 0.8535534; xy: 0.8785672.
    double performance_ratio() const;

    std::string name() const;

private:
    KernelKind kind_;
};

}  // namespace tricut
