#include "tricut/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace tricut {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

/// Reduce to the branch window [-1, 3) with a single floor.
inline double reduce_triangular(double v) {
    return v - 4.0 * std::floor((v + 1.0) * 0.25);
}

inline double tri_energy(double v) {
    const double u = reduce_triangular(v);
    return u <= 1.0 ? 1.0 - u * u : (u - 2.0) * (u - 2.0) - 1.0;
}

inline double tri_coupling(double v) {
    const double u = reduce_triangular(v);
    return u <= 1.0 ? -2.0 * u : 2.0 * (u - 2.0);
}

}  // namespace

Kernel::Kernel(KernelKind kind, double period) : kind_(kind) {
    if (period != 4.0) throw std::invalid_argument("kernel period is fixed at 4");
}

double Kernel::energy(double v) const {
    return kind_ == KernelKind::Triangular ? tri_energy(v) : std::cos(kHalfPi * v);
}

double Kernel::coupling(double v) const {
    return kind_ == KernelKind::Triangular ? tri_coupling(v) : -kHalfPi * std::sin(kHalfPi * v);
}

double Kernel::performance_ratio() const {
    // ratio(v) = (4/P) |v| / (1 - energy(v)), even in v, divergent at v -> 0;
    // minimize over (0, 2]. P = 4 so the prefactor is 1.
    auto ratio = [this](double v) { return v / (1.0 - energy(v)); };

    constexpr int kGridPoints = 40001;
    double best_v = 2.0;
    double best = ratio(2.0);
    for (int i = 1; i < kGridPoints; ++i) {
        const double v = 2.0 * static_cast<double>(i) / (kGridPoints - 1);
        const double r = ratio(v);
        if (r < best) {
            best = r;
            best_v = v;
        }
    }

    const double step = 2.0 / (kGridPoints - 1);
    double lo = std::max(best_v - step, step * 0.5);
    double hi = std::min(best_v + step, 2.0);
    constexpr double kInvPhi = 0.6180339887498949;
    double a = hi - kInvPhi * (hi - lo);
    double b = lo + kInvPhi * (hi - lo);
    double fa = ratio(a);
    double fb = ratio(b);
    while (hi - lo > 1e-12) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - kInvPhi * (hi - lo);
            fa = ratio(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + kInvPhi * (hi - lo);
            fb = ratio(b);
        }
    }
    return std::min({best, fa, fb});
}

std::string Kernel::name() const {
    return kind_ == KernelKind::Triangular ? "triangular" : "xy";
}

}  // namespace tricut
