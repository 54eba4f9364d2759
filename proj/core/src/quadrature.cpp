#include "floq/quadrature.hpp"

#include <cmath>

#include "floq/errors.hpp"

namespace floq {

GaussLegendre::GaussLegendre(int order) {
    if (order < 2) throw ValidationError("order", "Gauss-Legendre order must be >= 2");
    nodes.resize(order);
    weights.resize(order);
    // Newton iteration from the Chebyshev-like initial guess; standard recipe.
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
    GaussLegendre gl(order);
    double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (int i = 0; i < order; ++i) acc += gl.weights[i] * f(mid + 0.5 * h * gl.nodes[i]);
        total += 0.5 * h * acc;
    }
    return total;
}

}  // namespace floq
