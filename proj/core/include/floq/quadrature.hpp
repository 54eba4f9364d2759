#ifndef FLOQ_QUADRATURE_HPP
#define FLOQ_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace floq {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    explicit GaussLegendre(int order);
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Composite Gauss-Legendre quadrature of f over [a, b] split into equal panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 32, int order = 20);

}  // namespace floq

#endif
