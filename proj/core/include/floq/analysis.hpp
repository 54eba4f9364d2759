#ifndef FLOQ_ANALYSIS_HPP
#define FLOQ_ANALYSIS_HPP

#include <vector>

#include "floq/exact.hpp"
#include "floq/floquet.hpp"

namespace floq {

struct PhaseGrid {
    double q_min, q_max, p_min, p_max;
    int n_q, n_p;

    void validate() const;
    double q_at(int i) const { return q_min + (q_max - q_min) * i / (n_q - 1); }
    double p_at(int j) const { return p_min + (p_max - p_min) * j / (n_p - 1); }
    double max_abs_alpha() const;
};

struct WignerField {
    PhaseGrid grid;
    Eigen::MatrixXd values;  // (i, j) -> W(q_i, p_j)
};

// Pointwise displaced-parity evaluation W = (1/pi) Tr[Pi D^dag(alpha) rho D(alpha)],
// alpha = (Q + iP)/sqrt(2). One eigendecomposition of (b^dag - b) in the enlarged
// working space is shared by all grid points.
class WignerEvaluator {
  public:
    WignerEvaluator(FockSpace space, double max_abs_alpha);
    double at(const DensityMatrix& rho, Complex alpha) const;

  private:
    FockSpace space_;
    int work_;
    Eigen::VectorXd mu_;  // eigenvalues of i(b^dag - b)
    Mat v_;               // its eigenvectors
};

WignerField wigner(const DensityMatrix& rho, const PhaseGrid& grid, int threads = 1);

// 2D trapezoid integral of the field; near 1 when the grid covers the state.
double wigner_norm(const WignerField& field);

enum class Observable { ReturnProbability, LinearEntropy, N2, Volume };

struct SeriesPoint {
    double t;
    double value;
};

// Observable at the stroboscopic times t_l = l T, l = 0..l_max, via the exact
// solver; Volume uses monodromy determinant powers.
std::vector<SeriesPoint> stroboscopic_series(const SystemSpec& sys, const DensityMatrix& rho0,
                                             Observable obs, int l_max,
                                             const PropagationConfig& cfg = {});

// Observable sampled on an arbitrary time grid.
std::vector<SeriesPoint> dense_series(const SystemSpec& sys, const DensityMatrix& rho0,
                                      Observable obs, const std::vector<double>& t_grid);

}  // namespace floq

#endif
