#pragma once

#include <Eigen/Dense>

namespace tmlab::extremal {

struct LpResult {
    Eigen::VectorXd x;       // primal maximizer
    Eigen::VectorXd y;       // dual certificate, y >= 0 and A^T y = c
    double value = 0;        // c^T x
    double dual_value = 0;   // 1^T y
    double max_violation = 0;  // max(A x) - 1, positive when x is slightly infeasible
    int iterations = 0;
};

// maximize c^T x subject to A x <= 1 (x free), via a revised two-phase simplex on the
// dual program min 1^T y, A^T y = c, y >= 0.
LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& c, int max_iterations = 50000);

} // namespace tmlab::extremal
