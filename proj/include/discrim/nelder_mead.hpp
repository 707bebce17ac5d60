#pragma once

#include <functional>

#include <Eigen/Dense>

namespace discrim {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double tolerance = 1e-9;   // convergence threshold on the value spread
  int max_iterations = 4000;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

/// Downhill simplex minimization (reflection/expansion/contraction/shrink).
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {});

}  // namespace discrim
