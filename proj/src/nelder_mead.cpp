#include "discrim/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace discrim {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start,
                             const NelderMeadOptions& options) {
  const Eigen::Index dim = start.size();
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::vector<Eigen::VectorXd> points;
  std::vector<double> values;
  points.reserve(dim + 1);
  points.push_back(start);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::VectorXd p = start;
    p[i] += options.initial_step;
    points.push_back(std::move(p));
  }
  for (const auto& p : points) {
    values.push_back(f(p));
  }

  std::vector<std::size_t> order(points.size());
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::size_t best = order.front();
    std::size_t worst = order.back();
    std::size_t second_worst = order[order.size() - 2];

    if (std::abs(values[worst] - values[best]) <=
        options.tolerance * (std::abs(values[best]) + options.tolerance)) {
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (std::size_t i : order) {
      if (i != worst) centroid += points[i];
    }
    centroid /= static_cast<double>(dim);

    Eigen::VectorXd reflected = centroid + kReflect * (centroid - points[worst]);
    double fr = f(reflected);
    if (fr < values[best]) {
      Eigen::VectorXd expanded = centroid + kExpand * (reflected - centroid);
      double fe = f(expanded);
      if (fe < fr) {
        points[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        points[worst] = std::move(reflected);
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      points[worst] = std::move(reflected);
      values[worst] = fr;
      continue;
    }
    Eigen::VectorXd contracted;
    if (fr < values[worst]) {
      contracted = centroid + kContract * (reflected - centroid);
    } else {
      contracted = centroid - kContract * (centroid - points[worst]);
    }
    double fc = f(contracted);
    if (fc < std::min(fr, values[worst])) {
      points[worst] = std::move(contracted);
      values[worst] = fc;
      continue;
    }
    for (std::size_t i : order) {
      if (i == best) continue;
      points[i] = points[best] + kShrink * (points[i] - points[best]);
      values[i] = f(points[i]);
    }
  }

  std::size_t best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {points[best], values[best], iter};
}

}  // namespace discrim
