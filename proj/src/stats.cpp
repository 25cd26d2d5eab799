#include "unimap/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace unimap {

double chi_square_survival(double statistic, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_survival: dof must be >= 1");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

double z_score(double count, double n, double p) {
  const double mean = n * p;
  const double var = n * p * (1.0 - p);
  if (var <= 0.0) return count == mean ? 0.0 : INFINITY;
  return (count - mean) / std::sqrt(var);
}

}  // namespace unimap
