#include "tcdict/analysis.hpp"

#include <cmath>
#include <string>

#include "tcdict/errors.hpp"
#include "tcdict/residual.hpp"

namespace tcdict {

namespace {

void require_unit(const Eigen::VectorXd& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw ContractViolation(std::string("verify_analysis_inequalities: ") + name +
                            " is not unit norm");
  }
}

Eigen::VectorXd project(const std::vector<Eigen::VectorXd>& basis, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (const auto& b : basis) out += b.dot(v) * b;
  return out;
}

}  // namespace

ConvexityCheck check_convexity_bound(const PerColumnData& data, double slack) {
  const size_t n = data.theta.size();
  if (data.gamma.size() != n || data.col_norms_sq.size() != n || n == 0) {
    throw ContractViolation("check_convexity_bound: per-column arrays must match and be nonempty");
  }
  ConvexityCheck check;
  double mass = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double w = data.col_norms_sq[i];
    if (!(w >= 0.0)) throw ContractViolation("check_convexity_bound: negative column mass");
    const double diff = positive_part(data.theta[i] - data.gamma[i]);
    check.lhs += diff * diff * w;
    check.psi += data.theta[i] * w;
    check.gamma_star += data.gamma[i] * w;
    mass += w;
  }
  if (mass > 0.0) {
    check.psi /= mass;
    check.gamma_star /= mass;
  }
  const double gap = positive_part(check.psi - check.gamma_star);
  check.rhs = gap * gap * mass;
  check.pass = check.lhs >= check.rhs - slack;
  return check;
}

AnalysisReport verify_analysis_inequalities(const Eigen::VectorXd& u,
                                            const std::vector<Eigen::VectorXd>& atoms,
                                            const std::vector<double>& coeffs,
                                            const Eigen::VectorXd& z,
                                            const std::vector<Eigen::VectorXd>& t_basis,
                                            const PerColumnData* per_column,
                                            double slack) {
  if (atoms.empty() || atoms.size() != coeffs.size()) {
    throw ContractViolation("verify_analysis_inequalities: atoms/coeffs mismatch or empty");
  }
  require_unit(u, "u");
  for (const auto& s : atoms) require_unit(s, "atom");
  for (size_t a = 0; a < t_basis.size(); ++a) {
    require_unit(t_basis[a], "t_basis vector");
    for (size_t b = a + 1; b < t_basis.size(); ++b) {
      if (std::abs(t_basis[a].dot(t_basis[b])) > 1e-9) {
        throw ContractViolation("verify_analysis_inequalities: t_basis is not orthonormal");
      }
    }
  }

  Eigen::VectorXd combo = z;
  for (size_t i = 0; i < atoms.size(); ++i) combo += coeffs[i] * atoms[i];
  if ((u - combo).norm() > 1e-8) {
    throw ContractViolation("verify_analysis_inequalities: u != sum coeffs[i] atoms[i] + z");
  }

  AnalysisReport report;
  const Eigen::VectorXd u_perp = u - project(t_basis, u);
  report.increment.theta = u_perp.norm();

  double coeff_sq = 0.0;
  for (double c : coeffs) coeff_sq += c * c;
  for (const auto& s : atoms) {
    const double ip = u_perp.dot(s);
    report.increment.lhs += ip * ip;
  }
  const double gap = positive_part(report.increment.theta * report.increment.theta -
                                   z.squaredNorm());
  report.increment.rhs = coeff_sq > 0.0 ? gap * gap / (4.0 * coeff_sq) : 0.0;
  report.increment.pass = report.increment.lhs >= report.increment.rhs - slack;

  report.pass = report.increment.pass;
  if (per_column != nullptr) {
    report.convexity = check_convexity_bound(*per_column, slack);
    report.pass = report.pass && report.convexity->pass;
  }
  return report;
}

}  // namespace tcdict
