// Radial integration on the cone and on the rank-1 ball: calibrated
// Gauss-Laguerre rules against d mu_nu, numerical Laplace transforms, Gram
// matrices for the orthogonality checks, and the numeric rank-1 Berezin
// symbol b_nu.
#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "conelab/branching.hpp"
#include "conelab/laguerre.hpp"

namespace conelab {

enum class SchemeKind { GaussLaguerreTensor, CompactifiedTanh, Adaptive1D };

struct RadialScheme {
  SchemeKind kind = SchemeKind::GaussLaguerreTensor;
  int nodes_per_dim = 96;
};

struct GramMatrix {
  std::vector<Partition> labels;
  Eigen::MatrixXd entries;
  bool normalized = false;

  GramMatrix normalized_copy() const;
  double max_offdiag_abs() const;
};

// One-dimensional rule with the exponential folded out of the weights:
// sum_i w_i f(x_i) ~ integral f(x) x^alpha dx for f with its own decay.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule1D gauss_laguerre_scaled(int n, double alpha);
Rule1D gauss_legendre(int n);  // on [-1, 1]

double pairwise_sum(std::vector<double> v);

// The radial measure of the cone for one (r, a, nu):
//   integral_{x_1 > ... > x_r > 0} f(x) prod x_j^{nu - d/r}
//       prod_{i<j} (x_i - x_j)^a dx,
// scaled by the calibration constant kappa fixed against Gamma_Omega(nu).
// Implemented for r <= 2; r = 2 uses the ordered substitution x_1 = t + u.
class RadialQuadrature {
 public:
  RadialQuadrature(const DomainParams& params, const Rational& nu,
                   const RadialScheme& scheme);

  void calibrate();
  bool calibrated() const { return kappa_ == kappa_; }
  double kappa() const;

  struct Node {
    std::vector<double> x;  // decreasing coordinates
    double w;               // weight excluding kappa
  };
  const std::vector<Node>& nodes() const { return nodes_; }
  const DomainParams& params() const { return params_; }
  const Rational& nu() const { return nu_; }
  const RadialScheme& scheme() const { return scheme_; }

  // kappa * sum w f(x); throws "non-finite" on a non-finite result.
  double integral(
      const std::function<double(const std::vector<double>&)>& f) const;

 private:
  DomainParams params_;
  Rational nu_;
  RadialScheme scheme_;
  std::vector<Node> nodes_;
  double kappa_;
};

// Gindikin Gamma at a real vector, as a double (no pole expected).
double gamma_omega_real(const std::vector<double>& lambda,
                        const DomainParams& params);

// L_nu(f)(s e) by radial quadrature, s > 0.
double laplace_at_scalar(const ExpPoly& f, double s,
                         const RadialQuadrature& quad);

GramMatrix gram_laguerre(const Rational& nu, int max_weight,
                         const RadialQuadrature& quad, BinomTable& binom);

// b_nu(lambda) at rank 1, normalized by the lambda = 0 value.
double berezin_symbol_rank1(double lambda, double nu, int panel_points = 32);

struct BranchingGram {
  GramMatrix gram;
  double tail_bound = 0;   // documented overestimate of the truncated tail
  double min_diag = 0;
  double cutoff = 0;       // lambda truncation
};

BranchingGram gram_branching_rank1(const Rational& nu, int max_n,
                                   int panel_points = 32);

// Independent oracle for B_Omega(nu, mu): the defining cone integral under
// the substitution x_j = e^{y_j}, r <= 2.
double beta_cone_integral(const Rational& nu, const Rational& mu,
                          const DomainParams& params, int panel_points = 24);

}  // namespace conelab
