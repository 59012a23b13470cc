#include "conelab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace conelab {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

double pairwise_sum(std::vector<double> v) {
  if (v.empty()) return 0.0;
  size_t n = v.size();
  while (n > 1) {
    size_t half = (n + 1) / 2;
    for (size_t i = 0; i < n / 2; ++i) v[i] = v[i] + v[n - 1 - i];
    n = half;
  }
  return v[0];
}

Rule1D gauss_laguerre_scaled(int n, double alpha) {
  if (n < 2) throw Error("invalid-argument", "rule needs >= 2 nodes");
  if (alpha <= -1.0)
    throw Error("invalid-argument", "Laguerre exponent must exceed -1");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) jac(k, k) = 2 * k + alpha + 1;
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(k * (k + alpha));
    jac(k, k - 1) = jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double log_mu0 = std::lgamma(alpha + 1.0);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.nodes[i] = x;
    // w_i e^{x_i} computed in log space; a fully underflowed first
    // component marks a node whose weight is beyond double range
    rule.weights[i] =
        v0 == 0.0 ? 0.0 : std::exp(log_mu0 + 2.0 * std::log(std::abs(v0)) + x);
  }
  return rule;
}

Rule1D gauss_legendre(int n) {
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k, k - 1) = jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * v0 * v0;
  }
  return rule;
}

RadialQuadrature::RadialQuadrature(const DomainParams& params,
                                   const Rational& nu,
                                   const RadialScheme& scheme)
    : params_(params), nu_(nu), scheme_(scheme), kappa_(kNan) {
  if (scheme.kind != SchemeKind::GaussLaguerreTensor)
    throw Error("invalid-argument",
                "cone integration uses the gauss-laguerre-tensor scheme");
  if (nu_ <= (params_.r - 1) * params_.a / 2)
    throw Error("invalid-argument", "nu must exceed (r-1) a/2");
  if (scheme.nodes_per_dim < 2)
    throw Error("invalid-argument", "nodes_per_dim must be >= 2");
  const double beta = to_double(nu_ - params_.d / params_.r);
  const int n = scheme.nodes_per_dim;
  if (params_.r == 1) {
    Rule1D rule = gauss_laguerre_scaled(n, beta);
    for (int i = 0; i < n; ++i)
      nodes_.push_back({{rule.nodes[i]}, rule.weights[i]});
  } else if (params_.r == 2) {
    const double a = to_double(params_.a);
    Rule1D u_rule = gauss_laguerre_scaled(n, a);
    Rule1D t_rule = gauss_laguerre_scaled(n, beta);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double u = u_rule.nodes[i], t = t_rule.nodes[j];
        double w = u_rule.weights[i] * t_rule.weights[j] *
                   std::pow(t + u, beta);
        if (w != 0.0) nodes_.push_back({{t + u, t}, w});
      }
    }
  } else {
    throw Error("invalid-argument", "cone quadrature implemented for r <= 2");
  }
}

double gamma_omega_real(const std::vector<double>& lambda,
                        const DomainParams& params) {
  SpectralVector v;
  for (double x : lambda) v.values.emplace_back(x, 0.0);
  GammaValue g = gindikin_gamma(v, params);
  if (g.is_pole) throw Error("pole-of-ratio", "Gamma_Omega pole");
  return std::cos(g.phase) * std::exp(g.log_modulus);
}

void RadialQuadrature::calibrate() {
  double uncal = 0.0;
  {
    std::vector<double> terms;
    terms.reserve(nodes_.size());
    for (const auto& node : nodes_) {
      double tr = 0.0;
      for (double x : node.x) tr += x;
      terms.push_back(node.w * std::exp(-tr));
    }
    uncal = pairwise_sum(std::move(terms));
  }
  if (!std::isfinite(uncal) || uncal <= 0.0)
    throw Error("quadrature-failure", "uncalibrated estimate not positive");
  std::vector<double> nu_vec(params_.r, to_double(nu_));
  kappa_ = gamma_omega_real(nu_vec, params_) / uncal;
}

double RadialQuadrature::kappa() const {
  if (!calibrated()) throw Error("invalid-argument", "scheme not calibrated");
  return kappa_;
}

double RadialQuadrature::integral(
    const std::function<double(const std::vector<double>&)>& f) const {
  double k = kappa();
  std::vector<double> terms;
  terms.reserve(nodes_.size());
  for (const auto& node : nodes_) terms.push_back(node.w * f(node.x));
  double out = k * pairwise_sum(std::move(terms));
  if (!std::isfinite(out)) throw Error("non-finite", "radial integral");
  return out;
}

double laplace_at_scalar(const ExpPoly& f, double s,
                         const RadialQuadrature& quad) {
  if (s <= 0.0) throw Error("invalid-argument", "Laplace point must have s > 0");
  return quad.integral([&](const std::vector<double>& x) {
    double tr = 0.0;
    for (double v : x) tr += v;
    return std::exp(-s * tr) * f.eval(x);
  });
}

GramMatrix GramMatrix::normalized_copy() const {
  GramMatrix out = *this;
  Eigen::VectorXd d = entries.diagonal().cwiseSqrt();
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      out.entries(i, j) = entries(i, j) / (d(i) * d(j));
  out.normalized = true;
  return out;
}

double GramMatrix::max_offdiag_abs() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(entries(i, j)));
  return m;
}

GramMatrix gram_laguerre(const Rational& nu, int max_weight,
                         const RadialQuadrature& quad, BinomTable& binom) {
  GramMatrix out;
  out.labels = partitions_up_to(quad.params().r, max_weight);
  const size_t dim = out.labels.size();
  const auto& nodes = quad.nodes();

  // tabulate each Laguerre function on the node set
  std::vector<std::vector<double>> values(dim);
  for (size_t i = 0; i < dim; ++i) {
    ExpPoly li = laguerre_fn(out.labels[i], nu, binom, quad.params());
    values[i].reserve(nodes.size());
    for (const auto& node : nodes) values[i].push_back(li.eval(node.x));
  }

  out.entries.resize(dim, dim);
  double k = quad.kappa();
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = i; j < dim; ++j) {
      std::vector<double> terms;
      terms.reserve(nodes.size());
      for (size_t q = 0; q < nodes.size(); ++q)
        terms.push_back(nodes[q].w * values[i][q] * values[j][q]);
      double v = k * pairwise_sum(std::move(terms));
      if (!std::isfinite(v)) throw Error("non-finite", "Gram entry");
      out.entries(i, j) = out.entries(j, i) = v;
    }
  }
  return out;
}

namespace {
// integral_R sech^nu(t) e^{2 i lambda t} dt on composite panels. The t and
// -t contributions are paired, so e^{2 i lambda t} + e^{-2 i lambda t}
// collapses to 2 cos(2 lambda t) and the imaginary part cancels exactly.
double berezin_numerator(double lambda, double nu, int panel_points) {
  Rule1D gl = gauss_legendre(panel_points);
  double T = 37.0 / nu + 6.0;
  double h = std::min(0.5, 8.0 / std::max(1.0, std::abs(lambda)));
  int panels = static_cast<int>(std::ceil(T / h));
  std::vector<double> terms;
  for (int p = 0; p < panels; ++p) {
    double lo = p * h, hi = std::min((p + 1) * h, T);
    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    for (int q = 0; q < panel_points; ++q) {
      double t = mid + half * gl.nodes[q];
      double w = half * gl.weights[q];
      double f = std::pow(1.0 / std::cosh(t), nu);
      terms.push_back(w * f * 2.0 * std::cos(2.0 * lambda * t));
    }
  }
  return pairwise_sum(std::move(terms));
}
}  // namespace

double berezin_symbol_rank1(double lambda, double nu, int panel_points) {
  if (nu <= 0.0) throw Error("invalid-argument", "berezin needs nu > 0");
  double num = berezin_numerator(lambda, nu, panel_points);
  double den = berezin_numerator(0.0, nu, panel_points);
  if (!(den > 0.0)) throw Error("non-finite", "berezin normalization");
  return num / den;
}

BranchingGram gram_branching_rank1(const Rational& nu, int max_n,
                                   int panel_points) {
  if (nu <= 1) throw Error("invalid-argument", "gram_branching needs nu > 1");
  BranchingGram out;
  const double nud = to_double(nu);
  const int dim = max_n + 1;
  out.gram.labels.clear();
  for (int n = 0; n <= max_n; ++n)
    out.gram.labels.push_back(n == 0 ? Partition() : Partition({n}));

  std::vector<SpectralPoly> polys;
  for (int n = 0; n <= max_n; ++n) polys.push_back(mp_poly(n, nu));

  // truncation: b_nu decays like e^{-pi |lambda|}
  double L = std::max(25.0, 10.0 + 2.0 * max_n);
  out.cutoff = L;

  Rule1D gl = gauss_legendre(panel_points);
  double h = 0.25;
  int panels = static_cast<int>(std::ceil(L / h));

  std::vector<double> lam_nodes, lam_weights;
  for (int p = 0; p < panels; ++p) {
    double lo = p * h, hi = std::min((p + 1) * h, L);
    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    for (int q = 0; q < panel_points; ++q) {
      lam_nodes.push_back(mid + half * gl.nodes[q]);
      lam_weights.push_back(half * gl.weights[q]);
    }
  }

  std::vector<double> bvals(lam_nodes.size());
  for (size_t i = 0; i < lam_nodes.size(); ++i)
    bvals[i] = berezin_symbol_rank1(lam_nodes[i], nud, panel_points);

  std::vector<std::vector<std::complex<double>>> pvals(dim);
  for (int n = 0; n <= max_n; ++n) {
    pvals[n].resize(lam_nodes.size());
    for (size_t i = 0; i < lam_nodes.size(); ++i) {
      std::vector<std::complex<double>> s = {
          std::complex<double>(0.0, lam_nodes[i])};
      pvals[n][i] = polys[n].eval(s);
    }
  }

  out.gram.entries.resize(dim, dim);
  for (int m = 0; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n) {
      std::vector<double> terms;
      terms.reserve(lam_nodes.size());
      for (size_t i = 0; i < lam_nodes.size(); ++i) {
        // entries over the full line: g(-lambda) = conj(g(lambda))
        std::complex<double> g =
            bvals[i] * pvals[m][i] * std::conj(pvals[n][i]);
        terms.push_back(2.0 * lam_weights[i] * g.real());
      }
      double v = pairwise_sum(std::move(terms));
      if (!std::isfinite(v)) throw Error("non-finite", "branching Gram entry");
      out.gram.entries(m, n) = out.gram.entries(n, m) = v;
    }
  }

  out.min_diag = out.gram.entries.diagonal().minCoeff();

  // tail estimate: beyond L, b(lambda) <= b(L) e^{-pi (lambda - L)} and
  // |p_m p_n| grows at most like (lambda/L)^{2 max_n} <= e^{2 max_n (lambda-L)/L}
  double bL = berezin_symbol_rank1(L, nud, panel_points);
  double pmax = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::complex<double>> s = {std::complex<double>(0.0, L)};
    pmax = std::max(pmax, std::abs(polys[n].eval(s)));
  }
  double rate = kPi - 2.0 * max_n / L;
  if (rate <= 0.0) throw Error("truncation-failure", "tail rate not positive");
  out.tail_bound = 2.0 * bL * pmax * pmax / rate;
  if (out.min_diag <= 0.0 || out.tail_bound > 1e-3 * out.min_diag)
    throw Error("truncation-failure", "branching Gram tail bound too large");
  return out;
}

double beta_cone_integral(const Rational& nu, const Rational& mu,
                          const DomainParams& params, int panel_points) {
  Rational bound = (params.r - 1) * params.a / 2;
  if (nu <= bound || mu <= bound)
    throw Error("invalid-argument", "beta integral requires nu, mu > (r-1)a/2");
  const double nud = to_double(nu), mud = to_double(mu);
  const double beta = to_double(nu - params.d / params.r);
  Rule1D gl = gauss_legendre(panel_points);

  // decay rates after x = e^y: e^{(beta+1) y} as y -> -inf,
  // e^{-(mu + d/r - 1) y} as y -> +inf (per variable)
  double decay_lo = beta + 1.0;
  double decay_hi = to_double(mu + params.d / params.r) - 1.0;
  double Y = 42.0 / std::min(decay_lo, decay_hi) + 8.0;
  double h = 0.5;
  int panels = static_cast<int>(std::ceil(2.0 * Y / h));

  std::vector<double> ynodes, yweights;
  for (int p = 0; p < panels; ++p) {
    double lo = -Y + p * h, hi = std::min(-Y + (p + 1) * h, Y);
    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    for (int q = 0; q < panel_points; ++q) {
      ynodes.push_back(mid + half * gl.nodes[q]);
      yweights.push_back(half * gl.weights[q]);
    }
  }

  auto f1 = [&](double y) {
    // x^{nu - d/r} (x+1)^{-nu-mu} x  with x = e^y
    return std::exp((beta + 1.0) * y) * std::pow(1.0 + std::exp(y), -nud - mud);
  };

  if (params.r == 1) {
    std::vector<double> terms(ynodes.size());
    for (size_t i = 0; i < ynodes.size(); ++i)
      terms[i] = yweights[i] * f1(ynodes[i]);
    return pairwise_sum(std::move(terms));
  }
  if (params.r != 2)
    throw Error("invalid-argument", "beta integral implemented for r <= 2");

  // ordered region x_1 > x_2 > 0: x_2 = e^{y}, x_1 = e^{y+v}, v > 0;
  // in v the integrand decays like e^{-(mu - a/2) v}
  const double a = to_double(params.a);
  double vrate = mud - a / 2.0;
  if (vrate <= 0.0)
    throw Error("invalid-argument", "beta integral divergent in v");
  double V = 42.0 / vrate + 8.0;
  int vpanels = static_cast<int>(std::ceil(V / h));
  std::vector<double> vnodes, vweights;
  for (int p = 0; p < vpanels; ++p) {
    double lo = p * h, hi = std::min((p + 1) * h, V);
    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    for (int q = 0; q < panel_points; ++q) {
      vnodes.push_back(mid + half * gl.nodes[q]);
      vweights.push_back(half * gl.weights[q]);
    }
  }

  std::vector<double> terms;
  terms.reserve(ynodes.size() * vnodes.size());
  for (size_t i = 0; i < ynodes.size(); ++i) {
    double y = ynodes[i];
    for (size_t j = 0; j < vnodes.size(); ++j) {
      double v = vnodes[j];
      double x2 = std::exp(y), x1 = std::exp(y + v);
      double val = f1(y) * f1(y + v) * std::pow(x1 - x2, a);
      terms.push_back(yweights[i] * vweights[j] * val);
    }
  }
  return pairwise_sum(std::move(terms));
}

}  // namespace conelab
