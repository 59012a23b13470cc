#include "conelab/branching.hpp"

#include <algorithm>

namespace conelab {

BranchingContext make_branching_context(const DomainParams& params,
                                        const Rational& nu, int degree_cap) {
  if (nu <= (params.r - 1) * params.a / 2)
    throw Error("invalid-argument", "nu must exceed (r-1) a/2");
  if (degree_cap < 0) throw Error("invalid-argument", "negative degree_cap");
  return BranchingContext{params, nu, degree_cap};
}

std::vector<Rational> node_spectral(const Partition& m,
                                    const BranchingContext& ctx) {
  Rho rh = rho(ctx.params);
  std::vector<Rational> s(ctx.params.r);
  for (int j = 1; j <= ctx.params.r; ++j)
    s[j - 1] = Rational(m.part(j)) + ctx.nu / 2 - rh.components[j - 1];
  return s;
}

std::map<Partition, Rational> branching_at_node(const Partition& source,
                                                const BranchingContext& ctx,
                                                JackTable& jack) {
  SymPoly series =
      expand_cayley_factor({source, ctx.nu}, jack, ctx.degree_cap);
  return jack.to_jack_basis(series);
}

namespace {
// Dense univariate polynomials over Q, ascending powers.
using UniPoly = std::vector<Rational>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  UniPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}
}  // namespace

SpectralPoly mp_poly(int n, const Rational& nu) {
  if (n < 0) throw Error("invalid-argument", "negative index");
  // rising factorial (nu/2 + s)_k and (nu/2 - s)_l as polynomials in s
  std::vector<UniPoly> plus(n + 1), minus(n + 1);
  plus[0] = {Rational(1)};
  minus[0] = {Rational(1)};
  for (int k = 1; k <= n; ++k) {
    plus[k] = uni_mul(plus[k - 1], {nu / 2 + (k - 1), Rational(1)});
    minus[k] = uni_mul(minus[k - 1], {nu / 2 + (k - 1), Rational(-1)});
  }
  UniPoly acc(n + 1, Rational(0));
  Rational kfact = 1, lfact = 1;
  for (int k = 0; k <= n; ++k) {
    int l = n - k;
    // coefficient of x^k in (1-x)^{-nu/2-s} is (nu/2+s)_k / k!
    // coefficient of x^l in (1+x)^{-nu/2+s} is (-1)^l (nu/2-s)_l / l!
    Rational scale = 1 / (factorial(k) * factorial(l));
    if (l % 2 == 1) scale = -scale;
    UniPoly term = uni_mul(plus[k], minus[l]);
    for (size_t i = 0; i < term.size() && i < acc.size(); ++i)
      acc[i] += term[i] * scale;
  }
  SpectralPoly out(1);
  for (size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] == 0) continue;
    out.add_term(i == 0 ? Partition() : Partition({static_cast<int>(i)}),
                 acc[i]);
  }
  return out;
}

BranchingTable::BranchingTable(const BranchingContext& ctx, JackTable& jack,
                               int max_weight)
    : ctx_(ctx), jack_(jack), max_weight_(max_weight) {
  BranchingContext node_ctx = ctx_;
  node_ctx.degree_cap = max_weight;
  for (const auto& source :
       partitions_up_to(ctx_.params.r, max_weight + 1)) {
    node_values_[source] = branching_at_node(source, node_ctx, jack_);
  }
}

Rational BranchingTable::value_at_node(const Partition& n,
                                       const Partition& source) const {
  auto row = node_values_.find(source);
  if (row == node_values_.end())
    throw Error("invalid-argument", "source outside the node table");
  auto it = row->second.find(n);
  return it == row->second.end() ? Rational(0) : it->second;
}

SpectralPoly BranchingTable::interpolate(const Partition& n) const {
  const int r = ctx_.params.r;
  const int w = n.weight();
  std::vector<Partition> basis = partitions_up_to(r, w);
  const auto& nodes = basis;  // same index set: |m| <= |n|
  const size_t dim = basis.size();

  // rows: equations at nodes; columns: m_kappa(s) coefficients
  std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim + 1));
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Rational> s = node_spectral(nodes[i], ctx_);
    for (size_t j = 0; j < dim; ++j)
      mat[i][j] = SymPoly::monomial_sym(r, basis[j]).eval(s);
    mat[i][dim] = value_at_node(n, nodes[i]);
  }

  // exact Gaussian elimination
  for (size_t col = 0; col < dim; ++col) {
    size_t piv = col;
    while (piv < dim && mat[piv][col] == 0) ++piv;
    if (piv == dim)
      throw Error("interpolation-singular",
                  "node system singular for n = " + n.to_string());
    std::swap(mat[col], mat[piv]);
    for (size_t row = 0; row < dim; ++row) {
      if (row == col || mat[row][col] == 0) continue;
      Rational f = mat[row][col] / mat[col][col];
      for (size_t j = col; j <= dim; ++j) mat[row][j] -= f * mat[col][j];
    }
  }

  SpectralPoly p(r);
  for (size_t j = 0; j < dim; ++j) {
    Rational c = mat[j][dim] / mat[j][j];
    if (c != 0) p.add_term(basis[j], c);
  }
  return p;
}

const SpectralPoly& BranchingTable::poly(const Partition& n) {
  auto it = polys_.find(n);
  if (it != polys_.end()) return it->second;
  if (n.weight() > max_weight_)
    throw Error("invalid-argument", "n exceeds the table weight");

  SpectralPoly p = interpolate(n);

  // held-out confirmation on every node of the next weight
  for (const auto& source : partitions_of(ctx_.params.r, n.weight() + 1)) {
    Rational predicted = p.eval(node_spectral(source, ctx_));
    if (predicted != value_at_node(n, source))
      throw Error("verification-failure",
                  "held-out node mismatch for n = " + n.to_string() +
                      " at source " + source.to_string());
  }
  return polys_.emplace(n, std::move(p)).first->second;
}

VerificationReport BranchingTable::verify_recurrence(const Partition& n,
                                                     bool mutate_sign) {
  VerificationReport rep;
  rep.identity = "recurrence";
  rep.tolerance = "exact";
  rep.params["r"] = ctx_.params.r;
  rep.params["a"] = format_rational(ctx_.params.a);
  rep.params["nu"] = format_rational(ctx_.nu);
  rep.params["n"] = n.to_string();

  const int r = ctx_.params.r;
  Rho rh = rho(ctx_.params);
  Rational rho_sum = 0;
  for (const auto& c : rh.components) rho_sum += c;

  // LHS: (2 sum_j s_j + 2 sum_j rho_j) p_n
  SymPoly lin = SymPoly::monomial_sym(r, Partition({1})) * Rational(2) +
                SymPoly::constant(r, 2 * rho_sum);
  SpectralPoly lhs = lin * poly(n);

  SpectralPoly rhs(r);
  for (int j = 1; j <= r; ++j) {
    if (auto up = n.step_up(j, r)) {
      StepCoeff b = binom_step(*up, j, ctx_.params);
      if (!b.defined_at)
        throw Error("coefficient-undefined",
                    "binom_step singular at " + up->to_string());
      rhs = rhs + poly(*up) * b.value;
    }
    if (auto down = n.step_down(j)) {
      StepCoeff c = c_coeff(*down, j, ctx_.params);
      if (!c.defined_at)
        throw Error("coefficient-undefined",
                    "c_coeff singular at " + down->to_string());
      Rational lin_coeff =
          ctx_.nu + n.part(j) - 1 - ctx_.params.a / 2 * (j - 1);
      Rational term = lin_coeff * c.value;
      if (mutate_sign) term = -term;
      rhs = rhs - poly(*down) * term;
    }
  }

  SpectralPoly residual = lhs - rhs;
  rep.status = residual.is_zero() ? "exact-zero" : "failed";
  rep.residual = residual.is_zero() ? nlohmann::ordered_json::array()
                                    : sympoly_terms_json(residual);
  return rep;
}

VerificationReport BranchingTable::verify_difference(const Partition& n) {
  VerificationReport rep;
  rep.identity = "difference";
  rep.tolerance = "exact";
  rep.params["r"] = ctx_.params.r;
  rep.params["a"] = format_rational(ctx_.params.a);
  rep.params["nu"] = format_rational(ctx_.nu);
  rep.params["n"] = n.to_string();

  const int r = ctx_.params.r;
  Rho rh = rho(ctx_.params);

  // symbolic arguments u_j = s_j + rho_j - nu/2
  std::vector<MultiPoly> args;
  for (int j = 1; j <= r; ++j)
    args.push_back(MultiPoly::variable(r, j - 1) +
                   MultiPoly::constant(r, rh.components[j - 1] - ctx_.nu / 2));

  MultiPoly p = poly(n).expand();

  struct Term {
    MultiPoly num;        // product of numerator factors and shifted p
    std::vector<MultiPoly> den;
    bool negative = false;
  };
  std::vector<Term> terms;
  std::vector<MultiPoly> all_den;

  for (int j = 1; j <= r; ++j) {
    // binom(i lambda + rho - nu/2, . - gamma_j) . p(lambda + i gamma_j);
    // the shift lambda + i gamma_j is s_j -> s_j - 1
    SymbolicFraction b = binom_step_symbolic(args, j, ctx_.params);
    Term tb;
    tb.num = p.shift_var(j - 1, Rational(-1));
    for (const auto& f : b.num_factors) tb.num = tb.num * f;
    tb.den = b.den_factors;
    terms.push_back(tb);

    // -(nu/2 + s_j + rho_j - (a/2)(j-1)) c(i lambda + rho - nu/2, j)
    //   . p(lambda - i gamma_j); the shift is s_j -> s_j + 1
    SymbolicFraction c = c_coeff_symbolic(args, j, ctx_.params);
    Term tc;
    tc.negative = true;
    tc.num = p.shift_var(j - 1, Rational(1));
    MultiPoly lin = MultiPoly::variable(r, j - 1) +
                    MultiPoly::constant(r, ctx_.nu / 2 +
                                               rh.components[j - 1] -
                                               ctx_.params.a / 2 * (j - 1));
    tc.num = tc.num * lin;
    for (const auto& f : c.num_factors) tc.num = tc.num * f;
    tc.den = c.den_factors;
    terms.push_back(tc);
  }

  for (const auto& t : terms)
    for (const auto& f : t.den) {
      if (f.is_zero())
        throw Error("coefficient-undefined", "identically zero denominator");
      all_den.push_back(f);
    }

  MultiPoly common = MultiPoly::constant(r, 1);
  for (const auto& f : all_den) common = common * f;

  Rational scalar = -(ctx_.nu * r + 2 * n.weight());
  MultiPoly lhs = p * common * scalar;

  MultiPoly rhs(r);
  size_t offset = 0;
  for (const auto& t : terms) {
    MultiPoly cleared = t.num;
    // multiply by every denominator factor except this term's own
    for (size_t i = 0; i < all_den.size(); ++i) {
      if (i >= offset && i < offset + t.den.size()) continue;
      cleared = cleared * all_den[i];
    }
    offset += t.den.size();
    rhs = t.negative ? rhs - cleared : rhs + cleared;
  }

  MultiPoly residual = lhs - rhs;
  rep.status = residual.is_zero() ? "exact-zero" : "failed";
  if (residual.is_zero()) {
    rep.residual = nlohmann::ordered_json::array();
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : residual.terms()) {
      nlohmann::ordered_json t;
      t["exponents"] = e;
      t["coeff"] = format_rational(c);
      arr.push_back(t);
    }
    rep.residual = arr;
  }
  return rep;
}

}  // namespace conelab
