#include "conelab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "conelab/jordan.hpp"
#include "conelab/quadrature.hpp"

namespace conelab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Sweep {
  int r;
  Rational a;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---- criterion 1: rank-1 Meixner-Pollaczek equivalence -------------------

CriterionResult criterion_mp(Level level) {
  CriterionResult res;
  res.name = "rank-1 Meixner-Pollaczek equivalence";
  int max_n = level == Level::Full ? 20 : 8;
  std::vector<Rational> nus = {Rational(2), Rational(4), Rational(7) / 2};
  if (level == Level::Quick) nus = {Rational(2), Rational(7) / 2};
  bool ok = true;
  int checked = 0;
  for (const auto& nu : nus) {
    DomainParams params = make_params(1, 1);
    JackTable jack(params);
    BranchingContext ctx = make_branching_context(params, nu, max_n);
    BranchingTable table(ctx, jack, max_n);
    for (int n = 0; n <= max_n; ++n) {
      Partition pn = n == 0 ? Partition() : Partition({n});
      if (!(table.poly(pn) == mp_poly(n, nu))) ok = false;
      ++checked;
    }
  }
  res.passed = ok;
  res.detail = "exact equality branching_poly = mp_poly on " +
               std::to_string(checked) + " cases, n <= " +
               std::to_string(max_n);
  return res;
}

// ---- criteria 2/3: recurrence and difference sweeps ----------------------

CriterionResult criterion_identity_sweep(Level level, bool difference) {
  CriterionResult res;
  res.name = difference ? "difference equation (cleared denominators)"
                        : "recurrence";
  std::vector<Sweep> sweeps = {{1, 1}, {2, 1}, {2, 2}, {3, 1}};
  std::vector<Rational> nus = {Rational(4), Rational(7) / 2};
  int general_max = 4, rank1_max = 12;
  if (level == Level::Quick) {
    sweeps = {{1, 1}, {2, 1}};
    nus = {Rational(4)};
    general_max = 3;
    rank1_max = 6;
  }
  bool ok = true;
  int checked = 0;
  for (const auto& sw : sweeps) {
    for (const auto& nu : nus) {
      DomainParams params = make_params(sw.r, sw.a);
      JackTable jack(params);
      int max_w = sw.r == 1 ? rank1_max : general_max;
      BranchingContext ctx = make_branching_context(params, nu, max_w + 1);
      BranchingTable table(ctx, jack, max_w + 1);
      for (const auto& n : partitions_up_to(sw.r, max_w)) {
        VerificationReport rep = difference ? table.verify_difference(n)
                                            : table.verify_recurrence(n);
        if (!rep.passed()) {
          ok = false;
          res.reports.push_back(rep);
        }
        ++checked;
      }
    }
  }
  res.passed = ok;
  res.detail = std::string("exact-zero residual on ") +
               std::to_string(checked) + " (r,a,nu,n) cases";
  return res;
}

// Example 6.2 verbatim at rank 1:
//   -(2n+nu) p_n(s) = (s - nu/2) p_n(s-1) - (s + nu/2) p_n(s+1), s = i lambda.
bool example_6_2_exact(const Rational& nu, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    MultiPoly p = mp_poly(n, nu).expand();
    MultiPoly s = MultiPoly::variable(1, 0);
    MultiPoly lhs = p * (Rational(-2 * n) - nu);
    MultiPoly rhs =
        (s - MultiPoly::constant(1, nu / 2)) * p.shift_var(0, -1) -
        (s + MultiPoly::constant(1, nu / 2)) * p.shift_var(0, 1);
    if (!((lhs - rhs).is_zero())) return false;
  }
  return true;
}

CriterionResult criterion_difference(Level level) {
  CriterionResult res = criterion_identity_sweep(level, true);
  bool ex = example_6_2_exact(Rational(2), level == Level::Full ? 12 : 6) &&
            example_6_2_exact(Rational(7) / 2, level == Level::Full ? 12 : 6);
  if (!ex) res.passed = false;
  res.detail += ex ? "; rank-1 display reproduced exactly"
                   : "; rank-1 display FAILED";
  return res;
}

// ---- criterion 4: binomial consistency ------------------------------------

CriterionResult criterion_binom(Level level) {
  CriterionResult res;
  res.name = "binomial consistency gen_binom vs closed form";
  int max_w = level == Level::Full ? 5 : 3;
  int max_r = level == Level::Full ? 3 : 2;
  bool ok = true;
  int checked = 0;
  for (int r = 1; r <= max_r; ++r) {
    for (int ia = 1; ia <= 2; ++ia) {
      DomainParams params = make_params(r, ia);
      JackTable jack(params);
      BinomTable binom(jack);
      for (const auto& m : partitions_up_to(r, max_w)) {
        for (int k = 1; k <= r; ++k) {
          auto down = m.step_down(k);
          if (!down) continue;
          StepCoeff sc = binom_step(m, k, params);
          if (!sc.defined_at || binom.gen_binom(m, *down) != sc.value)
            ok = false;
          ++checked;
        }
      }
    }
  }
  res.passed = ok;
  res.detail = "exact agreement on " + std::to_string(checked) +
               " step coefficients, |m| <= " + std::to_string(max_w);
  return res;
}

// ---- criterion 5: Euler recursion variants --------------------------------

CriterionResult criterion_euler(Level level) {
  CriterionResult res;
  res.name = "Euler recursion variant resolution";
  std::vector<Sweep> sweeps = {{2, 1}, {2, 2}};
  std::vector<Rational> nus = {Rational(3), Rational(4), Rational(9) / 2};
  int max_w = 3;
  if (level == Level::Quick) {
    sweeps = {{2, 1}};
    nus = {Rational(4)};
    max_w = 2;
  }
  bool a_half_all = true, d_half_all = true;
  int checked = 0;
  for (const auto& sw : sweeps) {
    DomainParams params = make_params(sw.r, sw.a);
    JackTable jack(params);
    BinomTable binom(jack);
    for (const auto& nu : nus) {
      for (const auto& m : partitions_up_to(sw.r, max_w)) {
        auto ra = verify_euler_recursion(m, nu, EulerVariant::AHalf, binom,
                                         params);
        auto rd = verify_euler_recursion(m, nu, EulerVariant::DHalf, binom,
                                         params);
        if (!ra.passed()) {
          a_half_all = false;
          res.reports.push_back(ra);
        }
        if (!rd.passed()) d_half_all = false;
        ++checked;
      }
    }
  }
  // rank-1 sanity: the variants coincide and must hold unconditionally
  bool rank1_ok = true;
  {
    DomainParams params = make_params(1, 1);
    JackTable jack(params);
    BinomTable binom(jack);
    for (const auto& nu : nus) {
      int n1 = level == Level::Full ? 6 : 3;
      for (int n = 0; n <= n1; ++n) {
        Partition m = n == 0 ? Partition() : Partition({n});
        if (!verify_euler_recursion(m, nu, EulerVariant::AHalf, binom, params)
                 .passed())
          rank1_ok = false;
        ++checked;
      }
    }
  }
  bool exactly_one = a_half_all != d_half_all;
  res.passed = exactly_one && rank1_ok;
  std::string surviving =
      a_half_all ? (d_half_all ? "both" : "a-half") : (d_half_all ? "d-half" : "neither");
  res.detail = "surviving coefficient variant: " + surviving + " (" +
               std::to_string(checked) + " cases); rank-1 " +
               (rank1_ok ? "holds" : "FAILS");
  return res;
}

// ---- criterion 6: rank-1 classical Laguerre -------------------------------

SymPoly classical_laguerre_scaled(int n, const Rational& nu) {
  // n! L_n^{(nu-1)}(x) = n! sum_k (-1)^k binom(n + nu - 1, n - k) x^k / k!
  Rational alpha = nu - 1;
  SymPoly out(1);
  for (int k = 0; k <= n; ++k) {
    // binom(n + alpha, n - k) = (alpha + k + 1)_{n-k} / (n-k)!
    Rational b = rising_factorial(alpha + k + 1, n - k) / factorial(n - k);
    Rational c = factorial(n) * b / factorial(k);
    if (k % 2 == 1) c = -c;
    out.add_term(k == 0 ? Partition() : Partition({k}), c);
  }
  return out;
}

CriterionResult criterion_classical_laguerre(Level level) {
  CriterionResult res;
  res.name = "rank-1 classical Laguerre reduction";
  int max_n = level == Level::Full ? 10 : 6;
  std::vector<Rational> nus = {Rational(2), Rational(4), Rational(7) / 2};
  if (level == Level::Quick) nus = {Rational(2)};
  DomainParams params = make_params(1, 1);
  JackTable jack(params);
  BinomTable binom(jack);
  bool ok = true;
  int checked = 0;
  for (const auto& nu : nus) {
    for (int n = 0; n <= max_n; ++n) {
      Partition m = n == 0 ? Partition() : Partition({n});
      SymPoly lhs = laguerre_poly(m, nu, binom, params);
      if (!(lhs == classical_laguerre_scaled(n, nu))) ok = false;
      ++checked;
    }
  }
  res.passed = ok;
  res.detail = "exact match with n! L_n^{(nu-1)} on " +
               std::to_string(checked) + " cases";
  return res;
}

// ---- criterion 7: Haar Monte-Carlo oracle ---------------------------------

CriterionResult criterion_haar_mc(Level level, std::uint64_t seed) {
  CriterionResult res;
  res.name = "Haar Monte-Carlo oracle for psi_m";
  std::vector<int> ranks = level == Level::Full ? std::vector<int>{2, 3}
                                                : std::vector<int>{2};
  int max_w = level == Level::Full ? 3 : 2;
  int points = level == Level::Full ? 3 : 1;
  std::int64_t samples = level == Level::Full ? 100000 : 10000;
  bool ok = true;
  int checked = 0;
  double worst = 0.0;
  for (int r : ranks) {
    for (int ia = 1; ia <= 2; ++ia) {
      DomainParams params = make_params(r, ia);
      JackTable jack(params);
      JordanBackend backend =
          ia == 1 ? JordanBackend::SymReal : JordanBackend::HermComplex;
      std::vector<Partition> ms;
      for (const auto& m : partitions_up_to(r, max_w))
        if (!m.empty()) ms.push_back(m);
      for (int pt = 0; pt < points; ++pt) {
        std::uint64_t pt_seed =
            seed ^ (0x9e3779b97f4a7c15ULL * (r * 100 + ia * 10 + pt + 1));
        ConePoint x = random_cone_point(backend, r, pt_seed);
        auto estimates = psi_mc_multi(ms, x, samples, pt_seed + 1);
        for (size_t q = 0; q < ms.size(); ++q) {
          double exact = jack.psi(ms[q]).eval(x.eigenvalues());
          double diff = std::abs(estimates[q].mean - exact);
          double floor = 1e-12 * std::max({1.0, std::abs(exact),
                                           std::abs(estimates[q].mean)});
          double allowed = 3.0 * estimates[q].std_error + floor;
          if (diff > allowed) ok = false;
          if (estimates[q].std_error > 0)
            worst = std::max(worst, diff / estimates[q].std_error);
          ++checked;
        }
      }
    }
  }
  res.passed = ok;
  res.detail = std::to_string(checked) +
               " comparisons within 3 sigma (worst " + fmt_double(worst) +
               " sigma), " + std::to_string(samples) + " samples";
  return res;
}

// ---- criterion 8: Laplace identity of Lemma-type L(mu_nu) -----------------

CriterionResult criterion_laplace(Level level) {
  CriterionResult res;
  res.name = "Laplace transform of the measure";
  std::vector<Rational> nus = {Rational(2), Rational(4)};
  std::vector<double> svals = {0.5, 1.0, 2.0};
  int nodes = level == Level::Full ? 160 : 96;
  if (level == Level::Quick) {
    nus = {Rational(2)};
    svals = {1.0, 2.0};
  }
  bool ok = true;
  double worst = 0.0;
  for (int r = 1; r <= 2; ++r) {
    DomainParams params = make_params(r, 1);
    for (const auto& nu : nus) {
      RadialQuadrature quad(params, nu, {SchemeKind::GaussLaguerreTensor, nodes});
      quad.calibrate();
      ExpPoly one{SymPoly::constant(r, 1), Rational(0)};
      for (double s : svals) {
        double lhs = laplace_at_scalar(one, s, quad);
        double rhs = gamma_omega_real(std::vector<double>(r, to_double(nu)),
                                      params) *
                     std::pow(s, -r * to_double(nu));
        double rel = std::abs(lhs - rhs) /
                     std::max({std::abs(rhs), std::abs(lhs), 1e-12});
        worst = std::max(worst, rel);
        if (rel > 1e-6) ok = false;
      }
    }
  }
  res.passed = ok;
  res.detail = "relative error <= 1e-6 (worst " + fmt_double(worst) + ")";
  return res;
}

// ---- criterion 9: Laplace image of the Laguerre functions -----------------

CriterionResult criterion_laguerre_transform(Level level) {
  CriterionResult res;
  res.name = "Laplace image of Laguerre functions";
  struct Case {
    int r;
    Rational a;
  };
  std::vector<Case> cases = {{1, 1}, {2, 1}, {2, 2}};
  std::vector<Rational> nus = {Rational(3), Rational(4)};
  std::vector<double> svals = {1.5, 2.0, 3.0};
  int max_w = 2;
  int nodes = level == Level::Full ? 160 : 96;
  if (level == Level::Quick) {
    cases = {{1, 1}, {2, 1}};
    nus = {Rational(4)};
    svals = {2.0};
    max_w = 1;
  }
  bool ok = true;
  double worst = 0.0;
  for (const auto& cs : cases) {
    DomainParams params = make_params(cs.r, cs.a);
    JackTable jack(params);
    BinomTable binom(jack);
    for (const auto& nu : nus) {
      RadialQuadrature quad(params, nu, {SchemeKind::GaussLaguerreTensor, nodes});
      quad.calibrate();
      for (const auto& m : partitions_up_to(cs.r, max_w)) {
        ExpPoly lm = laguerre_fn(m, nu, binom, params);
        std::vector<double> shifted(cs.r);
        for (int j = 1; j <= cs.r; ++j)
          shifted[j - 1] = to_double(nu) + m.part(j);
        for (double s : svals) {
          double lhs = laplace_at_scalar(lm, s, quad);
          double rhs = gamma_omega_real(shifted, params) *
                       std::pow(s + 1.0, -cs.r * to_double(nu)) *
                       std::pow((s - 1.0) / (s + 1.0), m.weight());
          double rel = std::abs(lhs - rhs) /
                       std::max({std::abs(rhs), std::abs(lhs), 1e-12});
          worst = std::max(worst, rel);
          if (rel > 1e-5) ok = false;
        }
      }
    }
  }
  res.passed = ok;
  res.detail = "relative error <= 1e-5 (worst " + fmt_double(worst) + ")";
  return res;
}

// ---- criterion 10: Laguerre orthogonality ---------------------------------

CriterionResult criterion_gram_laguerre(Level level) {
  CriterionResult res;
  res.name = "Laguerre function orthogonality";
  Rational nu(4);
  int max_w = level == Level::Full ? 3 : 2;
  int nodes = level == Level::Full ? 140 : 80;
  int max_r = level == Level::Full ? 2 : 1;
  bool ok = true;
  double worst = 0.0, drift_worst = 0.0;
  for (int r = 1; r <= max_r; ++r) {
    DomainParams params = make_params(r, 1);
    JackTable jack(params);
    BinomTable binom(jack);
    RadialQuadrature quad(params, nu, {SchemeKind::GaussLaguerreTensor, nodes});
    quad.calibrate();
    RadialQuadrature quad2(params, nu,
                           {SchemeKind::GaussLaguerreTensor, 2 * nodes});
    quad2.calibrate();
    GramMatrix g1 = gram_laguerre(nu, max_w, quad, binom).normalized_copy();
    GramMatrix g2 = gram_laguerre(nu, max_w, quad2, binom).normalized_copy();
    worst = std::max({worst, g1.max_offdiag_abs(), g2.max_offdiag_abs()});
    drift_worst = std::max(
        drift_worst, (g1.entries - g2.entries).cwiseAbs().maxCoeff());
    if (g1.max_offdiag_abs() >= 1e-6 || g2.max_offdiag_abs() >= 1e-6) ok = false;
    if (drift_worst >= 1e-6) ok = false;
  }
  res.passed = ok;
  res.detail = "normalized off-diagonal < 1e-6 (worst " + fmt_double(worst) +
               "), node-doubling drift " + fmt_double(drift_worst);
  return res;
}

// ---- criterion 11: rank-1 branching orthogonality -------------------------

CriterionResult criterion_gram_branching(Level level) {
  CriterionResult res;
  res.name = "rank-1 branching orthogonality (numeric b_nu)";
  int max_n = level == Level::Full ? 6 : 3;
  try {
    BranchingGram bg = gram_branching_rank1(Rational(4), max_n);
    GramMatrix norm = bg.gram.normalized_copy();
    double off = norm.max_offdiag_abs();
    res.passed = off < 1e-4;
    res.detail = "normalized off-diagonal " + fmt_double(off) +
                 " < 1e-4; tail bound " + fmt_double(bg.tail_bound) +
                 " (< 1e-3 x min diagonal " + fmt_double(bg.min_diag) +
                 "), cutoff |lambda| <= " + fmt_double(bg.cutoff);
  } catch (const Error& e) {
    res.passed = false;
    res.detail = e.what();
  }
  return res;
}

// ---- internal mutation sanity (exercised fully by the CLI criterion) ------

CriterionResult criterion_mutation_sanity() {
  CriterionResult res;
  res.name = "mutation sanity (flipped recurrence sign must fail)";
  DomainParams params = make_params(1, 1);
  JackTable jack(params);
  BranchingContext ctx = make_branching_context(params, Rational(2), 4);
  BranchingTable table(ctx, jack, 4);
  VerificationReport rep =
      table.verify_recurrence(Partition({1}), /*mutate_sign=*/true);
  res.passed = !rep.passed();
  res.detail = res.passed ? "flipped sign detected as failed"
                          : "mutation NOT detected";
  return res;
}

}  // namespace

std::vector<CriterionResult> run_suite(Level level, std::uint64_t seed) {
  std::vector<std::function<CriterionResult()>> criteria = {
      [&] { return criterion_mp(level); },
      [&] { return criterion_identity_sweep(level, false); },
      [&] { return criterion_difference(level); },
      [&] { return criterion_binom(level); },
      [&] { return criterion_euler(level); },
      [&] { return criterion_classical_laguerre(level); },
      [&] { return criterion_haar_mc(level, seed); },
      [&] { return criterion_laplace(level); },
      [&] { return criterion_laguerre_transform(level); },
      [&] { return criterion_gram_laguerre(level); },
      [&] { return criterion_gram_branching(level); },
      [&] { return criterion_mutation_sanity(); },
  };
  std::vector<CriterionResult> out;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    CriterionResult r = criteria[i]();
    r.index = static_cast<int>(i) + 1;
    r.runtime_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json suite_json(const std::vector<CriterionResult>& results,
                                  Level level, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["suite"] = level == Level::Full ? "full" : "quick";
  j["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["criterion"] = r.index;
    e["name"] = r.name;
    e["status"] = r.passed ? "pass" : "fail";
    e["detail"] = r.detail;
    if (!r.reports.empty()) {
      nlohmann::ordered_json failures = nlohmann::ordered_json::array();
      for (const auto& rep : r.reports) failures.push_back(rep.to_json());
      e["failures"] = failures;
    }
    arr.push_back(e);
    all = all && r.passed;
  }
  j["criteria"] = arr;
  j["overall"] = all ? "pass" : "fail";
  return j;
}

}  // namespace conelab::acceptance
