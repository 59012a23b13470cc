#include "conelab/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace conelab {

namespace {

constexpr double kHermitianTol = 1e-12;

// splitmix64: stable per-shard seed derivation
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro-free minimal generator: mt19937_64 + hand-rolled Box-Muller so the
// stream does not depend on the standard library's distribution internals.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : state_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = rad * std::sin(ang);
    have_spare_ = true;
    return rad * std::cos(ang);
  }

 private:
  double uniform() {
    // (0, 1]: avoids log(0)
    std::uint64_t bits = splitmix64(state_);
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
  }
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

Eigen::MatrixXcd haar_sample(JordanBackend backend, int r, Gaussian& g) {
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (backend == JordanBackend::SymReal)
        a(i, j) = std::complex<double>(g(), 0.0);
      else
        a(i, j) = std::complex<double>(g(), g());
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd rr = qr.matrixQR();
  // phase correction makes the distribution Haar rather than QR-biased
  for (int j = 0; j < r; ++j) {
    std::complex<double> d = rr(j, j);
    double mod = std::abs(d);
    q.col(j) *= (mod == 0.0) ? 1.0 : d / mod;
  }
  return q;
}

// Leading principal minors by elimination without pivoting; falls back to
// block determinants when a pivot degenerates.
std::vector<double> leading_minors(const Eigen::MatrixXcd& m) {
  const int r = static_cast<int>(m.rows());
  std::vector<double> out(r);
  Eigen::MatrixXcd w = m;
  double running = 1.0;
  bool ok = true;
  for (int k = 0; k < r && ok; ++k) {
    std::complex<double> piv = w(k, k);
    if (std::abs(piv) < 1e-300) {
      ok = false;
      break;
    }
    running *= piv.real();
    out[k] = running;
    for (int i = k + 1; i < r; ++i) {
      std::complex<double> f = w(i, k) / piv;
      for (int j = k + 1; j < r; ++j) w(i, j) -= f * w(k, j);
    }
  }
  if (!ok) {
    for (int k = 0; k < r; ++k)
      out[k] = m.topLeftCorner(k + 1, k + 1).determinant().real();
  }
  return out;
}

}  // namespace

ConePoint::ConePoint(JordanBackend backend, Eigen::MatrixXcd mat)
    : backend_(backend), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols())
    throw Error("invalid-argument", "matrix not square");
  double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  if (dev > kHermitianTol * scale)
    throw Error("invalid-argument", "matrix not symmetric/Hermitian");
  mat_ = (mat_ + mat_.adjoint()) / 2.0;
}

ConePoint ConePoint::sym_real(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || (m - m.transpose()).cwiseAbs().maxCoeff() >
                                  kHermitianTol * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw Error("invalid-argument", "matrix not symmetric");
  return ConePoint(JordanBackend::SymReal, m.cast<std::complex<double>>());
}

ConePoint ConePoint::herm_complex(const Eigen::MatrixXcd& m) {
  return ConePoint(JordanBackend::HermComplex, m);
}

ConePoint ConePoint::diagonal(JordanBackend backend,
                              const std::vector<double>& diag) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(diag.size(), diag.size());
  for (size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return ConePoint(backend, std::move(m));
}

ConePoint ConePoint::parse(JordanBackend backend, const std::string& text) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<std::complex<double>> entries;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) {
        entries.emplace_back(std::stod(tok), 0.0);
      } else {
        entries.emplace_back(std::stod(tok.substr(0, colon)),
                             std::stod(tok.substr(colon + 1)));
      }
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw Error("invalid-argument", "empty matrix text");
  const size_t r = rows.size();
  Eigen::MatrixXcd m(r, r);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != r)
      throw Error("invalid-argument", "matrix text not square");
    for (size_t j = 0; j < r; ++j) m(i, j) = rows[i][j];
  }
  return ConePoint(backend, std::move(m));
}

const std::vector<double>& ConePoint::eigenvalues() const {
  if (!eigs_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_,
                                                       Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(),
                          es.eigenvalues().data() + rank());
    std::sort(v.begin(), v.end(), std::greater<double>());
    eigs_ = std::move(v);
  }
  return *eigs_;
}

bool ConePoint::in_cone() const {
  const auto& e = eigenvalues();
  return e.back() > 0.0;
}

std::vector<double> minors(const ConePoint& x) {
  return leading_minors(x.matrix());
}

double conical(const std::vector<double>& alpha, const ConePoint& x) {
  const int r = x.rank();
  if (static_cast<int>(alpha.size()) != r)
    throw Error("invalid-argument", "alpha length != rank");
  std::vector<double> mins = minors(x);
  double out = 1.0;
  for (int j = 0; j < r; ++j) {
    double expo = alpha[j] - (j + 1 < r ? alpha[j + 1] : 0.0);
    if (expo != std::floor(expo) && mins[j] <= 0.0)
      throw Error("invalid-argument",
                  "fractional conical power of a non-positive minor");
    out *= std::pow(mins[j], expo);
  }
  return out;
}

namespace {
struct Accumulator {
  double mean = 0, m2 = 0;
  std::int64_t n = 0;
  void push(double v) {
    ++n;
    double d = v - mean;
    mean += d / n;
    m2 += d * (v - mean);
  }
  void merge(const Accumulator& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    double d = o.mean - mean;
    std::int64_t tot = n + o.n;
    m2 += o.m2 + d * d * (double(n) * double(o.n) / double(tot));
    mean += d * double(o.n) / double(tot);
    n = tot;
  }
};
}  // namespace

std::vector<McEstimate> psi_mc_multi(const std::vector<Partition>& ms,
                                     const ConePoint& x, std::int64_t samples,
                                     std::uint64_t seed) {
  if (samples < 1) throw Error("invalid-argument", "samples must be >= 1");
  if (!x.in_cone()) throw Error("invalid-argument", "point not in the cone");
  const int r = x.rank();

  std::vector<std::vector<int>> expo;  // minor exponents per partition
  for (const auto& m : ms) {
    std::vector<int> e(r);
    for (int j = 1; j <= r; ++j) e[j - 1] = m.part(j) - m.part(j + 1);
    expo.push_back(std::move(e));
  }

  constexpr int kShards = 16;
  std::vector<std::vector<Accumulator>> acc(
      kShards, std::vector<Accumulator>(ms.size()));
  for (int shard = 0; shard < kShards; ++shard) {
    // per-shard streams seeded by successive splitmix outputs
    std::uint64_t st = seed, sub = 0;
    for (int i = 0; i <= shard; ++i) sub = splitmix64(st);
    Gaussian g(sub);
    std::int64_t count = samples / kShards + (shard < samples % kShards ? 1 : 0);
    for (std::int64_t it = 0; it < count; ++it) {
      Eigen::MatrixXcd u = haar_sample(x.backend(), r, g);
      Eigen::MatrixXcd y = u * x.matrix() * u.adjoint();
      std::vector<double> mins = leading_minors(y);
      for (size_t q = 0; q < ms.size(); ++q) {
        double v = 1.0;
        for (int j = 0; j < r; ++j) {
          for (int t = 0; t < expo[q][j]; ++t) v *= mins[j];
        }
        acc[shard][q].push(v);
      }
    }
  }

  std::vector<McEstimate> out;
  for (size_t q = 0; q < ms.size(); ++q) {
    Accumulator total;
    for (int shard = 0; shard < kShards; ++shard) total.merge(acc[shard][q]);
    McEstimate e;
    e.mean = total.mean;
    e.std_error =
        total.n > 1 ? std::sqrt(total.m2 / (double(total.n) - 1.0) /
                                double(total.n))
                    : 0.0;
    e.samples = total.n;
    e.seed = seed;
    out.push_back(e);
  }
  return out;
}

McEstimate psi_mc(const Partition& m, const ConePoint& x, std::int64_t samples,
                  std::uint64_t seed) {
  return psi_mc_multi({m}, x, samples, seed)[0];
}

Eigen::MatrixXcd cayley_map(const Eigen::MatrixXcd& z, CayleyDirection dir) {
  const int r = static_cast<int>(z.rows());
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(r, r);
  Eigen::MatrixXcd num, den;
  if (dir == CayleyDirection::ToTube) {
    num = id + z;
    den = id - z;
  } else {
    num = z - id;
    den = z + id;
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(den);
  if (!lu.isInvertible())
    throw Error("singular-pivot", "Cayley denominator not invertible");
  return num * lu.inverse();
}

double h_kernel(const ConePoint& x, const ConePoint& y) {
  if (x.rank() != y.rank())
    throw Error("invalid-argument", "rank mismatch in h_kernel");
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(x.rank(), x.rank());
  std::complex<double> det = (id - x.matrix() * y.matrix()).determinant();
  return det.real();
}

ConePoint random_cone_point(JordanBackend backend, int r, std::uint64_t seed) {
  Gaussian g(seed);
  Eigen::MatrixXcd a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (backend == JordanBackend::SymReal)
        a(i, j) = std::complex<double>(g(), 0.0);
      else
        a(i, j) = std::complex<double>(g(), g());
    }
  Eigen::MatrixXcd x = a * a.adjoint() / double(r) +
                       0.25 * Eigen::MatrixXcd::Identity(r, r);
  if (backend == JordanBackend::SymReal) return ConePoint::sym_real(x.real());
  return ConePoint::herm_complex(x);
}

}  // namespace conelab
