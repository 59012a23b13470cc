// Concrete Jordan-algebra backends: rank-r real symmetric matrices (a = 1)
// and complex Hermitian matrices (a = 2). Principal minors, conical
// functions, the Cayley transform, the kernel h(z,w) = det(e - z w), and the
// Haar Monte-Carlo realization of psi_m as an average of Delta_m over the
// isotropy orbit.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "conelab/partition.hpp"

namespace conelab {

enum class JordanBackend { SymReal, HermComplex };

class ConePoint {
 public:
  static ConePoint sym_real(const Eigen::MatrixXd& m);
  static ConePoint herm_complex(const Eigen::MatrixXcd& m);
  static ConePoint diagonal(JordanBackend backend,
                            const std::vector<double>& diag);
  // row-major "2,1;1,2" text; entries "re" or "re+imj" for the complex
  // backend are not supported -- complex matrices are entered as
  // "re:im" pairs.
  static ConePoint parse(JordanBackend backend, const std::string& text);

  JordanBackend backend() const { return backend_; }
  int rank() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

  // spectral decomposition eigenvalues, sorted decreasing; cached
  const std::vector<double>& eigenvalues() const;
  bool in_cone() const;

 private:
  ConePoint(JordanBackend backend, Eigen::MatrixXcd mat);
  JordanBackend backend_;
  Eigen::MatrixXcd mat_;
  mutable std::optional<std::vector<double>> eigs_;
};

// Leading principal minors Delta_1(x), ..., Delta_r(x).
std::vector<double> minors(const ConePoint& x);

// Delta_alpha = prod_j Delta_j^{alpha_j - alpha_{j+1}}, alpha_{r+1} = 0.
double conical(const std::vector<double>& alpha, const ConePoint& x);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

McEstimate psi_mc(const Partition& m, const ConePoint& x, std::int64_t samples,
                  std::uint64_t seed);
// One pass of shared Haar samples serving several partitions at once.
std::vector<McEstimate> psi_mc_multi(const std::vector<Partition>& ms,
                                     const ConePoint& x, std::int64_t samples,
                                     std::uint64_t seed);

// (e+z)(e-z)^{-1} (to the tube) or (w-e)(w+e)^{-1} (back to the ball).
enum class CayleyDirection { ToTube, ToBall };
Eigen::MatrixXcd cayley_map(const Eigen::MatrixXcd& z, CayleyDirection dir);

// h(x, y) = det(e - x y) on real points of the bounded realization.
double h_kernel(const ConePoint& x, const ConePoint& y);

// Deterministic positive definite test points.
ConePoint random_cone_point(JordanBackend backend, int r, std::uint64_t seed);

}  // namespace conelab
