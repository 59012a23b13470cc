// Partitions m_1 >= ... >= m_r >= 0: the index lattice for the spherical
// polynomials, branching polynomials and Laguerre functions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

class Partition {
 public:
  Partition() = default;

  // Accepts any list of non-negative integers that is weakly decreasing
  // once trailing zeros are removed.
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  // 1-based part access, zero beyond the stored length.
  int part(int j) const {
    return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
  }

  std::vector<int> padded(int r) const;

  // m +- gamma_j if the result is again a partition with <= r parts.
  std::optional<Partition> step_up(int j, int r) const;
  std::optional<Partition> step_down(int j) const;

  bool dominated_by(const Partition& other) const;  // same weight required

  std::string to_string() const;  // "2,1"; the zero partition prints "0"

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // (weight, reverse-lexicographic) order: the canonical listing order.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;  // trimmed, weakly decreasing
  int weight_ = 0;
};

// All partitions with <= r parts and weight <= max_weight, ordered by
// (weight, reverse-lexicographic). Deterministic.
std::vector<Partition> partitions_up_to(int r, int max_weight);

// Partitions of exactly weight w with <= r parts, reverse-lex order
// (a linear extension of dominance from the top).
std::vector<Partition> partitions_of(int r, int w);

// All distinct rearrangements of the padded part vector (the monomial orbit).
std::vector<std::vector<int>> orbit(const Partition& p, int r);

}  // namespace conelab
