#include "conelab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("invalid-argument", "negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error("invalid-argument", "parts not weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw Error("invalid-argument", "bad partition '" + text + "'");
      parts.push_back(std::stoi(tok));
    }
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int r) const {
  if (length() > r) throw Error("invalid-argument", "partition longer than rank");
  std::vector<int> v(parts_);
  v.resize(r, 0);
  return v;
}

std::optional<Partition> Partition::step_up(int j, int r) const {
  if (j < 1 || j > r) return std::nullopt;
  std::vector<int> v = padded(r);
  v[j - 1] += 1;
  if (j >= 2 && v[j - 1] > v[j - 2]) return std::nullopt;
  return Partition(std::move(v));
}

std::optional<Partition> Partition::step_down(int j) const {
  if (j < 1 || part(j) == 0) return std::nullopt;
  std::vector<int> v(parts_);
  v[j - 1] -= 1;
  if (j < static_cast<int>(v.size()) && v[j - 1] < v[j]) return std::nullopt;
  return Partition(std::move(v));
}

bool Partition::dominated_by(const Partition& other) const {
  if (weight_ != other.weight_) return false;
  int acc = 0, acc_o = 0;
  int n = std::max(length(), other.length());
  for (int j = 1; j <= n; ++j) {
    acc += part(j);
    acc_o += other.part(j);
    if (acc > acc_o) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool Partition::operator<(const Partition& o) const {
  if (weight_ != o.weight_) return weight_ < o.weight_;
  // reverse-lexicographic: the lexicographically larger partition comes first
  int n = std::max(length(), o.length());
  for (int j = 1; j <= n; ++j) {
    if (part(j) != o.part(j)) return part(j) > o.part(j);
  }
  return false;
}

namespace {
void gen_rec(int r, int w, int max_part, std::vector<int>& cur,
             std::vector<Partition>& out) {
  if (w == 0) {
    out.emplace_back(cur);
    return;
  }
  if (r == 0) return;
  for (int p = std::min(w, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_rec(r - 1, w - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int r, int w) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (w == 0) {
    out.emplace_back(cur);
    return out;
  }
  gen_rec(r, w, w, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int r, int max_weight) {
  if (max_weight < 0) throw Error("invalid-argument", "negative max_weight");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto pw = partitions_of(r, w);
    out.insert(out.end(), pw.begin(), pw.end());
  }
  return out;
}

std::vector<std::vector<int>> orbit(const Partition& p, int r) {
  std::vector<int> v = p.padded(r);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace conelab
