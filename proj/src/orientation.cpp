#include "assoc/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

Orientation::Orientation(int n, std::vector<int> up) : n_(n), up_(std::move(up)) {
  if (n_ < 1) throw std::invalid_argument("Orientation: n must be >= 1");
  std::sort(up_.begin(), up_.end());
  if (std::adjacent_find(up_.begin(), up_.end()) != up_.end())
    throw std::invalid_argument("Orientation: duplicate up element");
  for (int j : up_)
    if (j < 2 || j > n_ - 1)
      throw std::invalid_argument("Orientation: up element " + std::to_string(j) +
                                  " outside {2,...," + std::to_string(n_ - 1) + "}");
}

std::vector<int> Orientation::down() const {
  std::vector<int> d;
  d.reserve(static_cast<size_t>(n_) - up_.size());
  for (int j = 1; j <= n_; ++j)
    if (!is_up(j)) d.push_back(j);
  return d;
}

bool Orientation::is_up(int j) const {
  return std::binary_search(up_.begin(), up_.end(), j);
}

std::string Orientation::up_str() const {
  std::string s = "{";
  for (size_t x = 0; x < up_.size(); ++x) {
    if (x) s += ",";
    s += std::to_string(up_[x]);
  }
  return s + "}";
}

std::vector<Orientation> all_orientations(int n) {
  if (n < 1) throw std::invalid_argument("all_orientations: n must be >= 1");
  const int free = std::max(0, n - 2);
  std::vector<Orientation> result;
  result.reserve(static_cast<size_t>(1) << free);
  for (unsigned mask = 0; mask < (1u << free); ++mask) {
    std::vector<int> up;
    for (int b = 0; b < free; ++b)
      if (mask & (1u << b)) up.push_back(b + 2);
    result.emplace_back(n, std::move(up));
  }
  return result;
}

LabeledPolygon label_polygon(const Orientation& a) {
  const int n = a.n();
  const int m = n + 2;
  LabeledPolygon lp;
  lp.n = n;
  lp.label_of_position.assign(static_cast<size_t>(m), -1);
  lp.position_of_label.assign(static_cast<size_t>(m), -1);

  std::vector<int> labels;
  labels.reserve(static_cast<size_t>(m));
  labels.push_back(0);
  for (int j : a.down()) labels.push_back(j);
  labels.push_back(n + 1);
  const auto& up = a.up();
  for (auto it = up.rbegin(); it != up.rend(); ++it) labels.push_back(*it);

  for (int pos = 0; pos < m; ++pos) {
    lp.label_of_position[static_cast<size_t>(pos)] = labels[static_cast<size_t>(pos)];
    lp.position_of_label[static_cast<size_t>(labels[static_cast<size_t>(pos)])] = pos;
  }
  return lp;
}

}  // namespace assoc
