#include "assoc/dihedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace assoc {

namespace {

int floor_mod(int x, int m) { return ((x % m) + m) % m; }

void require_polygon(int m) {
  if (m < 3) throw std::invalid_argument("dihedral: polygon size must be >= 3");
}

}  // namespace

int DihedralElement::apply(int x) const {
  return floor_mod(reflect ? shift - x : shift + x, m);
}

DihedralElement DihedralElement::compose(const DihedralElement& other) const {
  if (m != other.m)
    throw std::invalid_argument("DihedralElement::compose: mismatched polygon sizes " +
                                std::to_string(m) + " and " + std::to_string(other.m));
  return DihedralElement{m, reflect != other.reflect,
                         floor_mod(shift + (reflect ? -other.shift : other.shift), m)};
}

DihedralElement DihedralElement::inverse() const {
  if (reflect) return *this;
  return DihedralElement{m, false, floor_mod(-shift, m)};
}

DihedralElement identity_element(int m) {
  require_polygon(m);
  return DihedralElement{m, false, 0};
}

DihedralElement rotation(int m, int t) {
  require_polygon(m);
  return DihedralElement{m, false, floor_mod(t, m)};
}

DihedralElement reflection_s(int m, int k) {
  require_polygon(m);
  return DihedralElement{m, true, floor_mod(k + 1, m)};
}

std::vector<DihedralElement> all_elements(int m) {
  require_polygon(m);
  std::vector<DihedralElement> elems;
  elems.reserve(static_cast<size_t>(2) * m);
  for (int t = 0; t < m; ++t) elems.push_back(DihedralElement{m, false, t});
  for (int t = 0; t < m; ++t) elems.push_back(DihedralElement{m, true, t});
  return elems;
}

Triangulation act(const DihedralElement& g, const Triangulation& T) {
  if (g.m != T.polygon_size())
    throw std::invalid_argument("act: element of D_" + std::to_string(g.m) +
                                " applied to a triangulation of the " +
                                std::to_string(T.polygon_size()) + "-gon");
  std::vector<Diagonal> mapped;
  mapped.reserve(T.diagonals().size());
  for (const Diagonal& d : T.diagonals())
    mapped.push_back(Diagonal{g.apply(d.a), g.apply(d.b)});
  return Triangulation(T.n(), std::move(mapped));
}

std::vector<Triangulation> orbit(const Triangulation& T) {
  std::set<Triangulation> images;
  for (const DihedralElement& g : all_elements(T.polygon_size()))
    images.insert(act(g, T));
  return {images.begin(), images.end()};
}

std::vector<DihedralElement> stabilizer(const Triangulation& T) {
  std::vector<DihedralElement> fixing;
  for (const DihedralElement& g : all_elements(T.polygon_size()))
    if (act(g, T) == T) fixing.push_back(g);
  return fixing;
}

std::vector<std::vector<Triangulation>> orbit_partition(
    const std::vector<Triangulation>& all) {
  std::vector<Triangulation> sorted(all.begin(), all.end());
  std::sort(sorted.begin(), sorted.end());
  std::set<Triangulation> assigned;
  std::vector<std::vector<Triangulation>> orbits;
  for (const Triangulation& T : sorted) {
    if (assigned.count(T)) continue;
    auto members = orbit(T);
    for (const Triangulation& member : members) {
      if (!std::binary_search(sorted.begin(), sorted.end(), member))
        throw std::invalid_argument("orbit_partition: input not closed under the action");
      assigned.insert(member);
    }
    orbits.push_back(std::move(members));
  }
  return orbits;
}

}  // namespace assoc
