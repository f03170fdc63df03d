#include "assoc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "assoc/centroid.hpp"
#include "assoc/dihedral.hpp"
#include "assoc/realization.hpp"
#include "assoc/type_b.hpp"

namespace assoc {

namespace {

std::string format_point(const RationalPoint& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

VerificationReport report(std::string check, int n, std::string params, bool passed,
                          std::string witness_on_fail) {
  VerificationReport r;
  r.check = std::move(check);
  r.n = n;
  r.params = std::move(params);
  r.passed = passed;
  if (!passed) r.witness = std::move(witness_on_fail);
  return r;
}

// Barycenter-vs-constant report shared by every centroid family.
VerificationReport centroid_report(std::string check, int n, std::string params,
                                   std::vector<LatticePoint> points,
                                   const Rational& expected_coord,
                                   FaultInjector* inject) {
  if (inject) inject->perturb(points);
  const RationalPoint got = barycenter(points);
  const RationalPoint expected =
      constant_point(expected_coord, static_cast<int>(points.front().size()));
  return report(std::move(check), n, params, got == expected,
                params + ": barycenter " + format_point(got) + " != " +
                    format_point(expected));
}

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

void FaultInjector::perturb(std::vector<LatticePoint>& points) {
  for (LatticePoint& p : points)
    for (Coord& c : p) {
      if (seen_ == target_) {
        c += 1;
        fired_ = true;
      }
      ++seen_;
    }
}

VerificationReport check_weight_orbit_sum(const Triangulation& T, int j) {
  const int n = T.n();
  long long sum = 0;
  for (const DihedralElement& f : all_elements(T.polygon_size()))
    sum += delta_weight(act(f, T), j);
  const long long expected = static_cast<long long>(n + 1) * (n + 2);
  const std::string params = "T=" + T.str() + " j=" + std::to_string(j);
  return report("weight-orbit-sum", n, params, sum == expected,
                params + ": group sum " + std::to_string(sum) + " != " +
                    std::to_string(expected));
}

VerificationReport check_coordinate_orbit_sum(const Orientation& a,
                                              const Triangulation& T, int j) {
  const int n = a.n();
  long long sum = 0;
  for (const DihedralElement& f : all_elements(T.polygon_size())) {
    const long long w = hl_weight(a, act(f, T), j);
    sum += a.is_up(j) ? (n + 1 - w) : w;
  }
  const long long expected = static_cast<long long>(n + 1) * (n + 2);
  const std::string params =
      "up=" + a.up_str() + " T=" + T.str() + " j=" + std::to_string(j);
  return report("coordinate-orbit-sum", n, params, sum == expected,
                params + ": group sum " + std::to_string(sum) + " != " +
                    std::to_string(expected));
}

VerificationReport check_orbit_barycenter(const Orientation& a,
                                          const std::vector<Triangulation>& members,
                                          FaultInjector* inject) {
  if (members.empty())
    throw std::invalid_argument("check_orbit_barycenter: empty member list");
  std::vector<Triangulation> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != orbit(members.front()))
    throw std::invalid_argument(
        "check_orbit_barycenter: members do not form a dihedral orbit");
  std::vector<LatticePoint> points;
  points.reserve(sorted.size());
  for (const Triangulation& T : sorted) points.push_back(hl_vertex(a, T));
  const int n = a.n();
  return centroid_report(
      "orbit-centroid", n,
      "up=" + a.up_str() + " orbit=" + sorted.front().str() + " size=" +
          std::to_string(sorted.size()),
      std::move(points), Rational(n + 1, 2), inject);
}

std::vector<VerificationReport> check_global_centroids(int n, FaultInjector* inject) {
  std::vector<VerificationReport> out;
  for (const Orientation& a : all_orientations(n))
    out.push_back(centroid_report("global-centroid", n, "up=" + a.up_str(),
                                  associahedron_vertices(a), Rational(n + 1, 2),
                                  inject));
  return out;
}

std::vector<VerificationReport> check_orbit_centroids(int n, FaultInjector* inject) {
  const auto orbits = orbit_partition(enumerate_triangulations(n));
  std::vector<VerificationReport> out;
  for (const Orientation& a : all_orientations(n))
    for (const auto& members : orbits)
      out.push_back(check_orbit_barycenter(a, members, inject));
  return out;
}

std::vector<VerificationReport> check_weight_orbit_sums(int n) {
  std::vector<VerificationReport> out;
  for (const Triangulation& T : enumerate_triangulations(n))
    for (int j = 1; j <= n; ++j) out.push_back(check_weight_orbit_sum(T, j));
  return out;
}

std::vector<VerificationReport> check_coordinate_orbit_sums(int n) {
  std::vector<VerificationReport> out;
  const auto all = enumerate_triangulations(n);
  for (const Orientation& a : all_orientations(n))
    for (const Triangulation& T : all)
      for (int j = 1; j <= n; ++j)
        out.push_back(check_coordinate_orbit_sum(a, T, j));
  return out;
}

std::vector<VerificationReport> check_transport_identities(int n) {
  std::vector<VerificationReport> out;
  const auto all = enumerate_triangulations(n);
  for (const Orientation& a : all_orientations(n)) {
    const LabeledPolygon lp = label_polygon(a);
    for (int j = 1; j <= n; ++j) {
      const DihedralElement r = transport_isometry(a, j);
      bool ok = true;
      std::string why;
      // The carried labels must agree with plain positions below j.
      for (int pos = 0; pos < lp.n + 2 && ok; ++pos)
        if ((lp.label_of_position[static_cast<size_t>(pos)] < j) !=
            (r.apply(pos) < j)) {
          ok = false;
          why = "position " + std::to_string(pos) + " breaks the label condition";
        }
      for (const Triangulation& T : all) {
        if (!ok) break;
        const long long lhs = hl_weight(a, T, j);
        const long long rhs = delta_weight(act(r, T), j);
        if (lhs != rhs) {
          ok = false;
          why = "T=" + T.str() + ": weight " + std::to_string(lhs) +
                " != transported weight " + std::to_string(rhs);
        }
      }
      const std::string params = "up=" + a.up_str() + " j=" + std::to_string(j);
      out.push_back(report("transport-identity", n, params, ok, params + ": " + why));
    }
  }
  return out;
}

std::vector<VerificationReport> check_orbit_stabilizer(int n) {
  std::vector<VerificationReport> out;
  for (const Triangulation& T : enumerate_triangulations(n)) {
    const long long o = static_cast<long long>(orbit(T).size());
    const long long s = static_cast<long long>(stabilizer(T).size());
    const long long order = 2LL * T.polygon_size();
    const std::string params = "T=" + T.str();
    out.push_back(report("orbit-stabilizer", n, params, o * s == order,
                         params + ": " + std::to_string(o) + " * " +
                             std::to_string(s) + " != " + std::to_string(order)));
  }
  return out;
}

std::vector<VerificationReport> check_permutahedron_a(int n, FaultInjector* inject) {
  std::vector<VerificationReport> out;
  out.push_back(centroid_report("permutahedron-a-centroid", n, "",
                                permutahedron_vertices(n), Rational(n + 1, 2),
                                inject));
  return out;
}

std::vector<VerificationReport> check_type_b(int n, FaultInjector* inject) {
  if (n < 1) throw std::invalid_argument("check_type_b: n must be >= 1");
  std::vector<VerificationReport> out;
  const auto symmetric = enumerate_symmetric_triangulations(n);

  const long long expected_count = binomial(2 * n, n);
  out.push_back(report("symmetric-count", n, "",
                       static_cast<long long>(symmetric.size()) == expected_count,
                       "count " + std::to_string(symmetric.size()) + " != " +
                           std::to_string(expected_count)));

  {
    bool closed = true;
    std::string why;
    const int m = 2 * n + 2;
    for (const Triangulation& T : symmetric) {
      for (const DihedralElement& f : all_elements(m))
        if (!is_centrally_symmetric(act(f, T))) {
          closed = false;
          why = "image of T=" + T.str() + " lost central symmetry";
          break;
        }
      if (!closed) break;
    }
    out.push_back(report("symmetric-closure", n, "", closed, why));
  }

  const auto orientations = symmetric_orientations(n);
  const long long expected_orients = 1LL << (n - 1);
  out.push_back(report("symmetric-orientation-count", n, "",
                       static_cast<long long>(orientations.size()) == expected_orients,
                       "count " + std::to_string(orientations.size()) + " != " +
                           std::to_string(expected_orients)));

  for (const Orientation& a : orientations)
    out.push_back(centroid_report("cyclohedron-centroid", n, "up=" + a.up_str(),
                                  cyclohedron_vertices(a), Rational(2 * n + 1, 2),
                                  inject));

  out.push_back(centroid_report("permutahedron-b-centroid", n, "",
                                permutahedron_b_vertices(n), Rational(2 * n + 1, 2),
                                inject));
  return out;
}

std::vector<VerificationReport> verify_all(int max_n, int jobs, FaultInjector* inject) {
  if (max_n < 1) throw std::invalid_argument("verify_all: max_n must be >= 1");
  using Task = std::function<std::vector<VerificationReport>()>;
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    tasks.push_back([n, inject] { return check_global_centroids(n, inject); });
    tasks.push_back([n, inject] { return check_orbit_centroids(n, inject); });
    tasks.push_back([n] { return check_weight_orbit_sums(n); });
    tasks.push_back([n] { return check_coordinate_orbit_sums(n); });
    tasks.push_back([n] { return check_transport_identities(n); });
    tasks.push_back([n] { return check_orbit_stabilizer(n); });
    tasks.push_back([n, inject] { return check_permutahedron_a(n, inject); });
  }
  for (int nb = 1; 2 * nb <= max_n; ++nb)
    tasks.push_back([nb, inject] { return check_type_b(nb, inject); });

  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  const int workers =
      inject ? 1 : std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (workers == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
  } else {
    std::atomic<size_t> next{0};
    auto drain = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        slots[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
  }

  std::vector<VerificationReport> out;
  for (auto& slot : slots)
    out.insert(out.end(), std::make_move_iterator(slot.begin()),
               std::make_move_iterator(slot.end()));
  return out;
}

}  // namespace assoc
