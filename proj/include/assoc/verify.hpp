#pragma once

#include <string>
#include <vector>

#include "assoc/orientation.hpp"
#include "assoc/rational.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

// Outcome of one identity check. witness is nonempty exactly when the check
// failed; it names the failing input and both sides of the identity.
struct VerificationReport {
  std::string check;
  int n = 0;
  std::string params;
  bool passed = false;
  std::string witness;
};

bool all_passed(const std::vector<VerificationReport>& reports);

// Test hook for the centroid checks: every vertex list they consume streams
// through perturb, which adds +1 to the single coordinate whose running
// index equals target (-1 never fires and just counts). Stateful, so
// injected runs are serialized.
class FaultInjector {
 public:
  explicit FaultInjector(long long target = -1) : target_(target) {}

  void perturb(std::vector<LatticePoint>& points);
  long long coordinates_seen() const { return seen_; }
  bool fired() const { return fired_; }

 private:
  long long target_;
  long long seen_ = 0;
  bool fired_ = false;
};

// Atomic checks, one report each.

// Sum of the j-th triangle weight over the whole dihedral group's images of T
// equals (n+1)(n+2).
VerificationReport check_weight_orbit_sum(const Triangulation& T, int j);

// Same group sum for the j-th vertex coordinate under an orientation.
VerificationReport check_coordinate_orbit_sum(const Orientation& a,
                                              const Triangulation& T, int j);

// The barycenter of the vertices over one full dihedral orbit equals
// ((n+1)/2, ..., (n+1)/2). Throws invalid_argument if the given members do
// not form a full orbit.
VerificationReport check_orbit_barycenter(const Orientation& a,
                                          const std::vector<Triangulation>& members,
                                          FaultInjector* inject = nullptr);

// Exhaustive families at one rank.
std::vector<VerificationReport> check_global_centroids(int n,
                                                       FaultInjector* inject = nullptr);
std::vector<VerificationReport> check_orbit_centroids(int n,
                                                      FaultInjector* inject = nullptr);
std::vector<VerificationReport> check_weight_orbit_sums(int n);
std::vector<VerificationReport> check_coordinate_orbit_sums(int n);
std::vector<VerificationReport> check_transport_identities(int n);
std::vector<VerificationReport> check_orbit_stabilizer(int n);
std::vector<VerificationReport> check_permutahedron_a(int n,
                                                      FaultInjector* inject = nullptr);
// The full type-B family at rank n: symmetric triangulation count and
// closure, symmetric orientation count, cyclohedron centroid per symmetric
// orientation, and the type-B permutahedron centroid (ambient dimension 2n).
std::vector<VerificationReport> check_type_b(int n, FaultInjector* inject = nullptr);

// Every family for 1 <= n <= max_n, plus the type-B families for ranks with
// 2n <= max_n. Report order is a fixed function of max_n regardless of jobs;
// passing an injector forces a serial run.
std::vector<VerificationReport> verify_all(int max_n, int jobs = 1,
                                           FaultInjector* inject = nullptr);

}  // namespace assoc
