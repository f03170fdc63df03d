#include "assoc/cli.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assoc/centroid.hpp"
#include "assoc/dihedral.hpp"
#include "assoc/orientation.hpp"
#include "assoc/output.hpp"
#include "assoc/realization.hpp"
#include "assoc/triangulation.hpp"
#include "assoc/type_b.hpp"
#include "assoc/verify.hpp"

namespace assoc {

namespace {

void print_point(std::ostream& out, const LatticePoint& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p[i];
  }
  out << '\n';
}

void print_point(std::ostream& out, const RationalPoint& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p[i].str();
  }
  out << '\n';
}

// Shared by `vertices` and `barycenter`: the vertex list selected by
// --n/--up/--type, validating the type-b constraints.
std::vector<LatticePoint> selected_vertices(int n, const std::vector<int>& up,
                                            const std::string& type) {
  Orientation a(n, up);
  if (type == "b") {
    if (n % 2 != 0)
      throw std::invalid_argument("--type b requires an even --n (rank 2n)");
    if (!is_symmetric_orientation(a))
      throw std::invalid_argument("--type b requires a symmetric orientation, got up=" +
                                  a.up_str());
    return cyclohedron_vertices(a);
  }
  return associahedron_vertices(a);
}

std::vector<OrbitRecord> orbit_records(const Orientation& a,
                                       const std::vector<Triangulation>& all) {
  std::vector<OrbitRecord> records;
  for (auto& members : orbit_partition(all)) {
    OrbitRecord rec;
    rec.stabilizer_order = static_cast<int>(stabilizer(members.front()).size());
    std::vector<LatticePoint> points;
    points.reserve(members.size());
    for (const Triangulation& T : members) points.push_back(hl_vertex(a, T));
    rec.centroid = barycenter(points);
    rec.members = std::move(members);
    records.push_back(std::move(rec));
  }
  return records;
}

int run_verify(std::ostream& out, int max_n, int jobs, long long inject_at) {
  FaultInjector injector(inject_at);
  const auto reports =
      verify_all(max_n, jobs, inject_at >= 0 ? &injector : nullptr);
  size_t i = 0;
  long long failures = 0;
  while (i < reports.size()) {
    size_t k = i;
    while (k < reports.size() && reports[k].check == reports[i].check &&
           reports[k].n == reports[i].n)
      ++k;
    bool ok = true;
    for (size_t r = i; r < k; ++r) ok = ok && reports[r].passed;
    if (ok) {
      out << "PASS " << reports[i].check << " n=" << reports[i].n << " (" << (k - i)
          << (k - i == 1 ? " check)" : " checks)") << '\n';
    } else {
      for (size_t r = i; r < k; ++r)
        if (!reports[r].passed) {
          out << "FAIL " << reports[r].check << " n=" << reports[r].n << " "
              << reports[r].witness << '\n';
          ++failures;
        }
    }
    i = k;
  }
  if (failures)
    out << failures << " of " << reports.size() << " checks failed\n";
  else
    out << "all " << reports.size() << " checks passed\n";
  return failures ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact vertex sets, dihedral orbits, and rational barycenters of "
               "permutahedra, associahedra, and cyclohedra"};
  app.name("assoc");
  app.require_subcommand(1);

  int n = 1;
  int max_n = 1;
  int jobs = 1;
  long long inject_at = -1;
  std::vector<int> up;
  std::string type = "a";
  std::string kind;
  std::string format;
  std::string out_path;
  bool symmetric = false;
  bool with_orbits = false;

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "List triangulations, one diagonal list per line");
  cmd_enumerate->add_option("--n", n, "Rank: polygon has n+2 vertices")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_enumerate->add_flag("--symmetric", symmetric,
                          "Only centrally symmetric triangulations (even n)");

  auto* cmd_vertices =
      app.add_subcommand("vertices", "Print vertex coordinates, one vertex per line");
  cmd_vertices->add_option("--n", n, "Rank: ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_vertices->add_option("--up", up, "Up elements, e.g. 2,4 (omitted: canonical)")
      ->delimiter(',');
  cmd_vertices->add_option("--type", type, "a: associahedron, b: cyclohedron")
      ->check(CLI::IsMember({"a", "b"}));

  auto* cmd_orbits = app.add_subcommand(
      "orbits", "Orbit decomposition with sizes, stabilizer orders, and centroids");
  cmd_orbits->add_option("--n", n, "Rank: ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_orbits->add_option("--up", up, "Up elements, e.g. 2,4 (omitted: canonical)")
      ->delimiter(',');

  auto* cmd_barycenter =
      app.add_subcommand("barycenter", "Exact vertex barycenter as p/q per coordinate");
  cmd_barycenter->add_option("--n", n, "Rank: ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_barycenter->add_option("--up", up, "Up elements, e.g. 2,4 (omitted: canonical)")
      ->delimiter(',');
  cmd_barycenter->add_option("--type", type, "a: associahedron, b: cyclohedron")
      ->check(CLI::IsMember({"a", "b"}));

  auto* cmd_verify =
      app.add_subcommand("verify", "Run every identity check up to a rank bound");
  cmd_verify->add_option("--max-n", max_n, "Largest rank to sweep")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--jobs", jobs, "Worker thread cap")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--inject-fault", inject_at,
                         "Testing hook: +1 on the given running coordinate index");

  auto* cmd_export = app.add_subcommand("export", "Write vertices and centroid to a file");
  cmd_export->add_option("--n", n, "Rank: ambient dimension (2x rank for type-B kinds)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* up_opt =
      cmd_export->add_option("--up", up, "Up elements (associahedron/cyclohedron only)")
          ->delimiter(',');
  cmd_export->add_option("--kind", kind, "Polytope family")
      ->required()
      ->check(CLI::IsMember(
          {"associahedron", "cyclohedron", "permutahedron-a", "permutahedron-b"}));
  cmd_export->add_option("--format", format, "Serialization format")
      ->required()
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_export->add_option("--out", out_path, "Output file path")->required();
  cmd_export->add_flag("--orbits", with_orbits,
                       "Include the orbit decomposition (json only)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_enumerate) {
      if (symmetric && n % 2 != 0) {
        err << "error: --symmetric requires an even --n (rank 2n)\n";
        return 2;
      }
      const auto list = symmetric ? enumerate_symmetric_triangulations(n / 2)
                                  : enumerate_triangulations(n);
      for (const Triangulation& T : list) out << T.str() << '\n';
      return 0;
    }

    if (*cmd_vertices) {
      for (const LatticePoint& p : selected_vertices(n, up, type))
        print_point(out, p);
      return 0;
    }

    if (*cmd_orbits) {
      const Orientation a(n, up);
      const auto records = orbit_records(a, enumerate_triangulations(n));
      for (size_t i = 0; i < records.size(); ++i) {
        out << "orbit " << (i + 1) << ": size " << records[i].members.size()
            << " stabilizer " << records[i].stabilizer_order << " centroid";
        for (const Rational& c : records[i].centroid) out << ' ' << c.str();
        out << '\n';
        for (const Triangulation& T : records[i].members)
          out << "  " << T.str() << '\n';
      }
      return 0;
    }

    if (*cmd_barycenter) {
      print_point(out, barycenter(selected_vertices(n, up, type)));
      return 0;
    }

    if (*cmd_verify) return run_verify(out, max_n, jobs, inject_at);

    if (*cmd_export) {
      OutputDocument doc;
      doc.kind = kind;
      if (with_orbits && format == "csv")
        throw std::invalid_argument("--orbits requires --format json");
      if (kind == "permutahedron-a" || kind == "permutahedron-b") {
        if (up_opt->count() > 0)
          throw std::invalid_argument("--up does not apply to kind " + kind);
        if (with_orbits)
          throw std::invalid_argument("--orbits does not apply to kind " + kind);
      }
      if (kind == "associahedron") {
        const Orientation a(n, up);
        doc.n = n;
        doc.up = a.up();
        doc.vertices = associahedron_vertices(a);
        if (with_orbits) doc.orbits = orbit_records(a, enumerate_triangulations(n));
      } else if (kind == "cyclohedron") {
        if (n % 2 != 0)
          throw std::invalid_argument("kind cyclohedron requires an even --n (rank 2n)");
        const Orientation a(n, up);
        if (!is_symmetric_orientation(a))
          throw std::invalid_argument(
              "kind cyclohedron requires a symmetric orientation, got up=" + a.up_str());
        doc.n = n / 2;
        doc.up = a.up();
        doc.vertices = cyclohedron_vertices(a);
        if (with_orbits)
          doc.orbits = orbit_records(a, enumerate_symmetric_triangulations(n / 2));
      } else if (kind == "permutahedron-a") {
        doc.n = n;
        doc.vertices = permutahedron_vertices(n);
      } else {
        if (n % 2 != 0)
          throw std::invalid_argument(
              "kind permutahedron-b requires an even --n (dimension 2n)");
        doc.n = n / 2;
        doc.vertices = permutahedron_b_vertices(n / 2);
      }
      doc.centroid = barycenter(doc.vertices);

      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file " + out_path);
      file << (format == "json" ? to_json(doc) : to_csv(doc));
      if (!file.good())
        throw std::invalid_argument("write failed for output file " + out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace assoc
