#include "assoc/output.hpp"

#include "json.hpp"

namespace assoc {

namespace {

nlohmann::ordered_json rational_array(const RationalPoint& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const Rational& r : p) arr.push_back(r.str());
  return arr;
}

}  // namespace

std::string to_json(const OutputDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["kind"] = doc.kind;
  if (doc.up)
    j["up"] = *doc.up;
  else
    j["up"] = nullptr;
  j["vertices"] = doc.vertices;
  j["centroid"] = rational_array(doc.centroid);
  if (doc.orbits) {
    auto arr = nlohmann::ordered_json::array();
    for (const OrbitRecord& o : *doc.orbits) {
      auto members = nlohmann::ordered_json::array();
      for (const Triangulation& T : o.members) {
        auto diagonals = nlohmann::ordered_json::array();
        for (const Diagonal& d : T.diagonals())
          diagonals.push_back(nlohmann::ordered_json::array({d.a, d.b}));
        members.push_back(std::move(diagonals));
      }
      nlohmann::ordered_json rec;
      rec["members"] = std::move(members);
      rec["stabilizer_order"] = o.stabilizer_order;
      rec["centroid"] = rational_array(o.centroid);
      arr.push_back(std::move(rec));
    }
    j["orbits"] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const OutputDocument& doc) {
  const size_t dim =
      doc.vertices.empty() ? doc.centroid.size() : doc.vertices.front().size();
  std::string s;
  for (size_t i = 1; i <= dim; ++i) {
    if (i > 1) s += ",";
    s += "x" + std::to_string(i);
  }
  s += "\n";
  for (const LatticePoint& p : doc.vertices) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    s += "\n";
  }
  return s;
}

}  // namespace assoc
