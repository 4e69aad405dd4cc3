#include "shadowpi/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "shadowpi/error.hpp"

namespace shadowpi {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad integer '" + j.get<std::string>() + "'");
    }
    return z;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

void expect_schema(const json& j, const std::string& schema) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  if (!j.contains("schema") || j["schema"] != schema) {
    throw Error(ErrorCode::SchemaMismatch, "expected schema '" + schema + "'",
                {{"expected", schema}, {"got", j.value("schema", json())}});
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json rational_to_json(const mpq_class& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return mpq_class(integer_from_json(j));
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "rational must be [num, den]: " + j.dump());
  const mpz_class num = integer_from_json(j[0]);
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

json point_to_json(const Point& p) { return json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "point must be [x, y]: " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json divide_input_to_json(const DivideInput& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(point_to_json(p));
    comps.push_back({{"closed", c.closed}, {"points", pts}});
  }
  return {{"schema", "divide/1"}, {"components", comps}};
}

DivideInput divide_input_from_json(const json& j) {
  expect_schema(j, "divide/1");
  DivideInput d;
  for (const auto& c : field<json>(j, "components")) {
    DivideInput::Component comp;
    comp.closed = c.value("closed", false);
    for (const auto& p : field<json>(c, "points")) comp.points.push_back(point_from_json(p));
    d.components.push_back(std::move(comp));
  }
  return d;
}

json arrangement_to_json(const LineArrangement& a) {
  json lines = json::array();
  for (const auto& l : a.lines) {
    lines.push_back({rational_to_json(l[0]), rational_to_json(l[1]), rational_to_json(l[2])});
  }
  return {{"schema", "arrangement/1"}, {"lines", lines}};
}

LineArrangement arrangement_from_json(const json& j) {
  expect_schema(j, "arrangement/1");
  LineArrangement a;
  for (const auto& l : field<json>(j, "lines")) {
    if (!l.is_array() || l.size() != 3) throw Error(ErrorCode::ParseError, "line must be [a, b, c]");
    a.lines.push_back({rational_from_json(l[0]), rational_from_json(l[1]), rational_from_json(l[2])});
  }
  return a;
}

json shadow_to_json(const ShadowedPolyhedron& s) {
  const DiskMap& map = s.map();
  const CrossingTable t = map.table();
  json regions = json::array();
  for (const Region& r : map.regions()) {
    json entry = {{"id", r.id}, {"dart", r.boundary.front()}, {"twice_gleam", s.twice_gleam[r.id]}};
    if (s.labels) entry["label"] = std::string(to_string((*s.labels)[r.id]));
    regions.push_back(entry);
  }
  json out = {{"schema", "shadow/1"},
              {"crossings", t.crossings},
              {"edges", t.edges},
              {"outer_dart", t.outer_dart},
              {"over", s.diagram.over_parities()},
              {"forward_darts", s.diagram.forward_darts()},
              {"regions", regions}};
  if (!s.provenance.is_null()) out["provenance"] = s.provenance;
  return out;
}

ShadowedPolyhedron shadow_from_json(const json& j) {
  expect_schema(j, "shadow/1");
  CrossingTable t;
  t.crossings = field<std::vector<std::vector<DartId>>>(j, "crossings");
  t.edges = field<std::vector<std::array<DartId, 2>>>(j, "edges");
  t.outer_dart = field<DartId>(j, "outer_dart");
  DiskMap map = DiskMap::build(t);
  const auto over = field<std::vector<int>>(j, "over");
  const auto forward = j.contains("forward_darts") ? field<std::vector<DartId>>(j, "forward_darts")
                                                   : std::vector<DartId>{};
  const int nr = map.num_regions();
  std::vector<int> gleam(nr, 0);
  std::vector<char> has_gleam(nr, 0);
  std::vector<RegionLabel> labels(nr, RegionLabel::Chamber);
  int labelled = 0;
  for (const auto& r : field<json>(j, "regions")) {
    const RegionId id = map.left_region(field<DartId>(r, "dart"));
    if (r.contains("id") && r["id"] != id) {
      throw Error(ErrorCode::ParseError, "region id does not match its dart", {{"region", r["id"]}});
    }
    gleam[id] = field<int>(r, "twice_gleam");
    has_gleam[id] = 1;
    if (r.contains("label")) {
      labels[id] = label_from_string(field<std::string>(r, "label"));
      ++labelled;
    }
  }
  for (RegionId r : map.internal_regions()) {
    if (!has_gleam[r]) throw Error(ErrorCode::ParseError, "region " + std::to_string(r) + " has no gleam", {{"region", r}});
  }
  std::optional<std::vector<RegionLabel>> label_opt;
  if (labelled > 0) {
    if (labelled != nr) throw Error(ErrorCode::ParseError, "labels must cover every region or none");
    int outers = 0;
    for (RegionId r = 0; r < nr; ++r) outers += labels[r] == RegionLabel::Outer;
    if (outers != 1 || labels[map.outer_region()] != RegionLabel::Outer) {
      throw Error(ErrorCode::ParseError, "labels must mark exactly the outer region as outer");
    }
    label_opt = labels;
  }
  gleam[map.outer_region()] = 0;
  LinkDiagram diagram(std::move(map), over, forward);
  return {std::move(diagram), std::move(gleam), std::move(label_opt), j.value("provenance", json())};
}

json cutting_to_json(const DiskMap& map, const CuttingSystem& cs) {
  json parents = json::array();
  for (const auto& [r, e] : to_entries(map, cs)) parents.push_back({{"region", r}, {"edge", e}});
  return {{"schema", "cutting/1"}, {"parents", parents}};
}

CuttingSystem cutting_from_json(const DiskMap& map, const json& j) {
  expect_schema(j, "cutting/1");
  CutEntries entries;
  for (const auto& p : field<json>(j, "parents")) {
    entries.emplace_back(field<RegionId>(p, "region"), field<EdgeId>(p, "edge"));
  }
  return make_cut(map, entries);
}

json presentation_to_json(const Presentation& p) {
  json rel = json::array();
  for (const Word& w : p.relators) rel.push_back(p.format(w));
  return {{"schema", "presentation/1"}, {"generators", p.generators}, {"relators", rel}};
}

Presentation presentation_from_json(const json& j) {
  expect_schema(j, "presentation/1");
  Presentation p;
  p.generators = field<std::vector<std::string>>(j, "generators");
  for (const auto& r : field<std::vector<std::string>>(j, "relators")) p.relators.push_back(p.parse(r));
  return p;
}

json abelian_to_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& d : a.torsion) torsion.push_back(integer_to_json(d));
  return {{"rank", a.rank}, {"torsion", torsion}};
}

json fingerprint_to_json(const Fingerprint& f) {
  json homs = json::object();
  for (const auto& [name, count] : f.homs) homs[name] = count;
  return {{"abelianization", abelian_to_json(f.abelian)}, {"homs", homs}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'", {{"path", path}});
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what(), {{"path", path}});
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'", {{"path", path}});
  out << text;
}

}  // namespace shadowpi
