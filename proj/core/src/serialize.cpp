#include "fromage/serialize.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace fromage {

namespace {

using Json = nlohmann::ordered_json;

Json disc_to_json(const Disc& d) {
  return Json{{"cx", d.center.real()}, {"cy", d.center.imag()}, {"r", d.radius}};
}

Disc disc_from_json(const Json& j) {
  if (!j.contains("cx") || !j.contains("cy") || !j.contains("r")) {
    throw SchemaError("disc record needs cx, cy, r");
  }
  return Disc(Complex(j.at("cx").get<double>(), j.at("cy").get<double>()),
              j.at("r").get<double>());
}

std::string coverage_name(Coverage c) {
  switch (c) {
    case Coverage::kSymbolic: return "symbolic";
    case Coverage::kPartial: return "partial";
    case Coverage::kFull: return "full";
  }
  return "symbolic";
}

Coverage coverage_from_name(const std::string& s) {
  if (s == "symbolic") return Coverage::kSymbolic;
  if (s == "partial") return Coverage::kPartial;
  if (s == "full") return Coverage::kFull;
  throw SchemaError("unknown coverage value: " + s);
}

Json level_to_json(const Level& lv) {
  return Json{{"n", lv.n},
              {"eta", lv.eta},
              {"log_eps", lv.eps.log()},
              {"log_sigma", lv.sigma.log()},
              {"budget", lv.budget},
              {"coverage", coverage_name(lv.coverage)}};
}

Level level_from_json(const Json& j) {
  Level lv;
  lv.n = j.at("n").get<int>();
  lv.eta = j.at("eta").get<double>();
  lv.eps = LogMag::from_log(j.at("log_eps").get<double>());
  lv.sigma = LogMag::from_log(j.at("log_sigma").get<double>());
  lv.budget = j.at("budget").get<double>();
  lv.coverage = coverage_from_name(j.at("coverage").get<std::string>());
  return lv;
}

Json unit_to_json(const LocalUnit& u) {
  Json rings = Json::array();
  for (const PoleRing& ring : u.family->rings) {
    rings.push_back(Json{{"n", ring.n},
                         {"N", ring.pole_count},
                         {"circle_radius", ring.circle_radius},
                         {"rho", ring.rho}});
  }
  return Json{{"a", Json{{"re", u.a.real()}, {"im", u.a.imag()}}},
              {"eps", u.eps},
              {"eta", u.eta},
              {"sigma", u.sigma},
              {"kappa", u.family->params.kappa},
              {"level", u.level},
              {"rings", std::move(rings)}};
}

LocalUnit unit_from_json(const Json& j) {
  const double eps = j.at("eps").get<double>();
  const double eta = j.at("eta").get<double>();
  const double sigma = j.at("sigma").get<double>();
  const double kappa = j.value("kappa", 1.0);
  const Json& rings = j.at("rings");
  if (!rings.is_array() || rings.empty()) throw SchemaError("unit needs a nonempty ring list");

  KornerParams params = KornerParams::with_eps(eps);
  params.kappa = kappa;
  params.n_max = rings.back().at("n").get<int>();
  KornerFamily family;
  try {
    family = build_family(params);
  } catch (const Error& err) {
    throw SchemaError(std::string("unit parameters rejected: ") + err.what());
  }
  if (family.rings.size() != rings.size()) {
    throw SchemaError("unit ring list inconsistent with eps/kappa");
  }
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const Json& rj = rings[i];
    const PoleRing& built = family.rings[i];
    if (rj.at("n").get<int>() != built.n ||
        rj.at("N").get<std::int64_t>() != built.pole_count ||
        rj.at("circle_radius").get<double>() != built.circle_radius ||
        rj.at("rho").get<double>() != built.rho) {
      throw SchemaError("unit ring record does not match the family it claims");
    }
  }

  const Json& aj = j.at("a");
  const Complex a(aj.at("re").get<double>(), aj.at("im").get<double>());
  LocalUnit unit = assemble_local_unit(
      std::make_shared<const KornerFamily>(std::move(family)), eta, a, sigma);
  unit.level = j.value("level", 1);
  return unit;
}

}  // namespace

std::string cheese_to_json(const Cheese& c, int indent) {
  Json doc;
  doc["version"] = kSchemaVersion;
  doc["outer"] = disc_to_json(c.outer);
  doc["levels"] = Json::array();
  for (const Level& lv : c.levels) doc["levels"].push_back(level_to_json(lv));
  doc["units"] = Json::array();
  for (const LocalUnit& u : c.units) doc["units"].push_back(unit_to_json(u));
  doc["extra_discs"] = Json::array();
  for (const Disc& d : c.extra_discs) doc["extra_discs"].push_back(disc_to_json(d));
  return doc.dump(indent) + "\n";
}

Cheese cheese_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw SchemaError(std::string("not valid JSON: ") + err.what());
  }
  try {
    if (!doc.contains("version")) throw SchemaError("missing schema version");
    if (doc.at("version").get<std::string>() != kSchemaVersion) {
      throw SchemaError("unsupported schema version " + doc.at("version").dump());
    }
    Cheese c;
    c.outer = disc_from_json(doc.at("outer"));
    for (const Json& j : doc.value("levels", Json::array())) {
      c.levels.push_back(level_from_json(j));
    }
    for (const Json& j : doc.value("units", Json::array())) {
      c.units.push_back(unit_from_json(j));
    }
    for (const Json& j : doc.value("extra_discs", Json::array())) {
      c.extra_discs.push_back(disc_from_json(j));
    }
    return c;
  } catch (const nlohmann::json::exception& err) {
    throw SchemaError(std::string("malformed cheese document: ") + err.what());
  }
}

void save_cheese(const Cheese& c, const std::string& path, int indent) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("save_cheese: cannot open " + path);
  out << cheese_to_json(c, indent);
}

Cheese load_cheese(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("load_cheese: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return cheese_from_json(buf.str());
}

std::string certificate_to_json(const Certificate& cert, int indent) {
  Json doc;
  doc["overall"] = cert.overall();
  doc["entries"] = Json::array();
  for (const CertEntry& e : cert.entries) {
    Json je{{"id", e.id},
            {"statement", e.statement},
            {"kind", to_string(e.kind)},
            {"demanded", e.demanded},
            {"observed", e.observed},
            {"pass", e.pass}};
    if (e.samples) {
      je["samples"] = Json{{"count", e.samples->count},
                           {"seed", e.samples->seed},
                           {"margin", e.samples->margin}};
    }
    if (e.worst_point) {
      je["worst_point"] = Json{{"re", e.worst_point->real()}, {"im", e.worst_point->imag()}};
    }
    if (!e.note.empty()) je["note"] = e.note;
    doc["entries"].push_back(std::move(je));
  }
  return doc.dump(indent) + "\n";
}

}  // namespace fromage
