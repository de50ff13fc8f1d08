#include "cremona/io.hpp"

#include <fstream>

namespace cremona {

namespace {

PointId resolve(const Configuration& config, const std::string& name) {
  auto id = config.find_point(name);
  if (!id) throw Error(ErrorCode::SchemaError, "unknown point id '" + name + "'");
  return *id;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(ErrorCode::SchemaError, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Configuration config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "configuration must be an object");
  Configuration config;
  for (const Json& pt : field(j, "points")) {
    std::string name = field(pt, "id").get<std::string>();
    std::vector<PointId> parents;
    if (pt.contains("parents"))
      for (const Json& parent : pt["parents"])
        parents.push_back(resolve(config, parent.get<std::string>()));
    config.add_point_named(name, parents);
  }
  if (j.contains("curves")) {
    for (const Json& cv : j["curves"]) {
      int degree = field(cv, "degree").get<int>();
      std::map<PointId, int> mults;
      for (const auto& [name, value] : field(cv, "mults").items())
        mults[resolve(config, name)] = value.get<int>();
      config.declare_curve(degree, mults);
    }
  }
  return config;
}

Json config_to_json(const Configuration& config) {
  Json points = Json::array();
  for (std::uint32_t i = 0; i < config.point_count(); ++i) {
    PointId p{i};
    Json parents = Json::array();
    for (PointId parent : config.parents(p)) parents.push_back(config.name(parent));
    points.push_back({{"id", config.name(p)}, {"parents", parents}});
  }
  Json curves = Json::array();
  for (std::size_t ci = 0; ci < config.curve_count(); ++ci) {
    const CurveRecord& c = config.curve(ci);
    Json mults = Json::object();
    for (const auto& [p, m] : c.mults) mults[config.name(p)] = m;
    curves.push_back({{"degree", c.degree}, {"mults", mults}});
  }
  return Json{{"points", points}, {"curves", curves}};
}

PMClass class_from_json(const Json& j, const Configuration& config) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "class must be an object");
  PMClass c{rat_from_string(field(j, "degree").get<std::string>())};
  if (j.contains("mults"))
    for (const auto& [name, value] : j["mults"].items())
      c.set_mult(resolve(config, name), rat_from_string(value.get<std::string>()));
  return c;
}

Json class_to_json(const PMClass& c, const Configuration& config) {
  Json mults = Json::object();
  for (const auto& [p, v] : c.mults()) mults[config.name(p)] = rat_to_string(v);
  return Json{{"degree", rat_to_string(c.degree())}, {"mults", mults}};
}

CharMatrix matrix_from_json(const Json& j, const Configuration& config) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaError, "matrix must be an object");
  CharMatrix M;
  M.d = field(j, "d").get<std::int64_t>();
  for (const Json& name : field(j, "base")) M.base_pts.push_back(resolve(config, name.get<std::string>()));
  for (const Json& v : field(j, "m")) M.m.push_back(v.get<std::int64_t>());
  for (const Json& name : field(j, "inv_base"))
    M.inv_base_pts.push_back(resolve(config, name.get<std::string>()));
  for (const Json& v : field(j, "m_prime")) M.m_prime.push_back(v.get<std::int64_t>());
  for (const Json& row : field(j, "A")) {
    std::vector<std::int64_t> r;
    for (const Json& v : row) r.push_back(v.get<std::int64_t>());
    M.a.push_back(std::move(r));
  }
  if (j.contains("pushforward"))
    for (const auto& [from, to] : j["pushforward"].items())
      M.pushforward[resolve(config, from)] = resolve(config, to.get<std::string>());
  if (M.m.size() != M.base_pts.size() || M.m_prime.size() != M.inv_base_pts.size() ||
      M.a.size() != M.base_pts.size())
    throw Error(ErrorCode::SchemaError, "matrix fields have inconsistent sizes");
  return M;
}

Json matrix_to_json(const CharMatrix& M, const Configuration& config) {
  Json base = Json::array(), inv = Json::array();
  for (PointId p : M.base_pts) base.push_back(config.name(p));
  for (PointId q : M.inv_base_pts) inv.push_back(config.name(q));
  Json push = Json::object();
  for (const auto& [x, y] : M.pushforward) push[config.name(x)] = config.name(y);
  return Json{{"d", M.d},        {"base", base},       {"m", M.m},
              {"inv_base", inv}, {"m_prime", M.m_prime}, {"A", M.a},
              {"pushforward", push}};
}

Json membership_report_to_json(const MembershipReport& report, const Configuration& config) {
  Json j{{"verdict", report.verdict}};
  if (!report.verdict) {
    j["violated"] = condition_tag_name(report.violated);
    j["slack"] = rat_to_string(report.slack);
    if (report.witness_point) j["witness_point"] = config.name(*report.witness_point);
    if (report.witness_curve) j["witness_curve"] = *report.witness_curve;
    if (!report.witness_set.empty()) {
      Json pts = Json::array();
      for (PointId p : report.witness_set) pts.push_back(config.name(p));
      j["witness_set"] = pts;
    }
  }
  return j;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"all_pass", report.all_pass()}, {"checks", checks}};
}

Json trace_to_json(const ReductionTrace& trace, const Configuration& config) {
  Json steps = Json::array();
  for (const ReductionStep& step : trace.steps)
    steps.push_back({{"germ", matrix_to_json(step.germ, config)},
                     {"value", rat_to_string(step.value)}});
  return Json{{"steps", steps},
              {"terminal", class_to_json(trace.terminal, config)},
              {"terminal_report", membership_report_to_json(trace.terminal_report, config)}};
}

Json germs_to_json(const std::vector<GermDescriptor>& germs, const Configuration& config) {
  Json out = Json::array();
  for (const GermDescriptor& g : germs) out.push_back(g.label(config));
  return out;
}

Json samples_to_json(const std::vector<SampleReport>& samples, const Configuration& config) {
  Json out = Json::array();
  for (const SampleReport& s : samples) {
    Json word = Json::array();
    for (const ReductionStep& step : s.word)
      word.push_back({{"d", step.germ.d}, {"value", rat_to_string(step.value)}});
    out.push_back({{"t", rat_to_string(s.parameter)},
                   {"word", word},
                   {"owning", germs_to_json(s.owning, config)},
                   {"signature", region_signature(s, config)}});
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, "while parsing '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace cremona
