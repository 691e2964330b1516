#include "ildkit/report.hpp"

namespace ildkit {

void to_json(nlohmann::json& j, const Provenance& p) {
  j = nlohmann::json{
      {"tool", p.tool}, {"version", p.version}, {"runtime_ms", p.runtime_ms}};
}

void from_json(const nlohmann::json& j, Provenance& p) {
  j.at("tool").get_to(p.tool);
  j.at("version").get_to(p.version);
  j.at("runtime_ms").get_to(p.runtime_ms);
}

void to_json(nlohmann::json& j, const ReportDocument& d) {
  j = nlohmann::json{{"operation", d.operation},
                     {"input", d.input},
                     {"result", d.result},
                     {"provenance", d.provenance}};
}

void from_json(const nlohmann::json& j, ReportDocument& d) {
  j.at("operation").get_to(d.operation);
  d.input = j.at("input");
  d.result = j.at("result");
  j.at("provenance").get_to(d.provenance);
}

nlohmann::json set_to_json(VertexSet s) { return s.labels(); }

nlohmann::json report_to_json(const ParameterReport& r) {
  nlohmann::json j;
  j["gamma"] = r.gamma;
  j["iota"] = r.iota;
  j["gamma_l"] = r.gamma_l;
  j["iota_l"] = r.iota_l ? nlohmann::json(*r.iota_l) : nlohmann::json();
  j["alpha"] = r.alpha;
  j["ild_graph"] = r.ild_graph();
  nlohmann::json w;
  w["gamma"] = set_to_json(r.gamma_witness);
  w["iota"] = set_to_json(r.iota_witness);
  w["gamma_l"] = set_to_json(r.gamma_l_witness);
  w["iota_l"] = r.iota_l_witness ? set_to_json(*r.iota_l_witness)
                                 : nlohmann::json();
  w["alpha"] = set_to_json(r.alpha_witness);
  j["witnesses"] = w;
  return j;
}

}  // namespace ildkit
