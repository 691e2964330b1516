#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "ildkit/exact.hpp"
#include "ildkit/graph.hpp"

namespace ildkit {

inline constexpr const char* tool_name = "ildkit";
inline constexpr const char* tool_version = "0.1.0";

struct Provenance {
  std::string tool = tool_name;
  std::string version = tool_version;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// One machine-readable result line: what ran, on what, what came out.
// Round-trips losslessly through its JSON form.
struct ReportDocument {
  std::string operation;
  nlohmann::json input;   // source descriptor (file/stdin/family spec), graph6
  nlohmann::json result;
  Provenance provenance;

  friend bool operator==(const ReportDocument&, const ReportDocument&) =
      default;
};

void to_json(nlohmann::json& j, const Provenance& p);
void from_json(const nlohmann::json& j, Provenance& p);
void to_json(nlohmann::json& j, const ReportDocument& d);
void from_json(const nlohmann::json& j, ReportDocument& d);

nlohmann::json set_to_json(VertexSet s);             // 1-based label array
nlohmann::json report_to_json(const ParameterReport& r);

}  // namespace ildkit
