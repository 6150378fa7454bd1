#include "gre/engine/report.hpp"

#include <json.hpp>

namespace gre {

std::string report_to_json_line(const SuperstepReport& report) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : report.partitions) {
    parts.push_back({{"scatters", p.scatters},
                     {"combines", p.combines},
                     {"applies", p.applies},
                     {"buffers_sent", p.buffers_sent},
                     {"messages_sent", p.messages_sent},
                     {"messages_received", p.messages_received}});
  }
  const auto t = report.totals();
  nlohmann::json j{{"superstep", report.superstep},
                   {"active_scatter", report.active_scatter},
                   {"messages_sent", t.messages_sent},
                   {"messages_received", t.messages_received},
                   {"partitions", std::move(parts)}};
  return j.dump();
}

}  // namespace gre
