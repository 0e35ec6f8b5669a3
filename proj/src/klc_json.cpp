#include "kelc/klc_json.hpp"

#include <json.hpp>

namespace kelc {

std::string trace_to_json(const KlcTrace& trace, int indent) {
    nlohmann::ordered_json doc;
    doc["schema"] = "klc-trace/1";
    doc["levels"] = nlohmann::ordered_json::array();
    for (const auto& lvl : trace.levels) {
        nlohmann::ordered_json j;
        j["level"] = lvl.level;
        j["l"] = lvl.l;
        j["T_B"] = lvl.t_b;
        if (lvl.t_c) j["T_C"] = *lvl.t_c;
        if (lvl.t_d) j["T_D"] = *lvl.t_d;
        j["branch"] = to_string(lvl.branch);
        j["c_increment"] = lvl.c_increment;
        doc["levels"].push_back(std::move(j));
    }
    doc["final"] = {{"rule", to_string(trace.rule)}, {"c_final", trace.c_final}};
    return doc.dump(indent);
}

}  // namespace kelc
