#include "frc/json_io.hpp"

#include "frc/error.hpp"

namespace frc {

namespace {

template <typename T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParameterError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("field \"") + key + "\": " + e.what());
    }
}

} // namespace

Json code_to_json(const FrCode& code)
{
    return Json{{"n", code.n()}, {"d", code.d()}, {"rho", code.rho()}, {"theta", code.theta()}, {"nodes", code.nodes()}};
}

FrCode code_from_json(const Json& j)
{
    CodeParams p{field<int>(j, "n"), field<int>(j, "d"), field<int>(j, "rho"), field<int>(j, "theta")};
    return FrCode(p, field<std::vector<NodeSet>>(j, "nodes"));
}

Json steiner_to_json(const SteinerSystem& sys)
{
    return Json{{"t", sys.t}, {"alpha", sys.alpha}, {"v", sys.v}, {"blocks", sys.blocks}};
}

SteinerSystem steiner_from_json(const Json& j)
{
    return SteinerSystem{field<int>(j, "t"), field<int>(j, "alpha"), field<int>(j, "v"),
                         field<std::vector<Block>>(j, "blocks")};
}

Json capacity_report_to_json(const CapacityReport& report)
{
    Json j{{"n", report.params.n},       {"k", report.params.k},
           {"d", report.params.d},       {"rho", report.params.rho},
           {"averaging", report.averaging}, {"recursive", report.recursive}};
    if (report.best_known)
        j["best_known"] = {{"value", report.best_known->value}, {"witness", report.best_known->code.nodes()}};
    if (report.search) {
        Json s{{"exact", report.search->exact}, {"value", report.search->value}};
        s["witness"] = report.search->witness ? Json(report.search->witness->nodes()) : Json(nullptr);
        s["nodes_visited"] = report.search->nodes_visited;
        j["search"] = std::move(s);
    }
    return j;
}

std::vector<ScenarioEvent> script_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParameterError("scenario script must be a JSON array");
    std::vector<ScenarioEvent> script;
    for (const auto& item : j) {
        const auto op = field<std::string>(item, "op");
        ScenarioEvent ev;
        if (op == "fail")
            ev.op = EventKind::fail;
        else if (op == "repair")
            ev.op = EventKind::repair;
        else if (op == "read")
            ev.op = EventKind::read;
        else
            throw ParameterError("unknown scenario op \"" + op + "\"");
        if (ev.op != EventKind::repair)
            ev.nodes = field<std::vector<NodeId>>(item, "nodes");
        script.push_back(std::move(ev));
    }
    return script;
}

Json script_to_json(const std::vector<ScenarioEvent>& script)
{
    Json out = Json::array();
    for (const auto& ev : script) {
        Json e{{"op", to_string(ev.op)}};
        if (ev.op != EventKind::repair)
            e["nodes"] = ev.nodes;
        out.push_back(std::move(e));
    }
    return out;
}

Json scenario_report_to_json(const ScenarioReport& report)
{
    Json events = Json::array();
    for (const auto& ev : report.events) {
        Json e{{"index", ev.index}, {"op", to_string(ev.op)}, {"nodes", ev.nodes}, {"transferred", ev.packets_transferred}};
        if (ev.op == EventKind::repair)
            e["per_node_downloads"] = ev.per_node_downloads;
        if (ev.read_ok) {
            e["read_ok"] = *ev.read_ok;
            e["distinct_packets"] = ev.distinct_packets;
        }
        events.push_back(std::move(e));
    }
    return Json{{"events", std::move(events)},
                {"total_transferred", report.total_transferred},
                {"reads", report.reads},
                {"reads_ok", report.reads_ok},
                {"integrity_ok", report.integrity_ok},
                {"violations", report.violations}};
}

Json packet_header_to_json(const PacketHeader& h)
{
    return Json{{"index", h.index}, {"m", h.m}, {"theta", h.theta}, {"packet_len", h.packet_len}};
}

PacketHeader packet_header_from_json(const Json& j)
{
    return PacketHeader{field<int>(j, "index"), field<int>(j, "m"), field<int>(j, "theta"),
                        field<std::size_t>(j, "packet_len")};
}

} // namespace frc
