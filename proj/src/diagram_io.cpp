#include "hardlink/diagram_io.hpp"

#include <json.hpp>

namespace hardlink {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatTag = "hardlink-diagram/1";

int encode_end(ArcEnd e) { return e.end == 1 ? e.arc + 1 : -(e.arc + 1); }

ArcEnd decode_end(int v, int num_arcs) {
    if (v == 0 || std::abs(v) > num_arcs)
        throw std::invalid_argument("diagram json: arc reference out of range");
    return {std::abs(v) - 1, v > 0 ? 1 : 0};
}

json points_json(const std::vector<PtD>& pts) {
    json arr = json::array();
    for (PtD p : pts) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

std::vector<PtD> points_from(const json& arr) {
    std::vector<PtD> out;
    for (const auto& p : arr) out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return out;
}

}  // namespace

std::string diagram_to_json(const LinkDiagram& d, const DiagramLayout* layout) {
    json j;
    j["format"] = kFormatTag;
    j["free_loops"] = d.free_loops;
    json crossings = json::array();
    for (const Crossing& x : d.crossings) {
        json slots = json::array();
        for (const ArcEnd& e : x.slot) slots.push_back(encode_end(e));
        crossings.push_back(slots);
    }
    j["crossings"] = std::move(crossings);
    json comps = json::array();
    {
        auto cycles = components(d);
        for (const auto& cyc : cycles) comps.push_back(cyc);
    }
    j["components"] = std::move(comps);
    json roles = json::array();
    for (const Role& r : d.role_of) roles.push_back(r.str());
    j["roles"] = std::move(roles);
    if (layout) {
        json l;
        json arcs = json::array();
        for (const auto& p : layout->arc_path) arcs.push_back(points_json(p));
        l["arcs"] = std::move(arcs);
        json loops = json::array();
        for (const auto& [comp, p] : layout->loop_path)
            loops.push_back(json::array({comp, points_json(p)}));
        l["loops"] = std::move(loops);
        l["crossings"] = points_json(layout->crossing_pos);
        l["stroke"] = layout->stroke;
        l["under_gap"] = layout->under_gap;
        j["layout"] = std::move(l);
    }
    return j.dump(1) + "\n";
}

ParsedDiagram diagram_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("diagram json: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kFormatTag)
            throw std::invalid_argument("diagram json: unknown format tag");
        ParsedDiagram out;
        LinkDiagram& d = out.diagram;
        d.free_loops = j.at("free_loops").get<int>();
        const json& comps = j.at("components");
        d.num_components = int(comps.size());
        int num_arcs = 0;
        for (const auto& cyc : comps) num_arcs += int(cyc.size());
        d.num_arcs = num_arcs;
        d.component_of.assign(size_t(num_arcs), -1);
        for (int c = 0; c < int(comps.size()); ++c)
            for (const auto& a : comps[size_t(c)]) {
                int arc = a.get<int>();
                if (arc < 0 || arc >= num_arcs)
                    throw std::invalid_argument("diagram json: component arc out of range");
                if (d.component_of[size_t(arc)] != -1)
                    throw std::invalid_argument("diagram json: arc in two components");
                d.component_of[size_t(arc)] = c;
            }
        for (const auto& slots : j.at("crossings")) {
            if (slots.size() != 4)
                throw std::invalid_argument("diagram json: crossing needs four slots");
            Crossing x;
            for (int s = 0; s < 4; ++s) x.slot[size_t(s)] = decode_end(slots[size_t(s)].get<int>(), num_arcs);
            d.crossings.push_back(x);
        }
        for (const auto& r : j.at("roles")) d.role_of.push_back(Role::parse(r.get<std::string>()));
        if (int(d.role_of.size()) != d.num_components)
            throw std::invalid_argument("diagram json: one role per component required");

        if (j.count("layout")) {
            const json& l = j.at("layout");
            DiagramLayout lay;
            for (const auto& p : l.at("arcs")) lay.arc_path.push_back(points_from(p));
            for (const auto& entry : l.at("loops"))
                lay.loop_path[entry.at(0).get<int>()] = points_from(entry.at(1));
            lay.crossing_pos = points_from(l.at("crossings"));
            lay.stroke = l.at("stroke").get<double>();
            lay.under_gap = l.at("under_gap").get<double>();
            out.layout = std::move(lay);
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("diagram json: ") + e.what());
    }
}

}  // namespace hardlink
