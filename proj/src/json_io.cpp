#include "cyclecover/json_io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "cyclecover/errors.hpp"

namespace cyclecover {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kDocumentVersion = 1;

ordered_json parse_or_throw(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw MalformedDocument("input is not valid JSON");
    return doc;
}

void require_version(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("version") ||
        !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != kDocumentVersion) {
        throw MalformedDocument("missing or unsupported document version");
    }
}

VertexId read_id(const ordered_json& j, const char* where) {
    if (!j.is_number_integer()) {
        throw MalformedDocument(std::string(where) + ": vertex id is not an integer");
    }
    long long v = j.get<long long>();
    if (v < 0 || v > 1000000) {
        throw MalformedDocument(std::string(where) + ": vertex id out of range");
    }
    return static_cast<VertexId>(v);
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string instance_to_json(const Instance& inst) {
    ordered_json doc;
    doc["version"] = kDocumentVersion;
    doc["host"] = inst.host.order();
    doc["bridges"] = ordered_json::array();
    for (const BridgeTree& b : inst.bridges) {
        ordered_json jb;
        jb["edges"] = ordered_json::array();
        for (const EdgePair& e : b.edges) {
            jb["edges"].push_back({e.first, e.second});
        }
        jb["attachments"] = b.attachments;
        doc["bridges"].push_back(std::move(jb));
    }
    return finish(doc);
}

Instance instance_from_json(const std::string& text) {
    ordered_json doc = parse_or_throw(text);
    require_version(doc);
    if (!doc.contains("host") || !doc["host"].is_array()) {
        throw MalformedDocument("missing host vertex list");
    }
    std::vector<VertexId> order;
    for (const auto& j : doc["host"]) order.push_back(read_id(j, "host"));

    if (!doc.contains("bridges") || !doc["bridges"].is_array()) {
        throw MalformedDocument("missing bridge list");
    }
    std::vector<BridgeTree> bridges;
    for (const auto& jb : doc["bridges"]) {
        if (!jb.is_object() || !jb.contains("edges") || !jb["edges"].is_array() ||
            !jb.contains("attachments") || !jb["attachments"].is_array()) {
            throw MalformedDocument("bridge entry needs edges and attachments");
        }
        BridgeTree b;
        for (const auto& je : jb["edges"]) {
            if (!je.is_array() || je.size() != 2) {
                throw MalformedDocument("bridge edge is not a vertex pair");
            }
            b.edges.push_back(
                make_edge(read_id(je[0], "bridge edge"), read_id(je[1], "bridge edge")));
        }
        for (const auto& ja : jb["attachments"]) {
            b.attachments.push_back(read_id(ja, "attachments"));
        }
        bridges.push_back(std::move(b));
    }

    try {
        return Instance{HostCycle(std::move(order)), std::move(bridges)};
    } catch (const Error& e) {
        throw MalformedDocument(std::string("host list does not describe a cycle: ") +
                                e.what());
    }
}

std::string family_to_json(const CycleFamily& fam) {
    ordered_json doc;
    doc["version"] = kDocumentVersion;
    doc["dicycles"] = ordered_json::array();
    for (const Dicycle& c : fam.dicycles()) {
        ordered_json jc = ordered_json::array();
        for (const Arc& a : c.arcs()) {
            jc.push_back({a.tail, a.head, a.key});
        }
        doc["dicycles"].push_back(std::move(jc));
    }
    return finish(doc);
}

CycleFamily family_from_json(const std::string& text) {
    ordered_json doc = parse_or_throw(text);
    require_version(doc);
    if (!doc.contains("dicycles") || !doc["dicycles"].is_array()) {
        throw MalformedDocument("missing dicycle list");
    }
    CycleFamily fam;
    for (const auto& jc : doc["dicycles"]) {
        if (!jc.is_array() || jc.empty()) {
            throw MalformedDocument("dicycle entry is not a non-empty arc list");
        }
        std::vector<Arc> arcs;
        for (const auto& ja : jc) {
            if (!ja.is_array() || ja.size() != 3) {
                throw MalformedDocument("arc is not a [tail, head, key] triple");
            }
            if (!ja[2].is_number_integer()) {
                throw MalformedDocument("arc key is not an integer");
            }
            arcs.push_back(Arc{read_id(ja[0], "arc"), read_id(ja[1], "arc"),
                               ja[2].get<int>()});
        }
        try {
            fam.add(Dicycle::from_arcs(std::move(arcs)));
        } catch (const Error& e) {
            throw MalformedDocument(std::string("arc list is not a dicycle: ") +
                                    e.what());
        }
    }
    return fam;
}

std::string instance_to_dot(const Instance& inst) {
    std::ostringstream out;
    out << "graph instance {\n";
    out << "  node [shape=circle fontsize=10];\n";
    const std::vector<VertexId>& order = inst.host.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
        out << "  " << order[i] << " -- " << order[(i + 1) % order.size()]
            << " [style=bold];\n";
    }
    for (std::size_t b = 0; b < inst.bridges.size(); ++b) {
        for (VertexId v : inst.bridges[b].internal_vertices()) {
            out << "  " << v << " [shape=square];\n";
        }
        for (const EdgePair& e : inst.bridges[b].edges) {
            out << "  " << e.first << " -- " << e.second << " [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string family_to_dot(const Instance& inst, const CycleFamily& fam) {
    static const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                     "#ff7f00", "#a65628", "#f781bf", "#999999"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
    std::ostringstream out;
    out << "digraph family {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (std::size_t ci = 0; ci < fam.dicycles().size(); ++ci) {
        const char* color = kPalette[ci % kPaletteSize];
        for (const Arc& a : fam.dicycles()[ci].arcs()) {
            bool on_host = inst.host.has_edge(a.tail, a.head);
            out << "  " << a.tail << " -> " << a.head << " [color=\"" << color
                << "\" style=" << (on_host ? "bold" : "dashed") << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string aux_to_dot(const AuxDigraph& d) {
    std::ostringstream out;
    out << "digraph aux {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << d.vertex_label(v) << "\"];\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  " << a.tail << " -> " << a.head << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

const char* kind_name(AuxDigraph::ArcKind k) {
    switch (k) {
        case AuxDigraph::ArcKind::within_fwd: return "within_fwd";
        case AuxDigraph::ArcKind::within_bwd: return "within_bwd";
        case AuxDigraph::ArcKind::ring_first: return "ring_first";
        case AuxDigraph::ArcKind::ring_last: return "ring_last";
    }
    return "unknown";
}

}  // namespace

std::string aux_to_json(const AuxDigraph& d) {
    ordered_json doc;
    doc["version"] = kDocumentVersion;
    doc["parts"] = d.eta().parts;
    doc["vertices"] = ordered_json::array();
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        doc["vertices"].push_back(d.vertex_label(v));
    }
    doc["arcs"] = ordered_json::array();
    for (const Arc& a : d.arcs()) {
        ordered_json ja;
        ja["tail"] = d.vertex_label(a.tail);
        ja["head"] = d.vertex_label(a.head);
        ja["key"] = a.key;
        ja["kind"] = kind_name(d.info(a).kind);
        doc["arcs"].push_back(std::move(ja));
    }
    return finish(doc);
}

}  // namespace cyclecover
