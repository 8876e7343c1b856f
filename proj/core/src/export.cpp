#include "svc/export.hpp"

#include <cstdio>

namespace svc {

namespace {

const char* abbreviation(LabelType type) {
    switch (type) {
        case LabelType::Request: return "R";
        case LabelType::Service: return "S";
        case LabelType::Payment: return "$";
        case LabelType::Data: return "D";
        case LabelType::Process: return "P";
    }
    return "?";
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string to_dot(const EcosystemGraph& graph) {
    std::string out = "digraph ecosystem {\n";
    for (const auto& [id, node] : graph.nodes) {
        char width[32];
        std::snprintf(width, sizeof width, "%.2f", 0.75 + 0.25 * (node.frequency - 1));
        out += "  " + dot_quote(id.key) + " [label=" + dot_quote(node.display_name) +
               ", shape=" + (node.kind == StakeholderKind::Institution ? "box" : "ellipse") +
               ", width=" + width + "];\n";
    }
    // Edges are sorted by (src, dst, ...), so parallel groups are contiguous.
    for (std::size_t i = 0; i < graph.edges.size();) {
        std::size_t j = i;
        std::string labels;
        while (j < graph.edges.size() && graph.edges[j].src == graph.edges[i].src &&
               graph.edges[j].dst == graph.edges[i].dst) {
            if (!labels.empty()) labels += ',';
            labels += abbreviation(graph.edges[j].label.type);
            ++j;
        }
        out += "  " + dot_quote(graph.edges[i].src.key) + " -> " + dot_quote(graph.edges[i].dst.key) +
               " [label=" + dot_quote(labels) + ", penwidth=" + std::to_string(j - i) + "];\n";
        i = j;
    }
    out += "}\n";
    return out;
}

std::string to_graphml(const EcosystemGraph& graph) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
        "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
        "  <key id=\"frequency\" for=\"node\" attr.name=\"frequency\" attr.type=\"int\"/>\n"
        "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n"
        "  <key id=\"timestep\" for=\"edge\" attr.name=\"timestep\" attr.type=\"string\"/>\n"
        "  <key id=\"model\" for=\"edge\" attr.name=\"model\" attr.type=\"string\"/>\n"
        "  <graph id=\"ecosystem\" edgedefault=\"directed\">\n";
    for (const auto& [id, node] : graph.nodes) {
        out += "    <node id=\"" + xml_escape(id.key) + "\">\n";
        out += "      <data key=\"name\">" + xml_escape(node.display_name) + "</data>\n";
        out += std::string("      <data key=\"kind\">") + to_string(node.kind) + "</data>\n";
        out += "      <data key=\"frequency\">" + std::to_string(node.frequency) + "</data>\n";
        out += "    </node>\n";
    }
    for (const auto& e : graph.edges) {
        out += "    <edge source=\"" + xml_escape(e.src.key) + "\" target=\"" +
               xml_escape(e.dst.key) + "\">\n";
        out += "      <data key=\"label\">" + xml_escape(e.label.to_dsl()) + "</data>\n";
        if (e.timestep)
            out += "      <data key=\"timestep\">" + xml_escape(e.timestep->to_string()) + "</data>\n";
        out += "      <data key=\"model\">" + xml_escape(e.model) + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

} // namespace svc
