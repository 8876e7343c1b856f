#include "svc/report.hpp"

#include <cstdio>

#include "json.hpp"

#include "svc/errors.hpp"

namespace svc {

ReportDocument build_report(const std::vector<BusinessModel>& models, const AliasMap* aliases,
                            const ReportOptions& options) {
    ReportDocument doc;
    doc.model_count = static_cast<int>(models.size());
    doc.size_stats = model_size_stats(models);

    EcosystemGraph eco = merge(models, aliases);
    doc.node_count = static_cast<int>(eco.nodes.size());
    doc.edge_count = static_cast<int>(eco.edges.size());

    SimpleGraph projection = simple_undirected_projection(eco);
    auto components = connected_components(projection);
    for (const auto& comp : components)
        doc.component_sizes.push_back(static_cast<int>(comp.size()));

    if (components.empty()) throw Error(ErrorCode::EmptyGraph, "ecosystem has no stakeholders");
    SimpleGraph largest = projection.induced(components.front());
    doc.metrics = compute_metrics(largest, options.k_min, options.clustering_policy);

    doc.payments = payment_received_counts(eco);
    doc.exposure = personal_data_exposure_counts(eco);
    doc.sinks = personal_data_sinks(eco);
    doc.central = central_stakeholders(eco, options.top);
    doc.rps = rps(eco);
    return doc;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt_real(*v) : std::string("undefined");
}

} // namespace

std::string render_json(const ReportDocument& doc) {
    ordered_json j;
    j["report_version"] = 1;
    j["corpus"] = {
        {"model_count", doc.model_count},
        {"size_stats",
         {{"max", doc.size_stats.max}, {"min", doc.size_stats.min}, {"mean", doc.size_stats.mean}}},
    };
    j["ecosystem"] = {
        {"node_count", doc.node_count},
        {"edge_count", doc.edge_count},
        {"component_sizes", doc.component_sizes},
    };
    j["metrics"] = {
        {"n_nodes", doc.metrics.n_nodes},
        {"n_edges", doc.metrics.n_edges},
        {"avg_degree", doc.metrics.avg_degree},
        {"density", doc.metrics.density},
        {"avg_clustering", doc.metrics.avg_clustering},
        {"assortativity", opt_json(doc.metrics.assortativity)},
        {"gamma", opt_json(doc.metrics.gamma)},
        {"component_sizes", doc.metrics.component_sizes},
    };

    ordered_json payments = ordered_json::array();
    for (const auto& [id, count] : doc.payments)
        payments.push_back({{"id", id.key}, {"count", count}});
    ordered_json exposure = ordered_json::array();
    for (const auto& [id, count] : doc.exposure)
        exposure.push_back({{"id", id.key}, {"count", count}});
    ordered_json sinks = ordered_json::array();
    for (const auto& id : doc.sinks) sinks.push_back(id.key);
    ordered_json by_degree = ordered_json::array();
    for (const auto& [id, degree] : doc.central.by_degree)
        by_degree.push_back({{"id", id.key}, {"degree", degree}});
    ordered_json by_betweenness = ordered_json::array();
    for (const auto& [id, value] : doc.central.by_betweenness)
        by_betweenness.push_back({{"id", id.key}, {"betweenness", value}});
    j["queries"] = {
        {"payments", std::move(payments)},
        {"exposure", std::move(exposure)},
        {"sinks", std::move(sinks)},
        {"central", {{"by_degree", std::move(by_degree)}, {"by_betweenness", std::move(by_betweenness)}}},
    };

    ordered_json per = ordered_json::array();
    for (const auto& [id, entry] : doc.rps.per_stakeholder)
        per.push_back({{"id", id.key},
                       {"payments_in", entry.payments_in},
                       {"qualifying_out", entry.qualifying_out},
                       {"rps", opt_json(entry.rps)}});
    j["rps"] = {
        {"per_stakeholder", std::move(per)},
        {"ecosystem_rps", opt_json(doc.rps.ecosystem_rps)},
    };
    return j.dump(2) + "\n";
}

std::string render_text(const ReportDocument& doc) {
    std::string out;
    out += "corpus: " + std::to_string(doc.model_count) + " models, sizes " +
           std::to_string(doc.size_stats.min) + ".." + std::to_string(doc.size_stats.max) +
           ", mean " + fmt_real(doc.size_stats.mean) + "\n";

    out += "ecosystem: " + std::to_string(doc.node_count) + " stakeholders, " +
           std::to_string(doc.edge_count) + " edges, components";
    for (int size : doc.component_sizes) out += " " + std::to_string(size);
    out += "\n";

    out += "metrics (largest component):\n";
    out += "  nodes " + std::to_string(doc.metrics.n_nodes) + ", edges " +
           std::to_string(doc.metrics.n_edges) + "\n";
    out += "  avg_degree " + fmt_real(doc.metrics.avg_degree) + "\n";
    out += "  density " + fmt_real(doc.metrics.density) + "\n";
    out += "  avg_clustering " + fmt_real(doc.metrics.avg_clustering) + "\n";
    out += "  assortativity " + fmt_opt(doc.metrics.assortativity) + "\n";
    out += "  gamma " + fmt_opt(doc.metrics.gamma) + "\n";

    out += "payments received:\n";
    for (const auto& [id, count] : doc.payments)
        out += "  " + id.key + " " + std::to_string(count) + "\n";
    out += "personal data exposure:\n";
    for (const auto& [id, count] : doc.exposure)
        out += "  " + id.key + " " + std::to_string(count) + "\n";
    out += "personal data sinks:";
    for (const auto& id : doc.sinks) out += " " + id.key;
    out += "\n";
    out += "central by degree:\n";
    for (const auto& [id, degree] : doc.central.by_degree)
        out += "  " + id.key + " " + std::to_string(degree) + "\n";
    out += "central by betweenness:\n";
    for (const auto& [id, value] : doc.central.by_betweenness)
        out += "  " + id.key + " " + fmt_real(value) + "\n";

    out += "rps:\n";
    for (const auto& [id, entry] : doc.rps.per_stakeholder)
        out += "  " + id.key + " payments_in " + std::to_string(entry.payments_in) +
               ", qualifying_out " + std::to_string(entry.qualifying_out) + ", rps " +
               fmt_opt(entry.rps) + "\n";
    out += "ecosystem rps: " + fmt_opt(doc.rps.ecosystem_rps) + "\n";
    return out;
}

} // namespace svc
