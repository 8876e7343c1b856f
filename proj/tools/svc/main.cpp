// svc: validate, format, merge, analyze and export stakeholder value-chain
// corpora.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "svc/analytics.hpp"
#include "svc/dsl.hpp"
#include "svc/errors.hpp"
#include "svc/export.hpp"
#include "svc/merge.hpp"
#include "svc/metrics.hpp"
#include "svc/model.hpp"
#include "svc/report.hpp"
#include "svc/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

using ordered_json = nlohmann::ordered_json;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    out.flush();
    return out.good();
}

void io_error(const std::string& path, const std::string& what) {
    std::cerr << "svc: error: cannot " << what << " '" << path << "'\n";
}

void domain_error(const svc::Error& e) {
    std::cerr << "svc: error: " << svc::to_string(e.code()) << ": " << e.what() << "\n";
}

// `file:line:col: CODE: message` for everything that has a source position.
void print_parse_error(const std::string& path, const svc::ParseError& err) {
    std::cerr << path << ":" << err.line << ":" << err.column << ": " << svc::to_string(err.code)
              << ": " << err.message << "\n";
}

void print_diagnostic(const std::string& path, const svc::ModelSource& source,
                      const svc::Diagnostic& diag) {
    svc::SourceSpan span = source.header;
    if (diag.stakeholder_index && *diag.stakeholder_index < source.stakeholders.size())
        span = source.stakeholders[*diag.stakeholder_index];
    else if (diag.edge_index && *diag.edge_index < source.edges.size())
        span = source.edges[*diag.edge_index];
    std::cerr << path << ":" << span.line << ":" << span.column << ": "
              << svc::to_string(diag.code) << ": " << diag.message << "\n";
}

// Reads, parses and validates a corpus; prints every diagnostic it finds.
// Returns an exit code, kExitOk meaning `models` holds the whole corpus.
int load_corpus(const std::vector<std::string>& paths, std::vector<svc::BusinessModel>& models) {
    int status = kExitOk;
    for (const auto& path : paths) {
        auto text = read_file(path);
        if (!text) {
            io_error(path, "read");
            status = std::max(status, kExitIo);
            continue;
        }
        svc::ParseResult result = svc::parse(*text);
        if (!result.ok()) {
            print_parse_error(path, *result.error);
            status = std::max(status, kExitDomain);
            continue;
        }
        bool clean = true;
        for (std::size_t m = 0; m < result.models.size(); ++m) {
            for (const auto& diag : svc::validate(result.models[m])) {
                print_diagnostic(path, result.sources[m], diag);
                clean = false;
            }
        }
        if (!clean) {
            status = std::max(status, kExitDomain);
            continue;
        }
        for (auto& model : result.models) models.push_back(std::move(model));
    }
    return status;
}

// Alias map from --alias or, when the flag is absent, from $SVC_ALIASES.
int load_aliases(const std::string& flag_path, std::optional<svc::AliasMap>& out) {
    std::string path = flag_path;
    if (path.empty()) {
        const char* env = std::getenv("SVC_ALIASES");
        if (env && *env) path = env;
    }
    if (path.empty()) return kExitOk;
    auto text = read_file(path);
    if (!text) {
        io_error(path, "read");
        return kExitIo;
    }
    try {
        out = svc::AliasMap::parse(*text);
    } catch (const svc::Error& e) {
        domain_error(e);
        return kExitDomain;
    }
    return kExitOk;
}

int load_merged(const std::vector<std::string>& paths, const std::string& alias_path,
                svc::EcosystemGraph& graph) {
    std::vector<svc::BusinessModel> models;
    if (int status = load_corpus(paths, models); status != kExitOk) return status;
    std::optional<svc::AliasMap> aliases;
    if (int status = load_aliases(alias_path, aliases); status != kExitOk) return status;
    try {
        graph = svc::merge(models, aliases ? &*aliases : nullptr);
    } catch (const svc::Error& e) {
        domain_error(e);
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_validate(const std::vector<std::string>& paths) {
    std::vector<svc::BusinessModel> models;
    return load_corpus(paths, models);
}

int cmd_fmt(const std::vector<std::string>& paths, bool check) {
    int status = kExitOk;
    for (const auto& path : paths) {
        auto text = read_file(path);
        if (!text) {
            io_error(path, "read");
            status = std::max(status, kExitIo);
            continue;
        }
        svc::ParseResult result = svc::parse(*text);
        if (!result.ok()) {
            print_parse_error(path, *result.error);
            status = std::max(status, kExitDomain);
            continue;
        }
        std::string canonical;
        try {
            canonical = svc::serialize(result.models);
        } catch (const svc::Error& e) {
            std::cerr << path << ": " << svc::to_string(e.code()) << ": " << e.what() << "\n";
            status = std::max(status, kExitDomain);
            continue;
        }
        if (canonical == *text) continue;
        if (check) {
            std::cerr << path << ": not canonically formatted\n";
            status = std::max(status, kExitDomain);
        } else if (!write_file(path, canonical)) {
            io_error(path, "write");
            status = std::max(status, kExitIo);
        }
    }
    return status;
}

int cmd_report(const std::vector<std::string>& paths, const std::string& alias_path,
               const std::string& format, int k_min, int top, bool exclude_low_degree) {
    std::vector<svc::BusinessModel> models;
    if (int status = load_corpus(paths, models); status != kExitOk) return status;
    std::optional<svc::AliasMap> aliases;
    if (int status = load_aliases(alias_path, aliases); status != kExitOk) return status;

    svc::ReportOptions options;
    options.k_min = k_min;
    options.top = top;
    options.clustering_policy =
        exclude_low_degree ? svc::LowDegreePolicy::Exclude : svc::LowDegreePolicy::CountAsZero;
    try {
        svc::ReportDocument doc = svc::build_report(models, aliases ? &*aliases : nullptr, options);
        std::cout << (format == "text" ? svc::render_text(doc) : svc::render_json(doc));
    } catch (const svc::Error& e) {
        domain_error(e);
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_export(const std::vector<std::string>& paths, const std::string& alias_path,
               const std::string& format, const std::string& out_path) {
    svc::EcosystemGraph graph;
    if (int status = load_merged(paths, alias_path, graph); status != kExitOk) return status;
    std::string rendered = format == "graphml" ? svc::to_graphml(graph) : svc::to_dot(graph);
    if (out_path.empty()) {
        std::cout << rendered;
    } else if (!write_file(out_path, rendered)) {
        io_error(out_path, "write");
        return kExitIo;
    }
    return kExitOk;
}

int cmd_robustness(const std::vector<std::string>& paths, const std::string& alias_path,
                   const std::string& strategy, std::uint64_t seed) {
    svc::EcosystemGraph graph;
    if (int status = load_merged(paths, alias_path, graph); status != kExitOk) return status;
    try {
        auto curve = svc::robustness_curve(svc::simple_undirected_projection(graph),
                                           strategy == "random"
                                               ? svc::RemovalStrategy::Random
                                               : svc::RemovalStrategy::HighestDegreeFirst,
                                           seed);
        std::cout << "fraction_removed,lcc_fraction\n";
        char row[64];
        for (const auto& point : curve) {
            std::snprintf(row, sizeof row, "%.6f,%.6f\n", point.fraction_removed,
                          point.lcc_fraction);
            std::cout << row;
        }
    } catch (const svc::Error& e) {
        domain_error(e);
        return kExitDomain;
    }
    return kExitOk;
}

std::optional<std::vector<svc::DataKind>> parse_kinds(const std::string& list) {
    std::vector<svc::DataKind> kinds;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        std::string token =
            list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token == "N") {
            kinds.push_back(svc::DataKind::non_personal());
        } else if (token == "P") {
            kinds.push_back(svc::DataKind::personal_collection());
        } else if (token == "P:*") {
            kinds.push_back(svc::DataKind::personal_individual("")); // any subject
        } else if (token.size() > 2 && token.rfind("P:", 0) == 0) {
            kinds.push_back(svc::DataKind::personal_individual(token.substr(2)));
        } else {
            return std::nullopt;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return kinds;
}

std::string render_label(const svc::EcosystemEdge& e) {
    std::string text = e.label.to_dsl();
    if (e.timestep) text += " @" + e.timestep->to_string();
    return text;
}

int cmd_query(const std::string& sub, const std::vector<std::string>& paths,
              const std::string& alias_path, bool json, int top, const std::string& from,
              const std::string& kinds_spec) {
    svc::EcosystemGraph graph;
    if (int status = load_merged(paths, alias_path, graph); status != kExitOk) return status;

    auto print_counts = [&](const std::vector<std::pair<svc::StakeholderId, int>>& rows) {
        if (json) {
            ordered_json arr = ordered_json::array();
            for (const auto& [id, count] : rows) arr.push_back({{"id", id.key}, {"count", count}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& [id, count] : rows) std::cout << id.key << " " << count << "\n";
        }
    };

    try {
        if (sub == "payments") {
            print_counts(svc::payment_received_counts(graph));
        } else if (sub == "exposure") {
            print_counts(svc::personal_data_exposure_counts(graph));
        } else if (sub == "sinks") {
            auto sinks = svc::personal_data_sinks(graph);
            if (json) {
                ordered_json arr = ordered_json::array();
                for (const auto& id : sinks) arr.push_back(id.key);
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& id : sinks) std::cout << id.key << "\n";
            }
        } else if (sub == "rps") {
            svc::RpsReport report = svc::rps(graph);
            if (json) {
                ordered_json j;
                ordered_json per = ordered_json::array();
                for (const auto& [id, entry] : report.per_stakeholder)
                    per.push_back({{"id", id.key},
                                   {"payments_in", entry.payments_in},
                                   {"qualifying_out", entry.qualifying_out},
                                   {"rps", entry.rps ? ordered_json(*entry.rps) : nullptr}});
                j["per_stakeholder"] = std::move(per);
                j["ecosystem_rps"] =
                    report.ecosystem_rps ? ordered_json(*report.ecosystem_rps) : nullptr;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [id, entry] : report.per_stakeholder) {
                    std::cout << id.key << " payments_in " << entry.payments_in
                              << " qualifying_out " << entry.qualifying_out << " rps ";
                    if (entry.rps)
                        std::cout << *entry.rps << "\n";
                    else
                        std::cout << "undefined\n";
                }
                std::cout << "ecosystem ";
                if (report.ecosystem_rps)
                    std::cout << *report.ecosystem_rps << "\n";
                else
                    std::cout << "undefined\n";
            }
        } else if (sub == "central") {
            svc::CentralStakeholders central = svc::central_stakeholders(graph, top);
            if (json) {
                ordered_json j;
                ordered_json deg = ordered_json::array();
                for (const auto& [id, d] : central.by_degree)
                    deg.push_back({{"id", id.key}, {"degree", d}});
                ordered_json btw = ordered_json::array();
                for (const auto& [id, b] : central.by_betweenness)
                    btw.push_back({{"id", id.key}, {"betweenness", b}});
                j["by_degree"] = std::move(deg);
                j["by_betweenness"] = std::move(btw);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "by degree:\n";
                for (const auto& [id, d] : central.by_degree)
                    std::cout << "  " << id.key << " " << d << "\n";
                std::cout << "by betweenness:\n";
                for (const auto& [id, b] : central.by_betweenness)
                    std::cout << "  " << id.key << " " << b << "\n";
            }
        } else if (sub == "trace") {
            auto kinds = parse_kinds(kinds_spec);
            if (!kinds) {
                std::cerr << "svc: error: bad --kinds '" << kinds_spec
                          << "' (tokens: N, P, P:<subject>, P:*)\n";
                return kExitDomain;
            }
            svc::TraceResult result =
                svc::trace_flow(graph, svc::StakeholderId::from_raw(from), *kinds);
            if (json) {
                ordered_json arr = ordered_json::array();
                for (const auto& [id, path] : result.reached) {
                    ordered_json hops = ordered_json::array();
                    for (std::size_t ei : path) {
                        const auto& e = graph.edges[ei];
                        ordered_json hop;
                        hop["src"] = e.src.key;
                        hop["dst"] = e.dst.key;
                        hop["label"] = e.label.to_dsl();
                        if (e.timestep) hop["timestep"] = e.timestep->to_string();
                        hop["model"] = e.model;
                        hops.push_back(std::move(hop));
                    }
                    arr.push_back({{"id", id.key}, {"path", std::move(hops)}});
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& [id, path] : result.reached) {
                    std::cout << id.key << ":";
                    for (std::size_t ei : path) {
                        const auto& e = graph.edges[ei];
                        std::cout << " " << e.src.key << " -[" << render_label(e) << "]-> "
                                  << e.dst.key;
                    }
                    std::cout << "\n";
                }
            }
        }
    } catch (const svc::Error& e) {
        domain_error(e);
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stakeholder value-chain modeling tools"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string alias_path, format, out_path, strategy = "degree", from, kinds = "P,P:*";
    std::uint64_t seed = 0;
    int k_min = 1, top = 5;
    bool check = false, json = false, exclude_low_degree = false;

    auto add_files = [&paths](CLI::App* cmd) {
        cmd->add_option("files", paths, "model files")->required()->expected(-1);
    };
    auto add_alias = [&alias_path](CLI::App* cmd) {
        cmd->add_option("--alias", alias_path, "alias map (default: $SVC_ALIASES)");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and check model files");
    add_files(validate);

    CLI::App* fmt = app.add_subcommand("fmt", "rewrite files in canonical form");
    add_files(fmt);
    fmt->add_flag("--check", check, "fail instead of rewriting");

    CLI::App* report = app.add_subcommand("report", "full statistics and query report");
    add_files(report);
    add_alias(report);
    report->add_option("--format", format, "json|text")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "text"}));
    report->add_option("--k-min", k_min, "power-law fit cutoff")->check(CLI::PositiveNumber);
    report->add_option("--top", top, "centrality list length")->check(CLI::PositiveNumber);
    report->add_flag("--exclude-low-degree", exclude_low_degree,
                     "average clustering over degree >= 2 nodes only");

    CLI::App* exp = app.add_subcommand("export", "render the merged ecosystem");
    add_files(exp);
    add_alias(exp);
    exp->add_option("--format", format, "dot|graphml")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "graphml"}));
    exp->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* query = app.add_subcommand("query", "knowledge queries on the merged ecosystem");
    query->require_subcommand(1);
    std::vector<std::pair<std::string, std::string>> query_subs = {
        {"payments", "incoming payment counts"},
        {"exposure", "incoming personal-data counts"},
        {"sinks", "personal-data end points"},
        {"rps", "received profit sufficiency"},
        {"central", "top stakeholders by degree and betweenness"},
        {"trace", "follow data flows from a stakeholder"},
    };
    for (const auto& [name, help] : query_subs) {
        CLI::App* sub = query->add_subcommand(name, help);
        add_files(sub);
        add_alias(sub);
        sub->add_flag("--json", json, "machine-readable output");
        if (name == "central")
            sub->add_option("--top", top, "list length")->check(CLI::PositiveNumber);
        if (name == "trace") {
            sub->add_option("--from", from, "starting stakeholder")->required();
            sub->add_option("--kinds", kinds, "data kinds: N, P, P:<subject>, P:* (comma-separated)");
        }
    }

    CLI::App* robustness = app.add_subcommand("robustness", "node-removal percolation curve");
    add_files(robustness);
    add_alias(robustness);
    robustness->add_option("--strategy", strategy, "degree|random")
        ->check(CLI::IsMember({"degree", "random"}));
    robustness->add_option("--seed", seed, "random strategy seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomain; // keep the 0/1/2 contract, 0 for --help
    }

    if (validate->parsed()) return cmd_validate(paths);
    if (fmt->parsed()) return cmd_fmt(paths, check);
    if (report->parsed())
        return cmd_report(paths, alias_path, format, k_min, top, exclude_low_degree);
    if (exp->parsed()) return cmd_export(paths, alias_path, format, out_path);
    if (query->parsed())
        return cmd_query(query->get_subcommands().front()->get_name(), paths, alias_path, json,
                         top, from, kinds);
    if (robustness->parsed()) return cmd_robustness(paths, alias_path, strategy, seed);
    return kExitOk;
}
