#include "svc/validate.hpp"

#include <set>

namespace svc {

const char* to_string(DiagnosticCode code) {
    switch (code) {
    case DiagnosticCode::InvalidStakeholderId: return "INVALID_STAKEHOLDER_ID";
    case DiagnosticCode::DuplicateStakeholder: return "DUPLICATE_STAKEHOLDER";
    case DiagnosticCode::SelfLoopNonProcess: return "SELF_LOOP_NON_PROCESS";
    case DiagnosticCode::ProcessNotSelfLoop: return "PROCESS_NOT_SELF_LOOP";
    case DiagnosticCode::UndeclaredStakeholder: return "UNDECLARED_STAKEHOLDER";
    case DiagnosticCode::BadTimestep: return "BAD_TIMESTEP";
    case DiagnosticCode::EmptyProcessName: return "EMPTY_PROCESS_NAME";
    case DiagnosticCode::EmptyDataSubject: return "EMPTY_DATA_SUBJECT";
    }
    return "DIAGNOSTIC";
}

std::vector<Diagnostic> validate(const BusinessModel& model) {
    std::vector<Diagnostic> out;
    auto stakeholder_diag = [&](DiagnosticCode code, std::size_t index, std::string message) {
        out.push_back({code, std::move(message), index, std::nullopt});
    };
    auto edge_diag = [&](DiagnosticCode code, std::size_t index, std::string message) {
        out.push_back({code, std::move(message), std::nullopt, index});
    };

    std::set<StakeholderId> seen;
    for (std::size_t i = 0; i < model.stakeholders.size(); ++i) {
        const Stakeholder& s = model.stakeholders[i];
        if (s.id.key.empty() || s.id.key != normalize_stakeholder_key(s.id.key)) {
            stakeholder_diag(DiagnosticCode::InvalidStakeholderId, i,
                             "stakeholder id is empty or not normalized: '" + s.id.key + "'");
        } else if (!seen.insert(s.id).second) {
            stakeholder_diag(DiagnosticCode::DuplicateStakeholder, i,
                             "duplicate stakeholder id: '" + s.id.key + "'");
        }
    }

    for (std::size_t i = 0; i < model.edges.size(); ++i) {
        const Edge& e = model.edges[i];
        for (const StakeholderId* endpoint : {&e.src, &e.dst}) {
            if (!model.has_stakeholder(*endpoint)) {
                edge_diag(DiagnosticCode::UndeclaredStakeholder, i,
                          "edge references undeclared stakeholder: '" + endpoint->key + "'");
            }
        }
        if (e.label.is_process()) {
            if (e.src != e.dst) {
                edge_diag(DiagnosticCode::ProcessNotSelfLoop, i,
                          "process edge must be a self-loop: '" + e.src.key + "' -> '" +
                              e.dst.key + "'");
            }
            if (e.label.process_name.empty()) {
                edge_diag(DiagnosticCode::EmptyProcessName, i, "process edge has no algorithm name");
            }
        } else if (e.src == e.dst) {
            edge_diag(DiagnosticCode::SelfLoopNonProcess, i,
                      "self-loop with non-process label on '" + e.src.key + "'");
        }
        if (e.label.is_data() && e.label.data.type == DataKindType::PersonalIndividual &&
            e.label.data.subject.empty()) {
            edge_diag(DiagnosticCode::EmptyDataSubject, i,
                      "personal-individual data label has no subject");
        }
        if (e.timestep && !e.timestep->well_formed()) {
            edge_diag(DiagnosticCode::BadTimestep, i,
                      "malformed timestep '" + e.timestep->to_string() + "'");
        }
    }
    return out;
}

} // namespace svc
