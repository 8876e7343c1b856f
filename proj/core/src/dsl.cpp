#include "svc/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "svc/errors.hpp"
#include "svc/validate.hpp"

namespace svc {

const char* to_string(ParseErrorCode code) {
    switch (code) {
    case ParseErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ParseErrorCode::DuplicateStakeholder: return "DUPLICATE_STAKEHOLDER";
    case ParseErrorCode::UnknownLabel: return "UNKNOWN_LABEL";
    case ParseErrorCode::UndeclaredStakeholder: return "UNDECLARED_STAKEHOLDER";
    case ParseErrorCode::BadTimestep: return "BAD_TIMESTEP";
    }
    return "PARSE_ERROR";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_timestep_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

struct ParseFailure {
    ParseError error;
};

[[noreturn]] void fail(int line, int column, ParseErrorCode code, std::string message) {
    throw ParseFailure{ParseError{line, column, code, std::move(message)}};
}

[[noreturn]] void fail(SourceSpan at, ParseErrorCode code, std::string message) {
    fail(at.line, at.column, code, std::move(message));
}

// Character scanner with 1-based line/column tracking. Token reads skip
// whitespace (including newlines) but stop at `#`; standalone comment lines
// are skipped only at statement boundaries (skip_blank), so a trailing
// comment stays available for the statement that owns its line.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    SourceSpan here() const { return SourceSpan{line_, column_}; }

    // Whitespace and whole-line comments; statement-boundary skipping.
    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                skip_to_eol();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_blank();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        advance();
        mark_token_end();
        return true;
    }

    void expect(char c, const char* what) {
        if (peek() != c) {
            fail(line_, column_, ParseErrorCode::SyntaxError,
                 std::string("expected '") + c + "' " + what);
        }
        advance();
        mark_token_end();
    }

    // Identifier-shaped word; empty when none present. Records its span.
    std::string read_word(SourceSpan* span = nullptr) {
        skip_ws();
        if (span) *span = here();
        std::string word;
        if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                word.push_back(text_[pos_]);
                advance();
            }
            mark_token_end();
        }
        return word;
    }

    std::string read_token(const char* what) {
        skip_ws();
        const SourceSpan at = here();
        std::string token;
        while (pos_ < text_.size() && is_token_char(text_[pos_])) {
            token.push_back(text_[pos_]);
            advance();
        }
        if (token.empty()) {
            fail(at, ParseErrorCode::SyntaxError, std::string("expected ") + what);
        }
        mark_token_end();
        return token;
    }

    // identifier | double-quoted string with \" and \\ escapes
    std::pair<std::string, SourceSpan> read_name() {
        skip_ws();
        const SourceSpan at = here();
        if (pos_ < text_.size() && text_[pos_] == '"') {
            advance();
            std::string value;
            while (pos_ < text_.size()) {
                const char c = text_[pos_];
                if (c == '\n') break;
                if (c == '"') {
                    advance();
                    mark_token_end();
                    return {value, at};
                }
                if (c == '\\') {
                    if (pos_ + 1 >= text_.size() ||
                        (text_[pos_ + 1] != '"' && text_[pos_ + 1] != '\\')) {
                        fail(line_, column_, ParseErrorCode::SyntaxError,
                             "unsupported escape in quoted name");
                    }
                    advance();
                    value.push_back(text_[pos_]);
                    advance();
                    continue;
                }
                value.push_back(c);
                advance();
            }
            fail(at, ParseErrorCode::SyntaxError, "unterminated quoted name");
        }
        if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
            std::string value;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                value.push_back(text_[pos_]);
                advance();
            }
            mark_token_end();
            return {value, at};
        }
        fail(at, ParseErrorCode::SyntaxError, "expected a name");
    }

    std::pair<std::string, SourceSpan> read_quoted_name(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '"') {
            fail(line_, column_, ParseErrorCode::SyntaxError,
                 std::string("expected a quoted string ") + what);
        }
        return read_name();
    }

    // Raw run of timestep characters (no whitespace inside the token).
    std::pair<std::string, SourceSpan> read_timestep_raw() {
        skip_ws();
        const SourceSpan at = here();
        std::string raw;
        while (pos_ < text_.size() && is_timestep_char(text_[pos_])) {
            raw.push_back(text_[pos_]);
            advance();
        }
        if (!raw.empty()) mark_token_end();
        return {raw, at};
    }

    // A `# ...` comment on the same line as the last token attaches to the
    // statement that just ended; comments on later lines are file comments.
    std::optional<std::string> take_inline_comment() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
        if (pos_ >= text_.size() || text_[pos_] != '#' || line_ != last_token_line_) {
            return std::nullopt;
        }
        advance();
        std::string comment;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            comment.push_back(text_[pos_]);
            advance();
        }
        const auto first = comment.find_first_not_of(" \t\r");
        if (first == std::string::npos) return std::string();
        const auto last = comment.find_last_not_of(" \t\r");
        return comment.substr(first, last - first + 1);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
            advance();
        }
    }

    void advance() {
        if (pos_ >= text_.size()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_to_eol() {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    }

    void mark_token_end() { last_token_line_ = line_; }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int last_token_line_ = 0;
};

EdgeLabel parse_label(Scanner& sc) {
    SourceSpan at;
    const std::string word = sc.read_word(&at);
    if (word.empty()) {
        fail(at, ParseErrorCode::SyntaxError, "expected an edge label");
    }
    if (word == "request") return EdgeLabel::request();
    if (word == "service") return EdgeLabel::service();
    if (word == "payment") return EdgeLabel::payment();
    if (word == "data") {
        if (!sc.consume('(')) return EdgeLabel::data_label(DataKind::non_personal());
        SourceSpan kind_at;
        const std::string kind_word = sc.read_word(&kind_at);
        if (kind_word != "P") {
            fail(kind_at, ParseErrorCode::UnknownLabel,
                 "unknown data kind '" + kind_word + "' (expected P)");
        }
        if (sc.consume(':')) {
            std::string subject = sc.read_token("a data subject after ':'");
            sc.expect(')', "after the data subject");
            return EdgeLabel::data_label(DataKind::personal_individual(std::move(subject)));
        }
        sc.expect(')', "after data(P");
        return EdgeLabel::data_label(DataKind::personal_collection());
    }
    if (word == "proc") {
        sc.expect('(', "after proc");
        std::string name = sc.read_token("an algorithm name");
        sc.expect(')', "after the process name");
        return EdgeLabel::process(std::move(name));
    }
    fail(at, ParseErrorCode::UnknownLabel, "unknown edge label '" + word + "'");
}

} // namespace

ParseResult parse(std::string_view text) {
    ParseResult result;
    Scanner sc(text);

    try {
        while (!sc.at_end()) {
            SourceSpan kw_at;
            const std::string kw = sc.read_word(&kw_at);
            if (kw != "business") {
                fail(kw_at, ParseErrorCode::SyntaxError,
                     kw.empty() ? "expected 'business'" : "expected 'business', got '" + kw + "'");
            }
            auto [name, name_at] = sc.read_quoted_name("as the model name");
            sc.expect('{', "to open the business block");

            BusinessModel model;
            ModelSource source;
            model.name = name;
            source.header = kw_at;

            bool closed = false;
            while (!closed) {
                if (sc.at_end()) {
                    fail(kw_at, ParseErrorCode::SyntaxError,
                         "unterminated business block \"" + model.name + "\"");
                }
                if (sc.consume('}')) {
                    closed = true;
                    break;
                }
                SourceSpan stmt_at;
                const std::string word = sc.read_word(&stmt_at);
                if (word == "node") {
                    auto [raw_name, at] = sc.read_name();
                    StakeholderId id = StakeholderId::from_raw(raw_name);
                    if (id.key.empty()) {
                        fail(at, ParseErrorCode::SyntaxError,
                             "stakeholder name is empty after normalization");
                    }
                    if (model.has_stakeholder(id)) {
                        fail(at, ParseErrorCode::DuplicateStakeholder,
                             "duplicate stakeholder '" + raw_name + "' (id '" + id.key + "')");
                    }
                    sc.expect(':', "after the stakeholder name");
                    SourceSpan kind_at;
                    const std::string kind_word = sc.read_word(&kind_at);
                    StakeholderKind kind;
                    if (kind_word == "individual") {
                        kind = StakeholderKind::Individual;
                    } else if (kind_word == "institution") {
                        kind = StakeholderKind::Institution;
                    } else {
                        fail(kind_at, ParseErrorCode::SyntaxError,
                             "expected 'individual' or 'institution', got '" + kind_word + "'");
                    }
                    auto comment = sc.take_inline_comment();
                    model.stakeholders.push_back(
                        Stakeholder{std::move(id), raw_name, kind, std::move(comment)});
                    source.stakeholders.push_back(at);
                    continue;
                }
                if (word == "edge") {
                    auto [src_raw, src_at] = sc.read_name();
                    StakeholderId src = StakeholderId::from_raw(src_raw);
                    if (!model.has_stakeholder(src)) {
                        fail(src_at, ParseErrorCode::UndeclaredStakeholder,
                             "edge references undeclared stakeholder '" + src_raw + "'");
                    }
                    if (!sc.consume('-') || !sc.consume('>')) {
                        fail(sc.here(), ParseErrorCode::SyntaxError, "expected '->'");
                    }
                    auto [dst_raw, dst_at] = sc.read_name();
                    StakeholderId dst = StakeholderId::from_raw(dst_raw);
                    if (!model.has_stakeholder(dst)) {
                        fail(dst_at, ParseErrorCode::UndeclaredStakeholder,
                             "edge references undeclared stakeholder '" + dst_raw + "'");
                    }
                    sc.expect(':', "before the edge labels");
                    std::vector<EdgeLabel> labels;
                    labels.push_back(parse_label(sc));
                    while (sc.consume(',')) labels.push_back(parse_label(sc));

                    std::optional<Timestep> ts;
                    if (sc.consume('@')) {
                        auto [raw, ts_at] = sc.read_timestep_raw();
                        if (raw.empty()) {
                            fail(ts_at, ParseErrorCode::BadTimestep,
                                 "expected a timestep after '@'");
                        }
                        ts = Timestep::parse(raw);
                        if (!ts) {
                            fail(ts_at, ParseErrorCode::BadTimestep,
                                 "malformed timestep '" + raw + "'");
                        }
                    }
                    auto comment = sc.take_inline_comment();
                    for (auto& label : labels) {
                        model.edges.push_back(Edge{src, dst, std::move(label), ts, comment});
                        source.edges.push_back(stmt_at);
                    }
                    continue;
                }
                fail(stmt_at, ParseErrorCode::SyntaxError,
                     word.empty() ? "expected 'node', 'edge', or '}'"
                                  : "expected 'node', 'edge', or '}', got '" + word + "'");
            }
            result.models.push_back(std::move(model));
            result.sources.push_back(std::move(source));
        }
    } catch (const ParseFailure& failure) {
        result.models.clear();
        result.sources.clear();
        result.error = failure.error;
    }
    return result;
}

namespace {

bool is_plain_identifier(std::string_view s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string render_name(std::string_view s) {
    return is_plain_identifier(s) ? std::string(s) : quoted(s);
}

bool single_line(std::string_view s) {
    return s.find('\n') == std::string_view::npos && s.find('\r') == std::string_view::npos;
}

bool plain_token(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

[[noreturn]] void invalid(const BusinessModel& model, const std::string& why) {
    throw Error(ErrorCode::InvalidModel, "model \"" + model.name + "\": " + why);
}

void check_serializable(const BusinessModel& model) {
    const auto diagnostics = validate(model);
    if (!diagnostics.empty()) {
        std::string why = "validation failed:";
        for (const auto& d : diagnostics) {
            why += std::string(" [") + to_string(d.code) + "] " + d.message;
        }
        invalid(model, why);
    }
    if (!single_line(model.name)) invalid(model, "model name spans multiple lines");
    for (const auto& s : model.stakeholders) {
        if (!single_line(s.display_name)) invalid(model, "display name spans multiple lines");
        if (StakeholderId::from_raw(s.display_name) != s.id) {
            invalid(model, "display name '" + s.display_name + "' does not normalize to id '" +
                               s.id.key + "'");
        }
        if (s.comment && !single_line(*s.comment)) invalid(model, "comment spans multiple lines");
    }
    for (const auto& e : model.edges) {
        if (e.comment && !single_line(*e.comment)) invalid(model, "comment spans multiple lines");
        if (e.label.is_process() && !plain_token(e.label.process_name)) {
            invalid(model, "process name '" + e.label.process_name + "' is not a plain token");
        }
        if (e.label.is_data() && e.label.data.type == DataKindType::PersonalIndividual &&
            !plain_token(e.label.data.subject)) {
            invalid(model, "data subject '" + e.label.data.subject + "' is not a plain token");
        }
    }
}

void append_comment(std::string& out, const std::optional<std::string>& comment) {
    if (!comment) return;
    out += comment->empty() ? " #" : " # " + *comment;
}

void serialize_into(const BusinessModel& model, std::string& out) {
    check_serializable(model);

    out += "business " + quoted(model.name) + " {\n";

    std::vector<const Stakeholder*> nodes;
    nodes.reserve(model.stakeholders.size());
    for (const auto& s : model.stakeholders) nodes.push_back(&s);
    std::sort(nodes.begin(), nodes.end(),
              [](const Stakeholder* a, const Stakeholder* b) { return a->id < b->id; });
    for (const Stakeholder* s : nodes) {
        out += "  node " + render_name(s->display_name) + " : " + to_string(s->kind);
        append_comment(out, s->comment);
        out += "\n";
    }

    // Timed edges sort by (timestep, src, dst, label); untimed edges follow
    // in declaration order.
    std::vector<const Edge*> edges;
    edges.reserve(model.edges.size());
    for (const auto& e : model.edges) edges.push_back(&e);
    std::stable_sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) {
        if (a->timestep.has_value() != b->timestep.has_value()) return a->timestep.has_value();
        if (!a->timestep) return false;
        return edge_canonical_less(*a, *b);
    });
    for (const Edge* e : edges) {
        const Stakeholder* src = model.find_stakeholder(e->src);
        const Stakeholder* dst = model.find_stakeholder(e->dst);
        out += "  edge " + render_name(src->display_name) + " -> " +
               render_name(dst->display_name) + " : " + e->label.to_dsl();
        if (e->timestep) out += " @" + e->timestep->to_string();
        append_comment(out, e->comment);
        out += "\n";
    }
    out += "}\n";
}

} // namespace

std::string serialize(const std::vector<BusinessModel>& models) {
    std::string out;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (i > 0) out += "\n";
        serialize_into(models[i], out);
    }
    return out;
}

std::string serialize(const BusinessModel& model) {
    std::string out;
    serialize_into(model, out);
    return out;
}

} // namespace svc
