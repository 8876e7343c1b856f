#include "doctest.h"

#include "generators.hpp"
#include "svc/errors.hpp"
#include "svc/model.hpp"
#include "svc/validate.hpp"

using namespace svc;

namespace {

BusinessModel two_node_model() {
    BusinessModel m;
    m.name = "pair";
    m.stakeholders.push_back({StakeholderId{"a"}, "A", StakeholderKind::Individual, {}});
    m.stakeholders.push_back({StakeholderId{"b"}, "B", StakeholderKind::Institution, {}});
    return m;
}

Timestep ts(std::string_view text) {
    auto parsed = Timestep::parse(text);
    REQUIRE(parsed.has_value());
    return *parsed;
}

} // namespace

TEST_CASE("stakeholder id normalization") {
    CHECK(normalize_stakeholder_key("Data Processor") == "data processor");
    CHECK(normalize_stakeholder_key("  Data   Processor  ") == "data processor");
    CHECK(normalize_stakeholder_key("DATA\tPROCESSOR") == "data processor");
    CHECK(normalize_stakeholder_key("") == "");

    SUBCASE("idempotent") {
        for (const char* raw : {"App  Co", "x", " mixed CASE  words ", "a b c"}) {
            std::string once = normalize_stakeholder_key(raw);
            CHECK(normalize_stakeholder_key(once) == once);
        }
    }
    SUBCASE("same key, same stakeholder") {
        CHECK(StakeholderId::from_raw("Data  Processor") == StakeholderId::from_raw("data processor"));
        CHECK(StakeholderId::from_raw("ab") != StakeholderId::from_raw("a b"));
    }
}

TEST_CASE("timestep parsing") {
    CHECK(ts("1").components == std::vector<std::string>{"1"});
    CHECK(ts("2-1").components == std::vector<std::string>{"2", "1"});
    CHECK(ts("2_1") == ts("2-1")); // separator spelling does not matter
    CHECK(ts("3-a").components == std::vector<std::string>{"3", "a"});
    CHECK(ts("10-2-1").to_string() == "10-2-1");

    CHECK_FALSE(Timestep::parse("").has_value());
    CHECK_FALSE(Timestep::parse("x1").has_value());   // first component must be digits
    CHECK_FALSE(Timestep::parse("1-").has_value());
    CHECK_FALSE(Timestep::parse("1--2").has_value());
    CHECK_FALSE(Timestep::parse("1-f!").has_value());
}

TEST_CASE("timestep ordering") {
    CHECK(compare_timesteps(ts("1"), ts("2")) == std::strong_ordering::less);
    CHECK(compare_timesteps(ts("10"), ts("9")) == std::strong_ordering::greater); // numeric
    CHECK(compare_timesteps(ts("2"), ts("2-1")) == std::strong_ordering::less);   // prefix first
    CHECK(compare_timesteps(ts("2-1"), ts("2-2")) == std::strong_ordering::less);
    CHECK(compare_timesteps(ts("2-9"), ts("2-10")) == std::strong_ordering::less);
    CHECK(compare_timesteps(ts("3"), ts("3")) == std::strong_ordering::equal);
    CHECK(compare_timesteps(ts("2-a"), ts("2-b")) == std::strong_ordering::less);
    CHECK(compare_timesteps(ts("2-1"), ts("2-a")) == std::strong_ordering::less); // numbered first

    SUBCASE("total order on generated timesteps") {
        test::Rng rng(404);
        std::vector<Timestep> all;
        for (int i = 0; i < 25; ++i) {
            Timestep t;
            t.components.push_back(std::to_string(rng.below(12)));
            while (rng.chance(40)) {
                if (rng.chance(50))
                    t.components.push_back(std::to_string(rng.below(12)));
                else
                    t.components.push_back(std::string(1, static_cast<char>('a' + rng.below(4))));
            }
            all.push_back(std::move(t));
        }
        for (const auto& a : all) {
            CHECK(compare_timesteps(a, a) == std::strong_ordering::equal);
            for (const auto& b : all) {
                auto ab = compare_timesteps(a, b);
                auto ba = compare_timesteps(b, a);
                if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
                if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
                if (ab == std::strong_ordering::equal) CHECK(ba == std::strong_ordering::equal);
                for (const auto& c : all) {
                    if (ab != std::strong_ordering::greater &&
                        compare_timesteps(b, c) != std::strong_ordering::greater)
                        CHECK(compare_timesteps(a, c) != std::strong_ordering::greater);
                }
            }
        }
    }
}

TEST_CASE("validate accepts process self-loops and rejects the rest") {
    BusinessModel m = two_node_model();

    SUBCASE("process self-loop is valid") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"a"}, EdgeLabel::process("sort"), {}, {}});
        CHECK(validate(m).empty());
    }
    SUBCASE("payment self-loop is not") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"a"}, EdgeLabel::payment(), {}, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::SelfLoopNonProcess);
        CHECK(diags[0].edge_index == 0);
    }
    SUBCASE("process edge between distinct nodes is not") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"b"}, EdgeLabel::process("x"), {}, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::ProcessNotSelfLoop);
    }
    SUBCASE("undeclared endpoint") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"x"}, EdgeLabel::payment(), {}, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::UndeclaredStakeholder);
    }
    SUBCASE("duplicate ids") {
        m.stakeholders.push_back({StakeholderId{"a"}, "A again", StakeholderKind::Individual, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::DuplicateStakeholder);
    }
    SUBCASE("empty process name") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"a"}, EdgeLabel::process(""), {}, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::EmptyProcessName);
    }
    SUBCASE("empty personal-data subject") {
        m.edges.push_back({StakeholderId{"a"}, StakeholderId{"b"},
                           EdgeLabel::data_label(DataKind::personal_individual("")), {}, {}});
        auto diags = validate(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == DiagnosticCode::EmptyDataSubject);
    }
    SUBCASE("generated models validate clean") {
        test::Rng rng(77);
        for (int i = 0; i < 100; ++i) CHECK(validate(test::random_model(rng)).empty());
    }
}

TEST_CASE("degree counting on the model multigraph") {
    BusinessModel m = two_node_model();
    auto a = StakeholderId{"a"}, b = StakeholderId{"b"};
    m.edges.push_back({a, b, EdgeLabel::payment(), {}, {}});
    m.edges.push_back({a, b, EdgeLabel::payment(), {}, {}});
    m.edges.push_back({a, b, EdgeLabel::data_label(DataKind::personal_collection()), {}, {}});
    m.edges.push_back({b, b, EdgeLabel::process("collate"), {}, {}});

    auto is_payment = [](const EdgeLabel& l) { return l.type == LabelType::Payment; };
    CHECK(in_degree(m, b, is_payment) == 2); // parallel edges count individually
    CHECK(in_degree(m, b) == 4);
    CHECK(out_degree(m, b) == 1); // the process self-loop counts once each way
    CHECK(in_degree(m, b, [](const EdgeLabel& l) { return l.is_process(); }) == 1);
    CHECK(out_degree(m, a) == 3);
    CHECK(in_degree(m, a) == 0);

    SUBCASE("unknown stakeholder") {
        CHECK_THROWS_AS((void)in_degree(m, StakeholderId{"ghost"}), Error);
        try {
            (void)out_degree(m, StakeholderId{"ghost"});
            FAIL("expected NotFound");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotFound);
        }
    }

    SUBCASE("unfiltered degree is the sum over label types") {
        test::Rng rng(2024);
        for (int i = 0; i < 50; ++i) {
            BusinessModel model = test::random_model(rng);
            for (const auto& s : model.stakeholders) {
                int total = 0;
                for (LabelType type : {LabelType::Request, LabelType::Service, LabelType::Payment,
                                       LabelType::Data, LabelType::Process})
                    total += in_degree(model, s.id,
                                       [type](const EdgeLabel& l) { return l.type == type; });
                CHECK(total == in_degree(model, s.id));
            }
        }
    }
}

TEST_CASE("business model equality ignores declaration order") {
    BusinessModel m1 = two_node_model();
    auto a = StakeholderId{"a"}, b = StakeholderId{"b"};
    m1.edges.push_back({a, b, EdgeLabel::payment(), ts("1"), {}});
    m1.edges.push_back({a, b, EdgeLabel::request(), ts("2"), {}});

    BusinessModel m2 = m1;
    std::swap(m2.stakeholders[0], m2.stakeholders[1]);
    std::swap(m2.edges[0], m2.edges[1]);
    CHECK(m1 == m2);

    BusinessModel m3 = m1;
    m3.edges.push_back({a, b, EdgeLabel::payment(), ts("1"), {}});
    CHECK(m1 != m3); // multiset: multiplicity matters

    BusinessModel m4 = m1;
    m4.stakeholders[0].kind = StakeholderKind::Institution;
    CHECK(m1 != m4);
}
