#include <doctest.h>

#include "coxfano/classify.hpp"
#include "testutil.hpp"

using namespace coxfano;

namespace {

CoxCandidate candidate(std::vector<std::vector<long>> blocks, std::vector<std::vector<long>> w,
                       std::vector<long> u = {}) {
    CoxCandidate c;
    c.triple.blocks = std::move(blocks);
    c.triple.free_count = static_cast<long>(u.size());
    c.weights = std::move(w);
    c.free_weights = std::move(u);
    return c;
}

}  // namespace

TEST_CASE("canonicalization sorts blocks and pairs") {
    // threefold row 4 (the quadric), scrambled
    CoxCandidate scrambled =
        candidate({{2}, {1, 1}, {1, 1}}, {{1}, {1, 1}, {1, 1}}, {});
    CoxCandidate canonical = canonicalize(scrambled);
    CHECK(canonical.triple.blocks == std::vector<std::vector<long>>{{1, 1}, {1, 1}, {2}});

    CoxCandidate reference = candidate({{1, 1}, {1, 1}, {2}}, {{1, 1}, {1, 1}, {1}}, {});
    CHECK(canonical == canonicalize(reference));

    // coefficient points are excluded from the canonical form
    CoxCandidate with_coeffs = reference;
    with_coeffs.triple.coeffs = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(7)}};
    CHECK(canonicalize(with_coeffs) == canonical);

    // threefold rows 8 and 9 stay distinct
    CoxCandidate row8 = candidate({{1, 5}, {1, 5}, {2}}, {{1, 1}, {1, 1}, {3}});
    CoxCandidate row9 = candidate({{1, 5}, {3, 3}, {2}}, {{1, 1}, {1, 1}, {3}});
    CHECK(canonicalize(row8) != canonicalize(row9));
}

TEST_CASE("canonicalization is idempotent") {
    for (int iter = 0; iter < 200; ++iter) {
        CoxCandidate c;
        c.triple = testutil::random_admissible_triple(4, 3, 7, 2);
        for (const auto& b : c.triple.blocks) {
            std::vector<long> w(b.size());
            for (auto& x : w) x = testutil::rand_between(1, 9);
            c.weights.push_back(w);
        }
        for (long i = 0; i < c.triple.free_count; ++i)
            c.free_weights.push_back(testutil::rand_between(1, 9));
        CoxCandidate once = canonicalize(c);
        CHECK(once == canonicalize(once));
    }
}

TEST_CASE("classifier matches the stored tables") {
    CHECK(verify_against_reference(ReferenceTable::SurfacesMuLe6).pass);
    CHECK(verify_against_reference(ReferenceTable::ThreefoldsMu1).pass);
    CHECK(verify_against_reference(ReferenceTable::FourfoldsMu1).pass);
}

TEST_CASE("classifier agrees with the brute-force oracle at d = 2, mu <= 3") {
    ClassificationQuery q;
    q.dimension = 2;
    q.picard_indices = {1, 2, 3};
    auto smart = enumerate(q);
    auto brute = testutil::brute_force_records(2, q.picard_indices);
    REQUIRE(smart.size() == brute.size());
    for (std::size_t i = 0; i < smart.size(); ++i) {
        CHECK(smart[i].candidate == brute[i].candidate);
        CHECK(smart[i].case_tag == brute[i].case_tag);
        CHECK(smart[i].report == brute[i].report);
        CHECK(smart[i].moduli_dimension == brute[i].moduli_dimension);
    }
}

TEST_CASE("classifier agrees with the brute-force oracle at d = 3, mu = 1") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1};
    auto smart = enumerate(q);
    auto brute = testutil::brute_force_records(3, q.picard_indices);
    CHECK(smart.size() == 9);
    CHECK(smart == brute);
}

TEST_CASE("all-singleton surfaces first appear at Picard index 30") {
    ClassificationQuery q;
    q.dimension = 2;
    q.picard_indices = {30};
    std::vector<ClassificationRecord> singleton_records;
    for (const auto& rec : enumerate(q))
        if (rec.case_tag == CaseTag::II) singleton_records.push_back(rec);
    REQUIRE(singleton_records.size() == 1);
    const auto& rec = singleton_records.front();
    CHECK(rec.candidate.triple.blocks == std::vector<std::vector<long>>{{5}, {3}, {2}});
    CHECK(rec.candidate.weights == std::vector<std::vector<long>>{{6}, {10}, {15}});
    CHECK(rec.candidate.free_weights == std::vector<long>{1});
    CHECK(rec.report.minus_k == 2);
    CHECK(rec.report.minus_k_power_d == Rat(2, 15));
}

TEST_CASE("two-relation threefold appears at Picard index 3") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {3};
    bool found = false;
    for (const auto& rec : enumerate(q)) {
        if (rec.candidate.triple.blocks == std::vector<std::vector<long>>{{5, 1}, {1, 1}, {3}, {2}} &&
            rec.candidate.weights == std::vector<std::vector<long>>{{1, 1}, {3, 3}, {2}, {3}})
            found = true;
        CHECK(rec.report.mu == 3);
    }
    CHECK(found);
}

TEST_CASE("emitted records are normalized and non-toric") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1, 2};
    for (const auto& rec : enumerate(q)) {
        const CoxCandidate& c = rec.candidate;
        CHECK(c.triple.r() >= 2);
        CHECK(c.triple.relation_count() >= 1);
        for (const auto& b : c.triple.blocks)
            if (b.size() == 1) CHECK(b[0] >= 2);
        CHECK(rec.candidate == canonicalize(rec.candidate));
        CHECK(!validate_triple(c.triple).has_value());
        CHECK(is_cox_grading(c));
        CHECK(is_fano(c));
        CHECK(rec.report.mu == picard_index(c));
        CHECK(rec.report.mu == picard_index_via_points(c));
    }
}

TEST_CASE("enumeration is deterministic") {
    ClassificationQuery q;
    q.dimension = 2;
    q.picard_indices = {1, 2, 3, 4, 5, 6};
    auto first = enumerate(q);
    auto second = enumerate(q);
    CHECK(first == second);
    CHECK(render_csv(first) == render_csv(second));
    CHECK(std::is_sorted(first.begin(), first.end(), record_less));
}

TEST_CASE("csv output round-trips") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1, 2};
    auto records = enumerate(q);
    auto back = parse_csv(render_csv(records));
    CHECK(back == records);
}

TEST_CASE("ring list output parses back") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1};
    auto records = enumerate(q);
    auto docs = parse_rings(render_ring_list(records));
    REQUIRE(docs.size() == records.size());
    for (std::size_t i = 0; i < docs.size(); ++i)
        CHECK(candidate_from_ring(docs[i]) == records[i].candidate);
}

TEST_CASE("markdown output mirrors the table layout") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1};
    auto records = enumerate(q);
    std::string md = render_markdown(records);
    CHECK(md.find("| No. | Cox ring | weights | (-K)^d |") != std::string::npos);
    CHECK(md.find("T01*T02^5 + T11^3 + T21^2") != std::string::npos);
    CHECK(md.find("(1,1,2,3,1)") != std::string::npos);
    CHECK(md.find("| 54 |") != std::string::npos);
    // single Picard index: no group headings
    CHECK(md.find("## Picard index") == std::string::npos);

    q.picard_indices = {1, 2};
    std::string grouped = render_markdown(enumerate(q));
    CHECK(grouped.find("## Picard index 1") != std::string::npos);
    CHECK(grouped.find("## Picard index 2") != std::string::npos);
}

TEST_CASE("display helpers") {
    CoxCandidate row1 = candidate({{5, 1}, {3}, {2}}, {{1, 1}, {2}, {3}}, {1});
    auto rels = display_relations(row1);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == "T01*T02^5 + T11^3 + T21^2");
    CHECK(display_weights(row1) == "(1,1,2,3,1)");

    // two-relation threefold: later relations carry a symbolic coefficient
    CoxCandidate two = candidate({{5, 1}, {1, 1}, {3}, {2}}, {{1, 1}, {3, 3}, {2}, {3}});
    auto rels2 = display_relations(two);
    REQUIRE(rels2.size() == 2);
    CHECK(rels2[0] == "T01*T02^5 + T11*T12 + T21^3");
    CHECK(rels2[1] == "a1*T11*T12 + T21^3 + T31^2");
}

TEST_CASE("toric enumeration lists the well-formed weighted projective spaces") {
    ClassificationQuery q;
    q.dimension = 2;
    q.picard_indices = {1, 2, 3};
    q.include_toric = true;
    auto records = enumerate(q);
    std::vector<ClassificationRecord> toric;
    for (const auto& r : records)
        if (r.case_tag == CaseTag::Toric) toric.push_back(r);
    REQUIRE(toric.size() == 3);
    CHECK(toric[0].candidate.free_weights == std::vector<long>{1, 1, 1});
    CHECK(toric[0].report.minus_k_power_d == 9);
    CHECK(toric[1].candidate.free_weights == std::vector<long>{2, 1, 1});
    CHECK(toric[1].report.minus_k_power_d == 8);
    CHECK(toric[2].candidate.free_weights == std::vector<long>{3, 1, 1});
    CHECK(toric[2].report.minus_k_power_d == Rat(25, 3));
    for (const auto& r : toric) {
        CHECK(r.report.gamma == 0);
        CHECK(is_cox_grading(r.candidate));
    }
    // default query excludes them
    q.include_toric = false;
    for (const auto& r : enumerate(q)) CHECK(r.case_tag != CaseTag::Toric);
}

TEST_CASE("resource cap aborts with diagnostics") {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1, 2};
    q.resource_cap = 50;
    try {
        (void)enumerate(q);
        FAIL("expected ResourceCapError");
    } catch (const ResourceCapError& e) {
        CHECK(e.examined > 50);
        CHECK(std::string(e.what()).find("resource cap") != std::string::npos);
    }
}

TEST_CASE("query validation") {
    ClassificationQuery q;
    q.dimension = 0;
    CHECK_THROWS_AS((void)enumerate(q), std::invalid_argument);
    q.dimension = 2;
    q.picard_indices = {};
    CHECK_THROWS_AS((void)enumerate(q), std::invalid_argument);
    q.picard_indices = {0, 1};
    CHECK_THROWS_AS((void)enumerate(q), std::invalid_argument);
}

TEST_CASE("table ids and case tags parse") {
    CHECK(parse_table_id("surfaces_mu_le_6") == ReferenceTable::SurfacesMuLe6);
    CHECK(parse_table_id("threefolds_mu_1") == ReferenceTable::ThreefoldsMu1);
    CHECK(parse_table_id("threefolds_mu_le_2_count") == ReferenceTable::ThreefoldsMuLe2Count);
    CHECK(parse_table_id("fourfolds_mu_1") == ReferenceTable::FourfoldsMu1);
    CHECK_FALSE(parse_table_id("nope").has_value());
    for (auto tag : {CaseTag::Toric, CaseTag::II, CaseTag::III, CaseTag::IV, CaseTag::V})
        CHECK(parse_case_tag(to_string(tag)) == tag);
}

TEST_CASE("verification report renders mismatches") {
    auto rep = verify_against_reference(ReferenceTable::ThreefoldsMu1);
    std::string text = render_report(rep);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("9/9") != std::string::npos);
}
