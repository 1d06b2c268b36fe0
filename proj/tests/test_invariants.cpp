#include <doctest.h>

#include <numeric>

#include "coxfano/classify.hpp"
#include "coxfano/invariants.hpp"
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

// K[T0..T2,S]/<T0^2+T1^3+T2^5> with degrees 15, 10, 6, 1
CoxCandidate mori_surface() {
    return candidate({{2}, {3}, {5}}, {{15}, {10}, {6}}, {1});
}

// the two all-singleton non-Fano examples
CoxCandidate k_trivial() {
    return candidate({{2}, {3}, {7}}, {{21}, {14}, {6}}, {1});
}
CoxCandidate k_ample() {
    return candidate({{2}, {3}, {11}}, {{33}, {22}, {6}}, {1});
}

// the two-relation Fano surface of Picard index 29
CoxCandidate surface_two_relations() {
    return candidate({{1, 1}, {5}, {3}, {2}}, {{29, 1}, {6}, {10}, {15}});
}

// the two-relation Fano threefold of Picard index 3
CoxCandidate threefold_two_relations() {
    return candidate({{5, 1}, {1, 1}, {3}, {2}}, {{1, 1}, {3, 3}, {2}, {3}});
}

CoxCandidate xpq_surface(long p, long q) {
    return candidate({{1, p * q - 1}, {q}, {p}}, {{1, 1}, {p}, {q}});
}

}  // namespace

TEST_CASE("relation degree") {
    CHECK(*relation_degree(candidate({{1, 5}, {3}, {2}}, {{1, 1}, {2}, {3}}, {1})) == 6);
    CHECK(*relation_degree(mori_surface()) == 30);
    CHECK_FALSE(relation_degree(candidate({{1, 5}, {3}, {2}}, {{1, 1}, {2}, {5}})).has_value());
}

TEST_CASE("cox grading criterion") {
    CHECK(is_cox_grading(candidate({{1, 5}, {3}, {2}}, {{1, 1}, {2}, {3}}, {1})));
    CHECK(is_cox_grading(mori_surface()));
    // omitting the weight-3 variable leaves gcd 2
    CHECK_FALSE(is_cox_grading(candidate({{1, 1}, {2}, {3}}, {{2, 4}, {2}, {3}})));
    // weights must be positive
    CHECK_FALSE(is_cox_grading(candidate({{2}, {3}, {5}}, {{15}, {10}, {-6}})));
}

TEST_CASE("local class group orders") {
    CHECK(local_class_group_order({15, 10, 6, 1}, {0, 1}) == 5);
    CHECK(local_class_group_order({21, 14, 6, 1}, {0, 2}) == 3);
    CHECK(local_class_group_order({15, 10, 6, 1}, {0, 1, 2, 3}) == 1);
    CHECK_THROWS_AS((void)local_class_group_order({2, 4}, {}), EmptySupportError);
}

TEST_CASE("picard index examples") {
    CHECK(picard_index(candidate({{1, 3}, {5}, {2}}, {{1, 3}, {2}, {5}})) == 3);
    CHECK(picard_index(mori_surface()) == 30);
    CHECK(picard_index(surface_two_relations()) == 29);
    CHECK(picard_index(threefold_two_relations()) == 3);
    CHECK(picard_index(k_trivial()) == 42);
    CHECK(picard_index(k_ample()) == 66);
}

TEST_CASE("anticanonical class") {
    CHECK(anticanonical_class(mori_surface()) == 2);
    CHECK(anticanonical_class(k_trivial()) == 0);
    CHECK(anticanonical_class(k_ample()) == -4);
}

TEST_CASE("anticanonical self-intersection") {
    CHECK(anticanonical_selfintersection(
              candidate({{1, 5}, {3}, {2}}, {{1, 1}, {2}, {3}}, {1}), 3) == 8);
    CHECK(anticanonical_selfintersection(candidate({{1, 3}, {5}, {2}}, {{1, 3}, {2}, {5}}), 2) ==
          Rat(1, 3));
    // polynomial ring: the projective plane
    CoxCandidate plane = candidate({}, {}, {1, 1, 1});
    CHECK(anticanonical_selfintersection(plane, 2) == 9);
    CHECK(plane.variety_dimension() == 2);
}

TEST_CASE("fano test") {
    CHECK(is_fano(mori_surface()));
    CHECK_FALSE(is_fano(k_trivial()));
    CHECK_FALSE(is_fano(k_ample()));
    // X(p,q) is never Fano for coprime p, q >= 3
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 4}, {3, 5}, {4, 5}, {5, 7}}) {
        CoxCandidate x = xpq_surface(p, q);
        CHECK_FALSE(is_fano(x));
        CHECK(picard_index(x) == 1);  // locally factorial
        CHECK(*relation_degree(x) == p * q);
    }
    // p = 2, q = 3 is del Pezzo degree one
    CHECK(is_fano(xpq_surface(2, 3)));
}

TEST_CASE("fano iff positive anticanonical class") {
    for (int iter = 0; iter < 200; ++iter) {
        // random homogeneous all-singleton candidates plus free weights
        std::size_t count = static_cast<std::size_t>(testutil::rand_between(3, 4));
        std::vector<long> ls{2, 3, 5, 7};
        std::shuffle(ls.begin(), ls.end(), testutil::rng());
        ls.resize(count);
        std::sort(ls.rbegin(), ls.rend());
        long prod = 1;
        for (long l : ls) prod *= l;
        long c = testutil::rand_between(1, 3);
        CoxCandidate cand;
        for (long l : ls) {
            cand.triple.blocks.push_back({l});
            cand.weights.push_back({c * prod / l});
        }
        long m = testutil::rand_between(0, 2);
        cand.triple.free_count = m;
        for (long i = 0; i < m; ++i)
            cand.free_weights.push_back(testutil::rand_between(1, 9));
        CHECK(is_fano(cand) == (anticanonical_class(cand) > 0));
        if (anticanonical_class(cand) > 0)
            CHECK(anticanonical_selfintersection(cand, cand.variety_dimension()) > 0);
    }
}

TEST_CASE("locally factorial two-relation surface is not Fano") {
    CoxCandidate c = candidate({{7, 23}, {5}, {3}, {2}}, {{1, 1}, {6}, {10}, {15}});
    CHECK(*relation_degree(c) == 30);
    CHECK(picard_index(c) == 1);
    CHECK(is_cox_grading(c));
    CHECK_FALSE(is_fano(c));
}

TEST_CASE("delta bound") {
    CHECK(delta_bound(2, 1) == 2985984);  // 12^6
    CHECK(delta_bound(1, 1) == 216);      // 6^3
    for (int iter = 0; iter < 20; ++iter)
        CHECK(delta_bound(testutil::rand_between(1, 5), testutil::rand_between(1, 8)) >= 1);
    CHECK_THROWS_AS((void)delta_bound(0, 1), std::invalid_argument);
}

TEST_CASE("stored reference rows satisfy every invariant") {
    for (auto table : {ReferenceTable::SurfacesMuLe6, ReferenceTable::ThreefoldsMu1,
                       ReferenceTable::FourfoldsMu1}) {
        auto rows = reference_records(table);
        long expected_dim = table == ReferenceTable::SurfacesMuLe6    ? 2
                            : table == ReferenceTable::ThreefoldsMu1 ? 3
                                                                      : 4;
        for (const auto& row : rows) {
            const CoxCandidate& c = row.candidate;
            CHECK(!validate_triple(c.triple).has_value());
            CHECK(c.variety_dimension() == expected_dim);
            auto gamma = relation_degree(c);
            REQUIRE(gamma.has_value());
            CHECK(*gamma == row.report.gamma);
            CHECK(is_cox_grading(c));
            CHECK(is_fano(c));
            CHECK(picard_index(c) == row.report.mu);
            CHECK(anticanonical_class(c) == row.report.minus_k);
            CHECK(anticanonical_selfintersection(c, expected_dim) ==
                  row.report.minus_k_power_d);
            CHECK(row.moduli_dimension == std::max(0L, c.triple.r() - 2));
            CHECK(testutil::shape_case(c) == row.case_tag);
            // the case formula agrees with the lcm over the point recipes
            CHECK(picard_index_via_points(c) == row.report.mu);
        }
    }
}

TEST_CASE("all-singleton cox candidates: m >= 1 and picard index >= 30") {
    // exhaustive over pairwise coprime exponents >= 2 with product <= 60
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long prod, long next) -> void {
        if (cur.size() >= 3) tuples.push_back(cur);
        for (long l = next; l >= 2; --l) {
            if (prod * l > 60) continue;
            bool ok = true;
            for (long x : cur)
                if (std::gcd(x, l) != 1) ok = false;
            if (!ok) continue;
            cur.push_back(l);
            self(self, prod * l, l - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, 60);
    REQUIRE(!tuples.empty());

    bool found_30 = false;
    long cox_valid = 0;
    for (const auto& ls : tuples) {
        long prod = 1;
        for (long l : ls) prod *= l;
        for (long c = 1; c * prod <= 60; ++c) {
            long gamma = c * prod;
            for (long m = 0; m <= 2; ++m) {
                std::vector<long> u(static_cast<std::size_t>(m), 1);
                for (;;) {
                    CoxCandidate cand;
                    for (long l : ls) {
                        cand.triple.blocks.push_back({l});
                        cand.weights.push_back({gamma / l});
                    }
                    cand.triple.free_count = m;
                    cand.free_weights = u;
                    if (is_cox_grading(cand)) {
                        ++cox_valid;
                        CHECK(m >= 1);
                        Int mu = picard_index(cand);
                        CHECK(mu >= 30);
                        // divisibility laws: l_0...l_r | gamma and | mu
                        CHECK(Int(gamma) % prod == 0);
                        CHECK(mu % prod == 0);
                        if (mu == 30) found_30 = true;
                    }
                    std::size_t k = u.size();
                    while (k > 0 && u[k - 1] == 30) u[--k] = 1;
                    if (k == 0) break;
                    ++u[k - 1];
                }
            }
        }
    }
    CHECK(found_30);
    CHECK(cox_valid > 0);
}

TEST_CASE("invariant report rendering") {
    InvariantReport rep = invariant_report(mori_surface());
    CHECK(rep.gamma == 30);
    CHECK(rep.mu == 30);
    CHECK(rep.minus_k == 2);
    CHECK(rep.minus_k_power_d == Rat(2, 15));
    CHECK(rep.fano);
    CHECK_FALSE(rep.locally_factorial);
    std::string text = render_report(rep);
    CHECK(text.find("gamma 30") != std::string::npos);
    CHECK(text.find("mu 30") != std::string::npos);
    CHECK(text.find("minus_k 2") != std::string::npos);
    CHECK(text.find("minus_k_power_d 2/15") != std::string::npos);
    CHECK(text.find("fano true") != std::string::npos);
    CHECK(text.find("locally_factorial false") != std::string::npos);
}

TEST_CASE("candidate from ring file") {
    RingFile doc;
    doc.triple.blocks = {{2}, {3}, {5}};
    doc.triple.free_count = 1;
    doc.weights = {{{15}, {10}, {6}}};
    doc.free_weights = {{1}};
    CoxCandidate c = candidate_from_ring(doc);
    CHECK(c == mori_surface());
    CHECK(ring_from_candidate(c).weights == doc.weights);

    RingFile bare;
    bare.triple.blocks = {{2}, {3}};
    CHECK_THROWS_AS((void)candidate_from_ring(bare), std::invalid_argument);
}
