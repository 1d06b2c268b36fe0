#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxfano/invariants.hpp"

namespace coxfano {

/// Shape cases driving the enumeration: toric (i) and the four non-toric
/// shapes (ii) n0 = 1, (iii) n0 > n1 = 1, (iv) n1 > n2 = 1, (v) n2 > 1.
enum class CaseTag { Toric, II, III, IV, V };
std::string to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(const std::string& s);

struct ClassificationQuery {
    long dimension = 2;
    std::set<long> picard_indices = {1};
    bool include_toric = false;
    std::uint64_t resource_cap = 200000000;  // candidates examined before aborting
};

struct ClassificationRecord {
    CaseTag case_tag = CaseTag::II;
    CoxCandidate candidate;  // canonical form
    InvariantReport report;
    long moduli_dimension = 0;  // max(0, r-2)

    bool operator==(const ClassificationRecord&) const = default;
};

/// Deterministic total order: (case tag, gamma, canonical form).
bool record_less(const ClassificationRecord& a, const ClassificationRecord& b);

class ResourceCapError : public std::runtime_error {
public:
    ResourceCapError(CaseTag tag, std::uint64_t examined, std::size_t emitted);
    CaseTag case_tag;
    std::uint64_t examined;
    std::size_t emitted;
};

/// Canonical form: pairs (l,w) sorted descending within each block, blocks
/// sorted descending by (size, pair list), free weights descending, A
/// dropped.  Idempotent.
CoxCandidate canonicalize(const CoxCandidate& c);

/// All non-toric Fano candidates with Cl = Z of the given dimension whose
/// Picard index lies in the query set, canonicalized, duplicate-free and
/// deterministically sorted.  include_toric adds the weighted projective
/// spaces.
std::vector<ClassificationRecord> enumerate(const ClassificationQuery& q);

// --------------------------------------------------------------------------

enum class ReferenceTable { SurfacesMuLe6, ThreefoldsMu1, ThreefoldsMuLe2Count, FourfoldsMu1 };
std::string to_string(ReferenceTable t);
std::optional<ReferenceTable> parse_table_id(const std::string& s);

/// The embedded reference rows (not available for the count-only table).
std::vector<ClassificationRecord> reference_records(ReferenceTable t);
/// Raw embedded CSV text.
const std::string& reference_csv(ReferenceTable t);

struct VerificationReport {
    bool pass = false;
    std::string table;
    std::size_t expected = 0;
    std::size_t actual = 0;
    std::size_t matched = 0;
    std::vector<std::string> missing;     // reference rows the run did not produce
    std::vector<std::string> extra;       // produced rows absent from the reference
    std::vector<std::string> mismatched;  // same ring, different invariants
};

VerificationReport verify_against_reference(ReferenceTable t,
                                            std::uint64_t resource_cap = 200000000);
std::string render_report(const VerificationReport& rep);

// --------------------------------------------------------------------------

/// Markdown in the table layout No. | Cox ring | weights | (-K)^d, grouped
/// by Picard index when the query spans several.
std::string render_markdown(const std::vector<ClassificationRecord>& records);

/// CSV schema: case,r,n,L,w,u,gamma,mu,minus_k,minus_k_power_d,moduli_dim.
std::string render_csv(const std::vector<ClassificationRecord>& records);
std::vector<ClassificationRecord> parse_csv(const std::string& text);

/// Concatenated ring documents.
std::string render_ring_list(const std::vector<ClassificationRecord>& records);

/// Table-style relation strings for a weighted candidate (variables named
/// T01, T02, ... per block, pairs ordered by ascending weight then exponent).
std::vector<std::string> display_relations(const CoxCandidate& c);
/// The weight tuple in the same display order, e.g. "(1,1,2,3,1)".
std::string display_weights(const CoxCandidate& c);

}  // namespace coxfano
