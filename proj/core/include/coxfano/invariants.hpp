#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxfano/rings.hpp"

namespace coxfano {

/// A trinomial ring together with a positive Z-weight per variable: one
/// candidate Cox ring of a variety with divisor class group Z.
struct CoxCandidate {
    Triple triple;
    std::vector<std::vector<long>> weights;  // parallel to triple.blocks
    std::vector<long> free_weights;          // deg S_k

    std::vector<long> all_weights() const;  // T's then S's
    long variable_count() const { return triple.variable_count(); }
    /// dim Proj: n + m - r for trinomial data, #variables - 1 for
    /// polynomial rings (no relations).
    long variety_dimension() const;

    bool operator==(const CoxCandidate&) const = default;
};

CoxCandidate candidate_from_ring(const RingFile& doc);
RingFile ring_from_candidate(const CoxCandidate& c);

/// Common degree gamma = sum_j l_ij w_ij of the relations; nullopt when the
/// block sums disagree (the weight assignment is not homogeneous).
std::optional<Int> relation_degree(const CoxCandidate& c);

/// Rank-one Cox criterion: every weight positive and, for each variable,
/// the remaining weights have gcd 1.
bool is_cox_grading(const CoxCandidate& c);

class EmptySupportError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// gcd of the weights over the support: |Cl(X,x)| for a point whose torsor
/// coordinates are nonzero exactly on the support.
Int local_class_group_order(const std::vector<long>& weights,
                            const std::vector<std::size_t>& support);

/// Picard index [Cl(X):Pic(X)] via the per-shape lcm formulas.
Int picard_index(const CoxCandidate& c);

/// Cross-check oracle: lcm of local class group orders over all coordinate
/// supports realizable on the punctured total coordinate space (the blocks
/// whose monomial vanishes must number zero, one, or all).
Int picard_index_via_points(const CoxCandidate& c);

/// -K = sum of weights - (number of relations) * gamma.
Int anticanonical_class(const CoxCandidate& c);

/// (-K)^d = (sum w - (r-1) gamma)^d * gamma^(r-1) / prod w.
Rat anticanonical_selfintersection(const CoxCandidate& c, long d);

/// Fano iff (r-1) gamma < sum of all weights.
bool is_fano(const CoxCandidate& c);

/// delta(d, mu) <= (6 d mu)^(2 xi(3 d mu) + d - 2) * mu^(xi(mu)^2 + 2 xi((d+2) mu) + 2d + 2).
Int delta_bound(long d, long mu);

struct InvariantReport {
    Int gamma;  // 0 when there are no relations
    Int mu;
    Int minus_k;
    Rat minus_k_power_d;
    bool fano = false;
    bool locally_factorial = false;

    bool operator==(const InvariantReport&) const = default;
};

InvariantReport invariant_report(const CoxCandidate& c);
std::string render_report(const InvariantReport& rep);

}  // namespace coxfano
