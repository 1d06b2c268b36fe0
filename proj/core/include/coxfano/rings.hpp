#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfano/arith.hpp"
#include "coxfano/linalg.hpp"

namespace coxfano {

struct CoefficientPoint {
    Rat x;
    Rat y;
    bool operator==(const CoefficientPoint&) const = default;
};

/// Discrete data of a trinomial ring R(A,n,L)[S_1..S_m]: the exponent blocks
/// l_ij >= 1, the number m of free variables and the coefficient points A.
/// An empty coeffs vector means the standard normalization a0=(1,0),
/// a1=(1,1), a2=(0,1), a_i=(1,i-1) for i >= 3.
struct Triple {
    std::vector<std::vector<long>> blocks;
    long free_count = 0;
    std::vector<CoefficientPoint> coeffs;

    long r() const { return static_cast<long>(blocks.size()) - 1; }
    long block_size(std::size_t i) const { return static_cast<long>(blocks[i].size()); }
    long n() const;
    long variable_count() const { return n() + free_count; }
    long relation_count() const { return std::max(0L, r() - 1); }

    /// Krull dimension n + m - r + 1 of the ring.
    long ring_dimension() const { return n() + free_count - r() + 1; }
    /// Dimension n + m - r of the associated variety.
    long variety_dimension() const { return n() + free_count - r(); }

    std::vector<CoefficientPoint> coefficient_points() const;
    Int block_gcd(std::size_t i) const;

    bool operator==(const Triple&) const = default;
};

enum class TripleError {
    Malformed,             // empty block, exponent < 1, m < 0, wrong A length
    NotWeaklyDecreasing,   // block sizes n_0 >= ... >= n_r violated
    BlocksNotCoprime,      // block gcds not pairwise coprime
    DegenerateCoefficients // some det(a_i, a_k) vanishes
};
std::string to_string(TripleError e);

/// nullopt iff the triple is structurally valid and admissible.
std::optional<TripleError> validate_triple(const Triple& t);

/// alpha_ij = det(a_i, a_j).
Rat coefficient_det(const Triple& t, std::size_t i, std::size_t j);

/// Exact multivariate polynomial, exponent vectors over the fixed variable
/// order T01,...,T_{r n_r}, S1,...,S_m.
class SparsePolynomial {
public:
    using Terms = std::map<std::vector<long>, Rat>;

    SparsePolynomial() = default;
    static SparsePolynomial monomial(std::vector<long> exponents, const Rat& coeff);

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    SparsePolynomial& operator+=(const SparsePolynomial& rhs);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }
    SparsePolynomial operator*(const Rat& c) const;
    SparsePolynomial operator-() const { return *this * Rat(-1); }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a += b * Rat(-1);
        return a;
    }
    bool operator==(const SparsePolynomial&) const = default;

private:
    void add_term(std::vector<long> e, Rat c);
    Terms terms_;
};

/// The block monomial f_i = T_i1^{l_i1} ... T_{i n_i}^{l_i n_i}.
SparsePolynomial block_monomial(const Triple& t, std::size_t i);

/// g_{i,j,k} = alpha_jk f_i + alpha_ki f_j + alpha_ij f_k for i < j < k.
SparsePolynomial trinomial(const Triple& t, std::size_t i, std::size_t j, std::size_t k);

/// The defining relations g_{i,i+1,i+2}, 0 <= i <= r-2.
std::vector<SparsePolynomial> build_relations(const Triple& t);

/// Canonical grading by K x Z^m of rank n + m - r.  T-degrees span the
/// K-part, S_k maps to the k-th unit vector of the Z^m part.
struct KGrading {
    long rank = 0;
    std::vector<std::vector<Int>> degrees;  // one per variable, T's then S's

    /// Sum_j l_ij * deg T_ij (the common degree of the relations).
    std::vector<Int> block_degree(const Triple& t, std::size_t i) const;
};

KGrading canonical_k_grading(const Triple& t);

/// True iff the block gcds g_k, k != block, are pairwise coprime; `index`
/// selects the variable inside the block and only undergoes a bounds check.
bool variable_is_prime(const Triple& t, std::size_t block, std::size_t index);

// ---------------------------------------------------------------------------
// Ring file format (shared with the classifier):
//
//   ring
//   r 2
//   n 2 1 1
//   m 0
//   L 1 5 | 3 | 2
//   w 1 1 | 2 | 3
//   A 1 0 | 1 1 | 0 1
//   end
//
// w (per-block weights), u (free-variable weights) and A are optional.

struct RingFile {
    Triple triple;
    std::optional<std::vector<std::vector<long>>> weights;
    std::optional<std::vector<long>> free_weights;
};

std::string render_ring(const RingFile& doc);
RingFile parse_ring(const std::string& text);
/// Parses a concatenation of ring documents.
std::vector<RingFile> parse_rings(const std::string& text);

/// Human-readable relations in the table style, e.g.
/// "T01*T02^5 + T11^3 + T21^2"; relations past the first carry a symbolic
/// leading coefficient a1, a2, ... (the coefficient that cannot be scaled
/// away).  Monomials use the stored variable order.
std::vector<std::string> render_relations(const Triple& t);

}  // namespace coxfano
