#include "coxfano/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace coxfano {

std::vector<long> CoxCandidate::all_weights() const {
    std::vector<long> w;
    for (const auto& b : weights)
        for (long x : b) w.push_back(x);
    for (long u : free_weights) w.push_back(u);
    return w;
}

long CoxCandidate::variety_dimension() const {
    if (triple.blocks.size() >= 2) return triple.variety_dimension();
    return variable_count() - 1;
}

CoxCandidate candidate_from_ring(const RingFile& doc) {
    CoxCandidate c;
    c.triple = doc.triple;
    if (!doc.weights && !doc.triple.blocks.empty())
        throw std::invalid_argument("ring file carries no weights");
    if (doc.weights) c.weights = *doc.weights;
    if (doc.free_weights)
        c.free_weights = *doc.free_weights;
    else if (doc.triple.free_count > 0)
        throw std::invalid_argument("ring file carries no free-variable weights");
    return c;
}

RingFile ring_from_candidate(const CoxCandidate& c) {
    RingFile doc;
    doc.triple = c.triple;
    doc.weights = c.weights;
    doc.free_weights = c.free_weights;
    return doc;
}

std::optional<Int> relation_degree(const CoxCandidate& c) {
    if (c.weights.size() != c.triple.blocks.size())
        throw std::invalid_argument("weights do not match blocks");
    std::optional<Int> gamma;
    for (std::size_t i = 0; i < c.triple.blocks.size(); ++i) {
        if (c.weights[i].size() != c.triple.blocks[i].size())
            throw std::invalid_argument("weights do not match blocks");
        Int s = 0;
        for (std::size_t j = 0; j < c.triple.blocks[i].size(); ++j)
            s += Int(c.triple.blocks[i][j]) * Int(c.weights[i][j]);
        if (!gamma)
            gamma = s;
        else if (*gamma != s)
            return std::nullopt;
    }
    return gamma ? *gamma : Int(0);
}

bool is_cox_grading(const CoxCandidate& c) {
    std::vector<long> w = c.all_weights();
    for (long x : w)
        if (x < 1) return false;
    // With positive weights the moving-cone condition of the rank-one Cox
    // criterion is automatic; only the generation condition remains.
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) g = gcd(g, Int(w[i]));
        if (g != 1) return false;
    }
    return true;
}

Int local_class_group_order(const std::vector<long>& weights,
                            const std::vector<std::size_t>& support) {
    if (support.empty()) throw EmptySupportError("local class group needs a nonempty support");
    Int g = 0;
    for (std::size_t i : support) g = gcd(g, Int(weights.at(i)));
    return g;
}

Int picard_index(const CoxCandidate& c) {
    const auto& blocks = c.triple.blocks;
    const auto& u = c.free_weights;
    if (blocks.size() < 3) {
        // no relations: the Cox ring is a polynomial ring
        return lcm_of(c.all_weights());
    }
    long s = -1;  // maximal i with n_i > 1
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].size() > 1) s = static_cast<long>(i);
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].size() < blocks[i + 1].size())
            throw std::invalid_argument("picard_index: blocks not sorted");

    Int mu = lcm_of(u);
    if (s == -1) {
        // all blocks singleton: lcm of gcd(w_j ; j != i)
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            Int g = 0;
            for (std::size_t j = 0; j < blocks.size(); ++j)
                if (j != i) g = gcd(g, Int(c.weights[j][0]));
            mu = lcm(mu, g);
        }
        return mu;
    }
    if (s == 0) {
        // one big block: lcm of its weights and gcd of the singleton weights
        for (long w : c.weights[0]) mu = lcm(mu, Int(w));
        Int g = 0;
        for (std::size_t i = 1; i < blocks.size(); ++i) g = gcd(g, Int(c.weights[i][0]));
        return lcm(mu, g);
    }
    // two or more big blocks: lcm of all weights of blocks 0..s
    for (long i = 0; i <= s; ++i)
        for (long w : c.weights[static_cast<std::size_t>(i)]) mu = lcm(mu, Int(w));
    return mu;
}

Int picard_index_via_points(const CoxCandidate& c) {
    // Brute force over coordinate supports realizable on the punctured total
    // coordinate space.  A support is realizable iff the set Z of blocks
    // whose monomial vanishes on it is empty, a single block, or all blocks:
    // two vanishing block monomials force the remaining ones to vanish.
    const auto& blocks = c.triple.blocks;
    std::vector<long> w = c.all_weights();
    const std::size_t nv = w.size();
    if (nv > 20) throw std::invalid_argument("support oracle limited to 20 variables");
    const std::size_t nb = blocks.size();
    Int mu = 1;
    for (std::size_t mask = 1; mask < (std::size_t{1} << nv); ++mask) {
        if (nb >= 3) {
            std::size_t vanishing = 0;
            for (std::size_t i = 0, q = 0; i < nb; ++i) {
                bool full = true;
                for (std::size_t j = 0; j < blocks[i].size(); ++j, ++q)
                    if (!(mask >> q & 1)) full = false;
                if (!full) ++vanishing;
            }
            if (vanishing > 1 && vanishing < nb) continue;
        }
        Int g = 0;
        for (std::size_t q = 0; q < nv; ++q)
            if (mask >> q & 1) g = gcd(g, Int(w[q]));
        mu = lcm(mu, g);
    }
    return mu;
}

namespace {

Int gamma_or_throw(const CoxCandidate& c) {
    auto g = relation_degree(c);
    if (!g) throw std::invalid_argument("weight assignment is not homogeneous");
    return *g;
}

}  // namespace

Int anticanonical_class(const CoxCandidate& c) {
    Int sum = 0;
    for (long w : c.all_weights()) sum += w;
    long rel = c.triple.relation_count();
    if (rel == 0) return sum;
    return sum - Int(rel) * gamma_or_throw(c);
}

Rat anticanonical_selfintersection(const CoxCandidate& c, long d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    Int k = anticanonical_class(c);
    Int num;
    mpz_pow_ui(num.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(d));
    long rel = c.triple.relation_count();
    Int gammas = 1;
    if (rel > 0) {
        Int g = gamma_or_throw(c);
        mpz_pow_ui(gammas.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(rel));
    }
    Int wprod = 1;
    for (long w : c.all_weights()) wprod *= w;
    Rat out(num * gammas, wprod);
    out.canonicalize();
    return out;
}

bool is_fano(const CoxCandidate& c) {
    return anticanonical_class(c) > 0;
}

Int delta_bound(long d, long mu) {
    if (d < 1 || mu < 1) throw std::invalid_argument("delta_bound needs d, mu >= 1");
    long xi_3dmu = prime_count(3 * d * mu);
    long xi_mu = mu >= 1 ? prime_count(mu) : 0;
    long xi_d2mu = prime_count((d + 2) * mu);
    long e1 = 2 * xi_3dmu + d - 2;
    long e2 = xi_mu * xi_mu + 2 * xi_d2mu + 2 * d + 2;
    return pow(Int(6 * d * mu), static_cast<unsigned long>(e1)) *
           pow(Int(mu), static_cast<unsigned long>(e2));
}

InvariantReport invariant_report(const CoxCandidate& c) {
    InvariantReport rep;
    rep.gamma = c.triple.relation_count() > 0 ? gamma_or_throw(c) : Int(0);
    rep.mu = picard_index(c);
    rep.minus_k = anticanonical_class(c);
    rep.minus_k_power_d = anticanonical_selfintersection(c, c.variety_dimension());
    rep.fano = is_fano(c);
    rep.locally_factorial = rep.mu == 1;
    return rep;
}

std::string render_report(const InvariantReport& rep) {
    std::ostringstream os;
    os << "invariants\n";
    os << "gamma " << rep.gamma.get_str() << "\n";
    os << "mu " << rep.mu.get_str() << "\n";
    os << "minus_k " << rep.minus_k.get_str() << "\n";
    os << "minus_k_power_d " << to_string(rep.minus_k_power_d) << "\n";
    os << "fano " << (rep.fano ? "true" : "false") << "\n";
    os << "locally_factorial " << (rep.locally_factorial ? "true" : "false") << "\n";
    os << "end\n";
    return os.str();
}

}  // namespace coxfano
