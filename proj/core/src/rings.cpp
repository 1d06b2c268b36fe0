#include "coxfano/rings.hpp"

#include <algorithm>
#include <sstream>

namespace coxfano {

long Triple::n() const {
    long total = 0;
    for (const auto& b : blocks) total += static_cast<long>(b.size());
    return total;
}

std::vector<CoefficientPoint> Triple::coefficient_points() const {
    if (!coeffs.empty()) return coeffs;
    std::vector<CoefficientPoint> a;
    a.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i == 0)
            a.push_back({Rat(1), Rat(0)});
        else if (i == 1)
            a.push_back({Rat(1), Rat(1)});
        else if (i == 2)
            a.push_back({Rat(0), Rat(1)});
        else
            a.push_back({Rat(1), Rat(static_cast<long>(i) - 1)});
    }
    return a;
}

Int Triple::block_gcd(std::size_t i) const {
    return gcd_of(blocks[i]);
}

std::string to_string(TripleError e) {
    switch (e) {
        case TripleError::Malformed: return "Malformed";
        case TripleError::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
        case TripleError::BlocksNotCoprime: return "BlocksNotCoprime";
        case TripleError::DegenerateCoefficients: return "DegenerateCoefficients";
    }
    return "?";
}

std::optional<TripleError> validate_triple(const Triple& t) {
    if (t.free_count < 0) return TripleError::Malformed;
    if (!t.coeffs.empty() && t.coeffs.size() != t.blocks.size()) return TripleError::Malformed;
    for (const auto& b : t.blocks) {
        if (b.empty()) return TripleError::Malformed;
        for (long l : b)
            if (l < 1) return TripleError::Malformed;
    }
    for (std::size_t i = 0; i + 1 < t.blocks.size(); ++i)
        if (t.blocks[i].size() < t.blocks[i + 1].size()) return TripleError::NotWeaklyDecreasing;
    for (std::size_t i = 0; i < t.blocks.size(); ++i)
        for (std::size_t k = i + 1; k < t.blocks.size(); ++k)
            if (gcd(t.block_gcd(i), t.block_gcd(k)) != 1) return TripleError::BlocksNotCoprime;
    auto a = t.coefficient_points();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = i + 1; k < a.size(); ++k)
            if (a[i].x * a[k].y - a[k].x * a[i].y == 0) return TripleError::DegenerateCoefficients;
    return std::nullopt;
}

Rat coefficient_det(const Triple& t, std::size_t i, std::size_t j) {
    auto a = t.coefficient_points();
    return a[i].x * a[j].y - a[j].x * a[i].y;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<long> exponents, const Rat& coeff) {
    SparsePolynomial p;
    p.add_term(std::move(exponents), coeff);
    return p;
}

void SparsePolynomial::add_term(std::vector<long> e, Rat c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(e), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const Rat& c) const {
    SparsePolynomial out;
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

namespace {

std::size_t variable_offset(const Triple& t, std::size_t block) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < block; ++i) off += t.blocks[i].size();
    return off;
}

}  // namespace

SparsePolynomial block_monomial(const Triple& t, std::size_t i) {
    std::vector<long> e(static_cast<std::size_t>(t.variable_count()), 0);
    std::size_t off = variable_offset(t, i);
    for (std::size_t j = 0; j < t.blocks[i].size(); ++j) e[off + j] = t.blocks[i][j];
    return SparsePolynomial::monomial(std::move(e), Rat(1));
}

SparsePolynomial trinomial(const Triple& t, std::size_t i, std::size_t j, std::size_t k) {
    if (!(i < j && j < k && k < t.blocks.size()))
        throw std::invalid_argument("trinomial needs i < j < k <= r");
    SparsePolynomial g = block_monomial(t, i) * coefficient_det(t, j, k);
    g += block_monomial(t, j) * coefficient_det(t, k, i);
    g += block_monomial(t, k) * coefficient_det(t, i, j);
    return g;
}

std::vector<SparsePolynomial> build_relations(const Triple& t) {
    std::vector<SparsePolynomial> rel;
    for (long i = 0; i + 2 <= t.r(); ++i)
        rel.push_back(trinomial(t, static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1),
                                static_cast<std::size_t>(i + 2)));
    return rel;
}

std::vector<Int> KGrading::block_degree(const Triple& t, std::size_t i) const {
    std::vector<Int> d(static_cast<std::size_t>(rank), 0);
    std::size_t off = variable_offset(t, i);
    for (std::size_t j = 0; j < t.blocks[i].size(); ++j)
        for (std::size_t q = 0; q < d.size(); ++q)
            d[q] += Int(t.blocks[i][j]) * degrees[off + j][q];
    return d;
}

KGrading canonical_k_grading(const Triple& t) {
    if (auto err = validate_triple(t))
        throw std::invalid_argument("canonical_k_grading needs an admissible triple: " +
                                    to_string(*err));
    const std::size_t n = static_cast<std::size_t>(t.n());
    const std::size_t r = static_cast<std::size_t>(std::max(0L, t.r()));
    const std::size_t m = static_cast<std::size_t>(t.free_count);
    const std::size_t krank = n - r;

    // Kernel generators v_i = (0,..,0, l_i, -l_{i+1}, 0,..,0) as columns;
    // lambda is read off a Smith decomposition of that matrix.
    IntMatrix lambda(krank, n);
    if (r == 0) {
        for (std::size_t q = 0; q < n; ++q) lambda(q, q) = 1;
    } else {
        IntMatrix c(n, r);
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t off = variable_offset(t, i);
            for (std::size_t j = 0; j < t.blocks[i].size(); ++j)
                c(off + j, i) = t.blocks[i][j];
            for (std::size_t j = 0; j < t.blocks[i + 1].size(); ++j)
                c(off + t.blocks[i].size() + j, i) = -t.blocks[i + 1][j];
        }
        SmithDecomposition d = smith_normal_form(c);
        for (std::size_t i = 0; i < r; ++i)
            if (d.s(i, i) != 1)
                throw std::logic_error("admissible triple with non-unimodular kernel basis");
        for (std::size_t q = 0; q < krank; ++q)
            for (std::size_t j = 0; j < n; ++j) lambda(q, j) = d.u(r + q, j);
    }

    // Sign normalization: first nonzero coordinate of deg T01 positive.
    for (std::size_t q = 0; q < krank; ++q) {
        if (lambda(q, 0) == 0) continue;
        if (lambda(q, 0) < 0)
            for (std::size_t j = 0; j < n; ++j) lambda(q, j) = -lambda(q, j);
        break;
    }

    KGrading g;
    g.rank = static_cast<long>(krank + m);
    g.degrees.resize(n + m, std::vector<Int>(krank + m, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < krank; ++q) g.degrees[j][q] = lambda(q, j);
    for (std::size_t k = 0; k < m; ++k) g.degrees[n + k][krank + k] = 1;
    return g;
}

bool variable_is_prime(const Triple& t, std::size_t block, std::size_t index) {
    if (block >= t.blocks.size() || index >= t.blocks[block].size())
        throw std::out_of_range("variable index out of range");
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (i == block) continue;
        for (std::size_t k = i + 1; k < t.blocks.size(); ++k) {
            if (k == block) continue;
            if (gcd(t.block_gcd(i), t.block_gcd(k)) != 1) return false;
        }
    }
    return true;
}

// --- serialization ----------------------------------------------------------

namespace {

std::string join_blocks(const std::vector<std::vector<long>>& blocks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << " | ";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) os << (j ? " " : "") << blocks[i][j];
    }
    return os.str();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on_bar(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::vector<long>> parse_blocks(const std::string& s) {
    std::vector<std::vector<long>> blocks;
    for (const auto& part : split_on_bar(s)) {
        std::vector<long> b;
        for (const auto& tok : split_ws(part)) b.push_back(std::stol(tok));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("ring file: " + what);
}

}  // namespace

std::string render_ring(const RingFile& doc) {
    std::ostringstream os;
    const Triple& t = doc.triple;
    os << "ring\n";
    os << "r " << t.r() << "\n";
    os << "n";
    for (const auto& b : t.blocks) os << " " << b.size();
    os << "\n";
    os << "m " << t.free_count << "\n";
    if (!t.blocks.empty()) os << "L " << join_blocks(t.blocks) << "\n";
    if (doc.weights) os << "w " << join_blocks(*doc.weights) << "\n";
    if (doc.free_weights && !doc.free_weights->empty()) {
        os << "u";
        for (long u : *doc.free_weights) os << " " << u;
        os << "\n";
    }
    if (!t.coeffs.empty()) {
        os << "A ";
        for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
            if (i) os << " | ";
            os << to_string(t.coeffs[i].x) << " " << to_string(t.coeffs[i].y);
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

namespace {

RingFile parse_ring_lines(const std::vector<std::pair<std::string, std::string>>& fields) {
    RingFile doc;
    std::optional<long> r_field;
    std::optional<std::vector<long>> n_field;
    for (const auto& [key, rest] : fields) {
        if (key == "r") {
            r_field = std::stol(rest);
        } else if (key == "n") {
            std::vector<long> n;
            for (const auto& tok : split_ws(rest)) n.push_back(std::stol(tok));
            n_field = std::move(n);
        } else if (key == "m") {
            doc.triple.free_count = std::stol(rest);
        } else if (key == "L") {
            doc.triple.blocks = parse_blocks(rest);
        } else if (key == "w") {
            doc.weights = parse_blocks(rest);
        } else if (key == "u") {
            std::vector<long> u;
            for (const auto& tok : split_ws(rest)) u.push_back(std::stol(tok));
            doc.free_weights = std::move(u);
        } else if (key == "A") {
            for (const auto& part : split_on_bar(rest)) {
                auto toks = split_ws(part);
                if (toks.size() != 2) bad("coefficient point needs two rationals");
                doc.triple.coeffs.push_back({parse_rational(toks[0]), parse_rational(toks[1])});
            }
        } else {
            bad("unknown field '" + key + "'");
        }
    }
    if (r_field && *r_field != doc.triple.r()) bad("r does not match L");
    if (n_field) {
        if (n_field->size() != doc.triple.blocks.size()) bad("n does not match L");
        for (std::size_t i = 0; i < n_field->size(); ++i)
            if ((*n_field)[i] != static_cast<long>(doc.triple.blocks[i].size()))
                bad("n does not match L");
    }
    if (doc.weights) {
        if (doc.weights->size() != doc.triple.blocks.size()) bad("w block count mismatch");
        for (std::size_t i = 0; i < doc.weights->size(); ++i)
            if ((*doc.weights)[i].size() != doc.triple.blocks[i].size())
                bad("w block size mismatch");
    }
    if (doc.free_weights && static_cast<long>(doc.free_weights->size()) != doc.triple.free_count)
        bad("u length does not match m");
    return doc;
}

}  // namespace

std::vector<RingFile> parse_rings(const std::string& text) {
    std::vector<RingFile> docs;
    std::istringstream is(text);
    std::string line;
    bool in_ring = false;
    std::vector<std::pair<std::string, std::string>> fields;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        if (key == "ring") {
            if (in_ring) bad("nested ring block");
            in_ring = true;
            fields.clear();
        } else if (key == "end") {
            if (!in_ring) bad("end without ring");
            docs.push_back(parse_ring_lines(fields));
            in_ring = false;
        } else {
            if (!in_ring) bad("field outside ring block");
            fields.emplace_back(key, rest);
        }
    }
    if (in_ring) bad("unterminated ring block");
    return docs;
}

RingFile parse_ring(const std::string& text) {
    auto docs = parse_rings(text);
    if (docs.size() != 1) bad("expected exactly one ring block");
    return docs.front();
}

std::vector<std::string> render_relations(const Triple& t) {
    std::vector<std::string> out;
    auto mono = [&](std::size_t i) {
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < t.blocks[i].size(); ++j) {
            if (!first) os << "*";
            first = false;
            os << "T" << i << (j + 1);
            if (t.blocks[i][j] != 1) os << "^" << t.blocks[i][j];
        }
        return os.str();
    };
    for (long g = 0; g + 2 <= t.r(); ++g) {
        std::ostringstream os;
        if (g > 0) os << "a" << g << "*";
        os << mono(static_cast<std::size_t>(g)) << " + "
           << mono(static_cast<std::size_t>(g + 1)) << " + "
           << mono(static_cast<std::size_t>(g + 2));
        out.push_back(os.str());
    }
    return out;
}

}  // namespace coxfano
