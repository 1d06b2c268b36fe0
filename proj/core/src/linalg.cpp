#include "coxfano/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace coxfano {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer for IntMatrix");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_a -= q * row_b
void submul_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void submul_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

void add_row(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += m(b, j);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SmithDecomposition d{m, IntMatrix::identity(nr), IntMatrix::identity(nc)};
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        // pivot: smallest absolute nonzero entry of the trailing block,
        // ties broken by row-major position
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (s(i, j) == 0) continue;
                Int a = abs(s(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // trailing block is zero
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);  // truncated: |remainder| < |pivot|
                submul_row(s, i, t, q);
                submul_row(u, i, t, q);
                if (s(i, t) != 0) {  // pivot shrinks, restart with it
                    swap_rows(s, t, i);
                    swap_rows(u, t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                submul_col(s, j, t, q);
                submul_col(v, j, t, q);
                if (s(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(v, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // column ops may have disturbed the cleared column
            bool col_clear = true;
            for (std::size_t i = t + 1; i < nr && col_clear; ++i)
                if (s(i, t) != 0) col_clear = false;
            if (!col_clear) continue;

            // divisibility: pivot must divide the trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc && !fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        add_row(s, t, i);
                        add_row(u, t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    for (std::size_t t = 0; t < steps; ++t)
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    return d;
}

bool is_basis_extendable(const IntMatrix& rows) {
    if (rows.rows() == 0) return true;
    if (rows.rows() > rows.cols()) return false;
    SmithDecomposition d = smith_normal_form(rows);
    for (std::size_t t = 0; t < rows.rows(); ++t)
        if (d.s(t, t) != 1) return false;
    return true;
}

RationalSolution solve_rational_system(const IntMatrix& a, const RationalVector& b) {
    const std::size_t nr = a.rows(), nc = a.cols();
    if (b.size() != nr) throw std::invalid_argument("rhs size mismatch");

    // Gauss-Jordan on the augmented matrix, exact rational pivots.
    std::vector<RationalVector> aug(nr, RationalVector(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug[i][j] = Rat(a(i, j));
        aug[i][nc] = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && aug[p][col] == 0) ++p;
        if (p == nr) continue;
        std::swap(aug[p], aug[row]);
        Rat inv = aug[row][col];
        for (std::size_t j = col; j <= nc; ++j) aug[row][j] /= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (std::size_t j = col; j <= nc; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < nr; ++i)
        if (aug[i][nc] != 0) return {SolveOutcome::NoSolution, {}};
    if (pivot_col.size() < nc) return {SolveOutcome::NonUnique, {}};

    RationalVector x(nc);
    for (std::size_t i = 0; i < nc; ++i) x[pivot_col[i]] = aug[i][nc];
    return {SolveOutcome::Unique, std::move(x)};
}

namespace {

std::vector<Int> primitive(std::vector<Int> v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (auto& e : v) e /= g;
    return v;
}

std::size_t rational_rank(const std::vector<std::vector<Int>>& vecs) {
    if (vecs.empty()) return 0;
    std::vector<RationalVector> m;
    for (const auto& v : vecs) {
        RationalVector r(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) r[j] = Rat(v[j]);
        m.push_back(std::move(r));
    }
    const std::size_t nc = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < nc; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// x in cone(gens)?  Caratheodory: x is a nonnegative combination iff it is
// one over some linearly independent subset of the generators.
bool cone_member(const std::vector<Int>& x, const std::vector<std::vector<Int>>& gens,
                 std::size_t rank) {
    if (std::all_of(x.begin(), x.end(), [](const Int& e) { return e == 0; })) return true;
    const std::size_t n = gens.size();
    const std::size_t dim = x.size();
    const std::size_t k_max = std::min(rank, n);

    auto expressible = [&](const std::vector<std::size_t>& sub) {
        IntMatrix a(dim, sub.size());
        for (std::size_t j = 0; j < sub.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) a(i, j) = gens[sub[j]][i];
        RationalVector rhs(dim);
        for (std::size_t i = 0; i < dim; ++i) rhs[i] = Rat(x[i]);
        RationalSolution sol = solve_rational_system(a, rhs);
        if (!sol) return false;
        return std::all_of(sol.values.begin(), sol.values.end(),
                           [](const Rat& l) { return l >= 0; });
    };

    std::vector<std::size_t> sub;
    auto search = [&](auto&& self, std::size_t next) -> bool {
        if (!sub.empty() && expressible(sub)) return true;
        if (sub.size() == k_max) return false;
        for (std::size_t i = next; i < n; ++i) {
            sub.push_back(i);
            if (self(self, i + 1)) return true;
            sub.pop_back();
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace

bool cone_contains(const std::vector<std::vector<Int>>& generators, const std::vector<Rat>& x) {
    // clear denominators; membership is invariant under positive scaling
    Int scale = 1;
    for (const Rat& q : x) scale = lcm(scale, q.get_den());
    std::vector<Int> xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rat s = x[i] * Rat(scale);
        s.canonicalize();
        xi[i] = s.get_num();
    }
    return cone_member(xi, generators, rational_rank(generators));
}

bool cone_is_regular(const IntMatrix& generators) {
    const std::size_t dim = generators.cols();
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < generators.rows(); ++i) {
        std::vector<Int> g = generators.row(i);
        if (std::all_of(g.begin(), g.end(), [](const Int& e) { return e == 0; }))
            throw std::invalid_argument("cone generator must be nonzero");
        g = primitive(std::move(g));
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }
    if (gens.empty()) return true;  // the zero cone

    std::size_t rank = rational_rank(gens);
    if (rank > 3 && gens.size() != rank)
        throw UnsupportedConeError("cone rank > 3 with redundant generators");

    if (gens.size() > rank) {
        // pointedness: a cone is pointed iff no generator's negative lies in it
        for (const auto& g : gens) {
            std::vector<Int> neg(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
            if (cone_member(neg, gens, rank)) return false;
        }
        // keep the extremal generators only
        std::vector<std::vector<Int>> extremal;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<std::vector<Int>> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (!cone_member(gens[i], others, rank)) extremal.push_back(gens[i]);
        }
        gens = std::move(extremal);
    }
    if (gens.size() != rank) return false;

    IntMatrix rows(gens.size(), dim);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) rows(i, j) = gens[i][j];
    return is_basis_extendable(rows);
}

std::int64_t prime_count(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("prime_count needs bound >= 1");
    if (bound > 100000000) throw std::invalid_argument("prime_count sieve capped at 10^8");
    if (bound < 2) return 0;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    std::int64_t count = 0;
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        ++count;
        for (std::int64_t q = p * p; q <= bound; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    return count;
}

}  // namespace coxfano
