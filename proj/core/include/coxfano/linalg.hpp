#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxfano/arith.hpp"

namespace coxfano {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

std::string to_string(const IntMatrix& m);

/// s = u * m * v with u, v unimodular; s diagonal, entries >= 0 and
/// d1 | d2 | ... along the diagonal.
struct SmithDecomposition {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// True iff the rows extend to a basis of the ambient integer lattice,
/// i.e. the matrix has full row rank and all Smith invariants equal 1.
bool is_basis_extendable(const IntMatrix& rows);

using RationalVector = std::vector<Rat>;

enum class SolveOutcome { Unique, NoSolution, NonUnique };

struct RationalSolution {
    SolveOutcome outcome = SolveOutcome::NoSolution;
    RationalVector values;  // populated only for Unique

    explicit operator bool() const { return outcome == SolveOutcome::Unique; }
};

/// Exact solution of a*x = b over the rationals; the system may be
/// rectangular and overdetermined.
RationalSolution solve_rational_system(const IntMatrix& a, const RationalVector& b);

/// Signalled when a cone shape falls outside the supported rank range.
class UnsupportedConeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True iff the primitive generators of the extremal rays of cone(rows) are
/// part of a lattice basis.  Generators may be redundant; rank <= 3 is fully
/// supported, higher ranks only for simplicial generator sets.
bool cone_is_regular(const IntMatrix& generators);

/// Exact membership test x in cone(generators); Caratheodory search over
/// independent generator subsets, intended for small sets of rank <= 3.
bool cone_contains(const std::vector<std::vector<Int>>& generators, const std::vector<Rat>& x);

/// Number of primes <= bound (the prime-counting function xi).
std::int64_t prime_count(std::int64_t bound);

}  // namespace coxfano
