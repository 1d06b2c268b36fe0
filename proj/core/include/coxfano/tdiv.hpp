#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfano/arith.hpp"
#include "coxfano/linalg.hpp"

namespace coxfano {

using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

/// Nonempty polyhedron conv(vertices) + cone(rays) in N_Q.
struct Polyhedron {
    std::vector<QVec> vertices;
    std::vector<ZVec> rays;
    bool operator==(const Polyhedron&) const = default;
};

/// Coefficient of a polyhedral divisor; nullopt removes the point from the
/// locus.
using Coefficient = std::optional<Polyhedron>;

/// Formal sum sum_y D_y * y on P^1; points not listed carry the tail cone.
/// Lattice rank <= 2 is supported.
struct PolyhedralDivisor {
    long rank = 2;
    std::vector<ZVec> tail;
    std::map<std::string, Coefficient> coefficients;

    bool full_locus() const;
};

struct DegreePolytope {
    Polyhedron sum;  // Minkowski sum over the nonempty coefficients
    bool full_locus = true;
};

/// deg D: vertex-wise Minkowski sum, pruned to the actual vertex set of
/// conv(sums) + tail.
DegreePolytope degree_polytope(const PolyhedralDivisor& d);

/// deg D strictly contained in the tail cone; an affine locus makes the
/// formal degree empty and hence proper.
bool is_proper(const PolyhedralDivisor& d);

class UnboundedBelowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// D(u): per-point minimum of <u, v> over the coefficient; requires u in the
/// dual of the tail cone.  Points with coefficient equal to the tail cone
/// contribute 0 and are omitted.
std::map<std::string, Rat> evaluate(const PolyhedralDivisor& d, const QVec& u);

class UnsupportedShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Chart smoothness: affine locus checks cone({1} x D_y) for every slice,
/// complete locus checks cone({1} x D_y) + cone({-1} x D_z) for the at most
/// two nontrivial coefficients.
bool is_smooth_chart(const PolyhedralDivisor& d);

// ---------------------------------------------------------------------------

struct RefinedVertex {
    QVec v;
    bool exceptional = false;
    bool operator==(const RefinedVertex&) const = default;
};

struct RefinedRay {
    ZVec ray;
    bool exceptional = false;
    bool operator==(const RefinedRay&) const = default;
};

/// A resolved chart: the refined slice vertices over the s marked points of
/// P^1 plus the extremal rays of the tail fan, each flagged exceptional or
/// original.  The original data defines the chart being resolved.
struct RefinementData {
    long rank = 2;
    std::vector<ZVec> tail;
    std::vector<std::string> marked;  // y_1 .. y_s, in file order
    std::map<std::string, std::vector<RefinedVertex>> slices;
    std::vector<RefinedRay> rays;
    std::optional<std::string> y0;

    PolyhedralDivisor base() const;  // the non-exceptional slice data
};

/// mu(v): minimal positive integer with mu(v) * v integral.
Int vertex_multiplicity(const QVec& v);

struct DivisorLabel {
    enum class Kind { Vertex, Ray };
    Kind kind = Kind::Vertex;
    std::string point;  // empty for rays
    QVec vertex;
    ZVec ray;

    std::string str() const;
    bool operator==(const DivisorLabel&) const = default;
    bool operator<(const DivisorLabel& o) const;
};

/// div(f * chi^u) for a semi-invariant function with ord_y(f) prescribed:
/// coefficient -mu(v) (<v,u> + ord_y f) on D_{y,v} and -<n_rho, u> on D_rho.
std::vector<std::pair<DivisorLabel, Int>> semiinvariant_divisor(
    const RefinementData& fan, const ZVec& u, const std::map<std::string, long>& ord);

enum class SingularityClass { Terminal, Canonical, NonCanonical, NotQGorenstein };
std::string to_string(SingularityClass c);

class DegenerateFanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DiscrepancyReport {
    SingularityClass classification = SingularityClass::NotQGorenstein;
    std::map<std::string, Rat> alpha;  // per marked point
    QVec u;
    std::vector<std::pair<DivisorLabel, Rat>> discrepancies;  // exceptional divisors
};

/// Solves the discrepancy system built from the original vertices and rays
/// (top row -sum alpha_y = 2 - s, one row mu(v) alpha_y + <mu(v) v, u> = 1
/// per original vertex, one row <n_rho, u> = 1 per original ray), then
/// evaluates d_{y,v} = mu(v)(<v,u> + alpha_y) - 1 and d_rho = <n_rho,u> - 1
/// on the exceptional divisors.  Original divisors must come out at exactly
/// zero.  An unsolvable system means the chart is not Q-Gorenstein.
DiscrepancyReport solve_discrepancies(const RefinementData& fan);

std::string render_report(const DiscrepancyReport& rep);

// Fan file format:
//
//   fan
//   rank 2
//   tail 1 2 | 1 0
//   mark 0
//   mark 1
//   mark inf
//   vertex 0 3/5 1/5
//   vertex 1 0 0
//   vertex inf 0 0 exceptional
//   ray 3 1
//   ray 1 0 exceptional
//   end

RefinementData parse_fan(const std::string& text);
std::string render_fan(const RefinementData& fan);

}  // namespace coxfano
