#include "coxfano/tdiv.hpp"

#include <algorithm>
#include <sstream>

namespace coxfano {

namespace {

ZVec primitive(ZVec v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (auto& e : v) e /= g;
    return v;
}

Rat dot(const QVec& u, const QVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat dot_zq(const ZVec& z, const QVec& q) {
    Rat s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += Rat(z[i]) * q[i];
    return s;
}

QVec to_qvec(const ZVec& z) {
    QVec q(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) q[i] = Rat(z[i]);
    return q;
}

// x in conv(points) + cone(rays)?  Homogenize: (1,x) in the cone spanned by
// (mu(p), mu(p) p) and (0, r).
bool in_hull_plus_cone(const QVec& x, const std::vector<QVec>& points,
                       const std::vector<ZVec>& rays) {
    if (points.empty()) return false;
    std::vector<std::vector<Int>> gens;
    for (const QVec& p : points) {
        Int mu = vertex_multiplicity(p);
        std::vector<Int> g(p.size() + 1);
        g[0] = mu;
        for (std::size_t i = 0; i < p.size(); ++i) {
            Rat s = p[i] * Rat(mu);
            s.canonicalize();
            g[i + 1] = s.get_num();
        }
        gens.push_back(std::move(g));
    }
    for (const ZVec& r : rays) {
        std::vector<Int> g(r.size() + 1);
        g[0] = 0;
        for (std::size_t i = 0; i < r.size(); ++i) g[i + 1] = r[i];
        gens.push_back(std::move(g));
    }
    QVec lifted(x.size() + 1);
    lifted[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i) lifted[i + 1] = x[i];
    return cone_contains(gens, lifted);
}

Polyhedron tail_polyhedron(const PolyhedralDivisor& d) {
    Polyhedron p;
    p.vertices.push_back(QVec(static_cast<std::size_t>(d.rank), Rat(0)));
    p.rays = d.tail;
    return p;
}

bool same_ray_set(const std::vector<ZVec>& a, const std::vector<ZVec>& b) {
    auto norm = [](const std::vector<ZVec>& v) {
        std::vector<ZVec> out;
        for (const ZVec& r : v) out.push_back(primitive(r));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    return norm(a) == norm(b);
}

bool is_trivial_coefficient(const PolyhedralDivisor& d, const Polyhedron& p) {
    if (p.vertices.size() != 1) return false;
    for (const Rat& c : p.vertices.front())
        if (c != 0) return false;
    return same_ray_set(p.rays, d.tail);
}

// Generators of cone({sign} x P) in Q x N_Q, integral.
std::vector<ZVec> lifted_cone(const Polyhedron& p, int sign) {
    std::vector<ZVec> gens;
    for (const QVec& v : p.vertices) {
        Int mu = vertex_multiplicity(v);
        ZVec g(v.size() + 1);
        g[0] = sign * mu;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat s = v[i] * Rat(mu);
            s.canonicalize();
            g[i + 1] = s.get_num();
        }
        gens.push_back(std::move(g));
    }
    for (const ZVec& r : p.rays) {
        ZVec g(r.size() + 1);
        g[0] = 0;
        for (std::size_t i = 0; i < r.size(); ++i) g[i + 1] = r[i];
        gens.push_back(std::move(g));
    }
    return gens;
}

bool regular(const std::vector<ZVec>& gens) {
    if (gens.empty()) return true;
    IntMatrix m(gens.size(), gens.front().size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens[i].size(); ++j) m(i, j) = gens[i][j];
    return cone_is_regular(m);
}

}  // namespace

bool PolyhedralDivisor::full_locus() const {
    for (const auto& [label, coef] : coefficients)
        if (!coef) return false;
    return true;
}

DegreePolytope degree_polytope(const PolyhedralDivisor& d) {
    DegreePolytope out;
    out.full_locus = d.full_locus();

    std::vector<const Polyhedron*> parts;
    for (const auto& [label, coef] : d.coefficients)
        if (coef) parts.push_back(&*coef);

    std::vector<QVec> sums{QVec(static_cast<std::size_t>(d.rank), Rat(0))};
    for (const Polyhedron* p : parts) {
        std::vector<QVec> next;
        for (const QVec& a : sums)
            for (const QVec& v : p->vertices) {
                QVec s(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + v[i];
                next.push_back(std::move(s));
            }
        sums = std::move(next);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

    // keep only the actual vertices of conv(sums) + tail
    for (std::size_t i = 0; i < sums.size(); ++i) {
        std::vector<QVec> others;
        for (std::size_t j = 0; j < sums.size(); ++j)
            if (j != i) others.push_back(sums[j]);
        if (others.empty() || !in_hull_plus_cone(sums[i], others, d.tail))
            out.sum.vertices.push_back(sums[i]);
    }
    out.sum.rays = d.tail;
    return out;
}

bool is_proper(const PolyhedralDivisor& d) {
    if (!d.full_locus()) return true;  // empty formal degree
    DegreePolytope deg = degree_polytope(d);
    std::vector<std::vector<Int>> tail_gens;
    for (const ZVec& r : d.tail) tail_gens.push_back(r);
    for (const QVec& v : deg.sum.vertices)
        if (!cone_contains(tail_gens, v)) return false;
    // equality deg D = sigma happens exactly when 0 lies in the degree
    QVec zero(static_cast<std::size_t>(d.rank), Rat(0));
    return !in_hull_plus_cone(zero, deg.sum.vertices, d.tail);
}

std::map<std::string, Rat> evaluate(const PolyhedralDivisor& d, const QVec& u) {
    if (u.size() != static_cast<std::size_t>(d.rank))
        throw std::invalid_argument("evaluation vector has wrong length");
    for (const ZVec& r : d.tail)
        if (dot_zq(r, u) < 0)
            throw UnboundedBelowError("u is not in the dual of the tail cone");
    std::map<std::string, Rat> out;
    for (const auto& [label, coef] : d.coefficients) {
        if (!coef) continue;  // point removed from the locus
        if (coef->vertices.empty())
            throw std::invalid_argument("nonempty coefficient without vertices");
        for (const ZVec& r : coef->rays)
            if (dot_zq(r, u) < 0)
                throw UnboundedBelowError("coefficient ray escapes the dual cone");
        bool first = true;
        Rat best = 0;
        for (const QVec& v : coef->vertices) {
            Rat s = dot(u, v);
            if (first || s < best) best = s;
            first = false;
        }
        out.emplace(label, best);
    }
    return out;
}

bool is_smooth_chart(const PolyhedralDivisor& d) {
    if (!d.full_locus()) {
        for (const auto& [label, coef] : d.coefficients)
            if (coef && !regular(lifted_cone(*coef, +1))) return false;
        // generic points carry the tail cone itself
        return regular(lifted_cone(tail_polyhedron(d), +1));
    }
    std::vector<const Polyhedron*> nontrivial;
    for (const auto& [label, coef] : d.coefficients)
        if (coef && !is_trivial_coefficient(d, *coef)) nontrivial.push_back(&*coef);
    if (nontrivial.size() > 2)
        throw UnsupportedShapeError(
            "complete locus with more than two nontrivial coefficients");
    Polyhedron triv = tail_polyhedron(d);
    const Polyhedron& py = nontrivial.size() > 0 ? *nontrivial[0] : triv;
    const Polyhedron& pz = nontrivial.size() > 1 ? *nontrivial[1] : triv;
    std::vector<ZVec> gens = lifted_cone(py, +1);
    std::vector<ZVec> lower = lifted_cone(pz, -1);
    gens.insert(gens.end(), std::make_move_iterator(lower.begin()),
                std::make_move_iterator(lower.end()));
    return regular(gens);
}

// ---------------------------------------------------------------------------

Int vertex_multiplicity(const QVec& v) {
    Int mu = 1;
    for (const Rat& c : v) {
        Rat r = c;
        r.canonicalize();
        mu = lcm(mu, r.get_den());
    }
    return mu;
}

PolyhedralDivisor RefinementData::base() const {
    PolyhedralDivisor d;
    d.rank = rank;
    d.tail = tail;
    for (const auto& [label, verts] : slices) {
        Polyhedron p;
        for (const RefinedVertex& v : verts)
            if (!v.exceptional) p.vertices.push_back(v.v);
        if (!p.vertices.empty()) {
            p.rays = tail;
            d.coefficients.emplace(label, std::move(p));
        }
    }
    return d;
}

std::string DivisorLabel::str() const {
    std::ostringstream os;
    if (kind == Kind::Vertex) {
        os << "D(" << point << ";";
        for (std::size_t i = 0; i < vertex.size(); ++i) os << (i ? "," : "") << to_string(vertex[i]);
        os << ")";
    } else {
        os << "E(";
        for (std::size_t i = 0; i < ray.size(); ++i) os << (i ? "," : "") << ray[i].get_str();
        os << ")";
    }
    return os.str();
}

bool DivisorLabel::operator<(const DivisorLabel& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (point != o.point) return point < o.point;
    if (vertex != o.vertex) return vertex < o.vertex;
    return ray < o.ray;
}

std::vector<std::pair<DivisorLabel, Int>> semiinvariant_divisor(
    const RefinementData& fan, const ZVec& u, const std::map<std::string, long>& ord) {
    std::vector<std::pair<DivisorLabel, Int>> out;
    auto ord_at = [&](const std::string& label) {
        auto it = ord.find(label);
        return it == ord.end() ? 0L : it->second;
    };
    auto vertex_coeff = [&](const std::string& label, const QVec& v) {
        Int mu = vertex_multiplicity(v);
        QVec uq = to_qvec(u);
        Rat c = Rat(-mu) * (dot(uq, v) + Rat(ord_at(label)));
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("non-integral divisor coefficient");
        return c.get_num();
    };
    for (const auto& [label, verts] : fan.slices)
        for (const RefinedVertex& v : verts)
            out.emplace_back(DivisorLabel{DivisorLabel::Kind::Vertex, label, v.v, {}},
                             vertex_coeff(label, v.v));
    // points with a prescribed order but no listed slice carry the implicit
    // vertex 0 with multiplicity one
    for (const auto& [label, o] : ord) {
        if (o == 0 || fan.slices.count(label)) continue;
        QVec zero(static_cast<std::size_t>(fan.rank), Rat(0));
        out.emplace_back(DivisorLabel{DivisorLabel::Kind::Vertex, label, zero, {}},
                         Int(-o));
    }
    for (const RefinedRay& r : fan.rays) {
        ZVec n = primitive(r.ray);
        Int c = 0;
        for (std::size_t i = 0; i < n.size(); ++i) c += n[i] * u[i];
        out.emplace_back(DivisorLabel{DivisorLabel::Kind::Ray, "", {}, r.ray}, -c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::Terminal: return "terminal";
        case SingularityClass::Canonical: return "canonical";
        case SingularityClass::NonCanonical: return "non-canonical";
        case SingularityClass::NotQGorenstein: return "not-q-gorenstein";
    }
    return "?";
}

DiscrepancyReport solve_discrepancies(const RefinementData& fan) {
    const std::size_t s = fan.marked.size();
    const std::size_t rank = static_cast<std::size_t>(fan.rank);
    if (s == 0) throw std::invalid_argument("refinement data has no marked points");
    for (const auto& [label, verts] : fan.slices) {
        if (std::find(fan.marked.begin(), fan.marked.end(), label) == fan.marked.end())
            throw std::invalid_argument("slice at unmarked point '" + label + "'");
        for (const RefinedVertex& v : verts)
            if (v.v.size() != rank)
                throw std::invalid_argument("slice vertex with wrong coordinate count");
    }
    for (const RefinedRay& r : fan.rays)
        if (r.ray.size() != rank)
            throw std::invalid_argument("extremal ray with wrong coordinate count");

    std::vector<std::vector<Int>> rows;
    std::vector<Rat> rhs;
    std::vector<Int> top(s + rank, 0);
    for (std::size_t i = 0; i < s; ++i) top[i] = -1;
    rows.push_back(top);
    rhs.push_back(Rat(2 - static_cast<long>(s)));

    for (std::size_t i = 0; i < s; ++i) {
        auto it = fan.slices.find(fan.marked[i]);
        if (it == fan.slices.end()) continue;
        for (const RefinedVertex& v : it->second) {
            if (v.exceptional) continue;
            Int mu = vertex_multiplicity(v.v);
            std::vector<Int> row(s + rank, 0);
            row[i] = mu;
            for (std::size_t q = 0; q < rank; ++q) {
                Rat c = v.v[q] * Rat(mu);
                c.canonicalize();
                row[s + q] = c.get_num();
            }
            rows.push_back(std::move(row));
            rhs.push_back(Rat(1));
        }
    }
    for (const RefinedRay& r : fan.rays) {
        if (r.exceptional) continue;
        ZVec n = primitive(r.ray);
        std::vector<Int> row(s + rank, 0);
        for (std::size_t q = 0; q < rank; ++q) row[s + q] = n[q];
        rows.push_back(std::move(row));
        rhs.push_back(Rat(1));
    }

    IntMatrix a(rows.size(), s + rank);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < s + rank; ++j) a(i, j) = rows[i][j];

    DiscrepancyReport rep;
    RationalSolution sol = solve_rational_system(a, rhs);
    if (sol.outcome == SolveOutcome::NonUnique)
        throw DegenerateFanError("discrepancy system is underdetermined");
    if (sol.outcome == SolveOutcome::NoSolution) {
        rep.classification = SingularityClass::NotQGorenstein;
        return rep;
    }

    for (std::size_t i = 0; i < s; ++i) rep.alpha[fan.marked[i]] = sol.values[i];
    rep.u.assign(sol.values.begin() + static_cast<long>(s), sol.values.end());

    bool all_positive = true, all_nonnegative = true;
    for (std::size_t i = 0; i < s; ++i) {
        auto it = fan.slices.find(fan.marked[i]);
        if (it == fan.slices.end()) continue;
        for (const RefinedVertex& v : it->second) {
            Int mu = vertex_multiplicity(v.v);
            Rat d = Rat(mu) * (dot(rep.u, v.v) + sol.values[i]) - 1;
            d.canonicalize();
            if (!v.exceptional) {
                if (d != 0)
                    throw std::logic_error("original vertex divisor with nonzero discrepancy");
                continue;
            }
            if (d <= 0) all_positive = false;
            if (d < 0) all_nonnegative = false;
            rep.discrepancies.emplace_back(
                DivisorLabel{DivisorLabel::Kind::Vertex, fan.marked[i], v.v, {}}, d);
        }
    }
    for (const RefinedRay& r : fan.rays) {
        ZVec n = primitive(r.ray);
        Rat d = dot(to_qvec(n), rep.u) - 1;
        d.canonicalize();
        if (!r.exceptional) {
            if (d != 0) throw std::logic_error("original ray divisor with nonzero discrepancy");
            continue;
        }
        if (d <= 0) all_positive = false;
        if (d < 0) all_nonnegative = false;
        rep.discrepancies.emplace_back(DivisorLabel{DivisorLabel::Kind::Ray, "", {}, r.ray}, d);
    }
    std::sort(rep.discrepancies.begin(), rep.discrepancies.end(),
              [](const auto& a_, const auto& b_) { return a_.first < b_.first; });

    rep.classification = all_positive    ? SingularityClass::Terminal
                         : all_nonnegative ? SingularityClass::Canonical
                                           : SingularityClass::NonCanonical;
    return rep;
}

std::string render_report(const DiscrepancyReport& rep) {
    std::ostringstream os;
    os << "discrepancy\n";
    os << "classification " << to_string(rep.classification) << "\n";
    for (const auto& [label, a] : rep.alpha) os << "alpha " << label << " " << to_string(a) << "\n";
    if (!rep.u.empty()) {
        os << "u";
        for (const Rat& c : rep.u) os << " " << to_string(c);
        os << "\n";
    }
    for (const auto& [label, d] : rep.discrepancies)
        os << "d " << label.str() << " " << to_string(d) << "\n";
    os << "end\n";
    return os.str();
}

// ---------------------------------------------------------------------------

RefinementData parse_fan(const std::string& text) {
    RefinementData fan;
    std::istringstream is(text);
    std::string line;
    bool in_fan = false, done = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (!in_fan) {
            if (key != "fan") throw std::invalid_argument("fan file must start with 'fan'");
            in_fan = true;
            continue;
        }
        if (key == "end") {
            done = true;
            break;
        } else if (key == "rank") {
            ls >> fan.rank;
        } else if (key == "tail") {
            std::string rest;
            std::getline(ls, rest);
            std::istringstream rs(rest);
            ZVec cur;
            std::string tok;
            while (rs >> tok) {
                if (tok == "|") {
                    fan.tail.push_back(cur);
                    cur.clear();
                } else {
                    cur.emplace_back(tok);
                }
            }
            if (!cur.empty()) fan.tail.push_back(cur);
        } else if (key == "mark") {
            std::string label;
            ls >> label;
            fan.marked.push_back(label);
        } else if (key == "y0") {
            std::string label;
            ls >> label;
            fan.y0 = label;
        } else if (key == "vertex") {
            std::string label;
            ls >> label;
            RefinedVertex v;
            for (long q = 0; q < fan.rank; ++q) {
                std::string tok;
                if (!(ls >> tok)) throw std::invalid_argument("vertex needs rank coordinates");
                v.v.push_back(parse_rational(tok));
            }
            std::string flag;
            if (ls >> flag) {
                if (flag != "exceptional") throw std::invalid_argument("bad vertex flag " + flag);
                v.exceptional = true;
            }
            fan.slices[label].push_back(std::move(v));
        } else if (key == "ray") {
            RefinedRay r;
            for (long q = 0; q < fan.rank; ++q) {
                std::string tok;
                if (!(ls >> tok)) throw std::invalid_argument("ray needs rank coordinates");
                r.ray.emplace_back(tok);
            }
            std::string flag;
            if (ls >> flag) {
                if (flag != "exceptional") throw std::invalid_argument("bad ray flag " + flag);
                r.exceptional = true;
            }
            fan.rays.push_back(std::move(r));
        } else {
            throw std::invalid_argument("unknown fan field '" + key + "'");
        }
    }
    if (!done) throw std::invalid_argument("unterminated fan block");
    return fan;
}

std::string render_fan(const RefinementData& fan) {
    std::ostringstream os;
    os << "fan\n";
    os << "rank " << fan.rank << "\n";
    if (!fan.tail.empty()) {
        os << "tail ";
        for (std::size_t i = 0; i < fan.tail.size(); ++i) {
            if (i) os << " | ";
            for (std::size_t q = 0; q < fan.tail[i].size(); ++q)
                os << (q ? " " : "") << fan.tail[i][q].get_str();
        }
        os << "\n";
    }
    for (const auto& label : fan.marked) os << "mark " << label << "\n";
    if (fan.y0) os << "y0 " << *fan.y0 << "\n";
    for (const auto& [label, verts] : fan.slices)
        for (const RefinedVertex& v : verts) {
            os << "vertex " << label;
            for (const Rat& c : v.v) os << " " << to_string(c);
            if (v.exceptional) os << " exceptional";
            os << "\n";
        }
    for (const RefinedRay& r : fan.rays) {
        os << "ray";
        for (const Int& c : r.ray) os << " " << c.get_str();
        if (r.exceptional) os << " exceptional";
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

}  // namespace coxfano
