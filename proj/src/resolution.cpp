#include "logbundle/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace logbundle {

namespace {

long h(int k) { return static_cast<long>(monomial_count(k)); }

Exponent add(const Exponent& a, const Exponent& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

std::array<HomPoly, 3> gradient_of(const HomPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("curve of degree 0");
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    return partials(f);
}

// Codimension of the degree-k part of the Jacobian ideal.
long jacobian_codim(const std::array<HomPoly, 3>& grad, unsigned k) {
    const unsigned d1 = grad[0].degree();
    if (k < d1) return h(static_cast<int>(k));
    const auto& mons = monomials(k - d1);
    const std::size_t width = monomial_count(static_cast<int>(k));
    Matrix m(3 * mons.size(), width);
    std::size_t row = 0;
    for (const auto& g : grad) {
        for (const auto& mon : mons) {
            for (const auto& [e, c] : g.terms()) m(row, monomial_index(add(e, mon))) = c;
            ++row;
        }
    }
    return static_cast<long>(width) - static_cast<long>(rank(m));
}

struct Generator {
    int degree;
    SyzygyTriple triple;
};

// Coefficient vector of mon * g in the 3 h(e) layout.
Vector multiple(const Generator& g, const Exponent& mon, unsigned e) {
    const std::size_t block = monomial_count(static_cast<int>(e));
    Vector v(3 * block);
    for (std::size_t c = 0; c < 3; ++c) {
        for (const auto& [ex, coef] : g.triple.components[c].terms()) v[c * block + monomial_index(add(ex, mon))] = coef;
    }
    return v;
}

// Relation coordinates at degree e: one block of size h(e - d_i) per
// generator i among the first `count`, in generator order.
std::vector<std::size_t> block_offsets(const std::vector<Generator>& gens, std::size_t count, unsigned e) {
    std::vector<std::size_t> off(count + 1, 0);
    for (std::size_t i = 0; i < count; ++i)
        off[i + 1] = off[i] + monomial_count(static_cast<int>(e) - gens[i].degree);
    return off;
}

struct Relation {
    int degree;
    std::vector<HomPoly> entries;  // one per generator existing when found
};

}  // namespace

Vector SyzygyTriple::coefficients() const {
    Vector out;
    for (const auto& c : components) {
        const Vector v = c.coefficients();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

SyzygyTriple SyzygyTriple::from_coefficients(unsigned degree, const Vector& v) {
    const std::size_t block = monomial_count(static_cast<int>(degree));
    if (v.size() != 3 * block) throw std::invalid_argument("syzygy vector has wrong length");
    SyzygyTriple s;
    s.degree = degree;
    for (std::size_t c = 0; c < 3; ++c) {
        const auto first = v.begin() + static_cast<std::ptrdiff_t>(c * block);
        s.components[c] = HomPoly::from_coefficients(degree, Vector(first, first + static_cast<std::ptrdiff_t>(block)));
    }
    return s;
}

int Presentation::c1() const {
    const int gens = std::accumulate(generator_degrees.begin(), generator_degrees.end(), 0);
    const int rels = std::accumulate(relation_degrees.begin(), relation_degrees.end(), 0);
    return rels - gens;
}

long Presentation::c2() const {
    // h^2 coefficient of prod(1 - d_i h) / prod(1 - e_j h)
    long e2 = 0;
    long sum_d = 0;
    for (std::size_t i = 0; i < generator_degrees.size(); ++i) {
        sum_d += generator_degrees[i];
        for (std::size_t k = i + 1; k < generator_degrees.size(); ++k)
            e2 += static_cast<long>(generator_degrees[i]) * generator_degrees[k];
    }
    long h2 = 0;
    long sum_e = 0;
    for (std::size_t j = 0; j < relation_degrees.size(); ++j) {
        sum_e += relation_degrees[j];
        for (std::size_t l = j; l < relation_degrees.size(); ++l)
            h2 += static_cast<long>(relation_degrees[j]) * relation_degrees[l];
    }
    return e2 - sum_d * sum_e + h2;
}

long Presentation::predicted_dim(int k) const {
    long total = 0;
    for (int d : generator_degrees) total += h(k - d);
    for (int e : relation_degrees) total -= h(k - e);
    return total;
}

Presentation make_presentation(std::vector<int> generator_degrees, std::vector<int> relation_degrees,
                               std::vector<std::vector<HomPoly>> relations) {
    if (!std::is_sorted(generator_degrees.begin(), generator_degrees.end()) ||
        !std::is_sorted(relation_degrees.begin(), relation_degrees.end()))
        throw std::invalid_argument("degrees must be ascending");
    if (relations.size() != relation_degrees.size()) throw std::invalid_argument("one column per relation expected");
    Presentation p;
    p.generator_degrees = std::move(generator_degrees);
    p.relation_degrees = std::move(relation_degrees);
    for (std::size_t j = 0; j < relations.size(); ++j) {
        if (relations[j].size() != p.generator_degrees.size())
            throw std::invalid_argument("relation column length differs from generator count");
        for (std::size_t i = 0; i < relations[j].size(); ++i) {
            const int deg = p.entry_degree(j, i);
            const HomPoly& entry = relations[j][i];
            if (deg < 0) {
                if (!entry.is_zero()) throw std::invalid_argument("nonzero entry of negative degree");
                relations[j][i] = HomPoly(0);
            } else if (entry.degree() != static_cast<unsigned>(deg) && !entry.is_zero()) {
                throw std::invalid_argument("relation entry has wrong degree");
            } else if (entry.is_zero()) {
                relations[j][i] = HomPoly(static_cast<unsigned>(deg));
            }
        }
    }
    p.relations = std::move(relations);
    return p;
}

Matrix jacobian_matrix(const std::array<HomPoly, 3>& gradient, unsigned e) {
    const unsigned d1 = gradient[0].degree();
    const auto& mons = monomials(e);
    Matrix m(monomial_count(static_cast<int>(e + d1)), 3 * mons.size());
    for (std::size_t v = 0; v < 3; ++v) {
        for (std::size_t j = 0; j < mons.size(); ++j) {
            for (const auto& [ex, c] : gradient[v].terms()) m(monomial_index(add(ex, mons[j])), v * mons.size() + j) = c;
        }
    }
    return m;
}

std::vector<SyzygyTriple> syzygy_basis(const HomPoly& f, unsigned e) {
    const auto grad = gradient_of(f);
    std::vector<SyzygyTriple> out;
    for (const auto& v : nullspace(jacobian_matrix(grad, e))) out.push_back(SyzygyTriple::from_coefficients(e, v));
    return out;
}

Presentation minimal_presentation(const HomPoly& f) {
    const auto grad = gradient_of(f);
    const int d = static_cast<int>(f.degree());
    const int max_e = 2 * d + 2;

    std::vector<Generator> gens;
    std::vector<Relation> rels;
    std::vector<std::size_t> dims;
    int last_change = -1;

    for (int e = 0; e <= max_e; ++e) {
        const auto ue = static_cast<unsigned>(e);
        const auto basis = nullspace(jacobian_matrix(grad, ue));
        dims.push_back(basis.size());
        const std::size_t old_gens = gens.size();

        RowSpace span(3 * monomial_count(e));
        std::vector<Vector> mults;
        for (std::size_t i = 0; i < old_gens; ++i) {
            for (const auto& mon : monomials(static_cast<unsigned>(e - gens[i].degree))) {
                mults.push_back(multiple(gens[i], mon, ue));
                span.insert(mults.back());
            }
        }
        const std::size_t span_rank = span.rank();

        bool changed = false;
        for (const auto& v : basis) {
            if (span.insert(v)) {
                gens.push_back({e, SyzygyTriple::from_coefficients(ue, v)});
                changed = true;
            }
        }

        // Relations among multiples of the old generators, modulo multiples of old relations.
        const auto off = block_offsets(gens, old_gens, ue);
        RowSpace known(off.back());
        for (const auto& r : rels) {
            for (const auto& mon : monomials(static_cast<unsigned>(e - r.degree))) {
                Vector v(off.back());
                const HomPoly m = HomPoly::monomial(mon);
                for (std::size_t i = 0; i < r.entries.size(); ++i) {
                    if (r.entries[i].is_zero()) continue;
                    const Vector c = (r.entries[i] * m).coefficients();
                    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(off[i]));
                }
                known.insert(v);
            }
        }
        const std::size_t missing = mults.size() - span_rank - known.rank();
        if (missing > 0) {
            Matrix a(3 * monomial_count(e), mults.size());
            for (std::size_t c = 0; c < mults.size(); ++c)
                for (std::size_t r = 0; r < mults[c].size(); ++r) a(r, c) = mults[c][r];
            std::size_t found = 0;
            for (const auto& v : nullspace(a)) {
                if (!known.insert(v)) continue;
                Relation rel{e, {}};
                for (std::size_t i = 0; i < old_gens; ++i) {
                    const auto first = v.begin() + static_cast<std::ptrdiff_t>(off[i]);
                    const auto last = v.begin() + static_cast<std::ptrdiff_t>(off[i + 1]);
                    rel.entries.push_back(HomPoly::from_coefficients(static_cast<unsigned>(e - gens[i].degree), Vector(first, last)));
                }
                rels.push_back(std::move(rel));
                ++found;
            }
            if (found != missing) throw std::logic_error("relation count mismatch");
            changed = true;
        }
        if (changed) last_change = e;

        const int rank_now = static_cast<int>(gens.size()) - static_cast<int>(rels.size());
        int c1 = 0;
        for (const auto& g : gens) c1 -= g.degree;
        for (const auto& r : rels) c1 += r.degree;
        if (rank_now == 2 && c1 == -(d - 1) && last_change >= 0 && e - last_change >= 3) {
            std::vector<std::vector<HomPoly>> columns;
            for (const auto& r : rels) {
                std::vector<HomPoly> col = r.entries;
                col.resize(gens.size());
                columns.push_back(std::move(col));
            }
            std::vector<int> gdeg;
            for (const auto& g : gens) gdeg.push_back(g.degree);
            std::vector<int> rdeg;
            for (const auto& r : rels) rdeg.push_back(r.degree);
            Presentation p = make_presentation(std::move(gdeg), std::move(rdeg), std::move(columns));
            for (auto& g : gens) p.generators.push_back(std::move(g.triple));
            p.graded_dims = std::move(dims);
            for (std::size_t k = 0; k < p.graded_dims.size(); ++k) {
                if (p.predicted_dim(static_cast<int>(k)) != static_cast<long>(p.graded_dims[k]))
                    throw std::logic_error("presentation disagrees with graded dimensions");
            }
            return p;
        }
    }
    throw DegreeBoundExceeded("degree bound exceeded");
}

std::string class_name(const BundleClass& c) {
    if (const auto* fr = std::get_if<Free>(&c)) return "Free(" + std::to_string(fr->a) + "," + std::to_string(fr->b) + ")";
    if (const auto* nf = std::get_if<NearlyFree>(&c))
        return "NearlyFree(" + std::to_string(nf->a) + "," + std::to_string(nf->b) + ")";
    return "Other";
}

BundleClass classify(const Presentation& p) {
    const auto& g = p.generator_degrees;
    const auto& r = p.relation_degrees;
    if (g.size() == 2 && r.empty()) return Free{g[0], g[1]};
    if (g.size() == 3 && r.size() == 1 && g[1] == g[2] && r[0] == g[2] + 1 && g[0] <= g[1]) {
        NearlyFree nf{g[0], g[1], std::nullopt};
        if (nf.a < nf.b) nf.jumping_point = jumping_point(p);
        return nf;
    }
    return OtherClass{g, r};
}

BundleClass classify(const HomPoly& f) { return classify(minimal_presentation(f)); }

ProjPoint jumping_point(const Presentation& p) {
    const auto& g = p.generator_degrees;
    if (g.size() != 3 || p.relation_degrees.size() != 1 || g[1] != g[2] || p.relation_degrees[0] != g[2] + 1)
        throw std::invalid_argument("not a nearly free presentation");
    if (g[0] == g[1]) throw std::invalid_argument("no jumping point when a = b");
    const Vector u = p.relations[0][1].coefficients();
    const Vector v = p.relations[0][2].coefficients();
    const Point3 w = cross({u[0], u[1], u[2]}, {v[0], v[1], v[2]});
    if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) throw std::logic_error("linear entries are dependent");
    return ProjPoint(w);
}

long tjurina(const HomPoly& f) {
    const auto grad = gradient_of(f);
    const unsigned k = 3 * f.degree();
    const long tau = jacobian_codim(grad, k);
    for (unsigned j = 1; j <= 2; ++j) {
        if (jacobian_codim(grad, k + j) != tau) throw std::runtime_error("Jacobian scheme not finite");
    }
    return tau;
}

ChernData chern_data(const HomPoly& f) {
    ChernData c;
    c.degree = static_cast<int>(f.degree());
    c.tjurina = tjurina(f);
    c.c1 = -(c.degree - 1);
    c.c2 = static_cast<long>(c.degree - 1) * (c.degree - 1) - c.tjurina;
    return c;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Semistable: return "semistable";
        case Stability::Unstable: return "unstable";
    }
    return "unknown";
}

Stability stability_class(const BundleClass& c) {
    if (const auto* fr = std::get_if<Free>(&c)) return fr->a == fr->b ? Stability::Semistable : Stability::Unstable;
    if (const auto* nf = std::get_if<NearlyFree>(&c)) {
        if (nf->a == nf->b) return Stability::Stable;
        if (nf->a == nf->b - 1) return Stability::Semistable;
        return Stability::Unstable;
    }
    throw std::invalid_argument("not computed");
}

}  // namespace logbundle
