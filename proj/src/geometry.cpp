#include "logbundle/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace logbundle {

Point3 normalize_triple(const Point3& v) {
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
        throw std::invalid_argument("projective triple with all coordinates zero");
    }
    mpz_class l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    std::array<mpz_class, 3> n;
    mpz_class g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        n[i] = v[i].num() * (l / v[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    const int lead_sign = sgn(n[0]) != 0 ? sgn(n[0]) : (sgn(n[1]) != 0 ? sgn(n[1]) : sgn(n[2]));
    if (lead_sign < 0) g = -g;
    return {Rational(mpz_class(n[0] / g)), Rational(mpz_class(n[1] / g)), Rational(mpz_class(n[2] / g))};
}

Rational dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

HomPoly to_poly(const LinearForm& l) { return HomPoly::linear(l[0], l[1], l[2]); }

bool incident(const LinearForm& l, const ProjPoint& p) { return dot(l.coords(), p.coords()).is_zero(); }

ProjPoint intersection(const LinearForm& l1, const LinearForm& l2) {
    if (l1 == l2) throw std::invalid_argument("coincident lines");
    return ProjPoint(cross(l1.coords(), l2.coords()));
}

LinearForm join(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw std::invalid_argument("coincident points");
    return LinearForm(cross(p.coords(), q.coords()));
}

std::pair<Point3, Point3> parametrization(const LinearForm& l) {
    std::size_t p = 0;
    while (l[p].is_zero()) ++p;
    std::array<std::size_t, 2> others{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i != p) others[k++] = i;
    }
    Point3 p1{0, 0, 0};
    Point3 p2{0, 0, 0};
    p1[others[0]] = 1;
    p1[p] = -(l[others[0]] / l[p]);
    p2[others[1]] = 1;
    p2[p] = -(l[others[1]] / l[p]);
    return {p1, p2};
}

BinaryForm restrict_to_line(const HomPoly& f, const LinearForm& l) {
    const auto [p1, p2] = parametrization(l);
    const unsigned d = f.degree();
    std::array<std::vector<BinaryForm>, 3> powers;
    for (std::size_t v = 0; v < 3; ++v) {
        const BinaryForm lin = BinaryForm::linear(p1[v], p2[v]);
        powers[v].emplace_back(Vector{Rational(1)});
        for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * lin);
    }
    BinaryForm out(d);
    for (const auto& [e, c] : f.terms()) {
        const BinaryForm term = powers[0][e.x] * powers[1][e.y] * powers[2][e.z];
        for (unsigned i = 0; i <= d; ++i) out[i] += c * term[i];
    }
    return out;
}

std::array<HomPoly, 3> partials(const HomPoly& f) { return {f.partial(0), f.partial(1), f.partial(2)}; }

ProjectiveMap::ProjectiveMap(Matrix g) : g_(std::move(g)) {
    if (g_.rows() != 3 || g_.cols() != 3) throw std::invalid_argument("projective map needs a 3x3 matrix");
    auto inv = inverse(g_);
    if (!inv) throw std::invalid_argument("projective map is singular");
    inv_ = std::move(*inv);
}

ProjPoint ProjectiveMap::apply(const ProjPoint& p) const {
    const Vector v = g_.apply(Vector(p.coords().begin(), p.coords().end()));
    return ProjPoint(v[0], v[1], v[2]);
}

LinearForm ProjectiveMap::apply(const LinearForm& l) const {
    const Vector v = inv_.transpose().apply(Vector(l.coords().begin(), l.coords().end()));
    return LinearForm(v[0], v[1], v[2]);
}

HomPoly ProjectiveMap::apply(const HomPoly& f) const { return f.substitute(inv_); }

Arrangement::Arrangement(std::vector<LinearForm> lines) : lines_(std::move(lines)) {
    std::vector<LinearForm> sorted = lines_;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw std::invalid_argument("duplicate line " + dup->to_string());
}

std::optional<std::size_t> Arrangement::index_of(const LinearForm& l) const {
    const auto it = std::find(lines_.begin(), lines_.end(), l);
    if (it == lines_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - lines_.begin());
}

Arrangement Arrangement::with_line(const LinearForm& l) const {
    auto lines = lines_;
    lines.push_back(l);
    return Arrangement(std::move(lines));
}

Arrangement Arrangement::without_line(const LinearForm& l) const {
    auto lines = lines_;
    const auto it = std::find(lines.begin(), lines.end(), l);
    if (it == lines.end()) throw std::invalid_argument("line " + l.to_string() + " is not in the arrangement");
    lines.erase(it);
    return Arrangement(std::move(lines));
}

Arrangement Arrangement::transformed(const ProjectiveMap& g) const {
    std::vector<LinearForm> lines;
    lines.reserve(lines_.size());
    for (const auto& l : lines_) lines.push_back(g.apply(l));
    return Arrangement(std::move(lines));
}

HomPoly product_form(const Arrangement& arr) {
    HomPoly f = HomPoly::constant(1);
    for (const auto& l : arr.lines()) f = f * to_poly(l);
    return f;
}

std::vector<std::size_t> Lattice::points_on(std::size_t line_index) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::binary_search(points[i].lines.begin(), points[i].lines.end(), line_index)) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> Lattice::find(const ProjPoint& p) const {
    const auto it = std::lower_bound(points.begin(), points.end(), p,
                                     [](const LatticePoint& a, const ProjPoint& b) { return a.point < b; });
    if (it == points.end() || it->point != p) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
}

Lattice lattice(const Arrangement& arr) {
    if (arr.size() < 2) throw std::invalid_argument("lattice needs at least two lines");
    std::map<ProjPoint, std::vector<std::size_t>> incidences;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        for (std::size_t j = i + 1; j < arr.size(); ++j) {
            auto& s = incidences[intersection(arr[i], arr[j])];
            s.push_back(i);
            s.push_back(j);
        }
    }
    Lattice out;
    out.points.reserve(incidences.size());
    for (auto& [p, lines] : incidences) {
        std::sort(lines.begin(), lines.end());
        lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        out.points.push_back({p, std::move(lines)});
    }
    return out;
}

namespace {

std::size_t require_line(const Arrangement& arr, const LinearForm& l) {
    const auto idx = arr.index_of(l);
    if (!idx) throw std::invalid_argument("line " + l.to_string() + " is not in the arrangement");
    return *idx;
}

}  // namespace

int euler_t(const Arrangement& arr, const LinearForm& l) {
    const std::size_t idx = require_line(arr, l);
    const Lattice lat = lattice(arr);
    const auto n = lat.points_on(idx).size();
    return static_cast<int>(arr.size()) - static_cast<int>(n) - 1;
}

int weighted_triple_count(const Arrangement& arr, const LinearForm& l) {
    const std::size_t idx = require_line(arr, l);
    const Lattice lat = lattice(arr);
    int t = 0;
    for (const auto p : lat.points_on(idx)) t += static_cast<int>(lat.points[p].multiplicity()) - 2;
    return t;
}

namespace {

struct IncidenceData {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> point_of;  // point index of line pair
    std::vector<std::size_t> multiplicity;           // per point
    std::vector<std::vector<std::size_t>> signature; // sorted multiplicities of points on each line
};

IncidenceData incidence_data(const Arrangement& arr) {
    IncidenceData d;
    d.n = arr.size();
    d.point_of.assign(d.n, std::vector<std::size_t>(d.n, 0));
    d.signature.resize(d.n);
    if (d.n < 2) return d;
    const Lattice lat = lattice(arr);
    for (std::size_t p = 0; p < lat.points.size(); ++p) {
        const auto& ls = lat.points[p].lines;
        d.multiplicity.push_back(ls.size());
        for (const auto i : ls) {
            d.signature[i].push_back(ls.size());
            for (const auto j : ls) d.point_of[i][j] = p;
        }
    }
    for (auto& s : d.signature) std::sort(s.begin(), s.end());
    return d;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const IncidenceData& a, const IncidenceData& b) : a_(a), b_(b) {}

    std::optional<std::vector<std::size_t>> run() {
        if (a_.n != b_.n) return std::nullopt;
        auto sa = a_.signature;
        auto sb = b_.signature;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
        std::map<std::vector<std::size_t>, std::size_t> freq;
        for (const auto& s : a_.signature) ++freq[s];
        order_.resize(a_.n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            return freq[a_.signature[x]] < freq[a_.signature[y]];
        });
        image_.assign(a_.n, kUnassigned);
        used_.assign(a_.n, false);
        if (!extend(0)) return std::nullopt;
        return image_;
    }

private:
    static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

    bool consistent(std::size_t depth, std::size_t i, std::size_t j) const {
        for (std::size_t u = 0; u < depth; ++u) {
            const std::size_t k = order_[u];
            const std::size_t pa = a_.point_of[i][k];
            const std::size_t pb = b_.point_of[j][image_[k]];
            if (a_.multiplicity[pa] != b_.multiplicity[pb]) return false;
            for (std::size_t w = u + 1; w < depth; ++w) {
                const std::size_t l = order_[w];
                const bool on_a = a_.point_of[i][l] == pa;
                const bool on_b = b_.point_of[j][image_[l]] == pb;
                if (on_a != on_b) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == a_.n) return true;
        const std::size_t i = order_[depth];
        for (std::size_t j = 0; j < b_.n; ++j) {
            if (used_[j] || a_.signature[i] != b_.signature[j]) continue;
            if (!consistent(depth, i, j)) continue;
            image_[i] = j;
            used_[j] = true;
            if (extend(depth + 1)) return true;
            used_[j] = false;
            image_[i] = kUnassigned;
        }
        return false;
    }

    const IncidenceData& a_;
    const IncidenceData& b_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphism(const Arrangement& a1, const Arrangement& a2) {
    if (a1.size() != a2.size()) return std::nullopt;
    if (a1.size() < 2) return std::vector<std::size_t>(a1.size(), 0);
    return IsomorphismSearch(incidence_data(a1), incidence_data(a2)).run();
}

}  // namespace logbundle
