#include "logbundle/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace logbundle {

namespace {

LinearForm line(const Rational& a, const Rational& b, const Rational& c) { return LinearForm(a, b, c); }

Free require_free(const Arrangement& arr) {
    const auto cls = classify(product_form(arr));
    if (const auto* f = std::get_if<Free>(&cls)) return *f;
    throw std::invalid_argument("arrangement is not free");
}

int int_param(const Params& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter " + name);
    if (!it->second.is_integer()) throw std::invalid_argument("parameter " + name + " must be an integer");
    return static_cast<int>(it->second.num().get_si());
}

Rational rational_param(const Params& params, const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("missing parameter " + name);
    return it->second;
}

Arrangement b3() {
    return Arrangement({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 0, -1), line(1, 0, 1), line(0, 1, -1),
                        line(0, 1, 1), line(1, -1, 0), line(1, 1, 0)});
}

// Binary form in (x, y) viewed with s = x, t = y.
BinaryForm as_binary(const HomPoly& g) {
    const unsigned n = g.degree();
    BinaryForm out(n);
    for (const auto& [e, c] : g.terms()) {
        if (e.z != 0) throw std::invalid_argument("form depends on z");
        out[n - e.x] = c;
    }
    return out;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0 || n > mpz_class("1000000000000")) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// Rational roots (s:t) of a nonzero binary form, each once.
std::vector<std::pair<Rational, Rational>> rational_roots(const BinaryForm& f) {
    std::vector<std::pair<Rational, Rational>> out;
    const unsigned e = f.degree();
    unsigned lead = 0;
    while (lead <= e && f[lead].is_zero()) ++lead;
    if (lead > e) return out;
    if (lead > 0) out.emplace_back(1, 0);  // t = 0 gives the leading zero coefficients
    unsigned tail = e;
    while (f[tail].is_zero()) --tail;
    if (tail < e) out.emplace_back(0, 1);
    // remaining roots r = s/t of sum c_i r^(e-i), i in [lead, tail]
    mpz_class l = 1;
    for (unsigned i = lead; i <= tail; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f[i].den().get_mpz_t());
    std::vector<mpz_class> c;
    for (unsigned i = lead; i <= tail; ++i) c.push_back((f[i] * Rational(l)).num());
    // polynomial in r with leading coefficient c.front() and constant term c.back()
    if (c.size() < 2) return out;
    for (const auto& p : divisors(c.back())) {
        for (const auto& q : divisors(c.front())) {
            for (int sign : {1, -1}) {
                const Rational r = Rational(mpz_class(sign * p), q);
                Rational acc;
                for (const auto& coef : c) acc = acc * r + Rational(coef);
                if (acc.is_zero() &&
                    std::find(out.begin(), out.end(), std::pair<Rational, Rational>{r, 1}) == out.end())
                    out.emplace_back(r, 1);
            }
        }
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> pencil_grid(long bound) {
    std::vector<std::pair<Rational, Rational>> out{{1, 0}, {0, 1}};
    for (long height = 1; height <= bound; ++height) {
        for (long q = 1; q <= height; ++q) {
            for (long p = -height; p <= height; ++p) {
                if (p == 0 || std::max(std::labs(p), q) != height || std::gcd(p, q) != 1) continue;
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

std::vector<LinearForm> line_grid(long bound) {
    std::vector<LinearForm> out;
    std::set<LinearForm> seen;
    for (long height = 1; height <= bound; ++height) {
        for (long a = -height; a <= height; ++a)
            for (long b = -height; b <= height; ++b)
                for (long c = -height; c <= height; ++c) {
                    if (c == 0 || std::max({std::labs(a), std::labs(b), std::labs(c)}) != height) continue;
                    const LinearForm l(a, b, c);
                    if (seen.insert(l).second) out.push_back(l);
                }
    }
    return out;
}

}  // namespace

std::string Prediction::to_string() const {
    switch (kind) {
        case Kind::NearlyFree: return "NearlyFree(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::Free: return "Free";
        case Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

Prediction predict_delete(const Arrangement& arr, const Free& ex, const LinearForm& l) {
    Prediction p;
    p.t = euler_t(arr, l);
    if (p.t == ex.b) {
        p.kind = Prediction::Kind::NearlyFree;
        p.a = ex.a;
        p.b = ex.b;
        p.rule = "deletion with t = b";
    } else if (p.t == ex.a - 1 || p.t == ex.b - 1) {
        p.kind = Prediction::Kind::Free;
        p.rule = "deletion with t in {a-1, b-1}";
    } else {
        p.rule = "no rule applies";
    }
    return p;
}

Prediction predict_delete(const Arrangement& arr, const LinearForm& l) {
    if (!arr.contains(l)) throw std::invalid_argument("line " + l.to_string() + " is not in the arrangement");
    return predict_delete(arr, require_free(arr), l);
}

Prediction predict_add(const Arrangement& arr, const Free& ex, const LinearForm& l) {
    if (arr.contains(l)) throw std::invalid_argument("line " + l.to_string() + " is already in the arrangement");
    Prediction p;
    p.t = euler_t(arr.with_line(l), l);
    if (p.t == ex.a - 1) {
        p.kind = Prediction::Kind::NearlyFree;
        p.a = ex.a + 1;
        p.b = ex.b + 1;
        p.rule = "addition with t = a-1";
    } else {
        p.rule = "no rule applies";
    }
    return p;
}

Prediction predict_add(const Arrangement& arr, const LinearForm& l) {
    if (arr.contains(l)) throw std::invalid_argument("line " + l.to_string() + " is already in the arrangement");
    return predict_add(arr, require_free(arr), l);
}

Arrangement family_C0(int a, int b) {
    if (a < 1 || a > b) throw std::invalid_argument("family C0 needs 1 <= a <= b");
    std::vector<LinearForm> lines{line(0, 0, 1)};
    for (int i = 0; i < b; ++i) lines.push_back(line(1, 0, -i));
    for (int j = 0; j <= a - 2; ++j) lines.push_back(line(0, 1, -j));
    lines.push_back(line(1, -1, 0));
    return Arrangement(std::move(lines));
}

Arrangement family_deletion(int a, int b) {
    if (a < 2 || a > b) throw std::invalid_argument("deletion family needs 2 <= a <= b");
    return family_C0(a, b).without_line(line(1, 0, 0));
}

AdditionResult family_addition_search(int a, int b) {
    if (a < 2 || a > b) throw std::invalid_argument("addition family needs 2 <= a <= b");
    const Arrangement base = family_C0(a, b);
    const Lattice lat = lattice(base);
    std::set<LinearForm> tried;
    auto admissible = [&](const LinearForm& l) {
        if (base.contains(l) || !tried.insert(l).second) return false;
        return euler_t(base.with_line(l), l) == a - 1;
    };

    std::vector<ProjPoint> doubles;
    std::vector<ProjPoint> all;
    for (const auto& p : lat.points) {
        all.push_back(p.point);
        if (p.multiplicity() == 2) doubles.push_back(p.point);
    }
    // pairs of double points, then pairs of arbitrary points
    for (const auto* pts : {&doubles, &all}) {
        for (std::size_t i = 0; i < pts->size(); ++i)
            for (std::size_t j = i + 1; j < pts->size(); ++j) {
                const LinearForm l = join((*pts)[i], (*pts)[j]);
                if (admissible(l)) return {base.with_line(l), l};
            }
    }
    // one lattice point and a fixed direction
    const std::vector<ProjPoint> directions{{1, 2, 0}, {2, 1, 0}, {1, -2, 0}, {2, -1, 0}, {1, 3, 0}, {3, 1, 0},
                                            {2, 3, 0}, {3, 2, 0}, {1, -3, 0}, {3, -1, 0}};
    for (const auto& p : all)
        for (const auto& d : directions) {
            if (p == d) continue;
            const LinearForm l = join(p, d);
            if (admissible(l)) return {base.with_line(l), l};
        }
    for (const auto& l : line_grid(4))
        if (admissible(l)) return {base.with_line(l), l};
    throw std::runtime_error("no admissible line");
}

std::vector<std::string> named_example_ids() {
    return {"b3", "ex1", "exline", "exline_shift", "exinout", "conic_pencil", "c0", "deletion", "addition"};
}

NamedObject named_example(const std::string& id, const Params& params) {
    if (id == "b3") return b3();
    if (id == "ex1") {
        const Rational t = rational_param(params, "t");
        return b3().with_line(line(1, t, -(Rational(1) + t)));
    }
    if (id == "exline") {
        return Arrangement({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 0, -1), line(1, 0, 1), line(0, 1, -1),
                            line(0, 1, 1), line(1, -1, 0), line(1, -1, 2)});
    }
    if (id == "exline_shift") {
        return Arrangement({line(2, 0, 1), line(0, 2, 1), line(0, 0, 1), line(1, 0, -1), line(1, 0, 1), line(0, 1, -1),
                            line(0, 1, 1), line(1, -1, 0), line(1, -1, 2)});
    }
    if (id == "exinout") {
        const Rational t = rational_param(params, "t");
        return Arrangement({line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 0, -1), line(1, 0, -2), line(1, 0, -t),
                            line(0, 1, -1), line(0, 1, -2), line(0, 1, -(t + Rational(1))), line(1, -1, 0),
                            line(1, -1, 1)});
    }
    if (id == "conic_pencil") {
        const HomPoly x = HomPoly::x();
        const HomPoly y = HomPoly::y();
        const HomPoly z = HomPoly::z();
        return (x * x - z * z) * (y * y - z * z) * (x * x + y * y - (z * z).scaled(2));
    }
    if (id == "c0") return family_C0(int_param(params, "a"), int_param(params, "b"));
    if (id == "deletion") return family_deletion(int_param(params, "a"), int_param(params, "b"));
    if (id == "addition") return family_addition(int_param(params, "a"), int_param(params, "b"));
    throw std::invalid_argument("unknown family " + id);
}

Presentation KernelBundleSpec::presentation() const {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return generator_degrees[i] < generator_degrees[j]; });
    std::vector<int> degrees;
    std::vector<HomPoly> column;
    for (std::size_t i : order) {
        degrees.push_back(generator_degrees[i]);
        column.push_back(entries[i]);
    }
    return make_presentation(std::move(degrees), {relation_degree}, {std::move(column)});
}

Presentation canonical_nf(int a, int b, const ProjPoint& p) {
    if (a > b) throw std::invalid_argument("canonical bundle needs a <= b");
    // g e3 = p; the other columns are the standard vectors off the last nonzero coordinate
    std::size_t k = 2;
    while (p[k].is_zero()) --k;
    Matrix g(3, 3);
    std::size_t col = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k) continue;
        g(i, col++) = 1;
    }
    for (std::size_t i = 0; i < 3; ++i) g(i, 2) = p[i];
    const ProjectiveMap map(g);
    const auto power = static_cast<unsigned>(b - a + 1);
    std::vector<HomPoly> column{map.apply(HomPoly::z().pow(power)), map.apply(HomPoly::x()), map.apply(HomPoly::y())};
    return make_presentation({a, b, b}, {b + 1}, {std::move(column)});
}

KernelBundleSpec stable_exceptional(const HomPoly& f) {
    if (f.degree() != 3) throw std::invalid_argument("stable exceptional bundle needs a cubic");
    if (f.evaluate({0, 0, 1}).is_zero()) throw std::invalid_argument("common zero at P");
    const HomPoly x = HomPoly::x();
    const HomPoly y = HomPoly::y();
    return {{f, x * x, y * y}, {1, 2, 2}, 4};
}

KernelBundleSpec pencil_bundle(const HomPoly& g, const HomPoly& h, const HomPoly& f) {
    const int n = static_cast<int>(g.degree());
    return {{f, g, h}, {n - 1, 2, 2}, n + 2};
}

SecantSearch three_secant_search(const HomPoly& g, const HomPoly& h, const HomPoly& f) {
    const unsigned n = g.degree();
    if (h.degree() != n) throw std::invalid_argument("pencil members must have equal degree");
    if (n < 3) throw std::invalid_argument("pencil degree must be at least 3");
    const BinaryForm gb = as_binary(g);
    const BinaryForm hb = as_binary(h);
    if (gb.is_zero() || hb.is_zero() || gcd_degree(gb, hb) > 0) throw std::invalid_argument("g and h share a factor");
    if (f.degree() != 3) throw std::invalid_argument("f must be a cubic");
    if (f.evaluate({0, 0, 1}).is_zero()) throw std::invalid_argument("common zero at P");

    constexpr long kPencilBound = 20;
    constexpr long kLineBound = 3;
    SecantSearch out;
    out.budget = "pencil |num|,den <= " + std::to_string(kPencilBound) + "; line grid |coef| <= " +
                 std::to_string(kLineBound) + " plus joins of rational scheme points";
    const ProjPoint apex(0, 0, 1);
    const auto grid_lines = line_grid(kLineBound);

    for (const auto& [lambda, mu] : pencil_grid(kPencilBound)) {
        const HomPoly member = g.scaled(lambda) + h.scaled(mu);
        // rational points of {member = f = 0}: along each rational line through the apex
        std::vector<ProjPoint> scheme;
        for (const auto& [x0, y0] : rational_roots(as_binary(member))) {
            const LinearForm through = line(y0, -x0, 0);
            const auto [p1, p2] = parametrization(through);
            for (const auto& [s, t] : rational_roots(restrict_to_line(f, through))) {
                scheme.emplace_back(s * p1[0] + t * p2[0], s * p1[1] + t * p2[1], s * p1[2] + t * p2[2]);
            }
        }
        std::vector<LinearForm> candidates;
        for (std::size_t i = 0; i < scheme.size(); ++i)
            for (std::size_t j = i + 1; j < scheme.size(); ++j)
                if (scheme[i] != scheme[j]) candidates.push_back(join(scheme[i], scheme[j]));
        candidates.insert(candidates.end(), grid_lines.begin(), grid_lines.end());
        for (const auto& l : candidates) {
            if (incident(l, apex)) continue;
            const int len = gcd_degree(restrict_to_line(member, l), restrict_to_line(f, l));
            if (len >= 3) {
                out.witness = SecantWitness{lambda, mu, l, len};
                return out;
            }
        }
    }
    out.budget = "none found (budget): " + out.budget;
    return out;
}

}  // namespace logbundle
