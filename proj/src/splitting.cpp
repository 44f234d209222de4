#include "logbundle/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace logbundle {

namespace {

// dim H^0 of the kernel of the restricted dual map twisted by k.
std::size_t dual_kernel_dim(const Presentation& p, const std::vector<std::vector<BinaryForm>>& restricted, int k) {
    const auto& gd = p.generator_degrees;
    std::vector<std::size_t> offset(gd.size() + 1, 0);
    for (std::size_t i = 0; i < gd.size(); ++i)
        offset[i + 1] = offset[i] + static_cast<std::size_t>(std::max(0, gd[i] + k + 1));
    const std::size_t unknowns = offset.back();
    if (unknowns == 0) return 0;
    std::size_t rows = 0;
    std::vector<std::size_t> row_offset;
    for (int e : p.relation_degrees) {
        row_offset.push_back(rows);
        rows += static_cast<std::size_t>(std::max(0, e + k + 1));
    }
    if (rows == 0) return unknowns;
    Matrix m(rows, unknowns);
    for (std::size_t j = 0; j < p.relation_degrees.size(); ++j) {
        for (std::size_t i = 0; i < gd.size(); ++i) {
            if (gd[i] + k < 0 || p.entry_degree(j, i) < 0) continue;
            const BinaryForm& r = restricted[j][i];
            const auto n = static_cast<std::size_t>(gd[i] + k);
            for (std::size_t a = 0; a <= n; ++a) {
                for (std::size_t b = 0; b <= r.degree(); ++b) {
                    if (!r[b].is_zero()) m(row_offset[j] + a + b, offset[i] + a) += r[b];
                }
            }
        }
    }
    return unknowns - rank(m);
}

// (c0 + c1 eps)^n as ascending coefficients in eps.
Vector linear_power(const Rational& c0, const Rational& c1, unsigned n) {
    Vector out{Rational(1)};
    for (unsigned i = 0; i < n; ++i) {
        Vector next(out.size() + 1);
        for (std::size_t j = 0; j < out.size(); ++j) {
            next[j] += out[j] * c0;
            next[j + 1] += out[j] * c1;
        }
        out = std::move(next);
    }
    return out;
}

std::size_t derivation_kernel_dim(const MultiRestriction& mr, unsigned e) {
    std::vector<Vector> rows;
    const std::size_t width = 2 * (e + 1);
    for (const auto& pt : mr.points) {
        const Rational& p = pt.root[0];
        const Rational& q = pt.root[1];
        // root (q, -p), transversal direction (p, q)
        std::vector<Vector> taylor;
        for (unsigned i = 0; i <= e; ++i) {
            const Vector a = linear_power(q, p, e - i);
            const Vector b = linear_power(-p, q, i);
            Vector prod(e + 1);
            for (std::size_t x = 0; x < a.size(); ++x)
                for (std::size_t y = 0; y < b.size(); ++y) prod[x + y] += a[x] * b[y];
            taylor.push_back(std::move(prod));
        }
        const auto conditions = std::min<unsigned>(static_cast<unsigned>(pt.multiplicity), e + 1);
        for (unsigned j = 0; j < conditions; ++j) {
            Vector row(width);
            for (unsigned i = 0; i <= e; ++i) {
                row[i] = p * taylor[i][j];
                row[e + 1 + i] = q * taylor[i][j];
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return width;
    return width - rank(Matrix::from_rows(rows));
}

std::uint32_t draw(std::mt19937& rng, std::uint32_t span) { return static_cast<std::uint32_t>(rng() % span); }

constexpr long kSampleBound = 9;

Rational small_int(std::mt19937& rng) {
    return Rational(static_cast<long>(draw(rng, 2 * kSampleBound + 1)) - kSampleBound);
}

}  // namespace

SplitType split_on_line(const Presentation& p, const LinearForm& l) {
    if (p.rank() != 2) throw std::invalid_argument("presentation is not of rank 2");
    std::vector<std::vector<BinaryForm>> restricted(p.relation_degrees.size());
    for (std::size_t j = 0; j < p.relation_degrees.size(); ++j) {
        for (std::size_t i = 0; i < p.generator_degrees.size(); ++i) {
            restricted[j].push_back(p.entry_degree(j, i) < 0 ? BinaryForm() : restrict_to_line(p.relations[j][i], l));
        }
    }
    const int total = -p.c1();
    const int top = *std::max_element(p.generator_degrees.begin(), p.generator_degrees.end());
    for (int k = -top; k <= std::abs(total) + std::abs(top) + 1; ++k) {
        const std::size_t dim = dual_kernel_dim(p, restricted, k);
        if (dim == 0) continue;
        const int v = -k;
        const int u = total - v;
        if (u > v) throw std::logic_error("splitting computation inconsistent");
        const std::size_t expect_v = u == v ? 2 : 1;
        const auto expect_u = static_cast<std::size_t>(v - u + 2);
        if (dim != expect_v || (u != v && dual_kernel_dim(p, restricted, -u) != expect_u))
            throw std::logic_error("kernel dimensions do not match a rank 2 splitting");
        return {u, v};
    }
    throw std::logic_error("no section found on the line");
}

int MultiRestriction::total() const {
    return std::accumulate(points.begin(), points.end(), 0,
                           [](int acc, const MultiPoint& p) { return acc + p.multiplicity; });
}

MultiRestriction ziegler(const Arrangement& arr, const LinearForm& l) {
    const auto idx = arr.index_of(l);
    if (!idx) throw std::invalid_argument("line " + l.to_string() + " is not in the arrangement");
    MultiRestriction mr{l, {}};
    if (arr.size() < 2) return mr;
    const Lattice lat = lattice(arr);
    for (std::size_t pi : lat.points_on(*idx)) {
        const auto& lp = lat.points[pi];
        const std::size_t other = lp.lines[0] == *idx ? lp.lines[1] : lp.lines[0];
        mr.points.push_back({restrict_to_line(to_poly(arr[other]), l), lp.point, static_cast<int>(lp.multiplicity()) - 1});
    }
    std::stable_sort(mr.points.begin(), mr.points.end(),
                     [](const MultiPoint& a, const MultiPoint& b) { return a.multiplicity > b.multiplicity; });
    return mr;
}

SplitType multi_exponents(const MultiRestriction& mr) {
    const int total = mr.total();
    for (int e = 0; e <= total; ++e) {
        const std::size_t dim = derivation_kernel_dim(mr, static_cast<unsigned>(e));
        if (dim == 0) continue;
        const int e2 = total - e;
        if (e2 < e) throw std::logic_error("derivation module exponents inconsistent");
        const std::size_t expect = e == e2 ? 2 : 1;
        if (dim != expect || (e != e2 && derivation_kernel_dim(mr, static_cast<unsigned>(e2)) !=
                                             static_cast<std::size_t>(e2 - e + 2)))
            throw std::logic_error("derivation module is not free of rank 2");
        return {e, e2};
    }
    throw std::logic_error("no derivation found");
}

RuleResult rule_split(const MultiRestriction& mr, int line_count) {
    std::vector<int> m;
    for (const auto& p : mr.points) m.push_back(p.multiplicity);
    std::sort(m.begin(), m.end(), std::greater<>());
    const int n = static_cast<int>(m.size());
    if (n == 0) return PositionDependent{};
    const int rest = std::accumulate(m.begin() + 1, m.end(), 0);
    if (m[0] >= rest) return SplitType{rest, m[0]};
    if (2 * n - 1 >= line_count) return SplitType{line_count - n, n - 1};
    return PositionDependent{};
}

int minimal_gap(const Presentation& p) {
    const int total = -p.c1();
    const int low = *std::min_element(p.generator_degrees.begin(), p.generator_degrees.end());
    return std::max(((total % 2) + 2) % 2, total - 2 * low);
}

std::vector<LinearForm> sample_lines(std::size_t count, unsigned seed, const std::vector<ProjPoint>& avoid,
                                     const std::optional<ProjPoint>& through) {
    std::mt19937 rng(seed);
    std::vector<LinearForm> out;
    while (out.size() < count) {
        const Rational a = small_int(rng);
        const Rational b = small_int(rng);
        const Rational c = small_int(rng);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        std::optional<LinearForm> l;
        if (through) {
            const ProjPoint q(a, b, c);
            if (q == *through) continue;
            l = join(*through, q);
        } else {
            l = LinearForm(a, b, c);
        }
        if (std::find(out.begin(), out.end(), *l) != out.end()) continue;
        if (std::any_of(avoid.begin(), avoid.end(), [&](const ProjPoint& p) { return incident(*l, p); })) continue;
        out.push_back(*l);
    }
    return out;
}

JumpReport jump_report(const Presentation& p, const std::optional<Arrangement>& arr) {
    std::optional<ProjPoint> point;
    if (const auto cls = classify(p); const auto* nf = std::get_if<NearlyFree>(&cls)) point = nf->jumping_point;

    std::vector<ProjPoint> avoid;
    if (arr && arr->size() >= 2)
        for (const auto& lp : lattice(*arr).points) avoid.push_back(lp.point);
    if (point) avoid.push_back(*point);

    JumpReport rep;
    bool have = false;
    auto consider = [&](const SplitType& s) {
        if (!have || s.gap() < rep.generic.gap()) rep.generic = s;
        have = true;
    };
    for (const auto& l : sample_lines(5, 1, avoid)) consider(split_on_line(p, l));

    auto make = [&](const LinearForm& l) {
        LineSplit ls{l, split_on_line(p, l), 0, false, point && incident(l, *point)};
        consider(ls.split);
        return ls;
    };
    if (arr)
        for (const auto& l : arr->lines()) rep.arrangement_lines.push_back(make(l));
    if (point)
        for (const auto& l : sample_lines(5, 2, {}, point)) rep.lines_through_point.push_back(make(l));

    rep.generic_confirmed = rep.generic.gap() == minimal_gap(p);
    for (auto* list : {&rep.arrangement_lines, &rep.lines_through_point}) {
        for (auto& ls : *list) {
            ls.order = (ls.split.gap() - rep.generic.gap()) / 2;
            ls.jumping = ls.split.gap() > rep.generic.gap();
        }
    }
    return rep;
}

bool free_test_one_line(const Presentation& p, const ChernData& chern, const LinearForm& l) {
    const long s = -chern.c1;
    const long disc = s * s - 4 * chern.c2;
    if (disc < 0) return false;
    const auto root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
    long r = root;
    while (r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    if (r * r != disc || (s - r) % 2 != 0) return false;
    const SplitType want{static_cast<int>((s - r) / 2), static_cast<int>((s + r) / 2)};
    return split_on_line(p, l) == want;
}

bool free_test_one_line(const HomPoly& f, const LinearForm& l) {
    return free_test_one_line(minimal_presentation(f), chern_data(f), l);
}

bool nf_test_c2_one(const Presentation& p, const LinearForm& l) {
    const int r = -p.c1();
    if (r < 0 || p.c2() != 1) throw std::invalid_argument("Chern precondition violated: need c1 = -r <= 0 and c2 = 1");
    return split_on_line(p, l) == SplitType{0, r};
}

}  // namespace logbundle
