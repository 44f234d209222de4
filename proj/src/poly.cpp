#include "logbundle/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace logbundle {

std::size_t monomial_count(int k) {
    if (k < 0) return 0;
    const auto n = static_cast<std::size_t>(k);
    return (n + 1) * (n + 2) / 2;
}

std::size_t monomial_index(const Exponent& e) {
    const std::size_t k = e.degree();
    const std::size_t dx = k - e.x;
    return dx * (dx + 1) / 2 + (k - e.x - e.y);
}

const std::vector<Exponent>& monomials(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Exponent>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<Exponent> out;
    out.reserve(monomial_count(static_cast<int>(k)));
    for (unsigned i = k + 1; i-- > 0;) {
        for (unsigned j = k - i + 1; j-- > 0;) out.push_back({i, j, k - i - j});
    }
    return cache.emplace(k, std::move(out)).first->second;
}

HomPoly HomPoly::monomial(const Exponent& e, const Rational& c) {
    HomPoly p(e.degree());
    p.add_term(e, c);
    return p;
}

HomPoly HomPoly::linear(const Rational& a, const Rational& b, const Rational& c) {
    HomPoly p(1);
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
}

HomPoly HomPoly::constant(const Rational& c) {
    HomPoly p(0);
    p.add_term({0, 0, 0}, c);
    return p;
}

HomPoly HomPoly::from_coefficients(unsigned degree, const Vector& coeffs) {
    const auto& basis = monomials(degree);
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
    HomPoly p(degree);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!coeffs[i].is_zero()) p.terms_.emplace(basis[i], coeffs[i]);
    }
    return p;
}

Rational HomPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Vector HomPoly::coefficients() const {
    Vector v(monomial_count(static_cast<int>(degree_)));
    for (const auto& [e, c] : terms_) v[monomial_index(e)] = c;
    return v;
}

void HomPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.degree() != degree_) throw std::invalid_argument("monomial degree does not match polynomial degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly HomPoly::partial(int var) const {
    if (degree_ == 0) throw std::invalid_argument("partial derivative of a constant form");
    HomPoly out(degree_ - 1);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        unsigned* slot = var == 0 ? &d.x : (var == 1 ? &d.y : &d.z);
        if (*slot == 0) continue;
        const Rational factor(static_cast<long>(*slot));
        --*slot;
        out.add_term(d, c * factor);
    }
    return out;
}

Rational HomPoly::evaluate(const Point3& p) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        sum += c * logbundle::pow(p[0], e.x) * logbundle::pow(p[1], e.y) * logbundle::pow(p[2], e.z);
    }
    return sum;
}

HomPoly HomPoly::substitute(const Matrix& m) const {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("substitution needs a 3x3 matrix");
    std::array<std::vector<HomPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        const auto r = static_cast<std::size_t>(v);
        const HomPoly lin = linear(m(r, 0), m(r, 1), m(r, 2));
        powers[r].push_back(constant(1));
        for (unsigned k = 1; k <= degree_; ++k) powers[r].push_back(powers[r].back() * lin);
    }
    HomPoly out(degree_);
    for (const auto& [e, c] : terms_) {
        out += (powers[0][e.x] * powers[1][e.y] * powers[2][e.z]).scaled(c);
    }
    return out;
}

HomPoly HomPoly::scaled(const Rational& c) const {
    HomPoly out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

HomPoly HomPoly::pow(unsigned k) const {
    HomPoly out = constant(1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool is_one = e.degree() > 0 && (c == Rational(1) || c == Rational(-1));
        if (c.sign() < 0) {
            os << (first ? "-" : " - ");
        } else if (!first) {
            os << " + ";
        }
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (!is_one) os << mag.to_string();
        bool need_star = !is_one;
        const std::array<std::pair<char, unsigned>, 3> vars{{{'x', e.x}, {'y', e.y}, {'z', e.z}}};
        for (const auto& [name, p] : vars) {
            if (p == 0) continue;
            if (need_star) os << '*';
            os << name;
            if (p > 1) os << '^' << p;
            need_star = true;
        }
    }
    return os.str();
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly out(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, ca * cb);
        }
    }
    return out;
}

BinaryForm::BinaryForm(Vector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BinaryForm BinaryForm::linear(const Rational& a, const Rational& b) { return BinaryForm(Vector{a, b}); }

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::evaluate(const Rational& s, const Rational& t) const {
    Rational sum;
    const unsigned e = degree();
    for (unsigned i = 0; i <= e; ++i) {
        if (!coeffs_[i].is_zero()) sum += coeffs_[i] * logbundle::pow(s, e - i) * logbundle::pow(t, i);
    }
    return sum;
}

BinaryForm BinaryForm::pow(unsigned k) const {
    BinaryForm out(Vector{Rational(1)});
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].to_string();
    os << ']';
    return os.str();
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("adding binary forms of different degree");
    BinaryForm out = a;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

namespace {

// Univariate polynomials, ascending powers, trailing zeros trimmed.
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Splits a nonzero form into (multiplicity of the root t = 0, dehomogenized polynomial in s).
std::pair<unsigned, Univariate> dehomogenize(const BinaryForm& f) {
    const unsigned e = f.degree();
    unsigned lead = 0;
    while (f[lead].is_zero()) ++lead;
    Univariate p(e - lead + 1);
    for (unsigned i = lead; i <= e; ++i) p[e - i] = f[i];
    return {lead, p};
}

}  // namespace

int gcd_degree(const BinaryForm& a, const BinaryForm& b) {
    const bool za = a.is_zero();
    const bool zb = b.is_zero();
    if (za && zb) return -1;
    if (za) return static_cast<int>(b.degree());
    if (zb) return static_cast<int>(a.degree());
    const auto [ma, pa] = dehomogenize(a);
    const auto [mb, pb] = dehomogenize(b);
    return static_cast<int>(std::min(ma, mb) + univariate_gcd_degree(pa, pb));
}

}  // namespace logbundle
