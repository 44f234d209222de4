#include "logbundle/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace logbundle {

namespace {

Rational parse_rational(const Json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw InputError("expected a rational string, got " + v.dump());
}

HomPoly parse_curve(const Json& terms) {
    if (!terms.is_array() || terms.empty()) throw InputError("curve must be a non-empty array of terms");
    std::optional<unsigned> degree;
    HomPoly f;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("coef") || !t.contains("exp")) throw InputError("curve term needs coef and exp");
        const auto& e = t.at("exp");
        if (!e.is_array() || e.size() != 3) throw InputError("exp must have three entries");
        Exponent ex;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!e[i].is_number_integer() || e[i].get<long>() < 0) throw InputError("exponents must be non-negative integers");
        }
        ex.x = e[0].get<unsigned>();
        ex.y = e[1].get<unsigned>();
        ex.z = e[2].get<unsigned>();
        if (!degree) {
            degree = ex.degree();
            f = HomPoly(*degree);
        } else if (ex.degree() != *degree) {
            throw InputError("curve is not homogeneous");
        }
        f.add_term(ex, parse_rational(t.at("coef")));
    }
    if (f.is_zero()) throw InputError("curve is the zero polynomial");
    if (f.degree() == 0) throw InputError("curve has degree zero");
    return f;
}

Arrangement parse_lines(const Json& lines) {
    if (!lines.is_array()) throw InputError("lines must be an array");
    std::vector<LinearForm> forms;
    for (const auto& l : lines) {
        if (!l.is_array() || l.size() != 3) throw InputError("each line needs three coefficients");
        forms.emplace_back(parse_rational(l[0]), parse_rational(l[1]), parse_rational(l[2]));
    }
    return Arrangement(std::move(forms));
}

Json split_json(const SplitType& s) { return Json::array({s.u, s.v}); }

Json ints(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

Json line_rows(const std::vector<LineSplit>& rows, const std::optional<Arrangement>& arr) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row{{"form", to_json(r.line)},
                 {"split", split_json(r.split)},
                 {"order", r.order},
                 {"jumping", r.jumping},
                 {"contains_jumping_point", r.contains_jumping_point}};
        if (arr && arr->contains(r.line)) row["euler_t"] = euler_t(*arr, r.line);
        out.push_back(std::move(row));
    }
    return out;
}

Json lattice_json(const Arrangement& arr) {
    if (arr.size() < 2) return Json{{"lines", arr.size()}, {"points", 0}, {"multiplicities", Json::object()}};
    const Lattice lat = lattice(arr);
    std::map<std::size_t, int> counts;
    for (const auto& p : lat.points) ++counts[p.multiplicity()];
    Json mult = Json::object();
    for (const auto& [m, c] : counts) mult[std::to_string(m)] = c;
    return Json{{"lines", arr.size()}, {"points", lat.points.size()}, {"multiplicities", mult}};
}

struct Audit {
    Json checks = Json::array();
    bool passed = true;

    void check(const std::string& name, bool ok) {
        checks.push_back(Json{{"name", name}, {"ok", ok}});
        passed = passed && ok;
    }
    [[nodiscard]] Json json() const { return Json{{"passed", passed}, {"checks", checks}}; }
};

Input object_input(const NamedObject& obj, Json echo) {
    Input in;
    in.echo = std::move(echo);
    if (const auto* arr = std::get_if<Arrangement>(&obj)) {
        in.arrangement = *arr;
        in.curve = product_form(*arr);
    } else {
        in.curve = std::get<HomPoly>(obj);
    }
    return in;
}

double to_double(const Rational& r) { return r.raw().get_d(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string point_text(const ProjPoint& p) {
    const Json c = to_json(p);
    return "(" + c[0].get<std::string>() + ":" + c[1].get<std::string>() + ":" + c[2].get<std::string>() + ")";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

// Segment of a x + b y + c = 0 inside [-B, B]^2, exact.
std::optional<std::pair<std::array<Rational, 2>, std::array<Rational, 2>>> clip(const LinearForm& l, const Rational& B) {
    const Rational& a = l[0];
    const Rational& b = l[1];
    const Rational& c = l[2];
    std::vector<std::array<Rational, 2>> pts;
    auto add = [&](const Rational& x, const Rational& y) {
        if (x < -B || x > B || y < -B || y > B) return;
        const std::array<Rational, 2> p{x, y};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };
    for (const Rational& edge : {-B, B}) {
        if (!b.is_zero()) add(edge, -(a * edge + c) / b);
        if (!a.is_zero()) add(-(b * edge + c) / a, edge);
    }
    if (pts.size() < 2) return std::nullopt;
    std::sort(pts.begin(), pts.end());
    return std::make_pair(pts.front(), pts.back());
}

}  // namespace

Params parse_params(const Json& j) {
    if (!j.is_object()) throw InputError("params must be an object");
    Params p;
    for (const auto& [k, v] : j.items()) p[k] = parse_rational(v);
    return p;
}

Input parse_input(const Json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    const int present = static_cast<int>(j.contains("lines")) + static_cast<int>(j.contains("curve")) +
                        static_cast<int>(j.contains("family"));
    if (present != 1) throw InputError("exactly one of lines, curve, family must be present");
    try {
        if (j.contains("lines")) {
            const Arrangement arr = parse_lines(j.at("lines"));
            return object_input(arr, j);
        }
        if (j.contains("curve")) return object_input(parse_curve(j.at("curve")), j);
        const auto& fam = j.at("family");
        if (!fam.is_object() || !fam.contains("id") || !fam.at("id").is_string())
            throw InputError("family needs a string id");
        const Params params = fam.contains("params") ? parse_params(fam.at("params")) : Params{};
        return object_input(named_example(fam.at("id").get<std::string>(), params), j);
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

Input read_input(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_input(j);
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const ProjPoint& p) {
    const auto& c = p.coords();
    const int flip = !c[2].is_zero() ? c[2].sign() : (!c[1].is_zero() ? c[1].sign() : c[0].sign());
    Json out = Json::array();
    for (const auto& x : c) out.push_back((flip < 0 ? -x : x).to_string());
    return out;
}

Json to_json(const LinearForm& l) { return Json::array({l[0].to_string(), l[1].to_string(), l[2].to_string()}); }

Json arrangement_json(const Arrangement& arr) {
    Json lines = Json::array();
    for (const auto& l : arr.lines()) lines.push_back(to_json(l));
    return Json{{"lines", lines}};
}

Json curve_json(const HomPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"coef", c.to_string()}, {"exp", {e.x, e.y, e.z}}});
    return Json{{"curve", terms}};
}

std::string class_kind(const BundleClass& c) {
    if (std::holds_alternative<Free>(c)) return "Free";
    if (std::holds_alternative<NearlyFree>(c)) return "NearlyFree";
    return "Other";
}

namespace {

void put_class(Json& out, const BundleClass& cls) {
    out["class"] = class_kind(cls);
    if (const auto* fr = std::get_if<Free>(&cls)) {
        out["exponents"] = Json::array({fr->a, fr->b});
        out["jumping_point"] = nullptr;
    } else if (const auto* nf = std::get_if<NearlyFree>(&cls)) {
        out["exponents"] = Json::array({nf->a, nf->b});
        out["jumping_point"] = nf->jumping_point ? to_json(*nf->jumping_point) : Json(nullptr);
        if (nf->a == nf->b) out["note"] = "tangent bundle twisted";
    } else {
        out["exponents"] = nullptr;
        out["jumping_point"] = nullptr;
    }
}

std::optional<ProjPoint> point_of(const BundleClass& cls) {
    if (const auto* nf = std::get_if<NearlyFree>(&cls)) return nf->jumping_point;
    return std::nullopt;
}

}  // namespace

Json analyze(const Input& in, const ReportOptions& options) {
    using clock = std::chrono::steady_clock;
    Json timing = Json::object();
    auto lap = [&](const char* name, clock::time_point since) {
        timing[name] = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - since).count();
    };

    const HomPoly& f = in.curve;
    const int d = static_cast<int>(f.degree());
    Json out;
    out["input"] = in.echo;
    out["degree"] = d;

    auto t0 = clock::now();
    const Presentation p = minimal_presentation(f);
    const BundleClass cls = classify(p);
    lap("presentation", t0);

    put_class(out, cls);
    out["generators"] = ints(p.generator_degrees);
    out["relations"] = ints(p.relation_degrees);
    out["c1"] = p.c1();
    out["c2"] = p.c2();
    std::optional<long> tau;
    if (options.tjurina) {
        t0 = clock::now();
        tau = tjurina(f);
        lap("tjurina", t0);
        out["tjurina"] = *tau;
    } else {
        out["tjurina"] = nullptr;
    }
    out["stability"] = std::holds_alternative<OtherClass>(cls) ? Json(nullptr) : Json(to_string(stability_class(cls)));

    t0 = clock::now();
    const JumpReport rep = jump_report(p, in.arrangement);
    lap("splitting", t0);
    out["splitting"] = Json{{"generic", split_json(rep.generic)},
                            {"generic_confirmed", rep.generic_confirmed},
                            {"lines", line_rows(rep.arrangement_lines, in.arrangement)},
                            {"lines_through_point", line_rows(rep.lines_through_point, std::nullopt)}};
    if (!rep.generic_confirmed) out["splitting"]["note"] = "generic type unconfirmed";
    out["lattice"] = in.arrangement ? lattice_json(*in.arrangement) : Json(nullptr);

    Audit audit;
    audit.check("rank two", p.rank() == 2);
    audit.check("c1 equals 1 - degree", p.c1() == 1 - d);
    if (tau) audit.check("c2 equals (d-1)^2 - tjurina", p.c2() == static_cast<long>(d - 1) * (d - 1) - *tau);
    if (const auto* fr = std::get_if<Free>(&cls)) audit.check("free exponents sum to d-1", fr->a + fr->b == d - 1);
    if (const auto* nf = std::get_if<NearlyFree>(&cls)) {
        audit.check("nearly free exponents sum to d", nf->a + nf->b == d);
        audit.check("nearly free c2", p.c2() == static_cast<long>(nf->a) * nf->b - nf->a + 1);
    }
    bool sums = rep.generic.u + rep.generic.v == d - 1;
    bool orders = true;
    for (const auto* rows : {&rep.arrangement_lines, &rep.lines_through_point}) {
        for (const auto& r : *rows) {
            sums = sums && r.split.u + r.split.v == d - 1;
            const int excess = r.split.gap() - rep.generic.gap();
            orders = orders && excess >= 0 && excess % 2 == 0 && r.order == excess / 2 && r.jumping == (excess > 0);
        }
    }
    audit.check("splitting sums equal d-1", sums);
    audit.check("jumping orders are non-negative integers", orders);
    if (const auto P = point_of(cls)) {
        bool flags = true;
        for (const auto& r : rep.arrangement_lines) flags = flags && r.contains_jumping_point == incident(r.line, *P);
        audit.check("jumping point flags match incidence", flags);
    }
    if (in.arrangement && in.arrangement->size() >= 2) {
        bool identity = true;
        for (const auto& l : in.arrangement->lines())
            identity = identity && euler_t(*in.arrangement, l) == weighted_triple_count(*in.arrangement, l);
        audit.check("euler t equals weighted triple count", identity);
    }
    out["audit"] = audit.json();
    if (options.timing) out["timing_ms"] = timing;
    return out;
}

Json sweep(const std::string& family, const std::string& param, const Rational& from, const Rational& to,
           const Rational& step, const Params& fixed) {
    if (step.sign() <= 0) throw InputError("step must be positive");
    Json rows = Json::array();
    std::map<std::string, int> votes;
    std::vector<std::string> keys;
    for (Rational v = from; v <= to; v += step) {
        Params params = fixed;
        params[param] = v;
        Json row;
        row[param] = v.to_string();
        try {
            const NamedObject obj = named_example(family, params);
            const HomPoly f = std::holds_alternative<Arrangement>(obj) ? product_form(std::get<Arrangement>(obj))
                                                                       : std::get<HomPoly>(obj);
            const BundleClass cls = classify(f);
            put_class(row, cls);
            keys.push_back(class_name(cls));
            ++votes[keys.back()];
        } catch (const std::exception& e) {
            row["error"] = e.what();
            keys.emplace_back();
        }
        rows.push_back(std::move(row));
    }
    std::string generic;
    int best = 0;
    for (const auto& k : keys) {
        if (!k.empty() && votes[k] > best) {
            best = votes[k];
            generic = k;
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i]["flagged"] = keys[i] != generic;
    return rows;
}

Json construct(const std::string& family, const Params& params) {
    const NamedObject obj = named_example(family, params);
    if (const auto* arr = std::get_if<Arrangement>(&obj)) return arrangement_json(*arr);
    return curve_json(std::get<HomPoly>(obj));
}

std::string plot_svg(const Input& in, const Rational& box) {
    if (!in.arrangement) throw Unsupported("plot supports arrangements only");
    if (box.sign() <= 0) throw InputError("box must be positive");
    const Arrangement& arr = *in.arrangement;
    const Presentation p = minimal_presentation(in.curve);
    const BundleClass cls = classify(p);
    const JumpReport rep = jump_report(p, arr);
    const auto P = point_of(cls);

    const double size = 500;
    const double margin = 20;
    const double B = to_double(box);
    auto px = [&](const Rational& x) { return fmt(margin + (to_double(x) + B) / (2 * B) * size); };
    auto py = [&](const Rational& y) { return fmt(margin + (B - to_double(y)) / (2 * B) * size); };
    const std::string total = fmt(size + 2 * margin);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
        << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
    svg << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size) << "\" fill=\"white\" stroke=\"#999999\"/>\n";

    int drawn = 0;
    std::vector<std::string> notes;
    std::vector<std::string> hidden;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const LinearForm& l = arr[i];
        if (l[0].is_zero() && l[1].is_zero()) {
            notes.push_back("line " + l.to_string() + " is z=0, at infinity");
            continue;
        }
        const auto seg = clip(l, box);
        if (!seg) {
            hidden.push_back(l.to_string());
            continue;
        }
        const bool jumping = rep.arrangement_lines[i].jumping;
        svg << "<line class=\"" << (jumping ? "jumping" : "line") << "\" x1=\"" << px(seg->first[0]) << "\" y1=\""
            << py(seg->first[1]) << "\" x2=\"" << px(seg->second[0]) << "\" y2=\"" << py(seg->second[1])
            << "\" stroke=\"" << (jumping ? "#d62728" : "#1f77b4") << "\" stroke-width=\"" << (jumping ? "3" : "1.5")
            << "\"><title>" << escape(l.to_string()) << "</title></line>\n";
        ++drawn;
    }
    if (!hidden.empty()) {
        std::string s = "outside the box:";
        for (const auto& h : hidden) s += " " + h;
        notes.push_back(s);
    }
    if (drawn == 0) notes.push_back("no line meets the view box");
    if (P) {
        const auto& c = P->coords();
        const bool finite = !c[2].is_zero();
        const Rational x = finite ? c[0] / c[2] : Rational(0);
        const Rational y = finite ? c[1] / c[2] : Rational(0);
        if (finite && x >= -box && x <= box && y >= -box && y <= box) {
            svg << "<circle class=\"jumping-point\" cx=\"" << px(x) << "\" cy=\"" << py(y)
                << "\" r=\"5\" fill=\"#d62728\"><title>" << escape(point_text(*P)) << "</title></circle>\n";
        } else {
            notes.push_back("jumping point " + point_text(*P) + (finite ? " lies outside the box" : " lies at infinity"));
        }
    }
    double y = size + 2 * margin - 6;
    for (auto it = notes.rbegin(); it != notes.rend(); ++it) {
        svg << "<text x=\"" << fmt(margin + 4) << "\" y=\"" << fmt(y - margin) << "\" font-size=\"11\">" << escape(*it)
            << "</text>\n";
        y -= 14;
    }
    svg << "</svg>\n";
    return svg.str();
}

Json compare(const Input& a, const Input& b) {
    if (!a.arrangement || !b.arrangement) throw Unsupported("compare supports arrangements only");
    const BundleClass ca = classify(a.curve);
    const BundleClass cb = classify(b.curve);
    auto flags = [](const Arrangement& arr, const BundleClass& c) {
        Json out = Json::array();
        const auto P = point_of(c);
        for (const auto& l : arr.lines()) out.push_back(P && incident(l, *P));
        return out;
    };
    auto point = [](const BundleClass& c) {
        const auto P = point_of(c);
        return P ? to_json(*P) : Json(nullptr);
    };
    const Json fa = flags(*a.arrangement, ca);
    const Json fb = flags(*b.arrangement, cb);
    auto any = [](const Json& f) { return std::any_of(f.begin(), f.end(), [](const Json& v) { return v.get<bool>(); }); };
    return Json{{"lattice_isomorphic", lattice_isomorphic(*a.arrangement, *b.arrangement)},
                {"class_a", class_name(ca)},
                {"class_b", class_name(cb)},
                {"same_class", class_name(ca) == class_name(cb)},
                {"jumping_point_a", point(ca)},
                {"jumping_point_b", point(cb)},
                {"point_in_arrangement_a", any(fa)},
                {"point_in_arrangement_b", any(fb)},
                {"in_arrangement_a", fa},
                {"in_arrangement_b", fb}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace logbundle
