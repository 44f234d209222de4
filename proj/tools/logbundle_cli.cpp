#include "logbundle/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace logbundle;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kDegreeBound = 3, kUnsupported = 4 };

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

Rational rational_arg(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

void require_family(const std::string& id) {
    const auto ids = named_example_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown family " + id);
}

Params params_arg(const std::string& text) {
    if (text.empty()) return {};
    try {
        return parse_params(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("--params: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--params: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logarithmic bundles of plane curves and line arrangements"};
    app.require_subcommand(1);

    std::string input, output, second;
    bool timing = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "classify and write a JSON report");
    analyze_cmd->add_option("-i,--input", input, "arrangement, curve or family file")->required();
    analyze_cmd->add_option("-o,--output", output, "report path (stdout when omitted)");
    analyze_cmd->add_flag("--timing", timing, "include wall-clock timings");

    std::string family, param, from, to, step, params_text;
    auto* sweep_cmd = app.add_subcommand("sweep", "classify a family over a rational grid");
    sweep_cmd->add_option("--family", family)->required();
    sweep_cmd->add_option("--param", param)->required();
    sweep_cmd->add_option("--from", from)->required();
    sweep_cmd->add_option("--to", to)->required();
    sweep_cmd->add_option("--step", step)->required();
    sweep_cmd->add_option("--params", params_text, "fixed parameters as a JSON object");
    sweep_cmd->add_option("-o,--output", output);

    std::optional<int> a, b;
    auto* construct_cmd = app.add_subcommand("construct", "emit the arrangement of a named family");
    construct_cmd->add_option("--family", family)->required();
    auto* a_opt = construct_cmd->add_option("--a", a);
    auto* b_opt = construct_cmd->add_option("--b", b);
    auto* p_opt = construct_cmd->add_option("--params", params_text, "parameters as a JSON object");
    a_opt->excludes(p_opt);
    b_opt->excludes(p_opt);
    construct_cmd->add_option("-o,--output", output);

    std::string box = "5";
    auto* plot_cmd = app.add_subcommand("plot", "SVG of an arrangement in the chart z=1");
    plot_cmd->add_option("-i,--input", input)->required();
    plot_cmd->add_option("-o,--output", output);
    plot_cmd->add_option("--box", box, "half width of the square view");

    auto* compare_cmd = app.add_subcommand("compare", "lattice isomorphism and both classes");
    compare_cmd->add_option("first", input)->required();
    compare_cmd->add_option("second", second)->required();
    compare_cmd->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    Json result;
    std::string text;
    try {
        if (*analyze_cmd) {
            const Input in = read_input(input);
            ReportOptions options;
            options.timing = timing;
            result = analyze(in, options);
            text = dump(result);
        } else if (*sweep_cmd) {
            require_family(family);
            const Rational lo = rational_arg(from), hi = rational_arg(to), dt = rational_arg(step);
            const Params fixed = params_arg(params_text);
            text = dump(sweep(family, param, lo, hi, dt, fixed));
        } else if (*construct_cmd) {
            require_family(family);
            Params params = params_arg(params_text);
            if (a) params["a"] = *a;
            if (b) params["b"] = *b;
            try {
                text = dump(construct(family, params));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        } else if (*plot_cmd) {
            const Input in = read_input(input);
            const Rational half = rational_arg(box);
            text = plot_svg(in, half);
        } else if (*compare_cmd) {
            const Input in_a = read_input(input);
            const Input in_b = read_input(second);
            text = dump(compare(in_a, in_b));
        }
        write_file(output, text);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DegreeBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDegreeBound;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    if (*analyze_cmd && !result["audit"]["passed"].get<bool>()) {
        std::cerr << "error: report failed its self-audit\n";
        return kFailure;
    }
    return kOk;
}
