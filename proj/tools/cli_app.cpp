#include "cli_app.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sqtile/json_io.hpp"
#include "sqtile/svg.hpp"

namespace sqtile::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const char* what) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string("cannot parse ") + what + ": \"" + text + "\"");
    }
    return value;
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
    std::vector<Int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_int(item, what));
    }
    if (values.empty()) {
        throw UsageError(std::string("empty list for ") + what);
    }
    return values;
}

// "WxH", canonicalized to w >= h with a warning when swapped.
std::pair<Int, Int> parse_rect(const std::string& text, std::ostream& err) {
    auto sep = text.find('x');
    if (sep == std::string::npos) {
        sep = text.find('X');
    }
    if (sep == std::string::npos) {
        throw UsageError("rectangle must be given as WxH, e.g. 33x32");
    }
    Int w = parse_int(text.substr(0, sep), "rect width");
    Int h = parse_int(text.substr(sep + 1), "rect height");
    if (w < 1 || h < 1) {
        throw UsageError("rectangle dimensions must be positive");
    }
    if (w < h) {
        err << "warning: rectangle " << w << "x" << h << " given with w < h; using " << h << "x"
            << w << "\n";
        std::swap(w, h);
    }
    return {w, h};
}

WindowRegion parse_window(const std::string& text) {
    auto values = parse_int_list(text, "window bounds");
    if (values.size() != 4) {
        throw UsageError("window must be x0,y0,x1,y1");
    }
    WindowRegion win{values[0], values[1], values[2], values[3]};
    if (win.x0 >= win.x1 || win.y0 >= win.y1) {
        throw UsageError("window requires x0 < x1 and y0 < y1");
    }
    return win;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void maybe_write_svg(const Tiling& t, const std::string& path) {
    if (!path.empty()) {
        write_svg_file(t, path);
    }
}

int exit_code_for(SolveStatus status) {
    switch (status) {
        case SolveStatus::found:
            return kExitOk;
        case SolveStatus::budget_exhausted:
            return kExitBudget;
        case SolveStatus::no_solution:
        case SolveStatus::area_mismatch:
            return kExitInfeasible;
    }
    return kExitInfeasible;
}

const char* status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::found:
            return "found";
        case SolveStatus::no_solution:
            return "no_solution";
        case SolveStatus::area_mismatch:
            return "area_mismatch";
        case SolveStatus::budget_exhausted:
            return "budget_exhausted";
    }
    return "unknown";
}

struct App {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    int solve_cmd(const std::string& sides_text, const std::string& rect_text,
                  std::uint64_t budget, const std::string& svg_path, bool bouwkamp) {
        auto [w, h] = parse_rect(rect_text, err);
        SquareSet set = make_square_set(parse_int_list(sides_text, "--sides"));
        SolveOptions options;
        options.node_budget = budget;
        SolveResult result = solve(set, w, h, options);
        if (result.status == SolveStatus::found) {
            emit(out, tiling_to_json(*result.tiling));
            if (bouwkamp) {
                err << bouwkamp_text(*result.tiling) << "\n";
            }
            maybe_write_svg(*result.tiling, svg_path);
        } else {
            emit(out, Json{{"found", false},
                           {"reason", status_name(result.status)},
                           {"nodes", result.nodes}});
        }
        return exit_code_for(result.status);
    }

    int verify_cmd(const std::string& input_path) {
        Tiling t = tiling_from_string(read_input(input_path, in));
        VerificationReport report = verify(t);
        emit(out, report_to_json(report));
        return report.passed ? kExitOk : kExitInfeasible;
    }

    int enumerate_cmd(int order, Int max_side, std::uint64_t budget) {
        EnumerateOptions options;
        options.node_budget = budget;
        EnumerationResult result = enumerate_perfect_rects(order, max_side, options);
        for (const auto& rect : result.rects) {
            out << enumerated_rect_to_json(rect).dump() << "\n";
        }
        if (result.budget_exhausted) {
            err << "node budget exhausted after " << result.nodes
                << " nodes; enumeration incomplete\n";
            return kExitBudget;
        }
        return kExitOk;
    }

    int witness_cmd(int odds, const std::string& target, Int scale, const std::string& svg_path) {
        if (scale < 1 || scale % 2 == 0) {
            throw UsageError("--scale must be a positive odd integer");
        }
        if (target == "plane") {
            PlaneVerdict verdict = plane_odd_count_verdict(odds);
            emit(out, plane_verdict_to_json(verdict));
            return verdict.feasibility == PlaneFeasibility::impossible ? kExitInfeasible
                                                                       : kExitOk;
        }
        if (target != "rect") {
            throw UsageError("--target must be rect or plane");
        }
        RectVerdict verdict = rect_odd_count_verdict(odds);
        if (const auto* witness = std::get_if<RectWitness>(&verdict)) {
            if (scale != 1) {
                RectWitness scaled = *witness;
                scaled.tiling = scale_tiling(witness->tiling, scale);
                std::vector<Int> sides;
                for (Int s : witness->set.sides) {
                    sides.push_back(checked_mul(s, scale));
                }
                scaled.set = make_square_set(std::move(sides));
                emit(out, rect_verdict_to_json(RectVerdict{scaled}));
                maybe_write_svg(scaled.tiling, svg_path);
            } else {
                emit(out, rect_verdict_to_json(verdict));
                maybe_write_svg(witness->tiling, svg_path);
            }
            return kExitOk;
        }
        emit(out, rect_verdict_to_json(verdict));
        return kExitInfeasible;
    }

    int pinwheel_cmd(Int odd, const std::string& window_text, const std::string& scales_text,
                     const std::string& svg_path) {
        WindowRegion window = parse_window(window_text);
        Int scales[4] = {23, 24, 25, 26};
        if (!scales_text.empty()) {
            auto values = parse_int_list(scales_text, "--scales");
            if (values.size() != 4) {
                throw UsageError("--scales needs exactly four values");
            }
            for (int i = 0; i < 4; ++i) {
                scales[i] = values[static_cast<std::size_t>(i)];
            }
        }
        Tiling patch = pinwheel_patch_scaled(odd, Region{window}, scales);
        VerificationReport report = verify(patch);
        emit(out, tiling_to_json(patch));
        maybe_write_svg(patch, svg_path);
        if (!report.passed) {
            err << "internal: patch failed verification: " << report_to_json(report).dump()
                << "\n";
            return kExitInfeasible;
        }
        return kExitOk;
    }

    int three_odds_cmd(const std::string& window_text, const std::string& svg_path) {
        WindowRegion window = parse_window(window_text);
        Tiling patch = three_odds_patch(Region{window});
        VerificationReport report = verify(patch);
        emit(out, tiling_to_json(patch));
        maybe_write_svg(patch, svg_path);
        if (!report.passed) {
            err << "internal: patch failed verification: " << report_to_json(report).dump()
                << "\n";
            return kExitInfeasible;
        }
        return kExitOk;
    }

    int disjoint_cmd(const std::vector<std::string>& seq_specs, Int horizon) {
        std::vector<LabeledSeq> seqs;
        seqs.reserve(seq_specs.size());
        for (const auto& spec : seq_specs) {
            seqs.push_back(LabeledSeq{spec, parse_seq_spec(spec)});
        }
        DisjointnessResult result = pairwise_disjoint(seqs, horizon);
        if (const auto* cert = std::get_if<DisjointnessCertificate>(&result)) {
            emit(out, certificate_to_json(*cert));
            return kExitOk;
        }
        emit(out, counterexample_to_json(std::get<Counterexample>(result), seqs));
        return kExitInfeasible;
    }

    int ratio_filter_cmd(const std::string& sides_text) {
        auto sides = parse_int_list(sides_text, "--sides");
        auto index = golden_ratio_filter(sides);
        Json j;
        j["sides"] = Json::array();
        for (Int s : sides) {
            j["sides"].push_back(int_to_json(s));
        }
        if (index) {
            j["index"] = *index;
            j["exceeds_golden_ratio"] = true;
            emit(out, j);
            return kExitInfeasible;  // growth evidence against plane tilability
        }
        j["index"] = nullptr;
        j["exceeds_golden_ratio"] = false;
        emit(out, j);
        return kExitOk;
    }

    int extend_cmd(const std::string& input_path, int steps, const std::string& svg_path) {
        if (steps < 1) {
            throw UsageError("--steps must be >= 1");
        }
        Tiling t = tiling_from_string(read_input(input_path, in));
        try {
            for (int i = 0; i < steps; ++i) {
                t = fib_extend_rect(t);
            }
        } catch (const DuplicateSideError& e) {
            emit(out, Json{{"error", "duplicate_side"}, {"side", int_to_json(e.side())}});
            return kExitInfeasible;
        }
        emit(out, tiling_to_json(t));
        maybe_write_svg(t, svg_path);
        return kExitOk;
    }

    int render_cmd(const std::string& input_path, const std::string& svg_path, bool bouwkamp) {
        Tiling t = tiling_from_string(read_input(input_path, in));
        if (bouwkamp) {
            out << bouwkamp_text(t) << "\n";
            if (!svg_path.empty()) {
                write_svg_file(t, svg_path);
            }
            return kExitOk;
        }
        if (svg_path.empty()) {
            out << render_svg(t);
        } else {
            write_svg_file(t, svg_path);
        }
        return kExitOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"perfect square tilings: solver, verifier, witnesses, plane patches"};
    app.require_subcommand(1);

    App ctx{in, out, err};

    // solve
    std::string sides_text, rect_text, svg_path;
    std::uint64_t budget = 100'000'000;
    bool bouwkamp = false;
    auto* solve_cmd = app.add_subcommand("solve", "tile a rectangle with a given square set");
    solve_cmd->add_option("--sides", sides_text, "comma-separated distinct sides")->required();
    solve_cmd->add_option("--rect", rect_text, "rectangle as WxH")->required();
    solve_cmd->add_option("--budget", budget, "search node budget");
    solve_cmd->add_option("--svg", svg_path, "write an SVG rendering to PATH");
    solve_cmd->add_flag("--bouwkamp", bouwkamp, "print row listing to stderr");

    // verify
    std::string verify_input;
    auto* verify_cmd = app.add_subcommand("verify", "check a tiling document (stdin or file)");
    verify_cmd->add_option("input", verify_input, "tiling JSON path (default stdin)");

    // enumerate
    int order = 9;
    Int max_side = 18;
    std::uint64_t enum_budget = 100'000'000;
    auto* enum_cmd = app.add_subcommand("enumerate", "list perfect squared rectangles");
    enum_cmd->add_option("--order", order, "exact number of squares")->required();
    enum_cmd->add_option("--max-side", max_side, "largest side considered")->required();
    enum_cmd->add_option("--budget", enum_budget, "search node budget");

    // witness
    int odds = 4;
    std::string target = "rect";
    Int witness_scale = 1;
    std::string witness_svg;
    auto* witness_cmd =
        app.add_subcommand("witness", "feasibility verdict / witness for an odd count");
    witness_cmd->add_option("--odds", odds, "number of odd sides")->required();
    witness_cmd->add_option("--target", target, "rect (default) or plane");
    witness_cmd->add_option("--scale", witness_scale, "odd factor applied to a rect witness");
    witness_cmd->add_option("--svg", witness_svg, "write an SVG rendering to PATH");

    // pinwheel
    Int pin_odd = 9;
    std::string pin_window, pin_scales, pin_svg;
    auto* pin_cmd = app.add_subcommand("pinwheel", "one-odd plane patch over a window");
    pin_cmd->add_option("--odd", pin_odd, "central odd side")->required();
    pin_cmd->add_option("--window", pin_window, "window as x0,y0,x1,y1")->required();
    pin_cmd->add_option("--scales", pin_scales, "four quadrant scales (default 23,24,25,26)");
    pin_cmd->add_option("--svg", pin_svg, "write an SVG rendering to PATH");

    // three-odds
    std::string three_window, three_svg;
    auto* three_cmd = app.add_subcommand("three-odds", "3,5,11 plane patch over a window");
    three_cmd->add_option("--window", three_window, "window as x0,y0,x1,y1")->required();
    three_cmd->add_option("--svg", three_svg, "write an SVG rendering to PATH");

    // disjoint
    std::vector<std::string> seq_specs;
    Int horizon = 16;
    auto* disjoint_cmd =
        app.add_subcommand("disjoint", "pairwise disjointness certificate for sequences");
    disjoint_cmd->add_option("--seq", seq_specs, "sequence spec, repeatable (>= 2)")
        ->required()
        ->expected(-2);
    disjoint_cmd->add_option("--horizon", horizon, "finite check horizon (default 16)");

    // ratio-filter
    std::string ratio_sides;
    auto* ratio_cmd =
        app.add_subcommand("ratio-filter", "golden-ratio growth screen for a side list");
    ratio_cmd->add_option("--sides", ratio_sides, "ascending comma-separated sides")->required();

    // extend
    std::string extend_input, extend_svg;
    int extend_steps = 1;
    auto* extend_cmd =
        app.add_subcommand("extend", "grow a rectangle tiling by Fibonacci steps");
    extend_cmd->add_option("input", extend_input, "tiling JSON path (default stdin)");
    extend_cmd->add_option("--steps", extend_steps, "number of growth steps (default 1)");
    extend_cmd->add_option("--svg", extend_svg, "write an SVG rendering to PATH");

    // render
    std::string render_input, render_svg_path;
    bool render_bouwkamp = false;
    auto* render_cmd = app.add_subcommand("render", "render a tiling document");
    render_cmd->add_option("input", render_input, "tiling JSON path (default stdin)");
    render_cmd->add_option("--svg", render_svg_path, "write SVG to PATH instead of stdout");
    render_cmd->add_flag("--bouwkamp", render_bouwkamp, "print row listing instead of SVG");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            return ctx.solve_cmd(sides_text, rect_text, budget, svg_path, bouwkamp);
        }
        if (verify_cmd->parsed()) {
            return ctx.verify_cmd(verify_input);
        }
        if (enum_cmd->parsed()) {
            return ctx.enumerate_cmd(order, max_side, enum_budget);
        }
        if (witness_cmd->parsed()) {
            return ctx.witness_cmd(odds, target, witness_scale, witness_svg);
        }
        if (pin_cmd->parsed()) {
            return ctx.pinwheel_cmd(pin_odd, pin_window, pin_scales, pin_svg);
        }
        if (three_cmd->parsed()) {
            return ctx.three_odds_cmd(three_window, three_svg);
        }
        if (disjoint_cmd->parsed()) {
            return ctx.disjoint_cmd(seq_specs, horizon);
        }
        if (ratio_cmd->parsed()) {
            return ctx.ratio_filter_cmd(ratio_sides);
        }
        if (extend_cmd->parsed()) {
            return ctx.extend_cmd(extend_input, extend_steps, extend_svg);
        }
        if (render_cmd->parsed()) {
            return ctx.render_cmd(render_input, render_svg_path, render_bouwkamp);
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const JsonInputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntOverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace sqtile::cli
