#include "sqtile/json_io.hpp"

#include <charconv>

namespace sqtile {

namespace {

constexpr Int kJsonSafeBound = (Int{1} << 53);

[[noreturn]] void reject(const std::string& why) { throw JsonInputError(why, 0, 0); }

void expect_keys(const Json& obj, std::initializer_list<const char*> keys,
                 const char* what) {
    if (!obj.is_object()) {
        reject(std::string(what) + " must be a JSON object");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            reject(std::string("unknown field \"") + key + "\" in " + what);
        }
    }
    for (const char* k : keys) {
        if (!obj.contains(k)) {
            reject(std::string("missing field \"") + k + "\" in " + what);
        }
    }
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Json int_to_json(Int v) {
    if (v > kJsonSafeBound || v < -kJsonSafeBound) {
        return Json(std::to_string(v));
    }
    return Json(v);
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return j.get<Int>();
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        Int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            reject("string-encoded integer is malformed: \"" + s + "\"");
        }
        return value;
    }
    reject("expected an integer (number or decimal string)");
}

Json tiling_to_json(const Tiling& t) {
    Json j;
    if (const auto* rect = std::get_if<RectRegion>(&t.region)) {
        j["region"] = Json{{"type", "rect"}, {"w", int_to_json(rect->w)}, {"h", int_to_json(rect->h)}};
    } else {
        const auto& win = std::get<WindowRegion>(t.region);
        j["region"] = Json{{"type", "window"},
                           {"x0", int_to_json(win.x0)},
                           {"y0", int_to_json(win.y0)},
                           {"x1", int_to_json(win.x1)},
                           {"y1", int_to_json(win.y1)}};
    }
    Json squares = Json::array();
    for (const auto& p : t.squares) {
        squares.push_back(Json{{"x", int_to_json(p.x)}, {"y", int_to_json(p.y)},
                               {"s", int_to_json(p.side)}});
    }
    j["squares"] = std::move(squares);
    return j;
}

Tiling tiling_from_json(const Json& j) {
    expect_keys(j, {"region", "squares"}, "tiling document");
    const Json& region = j.at("region");
    if (!region.is_object() || !region.contains("type") || !region.at("type").is_string()) {
        reject("region must be an object with a \"type\" string");
    }
    Tiling t;
    std::string type = region.at("type").get<std::string>();
    if (type == "rect") {
        expect_keys(region, {"type", "w", "h"}, "rect region");
        Int w = int_from_json(region.at("w"));
        Int h = int_from_json(region.at("h"));
        if (w < 1 || h < 1) {
            reject("rect region requires w >= 1 and h >= 1");
        }
        t.region = RectRegion{w, h};
    } else if (type == "window") {
        expect_keys(region, {"type", "x0", "y0", "x1", "y1"}, "window region");
        WindowRegion win{int_from_json(region.at("x0")), int_from_json(region.at("y0")),
                         int_from_json(region.at("x1")), int_from_json(region.at("y1"))};
        if (win.x0 >= win.x1 || win.y0 >= win.y1) {
            reject("window region requires x0 < x1 and y0 < y1");
        }
        t.region = win;
    } else {
        reject("region type must be \"rect\" or \"window\"");
    }

    const Json& squares = j.at("squares");
    if (!squares.is_array()) {
        reject("squares must be an array");
    }
    t.squares.reserve(squares.size());
    for (const Json& sq : squares) {
        expect_keys(sq, {"x", "y", "s"}, "square");
        Placement p{int_from_json(sq.at("x")), int_from_json(sq.at("y")),
                    int_from_json(sq.at("s"))};
        if (p.side < 1) {
            reject("square side must be >= 1");
        }
        t.squares.push_back(p);
    }
    return t;
}

Tiling tiling_from_string(std::string_view text) {
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw JsonInputError(
            "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col),
            line, col);
    }
    return tiling_from_json(parsed);
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["passed"] = report.passed;
    if (report.violation) {
        Json v;
        if (const auto* o = std::get_if<OverlapViolation>(&*report.violation)) {
            v = Json{{"kind", "overlap"}, {"first", o->first}, {"second", o->second}};
        } else if (const auto* g = std::get_if<GapViolation>(&*report.violation)) {
            v = Json{{"kind", "gap"}, {"x", int_to_json(g->x)}, {"y", int_to_json(g->y)}};
        } else if (const auto* d = std::get_if<DuplicateSideViolation>(&*report.violation)) {
            v = Json{{"kind", "duplicate_side"}, {"side", int_to_json(d->side)}};
        } else {
            const auto& r = std::get<OutOfRegionViolation>(*report.violation);
            v = Json{{"kind", "out_of_region"}, {"index", r.index}};
        }
        j["violation"] = std::move(v);
    } else {
        j["violation"] = nullptr;
    }
    j["odd_count"] = report.odd_sides.size();
    Json odds = Json::array();
    for (Int s : report.odd_sides) {
        odds.push_back(int_to_json(s));
    }
    j["odd_sides"] = std::move(odds);
    return j;
}

Json certificate_to_json(const DisjointnessCertificate& cert) {
    Json j;
    j["result"] = "certificate";
    j["sequences"] = cert.sequences;
    j["horizon"] = cert.horizon;
    j["prefix_check"] = cert.prefix_check;
    j["tail_proven"] = cert.tail_proven;
    j["valid"] = cert.valid();
    if (cert.tail_proven) {
        j["onset"] = cert.onset;
        Json cycle = Json::array();
        for (std::size_t k = 0; k < cert.cycle_order.size(); ++k) {
            cycle.push_back(Json{{"seq", cert.sequences[cert.cycle_order[k]]},
                                 {"offset", cert.cycle_offsets[k]}});
        }
        j["cycle"] = std::move(cycle);
        j["tail_rule"] = cert.tail_rule;
        // Each checked inequality as an integer triple: index, lhs, rhs.
        Json checks = Json::array();
        for (const auto& c : cert.base_checks) {
            checks.push_back(Json::array({c.lhs_index, int_to_json(c.lhs_value),
                                          int_to_json(c.rhs_value)}));
        }
        j["base_checks"] = std::move(checks);
        Json detail = Json::array();
        for (const auto& c : cert.base_checks) {
            detail.push_back(Json{{"lhs_seq", c.lhs_label},
                                  {"lhs_index", c.lhs_index},
                                  {"lhs", int_to_json(c.lhs_value)},
                                  {"rhs_seq", c.rhs_label},
                                  {"rhs_index", c.rhs_index},
                                  {"rhs", int_to_json(c.rhs_value)}});
        }
        j["base_checks_detail"] = std::move(detail);
    }
    return j;
}

Json counterexample_to_json(const Counterexample& ce, const std::vector<LabeledSeq>& seqs) {
    return Json{{"result", "counterexample"},
                {"value", int_to_json(ce.value)},
                {"seq_i", seqs[ce.seq_i].label},
                {"seq_j", seqs[ce.seq_j].label}};
}

Json rect_verdict_to_json(const RectVerdict& verdict) {
    if (const auto* inf = std::get_if<RectInfeasible>(&verdict)) {
        return Json{{"verdict", "infeasible"},
                    {"target", "rect"},
                    {"odd_count", inf->odd_count},
                    {"lemma", inf->lemma}};
    }
    const auto& wit = std::get<RectWitness>(verdict);
    Json sides = Json::array();
    for (Int s : wit.set.sides) {
        sides.push_back(int_to_json(s));
    }
    return Json{{"verdict", "witness"},
                {"target", "rect"},
                {"odd_count", wit.odd_count},
                {"beyond_catalog", wit.beyond_catalog},
                {"set", std::move(sides)},
                {"tiling", tiling_to_json(wit.tiling)}};
}

Json plane_verdict_to_json(const PlaneVerdict& verdict) {
    Json j;
    j["target"] = "plane";
    j["odd_count"] = verdict.odd_count;
    switch (verdict.feasibility) {
        case PlaneFeasibility::possible:
            j["verdict"] = "possible";
            j["construction"] = verdict.construction;
            break;
        case PlaneFeasibility::impossible:
            j["verdict"] = "impossible";
            j["lemma"] = verdict.lemma;
            break;
        case PlaneFeasibility::unknown:
            j["verdict"] = "unknown";
            break;
    }
    return j;
}

Json enumerated_rect_to_json(const EnumeratedRect& rect) {
    Json sides = Json::array();
    for (Int s : rect.set.sides) {
        sides.push_back(int_to_json(s));
    }
    return Json{{"w", int_to_json(rect.w)},
                {"h", int_to_json(rect.h)},
                {"set", std::move(sides)},
                {"tiling", tiling_to_json(rect.tiling)}};
}

}  // namespace sqtile
