#include <doctest.h>

#include <random>

#include "sqtile/extend.hpp"
#include "sqtile/json_io.hpp"
#include "sqtile/svg.hpp"

using namespace sqtile;

TEST_CASE("tiling documents round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Tiling t;
        if (trial % 2 == 0) {
            t.region = RectRegion{static_cast<Int>(rng() % 50 + 1),
                                  static_cast<Int>(rng() % 50 + 1)};
        } else {
            Int x0 = static_cast<Int>(rng() % 100) - 50;
            Int y0 = static_cast<Int>(rng() % 100) - 50;
            t.region = WindowRegion{x0, y0, x0 + static_cast<Int>(rng() % 40 + 1),
                                    y0 + static_cast<Int>(rng() % 40 + 1)};
        }
        std::size_t n = rng() % 6;
        for (std::size_t i = 0; i < n; ++i) {
            t.squares.push_back(Placement{static_cast<Int>(rng() % 60) - 30,
                                          static_cast<Int>(rng() % 60) - 30,
                                          static_cast<Int>(rng() % 20 + 1)});
        }
        Tiling back = tiling_from_json(tiling_to_json(t));
        CHECK(back.region == t.region);
        CHECK(back.squares == t.squares);
    }
}

TEST_CASE("huge values survive as strings") {
    Int big = (Int{1} << 60) + 12345;
    Tiling t{WindowRegion{0, 0, big, big}, {{0, 0, big}}};
    Json doc = tiling_to_json(t);
    CHECK(doc["squares"][0]["s"].is_string());
    Tiling back = tiling_from_json(doc);
    CHECK(back.squares.front().side == big);
}

TEST_CASE("unknown fields are rejected") {
    CHECK_THROWS_AS(
        tiling_from_string(R"({"region":{"type":"rect","w":1,"h":1},"squares":[],"extra":1})"),
        JsonInputError);
    CHECK_THROWS_AS(
        tiling_from_string(R"({"region":{"type":"rect","w":1,"h":1,"pad":2},"squares":[]})"),
        JsonInputError);
    CHECK_THROWS_AS(tiling_from_string(
                        R"({"region":{"type":"rect","w":1,"h":1},"squares":[{"x":0,"y":0,"s":1,"color":"red"}]})"),
                    JsonInputError);
}

TEST_CASE("non-integers and malformed geometry are rejected") {
    CHECK_THROWS_AS(tiling_from_string(R"({"region":{"type":"rect","w":1.5,"h":1},"squares":[]})"),
                    JsonInputError);
    CHECK_THROWS_AS(
        tiling_from_string(R"({"region":{"type":"rect","w":1,"h":1},"squares":[{"x":0,"y":0,"s":0}]})"),
        JsonInputError);
    CHECK_THROWS_AS(
        tiling_from_string(R"({"region":{"type":"window","x0":4,"y0":0,"x1":4,"y1":3},"squares":[]})"),
        JsonInputError);
    CHECK_THROWS_AS(tiling_from_string(R"({"region":{"type":"disk","r":3},"squares":[]})"),
                    JsonInputError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        tiling_from_string("{\n  \"region\": {\n");
        FAIL("expected JsonInputError");
    } catch (const JsonInputError& e) {
        CHECK(e.line() >= 2);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("field order is free") {
    Tiling t = tiling_from_string(
        R"({"squares":[{"s":1,"x":0,"y":0}],"region":{"h":1,"w":1,"type":"rect"}})");
    CHECK(std::get<RectRegion>(t.region) == RectRegion{1, 1});
    CHECK(t.squares == std::vector<Placement>{{0, 0, 1}});
}

TEST_CASE("svg output is labeled, ordered, and deterministic") {
    const Tiling& moron = moron_tiling();
    std::string svg = render_svg(moron);
    CHECK(svg.find("viewBox=\"0 0 33 32\"") != std::string::npos);
    std::size_t rects = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1)) {
        ++rects;
    }
    CHECK(rects == 9);
    CHECK(svg.find(">18<") != std::string::npos);  // labels carry the side length
    CHECK(render_svg(moron) == svg);

    Tiling unit{RectRegion{1, 1}, {{0, 0, 1}}};
    std::string tiny = render_svg(unit);
    CHECK(tiny.find("viewBox=\"0 0 1 1\"") != std::string::npos);
    CHECK(tiny.find("<rect") != std::string::npos);
}

TEST_CASE("a pinwheel rendering labels exactly one odd side") {
    Tiling patch = pinwheel_patch(9, Region{WindowRegion{-400, -400, 400, 400}});
    std::string svg = render_svg(patch);
    int odd_labels = 0;
    for (const auto& p : patch.squares) {
        if (p.side % 2 != 0) {
            ++odd_labels;
            CHECK(svg.find(">" + std::to_string(p.side) + "<") != std::string::npos);
        }
    }
    CHECK(odd_labels == 1);
}

TEST_CASE("report serialization names each violation kind") {
    VerificationReport gap{false, GapViolation{3, 4}, {}};
    CHECK(report_to_json(gap)["violation"]["kind"] == "gap");
    VerificationReport overlap{false, OverlapViolation{0, 2}, {5}};
    Json j = report_to_json(overlap);
    CHECK(j["violation"]["kind"] == "overlap");
    CHECK(j["odd_count"] == 1);
    VerificationReport dup{false, DuplicateSideViolation{7}, {7}};
    CHECK(report_to_json(dup)["violation"]["kind"] == "duplicate_side");
    VerificationReport oor{false, OutOfRegionViolation{1}, {}};
    CHECK(report_to_json(oor)["violation"]["kind"] == "out_of_region");
    VerificationReport ok{true, std::nullopt, {1, 7}};
    CHECK(report_to_json(ok)["violation"].is_null());
}
