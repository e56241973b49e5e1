#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sqtile/disjoint.hpp"
#include "sqtile/extend.hpp"
#include "sqtile/plane.hpp"
#include "sqtile/verify.hpp"

namespace sqtile {

using Json = nlohmann::ordered_json;

// Input rejection with a 1-based position, for CLI diagnostics.
class JsonInputError : public std::runtime_error {
  public:
    JsonInputError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

// Tiling document:
//   {"region": {"type":"rect","w":33,"h":32}
//              | {"type":"window","x0":..,"y0":..,"x1":..,"y1":..},
//    "squares": [{"x":0,"y":0,"s":18}, ...]}
// Field order free, unknown fields rejected, integers only. Values beyond
// 2^53 are serialized as decimal strings and accepted back in either form.
[[nodiscard]] Json tiling_to_json(const Tiling& t);
[[nodiscard]] Tiling tiling_from_json(const Json& j);
[[nodiscard]] Tiling tiling_from_string(std::string_view text);

[[nodiscard]] Json report_to_json(const VerificationReport& report);
[[nodiscard]] Json certificate_to_json(const DisjointnessCertificate& cert);
[[nodiscard]] Json counterexample_to_json(const Counterexample& ce,
                                          const std::vector<LabeledSeq>& seqs);
[[nodiscard]] Json rect_verdict_to_json(const RectVerdict& verdict);
[[nodiscard]] Json plane_verdict_to_json(const PlaneVerdict& verdict);
[[nodiscard]] Json enumerated_rect_to_json(const EnumeratedRect& rect);

[[nodiscard]] Json int_to_json(Int v);
[[nodiscard]] Int int_from_json(const Json& j);

}  // namespace sqtile
