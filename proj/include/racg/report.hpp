#ifndef RACG_REPORT_HPP_
#define RACG_REPORT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "racg/boundary.hpp"
#include "racg/davis.hpp"
#include "racg/involution.hpp"

namespace racg {

  enum class Format { json, dot };

  // Throws FormatError for anything but "json" and "dot".
  [[nodiscard]] Format parse_format(std::string_view name);

  using Json = nlohmann::ordered_json;

  [[nodiscard]] Json to_json(DefiningGraph const& graph);
  [[nodiscard]] Json to_json(Involution const& inv, DefiningGraph const& graph);
  [[nodiscard]] Json to_json(FixedPointReport const& report,
                             Involution const&       inv,
                             DefiningGraph const&    graph);
  [[nodiscard]] Json to_json(DisplacementProfile const& profile,
                             Involution const&          inv,
                             Ball const&                ball);
  [[nodiscard]] Json to_json(Certificate const& cert);
  [[nodiscard]] Json to_json(FlagReport const& report, DefiningGraph const& graph);
  [[nodiscard]] Json to_json(Cube const& cube, DefiningGraph const& graph);

  // Radius, sphere sizes, cube census and the link check.
  [[nodiscard]] Json ball_summary(Ball const& ball);

  // Canonical text: keys in insertion order, two-space indent, trailing
  // newline. Reports only have a JSON form; dot throws FormatError.
  [[nodiscard]] std::string format_report(Json const& report, Format format);

  // Balls support both: json is the export schema, dot the 1-skeleton.
  [[nodiscard]] std::string format_report(Ball const& ball, Format format);

}  // namespace racg

#endif  // RACG_REPORT_HPP_
