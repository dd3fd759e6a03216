#include "racg/report.hpp"

#include "racg/errors.hpp"

namespace racg {

  Format parse_format(std::string_view name) {
    if (name == "json") {
      return Format::json;
    } else if (name == "dot") {
      return Format::dot;
    }
    throw FormatError("unknown format \"" + std::string(name)
                      + "\" (expected json or dot)");
  }

  Json to_json(DefiningGraph const& graph) {
    Json doc;
    doc["vertices"] = graph.labels();
    auto& edges     = doc["edges"] = Json::array();
    for (auto [a, b] : graph.edges()) {
      edges.push_back(Json::array({graph.label(a), graph.label(b)}));
    }
    return doc;
  }

  Json to_json(Cube const& cube, DefiningGraph const& graph) {
    Json doc;
    doc["base"] = format_word(graph, cube.base);
    doc["axis"] = format_set(graph, cube.axis.members());
    return doc;
  }

  Json to_json(Involution const& inv, DefiningGraph const& graph) {
    Json doc;
    doc["gamma"]  = format_word(graph, inv.element);
    doc["clique"] = format_set(graph, inv.clique.members());
    doc["n"]      = inv.n;
    return doc;
  }

  Json to_json(FixedPointReport const& report,
               Involution const&       inv,
               DefiningGraph const&    graph) {
    Json doc;
    doc["gamma"]  = format_word(graph, inv.element);
    doc["clique"] = format_set(graph, inv.clique.members());
    auto& loci    = doc["loci"] = Json::array();
    for (auto const& l : report.loci) {
      auto entry         = to_json(l.cube, graph);
      entry["dimension"] = l.dimension;
      loci.push_back(std::move(entry));
    }
    doc["unique_point"]    = report.unique_point;
    doc["radius_examined"] = report.radius_examined;
    return doc;
  }

  Json to_json(DisplacementProfile const& profile,
               Involution const&          inv,
               Ball const&                ball) {
    Json doc;
    doc["gamma"]           = format_word(ball.graph(), inv.element);
    doc["radius"]          = ball.radius();
    doc["reliable_radius"] = ball.reliable_radius();
    auto& spheres          = doc["spheres"] = Json::array();
    for (auto const& s : profile.spheres) {
      Json entry;
      entry["radius"] = s.radius;
      entry["count"]  = s.count;
      if (s.count == 0) {
        entry["min"] = entry["max"] = entry["mean"] = nullptr;
      } else {
        entry["min"]  = s.min;
        entry["max"]  = s.max;
        entry["mean"] = s.mean;
      }
      spheres.push_back(std::move(entry));
    }
    doc["min_non_decreasing"] = profile.min_non_decreasing();
    return doc;
  }

  Json to_json(Certificate const& cert) {
    Json doc;
    doc["graph"]                 = to_json(cert.graph);
    doc["radius"]                = cert.radius;
    doc["reliable_radius"]       = cert.reliable_radius;
    doc["gamma"]                 = format_word(cert.graph, cert.gamma);
    doc["clique"]                = format_set(cert.graph, cert.clique.members());
    doc["order_two"]             = cert.order_two;
    doc["unique_fixed_point"]    = cert.unique_fixed_point;
    doc["antipodal"]             = cert.antipodal;
    doc["displacement_monotone"] = cert.displacement_monotone;
    doc["boundary_note"]         = cert.boundary_note ? Json(*cert.boundary_note)
                                                      : Json(nullptr);
    doc["verdict"]               = cert.verdict ? "pass" : "fail";
    return doc;
  }

  Json to_json(FlagReport const& report, DefiningGraph const& graph) {
    Json doc;
    doc["flag"]             = report.flag;
    doc["vertices_checked"] = report.vertices_checked;
    auto& violations        = doc["violations"] = Json::array();
    for (auto const& v : report.violations) {
      Json entry;
      entry["vertex"]     = format_word(graph, v.vertex);
      entry["directions"] = format_set(graph, v.directions);
      violations.push_back(std::move(entry));
    }
    return doc;
  }

  Json ball_summary(Ball const& ball) {
    Json doc;
    doc["radius"]          = ball.radius();
    doc["reliable_radius"] = ball.reliable_radius();
    doc["vertex_count"]    = ball.vertices().size();
    auto& spheres          = doc["sphere_sizes"] = Json::array();
    for (std::size_t r = 0; r <= ball.radius(); ++r) {
      auto [first, last] = ball.sphere_range(r);
      spheres.push_back(last - first);
    }
    doc["cubes_by_dimension"] = ball.cube_census();
    doc["cell_count"]         = ball.cubes().size();
    doc["links_flag"]         = to_json(links_flag_check(ball), ball.graph());
    return doc;
  }

  std::string format_report(Json const& report, Format format) {
    if (format != Format::json) {
      throw FormatError("this report has no dot form; use json");
    }
    return report.dump(2) + "\n";
  }

  std::string format_report(Ball const& ball, Format format) {
    return export_complex(ball, format == Format::json ? "json" : "dot");
  }

}  // namespace racg
