#include "racg/boundary.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "racg/errors.hpp"

namespace racg {

  std::size_t displacement(Involution const&    inv,
                           GroupElement const&  v,
                           DefiningGraph const& graph) {
    return length(conjugate(v, inv.element, graph));
  }

  bool DisplacementProfile::min_non_decreasing() const {
    std::optional<std::size_t> previous;
    for (auto const& s : spheres) {
      if (s.count == 0) {
        continue;
      }
      if (previous && s.min < *previous) {
        return false;
      }
      previous = s.min;
    }
    return true;
  }

  DisplacementProfile displacement_profile(Involution const& inv, Ball const& ball) {
    DisplacementProfile profile;
    if (ball.reliable_radius() < 0) {
      return profile;
    }
    auto const top = static_cast<std::size_t>(ball.reliable_radius());
    for (std::size_t r = 0; r <= top; ++r) {
      SphereDisplacement stats;
      stats.radius      = r;
      std::size_t total = 0;
      for (auto const& v : sphere(ball, r)) {
        auto const d = displacement(inv, v, ball.graph());
        stats.min    = stats.count == 0 ? d : std::min(stats.min, d);
        stats.max    = std::max(stats.max, d);
        total += d;
        ++stats.count;
      }
      stats.mean = stats.count == 0 ? 0.0
                                    : static_cast<double>(total)
                                          / static_cast<double>(stats.count);
      profile.spheres.push_back(stats);
    }
    return profile;
  }

  namespace {

    // Complement of the defining graph has exactly one edge: the group is
    // D_infinity times a finite group.
    bool is_two_ended(DefiningGraph const& graph) {
      std::size_t missing = 0;
      for (Generator a = 0; a < graph.size(); ++a) {
        missing += graph.size() - 1 - graph.neighbors(a).size();
      }
      return missing == 2;
    }

  }  // namespace

  Certificate certify(DefiningGraph const& graph,
                      std::size_t          radius,
                      std::size_t          max_vertices) {
    auto const inv = build_involution(graph);
    if (radius < inv.n) {
      throw InvalidArgument("radius " + std::to_string(radius)
                            + " is below the maximum clique size "
                            + std::to_string(inv.n)
                            + "; the cube (1, S) would not be complete");
    }
    auto const ball    = build_ball(graph, radius, max_vertices);
    auto const fixed   = fixed_loci(inv, ball);
    auto const profile = displacement_profile(inv, ball);

    Certificate cert{.graph              = graph,
                     .radius             = radius,
                     .reliable_radius    = ball.reliable_radius(),
                     .gamma              = inv.element,
                     .clique             = inv.clique,
                     .order_two          = has_order_two(inv.element, graph),
                     .unique_fixed_point = fixed.unique_point,
                     .antipodal          = antipodal_check(inv, graph),
                     .displacement_monotone = false,
                     .boundary_note         = std::nullopt,
                     .verdict               = false};
    if (graph.is_complete()) {
      cert.boundary_note         = finite_group_note;
      cert.displacement_monotone = true;
    } else {
      if (is_two_ended(graph)) {
        cert.boundary_note = two_ended_note;
      }
      cert.displacement_monotone = profile.min_non_decreasing();
    }
    cert.verdict = cert.order_two && cert.unique_fixed_point && cert.antipodal
                   && cert.displacement_monotone;
    return cert;
  }

}  // namespace racg
