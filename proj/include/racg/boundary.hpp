#ifndef RACG_BOUNDARY_HPP_
#define RACG_BOUNDARY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "racg/davis.hpp"
#include "racg/involution.hpp"

namespace racg {

  // length(v^-1 gamma v): how far gamma moves the vertex v.
  [[nodiscard]] std::size_t displacement(Involution const&    inv,
                                         GroupElement const&  v,
                                         DefiningGraph const& graph);

  struct SphereDisplacement {
    std::size_t radius = 0;
    std::size_t count  = 0;
    std::size_t min    = 0;
    std::size_t max    = 0;
    double      mean   = 0;
  };

  // One entry per sphere r = 0, ..., reliable radius. Spheres past the
  // diameter of a finite group are empty and carry no min/max.
  struct DisplacementProfile {
    std::vector<SphereDisplacement> spheres;

    [[nodiscard]] bool min_non_decreasing() const;
  };

  [[nodiscard]] DisplacementProfile displacement_profile(Involution const& inv,
                                                         Ball const&       ball);

  struct Certificate {
    DefiningGraph              graph;
    std::size_t                radius          = 0;
    std::int64_t               reliable_radius = 0;
    GroupElement               gamma;
    SphericalSubset            clique;
    bool                       order_two             = false;
    bool                       unique_fixed_point    = false;
    bool                       antipodal             = false;
    bool                       displacement_monotone = false;
    std::optional<std::string> boundary_note;
    bool                       verdict = false;
  };

  inline constexpr char const* finite_group_note = "empty boundary (finite group)";
  inline constexpr char const* two_ended_note
      = "two ends (virtually infinite cyclic group), swapped by gamma";

  // Runs the whole pipeline at radius L. Needs L >= |maximum clique| so the
  // cube (1, S) lies inside the reliable radius; throws InvalidArgument
  // otherwise and propagates ResourceCapError from the ball.
  [[nodiscard]] Certificate certify(DefiningGraph const& graph,
                                    std::size_t          radius,
                                    std::size_t          max_vertices
                                    = default_max_vertices);

}  // namespace racg

#endif  // RACG_BOUNDARY_HPP_
