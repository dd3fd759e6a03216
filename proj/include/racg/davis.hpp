#ifndef RACG_DAVIS_HPP_
#define RACG_DAVIS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "racg/element.hpp"
#include "racg/graph.hpp"
#include "racg/spherical.hpp"

namespace racg {

  // The cell g Gamma_T of the Davis complex (cube model), keyed by the
  // shortest element of the coset and the clique T.
  struct Cube {
    GroupElement    base;
    SphericalSubset axis;

    [[nodiscard]] std::size_t dimension() const noexcept {
      return axis.size();
    }

    bool operator==(Cube const&) const = default;
    friend bool operator<(Cube const& a, Cube const& b) {
      if (a.base != b.base) {
        return a.base < b.base;
      }
      return a.axis < b.axis;
    }
  };

  // Shortest element of g Gamma_T; throws InvalidArgument if T is not a
  // clique.
  [[nodiscard]] Cube canonical_cube(GroupElement const&  g,
                                    GeneratorSet         axis,
                                    DefiningGraph const& graph);

  // The 2^|T| vertices of the cube, base * s for s in Gamma_T, ordered by the
  // subset of T that s spells (canonical order).
  [[nodiscard]] std::vector<GroupElement> cube_vertices(Cube const&          cube,
                                                        DefiningGraph const& graph);

  // Finite ball of radius L around the identity: every element of length at
  // most L and every cube all of whose vertices have length at most L.
  class Ball {
   public:
    [[nodiscard]] DefiningGraph const& graph() const noexcept {
      return _graph;
    }
    [[nodiscard]] std::size_t radius() const noexcept {
      return _radius;
    }
    // radius - |maximum clique|. Every cube touching a vertex at or inside
    // this radius is present. Negative when no vertex qualifies.
    [[nodiscard]] std::int64_t reliable_radius() const noexcept {
      return _reliable_radius;
    }
    [[nodiscard]] SphericalSubset const& maximum_clique() const noexcept {
      return _max_clique;
    }

    // Shortlex order.
    [[nodiscard]] std::vector<GroupElement> const& vertices() const noexcept {
      return _vertices;
    }
    // Base-then-axis order; 0-cubes included.
    [[nodiscard]] std::vector<Cube> const& cubes() const noexcept {
      return _cubes;
    }

    [[nodiscard]] bool contains(GroupElement const& v) const {
      return _vertex_index.contains(v);
    }
    [[nodiscard]] bool contains(Cube const& c) const;

    // Index range [first, last) of the vertices of length r.
    [[nodiscard]] std::pair<std::size_t, std::size_t> sphere_range(std::size_t r) const;

    // Cube count per dimension.
    [[nodiscard]] std::vector<std::size_t> cube_census() const;

    [[nodiscard]] bool within_reliable_radius(GroupElement const& v) const noexcept {
      return static_cast<std::int64_t>(v.length()) <= _reliable_radius;
    }

   private:
    friend Ball build_ball(DefiningGraph const&, std::size_t, std::size_t);
    explicit Ball(DefiningGraph const& graph) : _graph(graph) {}

    DefiningGraph                                _graph;
    std::size_t                                  _radius          = 0;
    std::int64_t                                 _reliable_radius = 0;
    SphericalSubset                              _max_clique;
    std::vector<GroupElement>                    _vertices;
    std::vector<std::size_t>                     _sphere_offsets;
    std::unordered_map<GroupElement, std::size_t> _vertex_index;
    std::vector<Cube>                            _cubes;
    // Per vertex, the axes of the cubes based there.
    std::vector<std::vector<GeneratorSet>>       _axes_at_base;
  };

  inline constexpr std::size_t default_max_vertices = 1'000'000;

  // Breadth-first by right multiplication; throws ResourceCapError once the
  // ball would hold more than max_vertices vertices.
  [[nodiscard]] Ball build_ball(DefiningGraph const& graph,
                                std::size_t          radius,
                                std::size_t          max_vertices
                                = default_max_vertices);

  // Vertices of length exactly r; throws InvalidArgument if r > radius.
  [[nodiscard]] std::vector<GroupElement> sphere(Ball const& ball, std::size_t r);

  // Stored cubes containing v, indexed by dimension. Throws InvalidArgument
  // if v is not a vertex of the ball.
  [[nodiscard]] std::vector<std::vector<Cube>> cubes_at_vertex(Ball const&         ball,
                                                               GroupElement const& v);

  struct FlagViolation {
    GroupElement           vertex;
    // Edge directions at vertex that pairwise span squares but bound no cube.
    GeneratorSet           directions;
  };

  struct FlagReport {
    bool                       flag = true;
    std::size_t                vertices_checked = 0;
    std::vector<FlagViolation> violations;  // at most the first one
  };

  // Gromov's link condition at every vertex inside the reliable radius.
  [[nodiscard]] FlagReport links_flag_check(Ball const& ball);

  // "json" (vertices and positive-dimensional cubes) or "dot" (1-skeleton).
  // Throws FormatError otherwise.
  [[nodiscard]] std::string export_complex(Ball const& ball, std::string_view format);

}  // namespace racg

#endif  // RACG_DAVIS_HPP_
