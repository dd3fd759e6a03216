#ifndef RACG_INVOLUTION_HPP_
#define RACG_INVOLUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "racg/davis.hpp"
#include "racg/element.hpp"
#include "racg/graph.hpp"
#include "racg/spherical.hpp"

namespace racg {

  // gamma = a_1 a_2 ... a_n, the product of the generators of a maximum
  // clique S in ascending order.
  struct Involution {
    GroupElement    element;
    SphericalSubset clique;
    std::size_t     n = 0;
  };

  [[nodiscard]] Involution build_involution(DefiningGraph const& graph);

  // Cubes (g, T) with base inside the reliable radius that gamma maps to
  // themselves, i.e. support(g^-1 gamma g) is contained in T.
  [[nodiscard]] std::vector<Cube> invariant_cubes(Involution const& inv,
                                                  Ball const&       ball);

  enum class AxisCoordinate { midpoint, free };

  // Fixed set of gamma inside one invariant cube: gamma acts on the cube as
  // the reflection flipping the coordinates in `flipped`, so it fixes the
  // subcube through the midpoint of those coordinates.
  struct FixedLocus {
    Cube                        cube;
    GroupElement                translation;  // g^-1 gamma g, lies in Gamma_T
    GeneratorSet                flipped;
    std::size_t                 dimension = 0;
    std::vector<AxisCoordinate> center;  // one per axis member, ascending
  };

  struct FixedPointReport {
    std::vector<FixedLocus> loci;
    // Exactly one locus, of dimension 0, at the cube (1, S).
    bool                    unique_point    = false;
    std::size_t             radius_examined = 0;
    std::int64_t            reliable_radius = 0;
  };

  [[nodiscard]] FixedPointReport fixed_loci(Involution const& inv, Ball const& ball);

  // gamma acts on the vertices of the cube (1, S) as the antipodal map:
  // the coordinates of gamma * s are the complement of those of s.
  [[nodiscard]] bool antipodal_check(Involution const&    inv,
                                     DefiningGraph const& graph);

}  // namespace racg

#endif  // RACG_INVOLUTION_HPP_
