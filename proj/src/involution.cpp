#include "racg/involution.hpp"

#include "racg/errors.hpp"

namespace racg {

  Involution build_involution(DefiningGraph const& graph) {
    auto const clique  = maximum_spherical(graph);
    auto const letters = clique.members().members();
    Involution inv{normal_form(letters, graph), clique, clique.size()};
    // Ascending order is already shortlex normal.
    if (inv.element.word() != letters || !has_order_two(inv.element, graph)) {
      throw Error("internal error: gamma is not a reduced involution");
    }
    return inv;
  }

  std::vector<Cube> invariant_cubes(Involution const& inv, Ball const& ball) {
    auto const&       graph = ball.graph();
    std::vector<Cube> out;
    for (auto const& c : ball.cubes()) {
      if (!ball.within_reliable_radius(c.base)) {
        break;
      }
      auto const t = conjugate(c.base, inv.element, graph);
      if (support(t).is_subset_of(c.axis.members())) {
        out.push_back(c);
      }
    }
    return out;
  }

  FixedPointReport fixed_loci(Involution const& inv, Ball const& ball) {
    auto const&      graph = ball.graph();
    FixedPointReport report;
    report.radius_examined = ball.radius();
    report.reliable_radius = ball.reliable_radius();
    for (auto& c : invariant_cubes(inv, ball)) {
      FixedLocus locus;
      locus.translation = conjugate(c.base, inv.element, graph);
      locus.flipped     = support(locus.translation);
      locus.dimension   = c.axis.size() - locus.flipped.size();
      for (auto a : c.axis.members().members()) {
        locus.center.push_back(locus.flipped.contains(a) ? AxisCoordinate::midpoint
                                                         : AxisCoordinate::free);
      }
      locus.cube = std::move(c);
      report.loci.push_back(std::move(locus));
    }
    report.unique_point = report.loci.size() == 1 && report.loci[0].dimension == 0
                          && report.loci[0].cube.base.is_identity()
                          && report.loci[0].cube.axis == inv.clique;
    return report;
  }

  bool antipodal_check(Involution const& inv, DefiningGraph const& graph) {
    auto const s_members = inv.clique.members();
    auto const mask      = s_members.mask();
    // Enumerate every subset of S: each spells one element of Gamma_S.
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      GeneratorSet const coords(sub);
      auto const s     = normal_form(coords.members(), graph);
      auto const image = multiply(inv.element, s, graph);
      if (support(s) != coords || support(image) != s_members - coords) {
        return false;
      }
      if (sub == 0) {
        break;
      }
    }
    return true;
  }

}  // namespace racg
