#ifndef RACG_SPHERICAL_HPP_
#define RACG_SPHERICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

  // A clique of the defining graph, i.e. a set of generators spanning a
  // finite (elementary abelian) subgroup. The empty set is spherical.
  class SphericalSubset {
   public:
    SphericalSubset() = default;

    // Throws InvalidArgument if members is not a clique of graph.
    SphericalSubset(GeneratorSet members, DefiningGraph const& graph);

    [[nodiscard]] GeneratorSet members() const noexcept {
      return _members;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] bool contains(Generator g) const noexcept {
      return _members.contains(g);
    }

    bool operator==(SphericalSubset const&) const = default;

    // Size, then lexicographic on sorted members.
    friend bool operator<(SphericalSubset const& a, SphericalSubset const& b) {
      return canonical_less(a._members, b._members);
    }

   private:
    struct unchecked_tag {};
    SphericalSubset(GeneratorSet members, unchecked_tag) : _members(members) {}
    friend class SphericalPoset;
    friend std::vector<SphericalSubset> maximal_cliques(DefiningGraph const&);

    GeneratorSet _members;
  };

  [[nodiscard]] bool is_spherical(GeneratorSet subset, DefiningGraph const& graph);

  // All spherical subsets ordered by inclusion, stored in canonical order
  // (size, then lexicographic), so index 0 is the empty set.
  class SphericalPoset {
   public:
    explicit SphericalPoset(DefiningGraph const& graph);

    [[nodiscard]] std::vector<SphericalSubset> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] SphericalSubset const& operator[](std::size_t i) const {
      return _elements.at(i);
    }
    [[nodiscard]] std::optional<std::size_t> index_of(GeneratorSet set) const;

    [[nodiscard]] bool less_equal(std::size_t i, std::size_t j) const {
      return _elements.at(i).members().is_subset_of(_elements.at(j).members());
    }

    // Elements covering element i (one extra generator), ascending.
    [[nodiscard]] std::vector<std::size_t> covers(std::size_t i) const;

    // Elements strictly above element i, ascending.
    [[nodiscard]] std::vector<std::size_t> strictly_above(std::size_t i) const;

    [[nodiscard]] bool is_maximal(std::size_t i) const {
      return covers(i).empty();
    }

    [[nodiscard]] DefiningGraph const& graph() const noexcept {
      return _graph;
    }

   private:
    DefiningGraph                _graph;
    std::vector<SphericalSubset> _elements;
  };

  [[nodiscard]] inline SphericalPoset spherical_poset(DefiningGraph const& graph) {
    return SphericalPoset(graph);
  }

  // Bron-Kerbosch with pivoting over bitsets; canonical order.
  [[nodiscard]] std::vector<SphericalSubset> maximal_cliques(DefiningGraph const& graph);

  // A clique of maximum size; the lexicographically least one on ties.
  [[nodiscard]] SphericalSubset maximum_spherical(DefiningGraph const& graph);

  // Order complex of the spherical poset: simplices are chains of poset
  // elements, the empty set being the cone apex. Purely combinatorial.
  class ChamberComplex {
   public:
    using Chain = std::vector<std::size_t>;  // ascending poset indices

    [[nodiscard]] std::vector<Chain> const& simplices() const noexcept {
      return _simplices;
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertex_count;
    }
    // Longest chain length minus one.
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _dimension;
    }
    // Number of simplices of each dimension.
    [[nodiscard]] std::vector<std::uint64_t> f_vector() const;

    // Chains that cannot be refined or extended: from the apex up to a
    // maximal clique, one generator per step.
    [[nodiscard]] std::vector<Chain> maximal_chains() const;

   private:
    friend ChamberComplex chamber_complex(SphericalPoset const&, std::size_t);
    ChamberComplex() = default;

    std::vector<Chain>       _simplices;
    std::vector<std::size_t> _element_sizes;
    std::vector<bool>        _element_maximal;
    std::size_t           _vertex_count = 0;
    std::size_t           _dimension    = 0;
  };

  // f-vector of the chamber computed by counting, without materializing the
  // chains. Throws OverflowError past 64 bits.
  [[nodiscard]] std::vector<std::uint64_t>
  chamber_f_vector(SphericalPoset const& poset);

  // Throws ResourceCapError if there are more than max_simplices chains.
  [[nodiscard]] ChamberComplex chamber_complex(SphericalPoset const& poset,
                                               std::size_t max_simplices
                                               = 1'000'000);

}  // namespace racg

#endif  // RACG_SPHERICAL_HPP_
