#ifndef RACG_GRAPH_HPP_
#define RACG_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

  // Index of a generator in its DefiningGraph; also its rank in the
  // shortlex order.
  using Generator = std::uint32_t;

  // Sets of generators are 64-bit masks, which caps graphs at 64 generators.
  inline constexpr std::size_t max_generators = 64;

  class GeneratorSet {
   public:
    constexpr GeneratorSet() noexcept = default;
    constexpr explicit GeneratorSet(std::uint64_t mask) noexcept
        : _mask(mask) {}

    static GeneratorSet of(std::initializer_list<Generator> gens) {
      GeneratorSet s;
      for (auto g : gens) {
        s.insert(g);
      }
      return s;
    }

    [[nodiscard]] constexpr std::uint64_t mask() const noexcept {
      return _mask;
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return _mask == 0;
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_mask));
    }
    [[nodiscard]] constexpr bool contains(Generator g) const noexcept {
      return g < 64 && ((_mask >> g) & 1U) != 0;
    }
    constexpr void insert(Generator g) noexcept {
      _mask |= std::uint64_t{1} << g;
    }
    constexpr void erase(Generator g) noexcept {
      _mask &= ~(std::uint64_t{1} << g);
    }
    [[nodiscard]] constexpr bool is_subset_of(GeneratorSet other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }

    // Members in ascending order.
    [[nodiscard]] std::vector<Generator> members() const;

    constexpr GeneratorSet operator|(GeneratorSet o) const noexcept {
      return GeneratorSet(_mask | o._mask);
    }
    constexpr GeneratorSet operator&(GeneratorSet o) const noexcept {
      return GeneratorSet(_mask & o._mask);
    }
    constexpr GeneratorSet operator-(GeneratorSet o) const noexcept {
      return GeneratorSet(_mask & ~o._mask);
    }
    constexpr bool operator==(GeneratorSet const&) const noexcept = default;

   private:
    std::uint64_t _mask = 0;
  };

  // Canonical order on generator sets: size first, then the sorted member
  // sequences lexicographically.
  [[nodiscard]] bool canonical_less(GeneratorSet a, GeneratorSet b) noexcept;

  // The presentation of a right-angled Coxeter group: generators are
  // involutions, adjacent generators commute, non-adjacent ones are free.
  class DefiningGraph {
   public:
    // Throws ParseError when the invariants fail (empty, duplicate or
    // invalid labels, self-loops, unknown labels, more than 64 generators).
    DefiningGraph(std::vector<std::string>                        labels,
                  std::vector<std::pair<std::string, std::string>> const& edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::string const& label(Generator g) const {
      return _labels.at(g);
    }
    [[nodiscard]] std::optional<Generator> find(std::string_view label) const;

    [[nodiscard]] bool adjacent(Generator a, Generator b) const noexcept {
      return _neighbors[a].contains(b);
    }
    [[nodiscard]] GeneratorSet neighbors(Generator g) const noexcept {
      return _neighbors[g];
    }
    [[nodiscard]] GeneratorSet all() const noexcept;

    // Edges as index pairs (a < b), sorted.
    [[nodiscard]] std::vector<std::pair<Generator, Generator>> edges() const;

    [[nodiscard]] bool is_complete() const noexcept;

    bool operator==(DefiningGraph const&) const = default;

   private:
    std::vector<std::string>  _labels;
    std::vector<GeneratorSet> _neighbors;
  };

  // Accepts the JSON form {"vertices": [...], "edges": [[u, v], ...]} or the
  // text form (first line = labels, then one edge per line). The format is
  // chosen by the first non-blank character.
  [[nodiscard]] DefiningGraph parse_graph(std::string_view text);

  // square, dinfty, pentagon, grid.
  [[nodiscard]] std::optional<DefiningGraph> preset(std::string_view name);
  [[nodiscard]] std::vector<std::string> const& preset_names();

  // Words as written on the command line: space separated labels, or one
  // run of single-character labels, with "e" (or "") for the empty word.
  [[nodiscard]] std::vector<Generator> parse_word(DefiningGraph const& graph,
                                                  std::string_view     text);

  // Space-joined labels; the empty word is "".
  [[nodiscard]] std::string format_word(DefiningGraph const&          graph,
                                        std::vector<Generator> const& word);

  [[nodiscard]] std::vector<std::string> format_set(DefiningGraph const& graph,
                                                    GeneratorSet         set);

}  // namespace racg

#endif  // RACG_GRAPH_HPP_
