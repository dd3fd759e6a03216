#ifndef RACG_ELEMENT_HPP_
#define RACG_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

  // An element of the Coxeter group, held as its shortlex-least geodesic
  // word. Only the functions below produce one, so every GroupElement is in
  // normal form; the graph it belongs to is not stored and callers must not
  // mix elements of different graphs.
  class GroupElement {
   public:
    // The identity.
    GroupElement() = default;

    [[nodiscard]] std::vector<Generator> const& word() const noexcept {
      return _word;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _word.size();
    }
    [[nodiscard]] bool is_identity() const noexcept {
      return _word.empty();
    }

    bool operator==(GroupElement const&) const = default;

    // Shortlex: length first, then lexicographic by generator index.
    std::strong_ordering operator<=>(GroupElement const& other) const;

   private:
    friend class NormalFormBuilder;
    explicit GroupElement(std::vector<Generator> word) : _word(std::move(word)) {}

    std::vector<Generator> _word;
  };

  // Incremental normal form: holds a normal word and right-multiplies it by
  // one generator at a time in O(length).
  class NormalFormBuilder {
   public:
    explicit NormalFormBuilder(DefiningGraph const& graph) : _graph(&graph) {}
    NormalFormBuilder(DefiningGraph const& graph, GroupElement const& start)
        : _graph(&graph), _word(start.word()) {}

    // Throws InvalidArgument when g is not a generator of the graph.
    NormalFormBuilder& push_back(Generator g);

    [[nodiscard]] std::vector<Generator> const& word() const noexcept {
      return _word;
    }
    [[nodiscard]] GroupElement element() const {
      return GroupElement(_word);
    }

   private:
    DefiningGraph const*   _graph;
    std::vector<Generator> _word;
  };

  [[nodiscard]] GroupElement normal_form(std::span<Generator const> letters,
                                         DefiningGraph const&       graph);

  [[nodiscard]] inline GroupElement
  normal_form(std::initializer_list<Generator> letters,
              DefiningGraph const&             graph) {
    return normal_form(std::span<Generator const>(letters.begin(), letters.size()),
                       graph);
  }

  [[nodiscard]] GroupElement generator(Generator g, DefiningGraph const& graph);

  [[nodiscard]] GroupElement multiply(GroupElement const&  x,
                                      GroupElement const&  y,
                                      DefiningGraph const& graph);

  [[nodiscard]] GroupElement inverse(GroupElement const&  x,
                                     DefiningGraph const& graph);

  [[nodiscard]] inline std::size_t length(GroupElement const& x) noexcept {
    return x.length();
  }

  // g^-1 * x * g
  [[nodiscard]] GroupElement conjugate(GroupElement const&  g,
                                       GroupElement const&  x,
                                       DefiningGraph const& graph);

  // Letters of the normal form. Every geodesic word for x uses this same set.
  [[nodiscard]] GeneratorSet support(GroupElement const& x) noexcept;

  [[nodiscard]] bool has_order_two(GroupElement const&  x,
                                   DefiningGraph const& graph);

  // Generators t with length(x t) < length(x).
  [[nodiscard]] GeneratorSet right_descents(GroupElement const&  x,
                                            DefiningGraph const& graph);

  [[nodiscard]] inline std::string format_word(DefiningGraph const& graph,
                                               GroupElement const&  x) {
    return format_word(graph, x.word());
  }

}  // namespace racg

template <>
struct std::hash<racg::GroupElement> {
  std::size_t operator()(racg::GroupElement const& x) const noexcept {
    std::size_t h = x.length();
    for (auto g : x.word()) {
      h ^= g + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // RACG_ELEMENT_HPP_
