#include "racg/element.hpp"

#include <algorithm>
#include <string>

#include "racg/errors.hpp"

namespace racg {

  std::strong_ordering GroupElement::operator<=>(GroupElement const& other) const {
    if (auto c = _word.size() <=> other._word.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        _word.begin(), _word.end(), other._word.begin(), other._word.end());
  }

  // Appending g to a normal word w:
  //   * the commuting tail is the longest suffix of w whose letters all
  //     commute with g;
  //   * an occurrence of g in that tail cancels against g;
  //   * otherwise g goes in front of the first tail letter larger than g.
  // The result has no factor "a u a" with a commuting with u (geodesic) and
  // no factor "b u a" with a < b and a commuting with b u (lex-least).
  NormalFormBuilder& NormalFormBuilder::push_back(Generator g) {
    if (g >= _graph->size()) {
      throw InvalidArgument("generator index " + std::to_string(g)
                            + " out of range for a graph with "
                            + std::to_string(_graph->size()) + " generators");
    }
    auto const commuting = _graph->neighbors(g);
    std::size_t tail = _word.size();
    while (tail > 0) {
      auto const x = _word[tail - 1];
      if (x == g) {
        _word.erase(_word.begin() + static_cast<std::ptrdiff_t>(tail - 1));
        return *this;
      }
      if (!commuting.contains(x)) {
        break;
      }
      --tail;
    }
    auto pos = std::find_if(_word.begin() + static_cast<std::ptrdiff_t>(tail),
                            _word.end(),
                            [g](Generator x) { return x > g; });
    _word.insert(pos, g);
    return *this;
  }

  GroupElement normal_form(std::span<Generator const> letters,
                           DefiningGraph const&       graph) {
    NormalFormBuilder b(graph);
    for (auto g : letters) {
      b.push_back(g);
    }
    return b.element();
  }

  GroupElement generator(Generator g, DefiningGraph const& graph) {
    return normal_form({g}, graph);
  }

  GroupElement multiply(GroupElement const&  x,
                        GroupElement const&  y,
                        DefiningGraph const& graph) {
    NormalFormBuilder b(graph, x);
    for (auto g : y.word()) {
      b.push_back(g);
    }
    return b.element();
  }

  GroupElement inverse(GroupElement const& x, DefiningGraph const& graph) {
    std::vector<Generator> reversed(x.word().rbegin(), x.word().rend());
    return normal_form(reversed, graph);
  }

  GroupElement conjugate(GroupElement const&  g,
                         GroupElement const&  x,
                         DefiningGraph const& graph) {
    NormalFormBuilder b(graph);
    for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
      b.push_back(*it);
    }
    for (auto a : x.word()) {
      b.push_back(a);
    }
    for (auto a : g.word()) {
      b.push_back(a);
    }
    return b.element();
  }

  GeneratorSet support(GroupElement const& x) noexcept {
    GeneratorSet s;
    for (auto g : x.word()) {
      s.insert(g);
    }
    return s;
  }

  bool has_order_two(GroupElement const& x, DefiningGraph const& graph) {
    return !x.is_identity() && multiply(x, x, graph).is_identity();
  }

  GeneratorSet right_descents(GroupElement const&  x,
                              DefiningGraph const& graph) {
    GeneratorSet after;
    GeneratorSet descents;
    auto const&  w = x.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (after.is_subset_of(graph.neighbors(*it))) {
        descents.insert(*it);
      }
      after.insert(*it);
    }
    return descents;
  }

}  // namespace racg
