#ifndef RACG_TITS_HPP_
#define RACG_TITS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "racg/element.hpp"
#include "racg/graph.hpp"

namespace racg {

  // Exact integer matrix of the canonical reflection representation. Column
  // j is the image of basis vector e_j. All arithmetic is overflow checked
  // and throws OverflowError instead of wrapping.
  class TitsMatrix {
   public:
    using value_type = std::int64_t;

    static TitsMatrix identity(std::size_t dim);

    // Reflection for generator a: e_a -> -e_a, e_b -> e_b if a and b
    // commute, e_b -> e_b + 2 e_a otherwise.
    static TitsMatrix reflection(Generator a, DefiningGraph const& graph);

    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] value_type operator()(std::size_t row, std::size_t col) const {
      return _entries[row * _dim + col];
    }
    [[nodiscard]] std::vector<value_type> const& entries() const noexcept {
      return _entries;
    }

    // this * reflection(a), updating only the affected columns.
    TitsMatrix& right_multiply_reflection(Generator a, DefiningGraph const& graph);

    [[nodiscard]] TitsMatrix operator*(TitsMatrix const& other) const;

    bool operator==(TitsMatrix const&) const = default;

   private:
    explicit TitsMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim, 0) {}

    value_type& at(std::size_t row, std::size_t col) {
      return _entries[row * _dim + col];
    }

    std::size_t             _dim;
    std::vector<value_type> _entries;
  };

  // Image of an arbitrary word (not necessarily reduced).
  [[nodiscard]] TitsMatrix tits_matrix(std::span<Generator const> letters,
                                       DefiningGraph const&       graph);

  [[nodiscard]] inline TitsMatrix tits_matrix(GroupElement const&  x,
                                              DefiningGraph const& graph) {
    return tits_matrix(std::span<Generator const>(x.word()), graph);
  }

}  // namespace racg

template <>
struct std::hash<racg::TitsMatrix> {
  std::size_t operator()(racg::TitsMatrix const& m) const noexcept {
    std::size_t h = m.dim();
    for (auto v : m.entries()) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};

#endif  // RACG_TITS_HPP_
