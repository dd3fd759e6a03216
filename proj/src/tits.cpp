#include "racg/tits.hpp"

#include <string>

#include "racg/errors.hpp"

namespace racg {

  namespace {

    using value_type = TitsMatrix::value_type;

    value_type checked_add(value_type a, value_type b) {
      value_type r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("Tits matrix entry overflows 64-bit integers");
      }
      return r;
    }

    value_type checked_mul(value_type a, value_type b) {
      value_type r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("Tits matrix entry overflows 64-bit integers");
      }
      return r;
    }

    value_type checked_neg(value_type a) {
      return checked_mul(a, -1);
    }

  }  // namespace

  TitsMatrix TitsMatrix::identity(std::size_t dim) {
    TitsMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m.at(i, i) = 1;
    }
    return m;
  }

  TitsMatrix TitsMatrix::reflection(Generator a, DefiningGraph const& graph) {
    return identity(graph.size()).right_multiply_reflection(a, graph);
  }

  TitsMatrix& TitsMatrix::right_multiply_reflection(Generator            a,
                                                    DefiningGraph const& graph) {
    if (a >= _dim || graph.size() != _dim) {
      throw InvalidArgument("generator index " + std::to_string(a)
                            + " out of range for a Tits matrix of dimension "
                            + std::to_string(_dim));
    }
    // Column b of M * s_a is M s_a(e_b): column a negates, columns of
    // non-commuting b gain twice the old column a.
    std::vector<value_type> old_a(_dim);
    for (std::size_t r = 0; r < _dim; ++r) {
      old_a[r] = at(r, a);
    }
    for (std::size_t b = 0; b < _dim; ++b) {
      if (b == a || graph.adjacent(a, static_cast<Generator>(b))) {
        continue;
      }
      for (std::size_t r = 0; r < _dim; ++r) {
        at(r, b) = checked_add(at(r, b), checked_mul(2, old_a[r]));
      }
    }
    for (std::size_t r = 0; r < _dim; ++r) {
      at(r, a) = checked_neg(old_a[r]);
    }
    return *this;
  }

  TitsMatrix TitsMatrix::operator*(TitsMatrix const& other) const {
    if (_dim != other._dim) {
      throw InvalidArgument("Tits matrix dimensions differ");
    }
    TitsMatrix out(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t k = 0; k < _dim; ++k) {
        auto const lhs = (*this)(i, k);
        if (lhs == 0) {
          continue;
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          out.at(i, j) = checked_add(out.at(i, j), checked_mul(lhs, other(k, j)));
        }
      }
    }
    return out;
  }

  TitsMatrix tits_matrix(std::span<Generator const> letters,
                         DefiningGraph const&       graph) {
    auto m = TitsMatrix::identity(graph.size());
    for (auto g : letters) {
      m.right_multiply_reflection(g, graph);
    }
    return m;
  }

}  // namespace racg
