#include "racg/spherical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "racg/errors.hpp"

namespace racg {

  namespace {

    // Calls f(clique) for every clique (including the empty one) inside
    // `candidates`, which must be pairwise checked by the caller's graph.
    template <typename F>
    void for_each_clique(DefiningGraph const& graph,
                         GeneratorSet         current,
                         GeneratorSet         candidates,
                         F&&                  f) {
      f(current);
      for (auto m = candidates.mask(); m != 0; m &= m - 1) {
        auto const g     = static_cast<Generator>(std::countr_zero(m));
        auto const later = GeneratorSet(m & (m - 1));
        auto       next  = current;
        next.insert(g);
        for_each_clique(graph, next, later & graph.neighbors(g), f);
      }
    }

    void bron_kerbosch(DefiningGraph const&       graph,
                       GeneratorSet               r,
                       GeneratorSet               p,
                       GeneratorSet               x,
                       std::vector<GeneratorSet>& out) {
      if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
      }
      // Pivot on the vertex of P u X with the most neighbours in P.
      Generator   pivot      = 0;
      std::size_t best       = 0;
      bool        have_pivot = false;
      for (auto u : (p | x).members()) {
        auto const n = (p & graph.neighbors(u)).size();
        if (!have_pivot || n > best) {
          pivot      = u;
          best       = n;
          have_pivot = true;
        }
      }
      for (auto v : (p - graph.neighbors(pivot)).members()) {
        auto next = r;
        next.insert(v);
        bron_kerbosch(
            graph, next, p & graph.neighbors(v), x & graph.neighbors(v), out);
        p.erase(v);
        x.insert(v);
      }
    }

    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("chamber simplex count overflows 64 bits");
      }
      return r;
    }

    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("chamber simplex count overflows 64 bits");
      }
      return r;
    }

  }  // namespace

  bool is_spherical(GeneratorSet subset, DefiningGraph const& graph) {
    if (!subset.is_subset_of(graph.all())) {
      throw InvalidArgument("generator set references indices outside the graph");
    }
    for (auto g : subset.members()) {
      auto others = subset;
      others.erase(g);
      if (!others.is_subset_of(graph.neighbors(g))) {
        return false;
      }
    }
    return true;
  }

  SphericalSubset::SphericalSubset(GeneratorSet members, DefiningGraph const& graph)
      : _members(members) {
    if (!is_spherical(members, graph)) {
      throw InvalidArgument("generator set {"
                            + format_word(graph, members.members())
                            + "} is not a clique of the defining graph");
    }
  }

  SphericalPoset::SphericalPoset(DefiningGraph const& graph) : _graph(graph) {
    for_each_clique(_graph, GeneratorSet(), _graph.all(), [this](GeneratorSet s) {
      _elements.push_back(SphericalSubset(s, SphericalSubset::unchecked_tag{}));
    });
    std::sort(_elements.begin(), _elements.end());
  }

  std::optional<std::size_t> SphericalPoset::index_of(GeneratorSet set) const {
    auto it = std::lower_bound(
        _elements.begin(),
        _elements.end(),
        set,
        [](SphericalSubset const& e, GeneratorSet s) {
          return canonical_less(e.members(), s);
        });
    if (it == _elements.end() || it->members() != set) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  std::vector<std::size_t> SphericalPoset::covers(std::size_t i) const {
    auto const               base = _elements.at(i).members();
    std::vector<std::size_t> out;
    for (auto g : (_graph.all() - base).members()) {
      if (base.is_subset_of(_graph.neighbors(g))) {
        auto up = base;
        up.insert(g);
        out.push_back(*index_of(up));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> SphericalPoset::strictly_above(std::size_t i) const {
    auto const base   = _elements.at(i).members();
    auto       common = _graph.all() - base;
    for (auto g : base.members()) {
      common = common & _graph.neighbors(g);
    }
    std::vector<std::size_t> out;
    for_each_clique(_graph, GeneratorSet(), common, [&](GeneratorSet extra) {
      if (!extra.empty()) {
        out.push_back(*index_of(base | extra));
      }
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<SphericalSubset> maximal_cliques(DefiningGraph const& graph) {
    std::vector<GeneratorSet> found;
    bron_kerbosch(graph, GeneratorSet(), graph.all(), GeneratorSet(), found);
    std::vector<SphericalSubset> out;
    out.reserve(found.size());
    for (auto s : found) {
      out.push_back(SphericalSubset(s, SphericalSubset::unchecked_tag{}));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  SphericalSubset maximum_spherical(DefiningGraph const& graph) {
    auto cliques = maximal_cliques(graph);
    // Canonical order is by size first, so the largest cliques come last;
    // the first of them is the lexicographically least.
    auto const top   = cliques.back().size();
    auto       first = std::find_if(cliques.begin(),
                              cliques.end(),
                              [top](SphericalSubset const& s) { return s.size() == top; });
    return *first;
  }

  std::vector<std::uint64_t> chamber_f_vector(SphericalPoset const& poset) {
    // chains_ending[m][k]: chains with k + 1 elements whose top is a fixed
    // m-element clique. Every subset of a clique is in the poset, so this
    // depends on m only.
    std::size_t top = 0;
    for (auto const& e : poset.elements()) {
      top = std::max(top, e.size());
    }
    std::vector<std::vector<std::uint64_t>> binom(top + 1);
    for (std::size_t m = 0; m <= top; ++m) {
      binom[m].assign(m + 1, 1);
      for (std::size_t j = 1; j < m; ++j) {
        binom[m][j] = checked_add(binom[m - 1][j - 1], binom[m - 1][j]);
      }
    }
    std::vector<std::vector<std::uint64_t>> chains_ending(
        top + 1, std::vector<std::uint64_t>(top + 1, 0));
    for (std::size_t m = 0; m <= top; ++m) {
      chains_ending[m][0] = 1;
      for (std::size_t k = 1; k <= m; ++k) {
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
          sum = checked_add(sum, checked_mul(binom[m][j], chains_ending[j][k - 1]));
        }
        chains_ending[m][k] = sum;
      }
    }
    std::vector<std::uint64_t> f(top + 1, 0);
    for (auto const& e : poset.elements()) {
      for (std::size_t k = 0; k <= e.size(); ++k) {
        f[k] = checked_add(f[k], chains_ending[e.size()][k]);
      }
    }
    return f;
  }

  ChamberComplex chamber_complex(SphericalPoset const& poset,
                                 std::size_t           max_simplices) {
    std::uint64_t total = 0;
    for (auto c : chamber_f_vector(poset)) {
      total = checked_add(total, c);
    }
    if (total > max_simplices) {
      throw ResourceCapError(0,
                             "chamber has " + std::to_string(total)
                                 + " simplices, above the cap of "
                                 + std::to_string(max_simplices));
    }
    ChamberComplex k;
    k._vertex_count = poset.size();
    k._simplices.reserve(total);
    k._element_sizes.reserve(poset.size());
    k._element_maximal.reserve(poset.size());
    std::vector<std::vector<std::size_t>> above(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
      above[i] = poset.strictly_above(i);
      k._element_sizes.push_back(poset[i].size());
      k._element_maximal.push_back(above[i].empty());
    }
    ChamberComplex::Chain chain;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
      chain.push_back(i);
      k._simplices.push_back(chain);
      k._dimension = std::max(k._dimension, chain.size() - 1);
      for (auto j : above[i]) {
        extend(j);
      }
      chain.pop_back();
    };
    for (std::size_t i = 0; i < poset.size(); ++i) {
      extend(i);
    }
    std::sort(k._simplices.begin(),
              k._simplices.end(),
              [](auto const& a, auto const& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return k;
  }

  std::vector<std::uint64_t> ChamberComplex::f_vector() const {
    std::vector<std::uint64_t> f(_dimension + 1, 0);
    for (auto const& c : _simplices) {
      ++f[c.size() - 1];
    }
    return f;
  }

  std::vector<ChamberComplex::Chain> ChamberComplex::maximal_chains() const {
    std::vector<Chain> out;
    for (auto const& c : _simplices) {
      if (_element_sizes[c.front()] != 0 || !_element_maximal[c.back()]) {
        continue;
      }
      bool saturated = true;
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (_element_sizes[c[i]] != _element_sizes[c[i - 1]] + 1) {
          saturated = false;
          break;
        }
      }
      if (saturated) {
        out.push_back(c);
      }
    }
    return out;
  }

}  // namespace racg
