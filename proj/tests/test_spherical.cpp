#include <random>

#include "doctest.h"

#include "oracle.hpp"
#include "racg/errors.hpp"
#include "racg/spherical.hpp"

using namespace racg;

namespace {

  std::vector<std::vector<std::string>> labelled(SphericalPoset const& p) {
    std::vector<std::vector<std::string>> out;
    for (auto const& s : p.elements()) {
      out.push_back(format_set(p.graph(), s.members()));
    }
    return out;
  }

}  // namespace

TEST_CASE("is_spherical") {
  auto const square = *preset("square");
  auto const dinfty = *preset("dinfty");
  CHECK(is_spherical(GeneratorSet::of({0, 1}), square));
  CHECK_FALSE(is_spherical(GeneratorSet::of({0, 1}), dinfty));
  CHECK(is_spherical(GeneratorSet(), dinfty));
  CHECK_THROWS_AS((void) is_spherical(GeneratorSet::of({5}), dinfty), InvalidArgument);
  CHECK_THROWS_AS(SphericalSubset(GeneratorSet::of({0, 1}), dinfty), InvalidArgument);
}

TEST_CASE("spherical_poset examples") {
  auto const square = spherical_poset(*preset("square"));
  CHECK(labelled(square)
        == std::vector<std::vector<std::string>>{{}, {"a"}, {"b"}, {"a", "b"}});

  auto const dinfty = spherical_poset(*preset("dinfty"));
  CHECK(labelled(dinfty) == std::vector<std::vector<std::string>>{{}, {"a"}, {"b"}});

  auto const pentagon = spherical_poset(*preset("pentagon"));
  CHECK(pentagon.size() == oracle::all_cliques(*preset("pentagon")).size());
  CHECK(pentagon.size() == 11);
}

TEST_CASE("spherical_poset order relation") {
  auto const p = spherical_poset(*preset("square"));
  CHECK(p.less_equal(0, 3));
  CHECK(p.less_equal(1, 3));
  CHECK_FALSE(p.less_equal(1, 2));
  CHECK(p.covers(0) == std::vector<std::size_t>{1, 2});
  CHECK(p.covers(1) == std::vector<std::size_t>{3});
  CHECK(p.strictly_above(0) == std::vector<std::size_t>{1, 2, 3});
  CHECK(p.is_maximal(3));
  CHECK_FALSE(p.is_maximal(1));
  CHECK(*p.index_of(GeneratorSet::of({1})) == 2);
  CHECK_FALSE(spherical_poset(*preset("dinfty")).index_of(GeneratorSet::of({0, 1})));
}

TEST_CASE("maximum_spherical examples") {
  auto max_of = [](char const* name) {
    auto const g = *preset(name);
    return format_set(g, maximum_spherical(g).members());
  };
  CHECK(max_of("square") == std::vector<std::string>{"a", "b"});
  CHECK(max_of("dinfty") == std::vector<std::string>{"a"});
  CHECK(max_of("pentagon") == std::vector<std::string>{"v0", "v1"});
  CHECK(max_of("grid") == std::vector<std::string>{"a", "c"});
  for (auto const& name : preset_names()) {
    auto const g = *preset(name);
    CHECK(maximum_spherical(g).members().members() == oracle::max_clique(g));
  }
}

TEST_CASE("maximal_cliques") {
  auto const grid    = *preset("grid");
  auto const cliques = maximal_cliques(grid);
  REQUIRE(cliques.size() == 4);
  CHECK(format_set(grid, cliques[0].members()) == std::vector<std::string>{"a", "c"});
  CHECK(format_set(grid, cliques[3].members()) == std::vector<std::string>{"b", "d"});
  auto const single = parse_graph("x\n");
  CHECK(maximal_cliques(single).size() == 1);
  CHECK(maximum_spherical(single).size() == 1);
}

TEST_CASE("chamber_complex examples") {
  auto const dinfty = chamber_complex(spherical_poset(*preset("dinfty")));
  CHECK(dinfty.vertex_count() == 3);
  CHECK(dinfty.dimension() == 1);
  CHECK(dinfty.f_vector() == std::vector<std::uint64_t>{3, 2});

  auto const square_poset = spherical_poset(*preset("square"));
  auto const square       = chamber_complex(square_poset);
  CHECK(square.dimension() == 2);
  // Chains of the Boolean lattice on {a, b}: 4 points, 5 comparable pairs,
  // 2 maximal chains.
  CHECK(square.f_vector() == std::vector<std::uint64_t>{4, 5, 2});
  CHECK(square.maximal_chains()
        == std::vector<ChamberComplex::Chain>{{0, 1, 3}, {0, 2, 3}});

  // Edgeless graph on n vertices: a star with n edges.
  auto const star = chamber_complex(spherical_poset(parse_graph("p q r s t\n")));
  CHECK(star.vertex_count() == 6);
  CHECK(star.f_vector() == std::vector<std::uint64_t>{6, 5});
}

TEST_CASE("chamber_complex is closed under subchains and respects the cap") {
  auto const poset = spherical_poset(*preset("pentagon"));
  auto const k     = chamber_complex(poset);
  std::set<ChamberComplex::Chain> all(k.simplices().begin(), k.simplices().end());
  for (auto const& c : k.simplices()) {
    for (std::size_t drop = 0; drop < c.size() && c.size() > 1; ++drop) {
      auto sub = c;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(all.contains(sub));
    }
  }
  CHECK(k.f_vector() == chamber_f_vector(poset));
  CHECK_THROWS_AS((void) chamber_complex(poset, 10), ResourceCapError);
}

TEST_CASE("property: poset and chamber invariants on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto const graph = oracle::random_graph(rng, 7);
    auto const poset = spherical_poset(graph);
    auto const brute = oracle::all_cliques(graph);
    REQUIRE(poset.size() == brute.size());
    REQUIRE(poset[0].members().empty());
    for (std::size_t i = 0; i < poset.size(); ++i) {
      // Downward closed.
      for (auto g : poset[i].members().members()) {
        auto down = poset[i].members();
        down.erase(g);
        REQUIRE(poset.index_of(down).has_value());
      }
      if (i > 0) {
        REQUIRE(poset[i - 1] < poset[i]);
      }
    }
    auto const s_max = maximum_spherical(graph);
    REQUIRE(s_max.members().members() == oracle::max_clique(graph));
    std::size_t largest = 0;
    for (auto const& e : poset.elements()) {
      largest = std::max(largest, e.size());
    }
    REQUIRE(s_max.size() == largest);

    auto const k = chamber_complex(poset);
    REQUIRE(k.dimension() == s_max.size());
    REQUIRE(k.vertex_count() == poset.size());
    auto const chains = k.maximal_chains();
    REQUIRE_FALSE(chains.empty());
    for (auto const& c : chains) {
      REQUIRE(c.front() == 0);
      REQUIRE(poset.is_maximal(c.back()));
    }
    // Maximal chains <-> orderings of maximal cliques.
    std::uint64_t expected = 0;
    for (auto const& m : maximal_cliques(graph)) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= m.size(); ++i) {
        f *= i;
      }
      expected += f;
    }
    REQUIRE(chains.size() == expected);
  }
}
