#include "doctest.h"

#include "oracle.hpp"
#include "racg/element.hpp"
#include "racg/errors.hpp"
#include "racg/tits.hpp"

using namespace racg;

namespace {

  // Fraction-free Gaussian elimination in 128-bit arithmetic.
  __int128 determinant(TitsMatrix const& m) {
    auto const                         n = m.dim();
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = m(i, j);
      }
    }
    __int128 prev = 1;
    int      sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

}  // namespace

TEST_CASE("tits_matrix examples") {
  auto const dinfty = *preset("dinfty");
  auto const square = *preset("square");

  CHECK(tits_matrix(GroupElement(), dinfty) == TitsMatrix::identity(2));

  auto const a = tits_matrix(generator(0, dinfty), dinfty);
  CHECK(a(0, 0) == -1);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 0) == 0);
  CHECK(a(1, 1) == 1);

  auto const sa = tits_matrix(generator(0, square), square);
  CHECK(sa.entries() == std::vector<std::int64_t>{-1, 0, 0, 1});
}

TEST_CASE("reflections are involutions with determinant -1") {
  for (auto const& name : preset_names()) {
    auto const graph = *preset(name);
    for (Generator g = 0; g < graph.size(); ++g) {
      auto const r = TitsMatrix::reflection(g, graph);
      CHECK(r * r == TitsMatrix::identity(graph.size()));
      CHECK(determinant(r) == -1);
    }
  }
}

TEST_CASE("property: word -> matrix is a homomorphism with det +-1") {
  auto const graph = *preset("pentagon");
  auto const words = oracle::all_words(graph.size(), 3);
  for (auto const& u : words) {
    auto const mu = tits_matrix(std::span<Generator const>(u), graph);
    auto const d  = determinant(mu);
    REQUIRE((d == 1 || d == -1));
    REQUIRE(d == (u.size() % 2 == 0 ? 1 : -1));
    for (std::size_t k = 0; k < words.size(); k += 7) {
      auto const& v  = words[k];
      auto        uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      REQUIRE(tits_matrix(std::span<Generator const>(uv), graph)
              == mu * tits_matrix(std::span<Generator const>(v), graph));
    }
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  // Three pairwise free generators: entries grow exponentially in the word
  // length and must blow past 64 bits well before length 300.
  auto const             free3 = parse_graph("a b c\n");
  std::vector<Generator> w;
  bool                   thrown = false;
  for (int i = 0; i < 300 && !thrown; ++i) {
    w.push_back(static_cast<Generator>(i % 3));
    try {
      (void) tits_matrix(std::span<Generator const>(w), free3);
    } catch (OverflowError const&) {
      thrown = true;
    }
  }
  CHECK(thrown);
  CHECK(w.size() > 12);
}

TEST_CASE("dimension and index checks") {
  auto const square = *preset("square");
  auto const grid   = *preset("grid");
  CHECK_THROWS_AS((void) (TitsMatrix::identity(2) * TitsMatrix::identity(4)),
                  InvalidArgument);
  std::vector<Generator> bad{3};
  CHECK_THROWS_AS((void) tits_matrix(std::span<Generator const>(bad), square),
                  InvalidArgument);
  CHECK(tits_matrix(normal_form({0, 2}, grid), grid)
        == tits_matrix(normal_form({2, 0}, grid), grid));
}
