#include "racg/davis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

#include "racg/errors.hpp"

namespace racg {

  namespace {

    GroupElement times(GroupElement const&  g,
                       GeneratorSet         s,
                       DefiningGraph const& graph) {
      NormalFormBuilder b(graph, g);
      for (auto t : s.members()) {
        b.push_back(t);
      }
      return b.element();
    }

    // Cliques of graph inside `within`, canonical order, empty set first.
    std::vector<GeneratorSet> cliques_within(DefiningGraph const& graph,
                                             GeneratorSet         within,
                                             std::size_t          max_size) {
      std::vector<GeneratorSet> out;
      auto rec = [&](auto&& self, GeneratorSet current, GeneratorSet candidates)
          -> void {
        out.push_back(current);
        if (current.size() == max_size) {
          return;
        }
        for (auto m = candidates.mask(); m != 0; m &= m - 1) {
          auto const g    = static_cast<Generator>(std::countr_zero(m));
          auto       next = current;
          next.insert(g);
          self(self, next, GeneratorSet(m & (m - 1)) & graph.neighbors(g));
        }
      };
      rec(rec, GeneratorSet(), within);
      std::sort(out.begin(), out.end(), canonical_less);
      return out;
    }

  }  // namespace

  Cube canonical_cube(GroupElement const&  g,
                      GeneratorSet         axis,
                      DefiningGraph const& graph) {
    SphericalSubset const t(axis, graph);
    auto                  base = g;
    bool                  shortened;
    do {
      shortened = false;
      for (auto a : axis.members()) {
        auto next = multiply(base, generator(a, graph), graph);
        if (next.length() < base.length()) {
          base      = std::move(next);
          shortened = true;
        }
      }
    } while (shortened);
    return Cube{std::move(base), t};
  }

  std::vector<GroupElement> cube_vertices(Cube const& cube, DefiningGraph const& graph) {
    std::vector<GroupElement> out;
    for (auto s : cliques_within(graph, cube.axis.members(), cube.axis.size())) {
      out.push_back(times(cube.base, s, graph));
    }
    return out;
  }

  bool Ball::contains(Cube const& c) const {
    auto it = _vertex_index.find(c.base);
    if (it == _vertex_index.end()) {
      return false;
    }
    auto const& axes = _axes_at_base[it->second];
    return std::binary_search(
        axes.begin(), axes.end(), c.axis.members(), canonical_less);
  }

  std::pair<std::size_t, std::size_t> Ball::sphere_range(std::size_t r) const {
    if (r > _radius) {
      throw InvalidArgument("sphere radius " + std::to_string(r)
                            + " exceeds ball radius " + std::to_string(_radius));
    }
    return {_sphere_offsets[r], _sphere_offsets[r + 1]};
  }

  std::vector<std::size_t> Ball::cube_census() const {
    std::vector<std::size_t> census(_max_clique.size() + 1, 0);
    for (auto const& c : _cubes) {
      ++census[c.dimension()];
    }
    while (census.size() > 1 && census.back() == 0) {
      census.pop_back();
    }
    return census;
  }

  Ball build_ball(DefiningGraph const& graph,
                  std::size_t          radius,
                  std::size_t          max_vertices) {
    Ball ball(graph);
    ball._radius          = radius;
    ball._max_clique      = maximum_spherical(graph);
    ball._reliable_radius = static_cast<std::int64_t>(radius)
                            - static_cast<std::int64_t>(ball._max_clique.size());

    auto add_vertex = [&ball](GroupElement v) {
      ball._vertex_index.emplace(v, ball._vertices.size());
      ball._vertices.push_back(std::move(v));
    };
    if (max_vertices < 1) {
      throw ResourceCapError(0, "vertex cap of 0 admits no ball");
    }
    ball._sphere_offsets.push_back(0);
    add_vertex(GroupElement());
    ball._sphere_offsets.push_back(1);

    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<GroupElement> layer;
      for (auto i = ball._sphere_offsets[r - 1]; i < ball._sphere_offsets[r]; ++i) {
        for (Generator g = 0; g < graph.size(); ++g) {
          NormalFormBuilder b(graph, ball._vertices[i]);
          b.push_back(g);
          if (b.word().size() == r) {
            layer.push_back(b.element());
          }
        }
      }
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
      if (ball._vertices.size() + layer.size() > max_vertices) {
        throw ResourceCapError(r - 1,
                               "ball exceeds the cap of "
                                   + std::to_string(max_vertices)
                                   + " vertices at radius " + std::to_string(r)
                                   + "; complete up to radius "
                                   + std::to_string(r - 1));
      }
      for (auto& v : layer) {
        add_vertex(std::move(v));
      }
      ball._sphere_offsets.push_back(ball._vertices.size());
    }

    // g Gamma_T lies in the ball iff g is its shortest element, i.e. T avoids
    // the right descents of g, and length(g) + |T| <= radius.
    ball._axes_at_base.resize(ball._vertices.size());
    for (std::size_t i = 0; i < ball._vertices.size(); ++i) {
      auto const& g     = ball._vertices[i];
      auto const  avail = graph.all() - right_descents(g, graph);
      auto        axes  = cliques_within(graph, avail, radius - g.length());
      for (auto t : axes) {
        ball._cubes.push_back(Cube{g, SphericalSubset(t, graph)});
      }
      ball._axes_at_base[i] = std::move(axes);
    }
    return ball;
  }

  std::vector<GroupElement> sphere(Ball const& ball, std::size_t r) {
    auto [first, last] = ball.sphere_range(r);
    return {ball.vertices().begin() + static_cast<std::ptrdiff_t>(first),
            ball.vertices().begin() + static_cast<std::ptrdiff_t>(last)};
  }

  std::vector<std::vector<Cube>> cubes_at_vertex(Ball const& ball, GroupElement const& v) {
    auto const& graph = ball.graph();
    if (!ball.contains(v)) {
      throw InvalidArgument("\"" + format_word(graph, v)
                            + "\" is not a vertex of the ball");
    }
    std::vector<std::vector<Cube>> out(ball.maximum_clique().size() + 1);
    for (auto t : cliques_within(graph, graph.all(), graph.size())) {
      auto c = canonical_cube(v, t, graph);
      if (ball.contains(c)) {
        out[c.dimension()].push_back(std::move(c));
      }
    }
    for (auto& dim : out) {
      std::sort(dim.begin(), dim.end());
    }
    while (out.size() > 1 && out.back().empty()) {
      out.pop_back();
    }
    return out;
  }

  FlagReport links_flag_check(Ball const& ball) {
    auto const& graph = ball.graph();
    FlagReport  report;
    for (auto const& v : ball.vertices()) {
      if (!ball.within_reliable_radius(v)) {
        break;
      }
      ++report.vertices_checked;
      auto const at_v = cubes_at_vertex(ball, v);
      // Link of v: one vertex per edge direction, one simplex per cube.
      GeneratorSet              directions;
      std::vector<GeneratorSet> square_with(graph.size());
      if (at_v.size() > 1) {
        for (auto const& e : at_v[1]) {
          directions = directions | e.axis.members();
        }
      }
      if (at_v.size() > 2) {
        for (auto const& sq : at_v[2]) {
          auto const m = sq.axis.members().members();
          square_with[m[0]].insert(m[1]);
          square_with[m[1]].insert(m[0]);
        }
      }
      std::vector<GeneratorSet> axes;
      for (auto const& dim : at_v) {
        for (auto const& c : dim) {
          axes.push_back(c.axis.members());
        }
      }
      // Every set of directions that pairwise span squares must span a cube.
      FlagViolation const* found = nullptr;
      FlagViolation        violation;
      auto rec = [&](auto&& self, GeneratorSet current, GeneratorSet candidates)
          -> void {
        if (found != nullptr) {
          return;
        }
        if (current.size() >= 3
            && std::find(axes.begin(), axes.end(), current) == axes.end()) {
          violation = FlagViolation{v, current};
          found     = &violation;
          return;
        }
        for (auto m = candidates.mask(); m != 0; m &= m - 1) {
          auto const g    = static_cast<Generator>(std::countr_zero(m));
          auto       next = current;
          next.insert(g);
          self(self, next, GeneratorSet(m & (m - 1)) & square_with[g]);
        }
      };
      rec(rec, GeneratorSet(), directions);
      if (found != nullptr) {
        report.flag = false;
        report.violations.push_back(violation);
        return report;
      }
    }
    return report;
  }

  std::string export_complex(Ball const& ball, std::string_view format) {
    auto const& graph = ball.graph();
    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["radius"]          = ball.radius();
      doc["reliable_radius"] = ball.reliable_radius();
      auto& vertices         = doc["vertices"] = nlohmann::ordered_json::array();
      for (auto const& v : ball.vertices()) {
        vertices.push_back(format_word(graph, v));
      }
      auto& cubes = doc["cubes"] = nlohmann::ordered_json::array();
      for (auto const& c : ball.cubes()) {
        if (c.dimension() == 0) {
          continue;
        }
        nlohmann::ordered_json cell;
        cell["base"] = format_word(graph, c.base);
        cell["axis"] = format_set(graph, c.axis.members());
        cubes.push_back(std::move(cell));
      }
      return doc.dump(2) + "\n";
    } else if (format == "dot") {
      std::ostringstream out;
      out << "graph ball {\n";
      for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
        auto const& v = ball.vertices()[i];
        out << "  n" << i << " [label=\""
            << (v.is_identity() ? std::string("1") : format_word(graph, v))
            << "\"];\n";
      }
      std::unordered_map<GroupElement, std::size_t> index;
      for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
        index.emplace(ball.vertices()[i], i);
      }
      for (auto const& c : ball.cubes()) {
        if (c.dimension() != 1) {
          continue;
        }
        auto const ends = cube_vertices(c, graph);
        auto const s    = c.axis.members().members().front();
        out << "  n" << index.at(ends[0]) << " -- n" << index.at(ends[1])
            << " [label=\"" << graph.label(s) << "\"];\n";
      }
      out << "}\n";
      return out.str();
    }
    throw FormatError("unknown complex export format \"" + std::string(format)
                      + "\" (expected json or dot)");
  }

}  // namespace racg
