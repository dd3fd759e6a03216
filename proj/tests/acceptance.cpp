// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "racg/boundary.hpp"
#include "racg/cli.hpp"
#include "racg/tits.hpp"

using namespace racg;

namespace {

  using Clock = std::chrono::steady_clock;

  char const* const presets[] = {"square", "dinfty", "pentagon", "grid"};

  std::vector<DefiningGraph> random_graphs() {
    std::mt19937_64            rng(20261015);
    std::vector<DefiningGraph> out;
    for (int i = 0; i < 200; ++i) {
      out.push_back(oracle::random_graph(rng, 7));
    }
    return out;
  }

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  // Each check returns an empty string on success and a reason otherwise.
  using Check = std::function<std::string()>;

  std::string involution_law(std::vector<DefiningGraph> const& graphs) {
    auto const start = Clock::now();
    for (auto const& graph : graphs) {
      auto const inv = build_involution(graph);
      auto const g   = oracle::matrix_of(graph, inv.element.word());
      if (oracle::product(g, g) != oracle::identity(graph.size())) {
        return "gamma squared is not the identity matrix";
      }
      if (g == oracle::identity(graph.size()) || inv.element.is_identity()) {
        return "gamma is the identity";
      }
      if (inv.element.length() != oracle::max_clique(graph).size()) {
        return "length(gamma) differs from |S|";
      }
      if (!multiply(inv.element, inv.element, graph).is_identity()) {
        return "gamma * gamma does not reduce to the empty word";
      }
    }
    if (auto const t = seconds_since(start); t >= 5.0) {
      return "took " + std::to_string(t) + " s";
    }
    return {};
  }

  std::string unique_fixed_point() {
    for (auto const* name : presets) {
      auto const graph = *preset(name);
      auto const inv   = build_involution(graph);
      for (std::size_t radius = 3; radius <= 6; ++radius) {
        auto const start  = Clock::now();
        auto const report = fixed_loci(inv, build_ball(graph, radius));
        auto const where  = std::string(name) + " L=" + std::to_string(radius);
        if (report.loci.size() != 1) {
          return where + ": " + std::to_string(report.loci.size()) + " loci";
        }
        auto const& locus = report.loci[0];
        if (locus.dimension != 0 || !locus.cube.base.is_identity()
            || locus.cube.axis != inv.clique) {
          return where + ": locus is not the point at (e, S)";
        }
        if (!report.unique_point) {
          return where + ": unique_point not reported";
        }
        if (radius == 6) {
          if (auto const t = seconds_since(start); t >= 10.0) {
            return where + ": took " + std::to_string(t) + " s";
          }
        }
      }
    }
    return {};
  }

  std::string antipodal(std::vector<DefiningGraph> const& graphs) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!antipodal_check(build_involution(graphs[i]), graphs[i])) {
        return "graph #" + std::to_string(i) + " fails";
      }
    }
    return {};
  }

  std::string word_problem() {
    auto const start = Clock::now();
    for (auto const* name : presets) {
      auto const graph   = *preset(name);
      auto const max_len = std::string(name) == "pentagon" ? 5 : 6;
      std::map<oracle::Matrix, GroupElement> by_matrix;
      std::map<GroupElement, oracle::Matrix> by_form;
      for (auto const& w : oracle::all_words(graph.size(), max_len)) {
        auto const x = normal_form(w, graph);
        auto const m = oracle::matrix_of(graph, w);
        if (by_matrix.try_emplace(m, x).first->second != x) {
          return std::string(name) + ": equal matrices, different normal forms";
        }
        if (by_form.try_emplace(x, m).first->second != m) {
          return std::string(name) + ": equal normal forms, different matrices";
        }
      }
      auto const table = oracle::shortlex_table(graph, 5);
      for (auto const& w : oracle::all_words(graph.size(), 5)) {
        if (normal_form(w, graph).word() != table.at(oracle::matrix_of(graph, w))) {
          return std::string(name) + ": normal form is not the shortlex-least geodesic";
        }
      }
    }
    if (auto const t = seconds_since(start); t >= 60.0) {
      return "took " + std::to_string(t) + " s";
    }
    return {};
  }

  std::string ball_census() {
    auto const dinfty = *preset("dinfty");
    for (std::size_t radius = 0; radius <= 8; ++radius) {
      auto const size = build_ball(dinfty, radius).vertices().size();
      std::size_t oracle_size = 0;
      for (auto s : oracle::sphere_sizes(dinfty, radius)) {
        oracle_size += s;
      }
      if (size != 2 * radius + 1 || oracle_size != size) {
        return "dinfty L=" + std::to_string(radius) + " has " + std::to_string(size)
               + " vertices";
      }
    }
    auto const square = *preset("square");
    if (build_ball(square, 2).cubes().size() != 9) {
      return "square L=2 does not have 9 cells";
    }
    auto const pentagon = *preset("pentagon");
    auto const sizes    = oracle::sphere_sizes(pentagon, 2);
    if (build_ball(pentagon, 2).vertices().size() != 21 || sizes[0] + sizes[1] + sizes[2] != 21) {
      return "pentagon L=2 does not have 21 vertices";
    }
    return {};
  }

  std::string davis_structure() {
    for (auto const* name : presets) {
      auto const graph = *preset(name);
      for (std::size_t radius = 0; radius <= 5; ++radius) {
        auto const ball = build_ball(graph, radius);
        if (!links_flag_check(ball).flag) {
          return std::string(name) + " L=" + std::to_string(radius) + ": a link is not flag";
        }
        if (radius < 5) {
          continue;
        }
        auto const               at = cubes_at_vertex(ball, GroupElement());
        std::vector<std::size_t> cliques(graph.size() + 1, 0);
        for (auto const& c : oracle::all_cliques(graph)) {
          ++cliques[c.size()];
        }
        for (std::size_t k = 0; k < cliques.size(); ++k) {
          auto const cubes = k < at.size() ? at[k].size() : 0;
          if (cubes != cliques[k]) {
            return std::string(name) + ": " + std::to_string(k)
                   + "-cubes at the identity differ from " + std::to_string(k) + "-cliques";
          }
        }
      }
    }
    return {};
  }

  std::string displacement_profiles() {
    auto const dinfty = *preset("dinfty");
    auto const p2     = displacement_profile(build_involution(dinfty), build_ball(dinfty, 4));
    std::vector<std::size_t> mins;
    for (auto const& s : p2.spheres) {
      mins.push_back(s.min);
    }
    if (mins != std::vector<std::size_t>{1, 1, 3, 5}) {
      return "dinfty minima differ from [1, 1, 3, 5]";
    }
    for (auto const* name : presets) {
      auto const graph   = *preset(name);
      auto const inv     = build_involution(graph);
      auto const ball    = build_ball(graph, 6);
      auto const profile = displacement_profile(inv, ball);
      if (!profile.min_non_decreasing()) {
        return std::string(name) + ": minima decrease";
      }
      for (auto const& v : ball.vertices()) {
        // Independent of the normal form: gamma moves v iff the matrices differ.
        auto const m = oracle::matrix_of(graph, v.word());
        if (displacement(inv, v, graph) == 0
            || oracle::product(oracle::matrix_of(graph, inv.element.word()), m) == m) {
          return std::string(name) + ": a vertex is fixed";
        }
      }
    }
    return {};
  }

  std::string determinism() {
    for (auto const* name : presets) {
      std::string outputs[2];
      for (auto& text : outputs) {
        std::ostringstream out, err;
        if (cli::run({"certify", "--preset", name, "--radius", "5"}, out, err) != 0) {
          return std::string(name) + ": certify did not pass";
        }
        text = out.str();
      }
      if (outputs[0] != outputs[1]) {
        return std::string(name) + ": outputs differ";
      }
    }
    return {};
  }

}  // namespace

int main() {
  auto graphs = random_graphs();
  for (auto const* name : presets) {
    graphs.push_back(*preset(name));
  }

  std::pair<char const*, Check> const criteria[] = {
      {"involution has order two", [&] { return involution_law(graphs); }},
      {"unique fixed point", unique_fixed_point},
      {"antipodal local action", [&] { return antipodal(graphs); }},
      {"word problem matches Tits matrices", word_problem},
      {"ball census", ball_census},
      {"Davis complex structure", davis_structure},
      {"displacement profile", displacement_profiles},
      {"certify is deterministic", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto const  start = Clock::now();
    std::string reason;
    try {
      reason = criteria[i].second();
    } catch (std::exception const& e) {
      reason = std::string("exception: ") + e.what();
    }
    auto const t = seconds_since(start);
    if (reason.empty()) {
      std::printf("PASS %zu %s (%.2f s)\n", i + 1, criteria[i].first, t);
    } else {
      ++failures;
      std::printf("FAIL %zu %s: %s\n", i + 1, criteria[i].first, reason.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
