#include "racg/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "racg/boundary.hpp"
#include "racg/davis.hpp"
#include "racg/errors.hpp"
#include "racg/involution.hpp"
#include "racg/report.hpp"
#include "racg/spherical.hpp"

namespace racg::cli {

  namespace {

    struct Invocation {
      std::string              preset;
      std::string              graph_file;
      std::optional<std::size_t> radius;
      std::string              format         = "json";
      std::string              out_file;
      std::size_t              max_vertices   = default_max_vertices;
      std::size_t              max_generators = 24;
      std::vector<std::string> words;
    };

    std::string join(std::vector<std::string> const& tokens) {
      std::string out;
      for (auto const& t : tokens) {
        if (!out.empty()) {
          out += ' ';
        }
        out += t;
      }
      return out;
    }

    // Identity prints as "e" unless a generator already uses that name.
    std::string word_line(DefiningGraph const& graph, GroupElement const& x) {
      if (x.is_identity() && !graph.find("e")) {
        return "e\n";
      }
      return format_word(graph, x) + "\n";
    }

    DefiningGraph load_graph(Invocation const& inv) {
      std::optional<DefiningGraph> graph;
      if (!inv.preset.empty()) {
        graph = preset(inv.preset);
      } else {
        std::ifstream in(inv.graph_file);
        if (!in) {
          throw InvalidArgument("cannot read graph file \"" + inv.graph_file + "\"");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        graph = parse_graph(buffer.str());
      }
      if (graph->size() > inv.max_generators) {
        throw InvalidArgument("graph has " + std::to_string(graph->size())
                              + " generators, above --max-generators "
                              + std::to_string(inv.max_generators));
      }
      return *graph;
    }

    std::size_t require_radius(Invocation const& inv) {
      if (!inv.radius) {
        throw InvalidArgument("this subcommand needs --radius");
      }
      return *inv.radius;
    }

    GroupElement element_of(DefiningGraph const& graph, std::string const& text) {
      return normal_form(parse_word(graph, text), graph);
    }

    // Produces the text of one subcommand and whether verification failed.
    std::pair<std::string, bool> execute(std::string const& command,
                                         Invocation const&  inv) {
      auto const graph  = load_graph(inv);
      auto const format = parse_format(inv.format);
      auto const json_only = [&](Json const& doc) {
        return format_report(doc, format);
      };
      auto const word_only = [&](GroupElement const& x) {
        if (format != Format::json) {
          throw FormatError("\"" + command + "\" prints a word; dot is not supported");
        }
        return word_line(graph, x);
      };

      if (command == "nf") {
        return {word_only(element_of(graph, join(inv.words))), false};
      } else if (command == "mul") {
        if (inv.words.size() != 2) {
          throw InvalidArgument("mul takes exactly two words");
        }
        return {word_only(multiply(element_of(graph, inv.words[0]),
                                   element_of(graph, inv.words[1]),
                                   graph)),
                false};
      } else if (command == "order") {
        auto const x = element_of(graph, join(inv.words));
        Json       doc;
        doc["element"]   = format_word(graph, x);
        doc["length"]    = x.length();
        doc["order_two"] = has_order_two(x, graph);
        return {json_only(doc), false};
      } else if (command == "cliques") {
        if (format != Format::json) {
          throw FormatError("cliques has no dot form");
        }
        auto const poset = spherical_poset(graph);
        Json       doc   = Json::array();
        for (auto const& s : poset.elements()) {
          doc.push_back(format_set(graph, s.members()));
        }
        return {doc.dump() + "\n", false};
      } else if (command == "maxclique") {
        if (format != Format::json) {
          throw FormatError("maxclique has no dot form");
        }
        Json doc = format_set(graph, maximum_spherical(graph).members());
        return {doc.dump() + "\n", false};
      } else if (command == "gamma") {
        return {json_only(to_json(build_involution(graph), graph)), false};
      } else if (command == "ball") {
        auto const ball = build_ball(graph, require_radius(inv), inv.max_vertices);
        if (format == Format::dot) {
          return {format_report(ball, format), false};
        }
        return {json_only(ball_summary(ball)), false};
      } else if (command == "cubes") {
        auto const ball = build_ball(graph, require_radius(inv), inv.max_vertices);
        Json       doc;
        if (inv.words.empty()) {
          doc = Json::array();
          for (auto const& c : ball.cubes()) {
            doc.push_back(to_json(c, graph));
          }
        } else {
          auto const v = element_of(graph, join(inv.words));
          doc["vertex"] = format_word(graph, v);
          auto& dims    = doc["cubes_by_dimension"] = Json::array();
          for (auto const& cubes : cubes_at_vertex(ball, v)) {
            Json level = Json::array();
            for (auto const& c : cubes) {
              level.push_back(to_json(c, graph));
            }
            dims.push_back(std::move(level));
          }
        }
        return {json_only(doc), false};
      } else if (command == "fixed") {
        auto const ball = build_ball(graph, require_radius(inv), inv.max_vertices);
        auto const gamma = build_involution(graph);
        return {json_only(to_json(fixed_loci(gamma, ball), gamma, graph)), false};
      } else if (command == "profile") {
        auto const ball  = build_ball(graph, require_radius(inv), inv.max_vertices);
        auto const gamma = build_involution(graph);
        return {json_only(to_json(displacement_profile(gamma, ball), gamma, ball)),
                false};
      } else if (command == "certify") {
        auto const cert = certify(graph, require_radius(inv), inv.max_vertices);
        return {json_only(to_json(cert)), !cert.verdict};
      } else if (command == "export") {
        auto const ball = build_ball(graph, require_radius(inv), inv.max_vertices);
        return {format_report(ball, format), false};
      }
      throw InvalidArgument("unknown subcommand \"" + command + "\"");
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App   app{"Right-angled Coxeter groups: normal forms, Davis complex "
                   "balls and the fixed points of the involution gamma",
                 "racg"};
    Invocation inv;
    app.fallthrough();
    app.require_subcommand(1);

    auto* preset_opt
        = app.add_option("--preset", inv.preset, "Built-in graph")
              ->check(CLI::IsMember(preset_names()));
    auto* graph_opt = app.add_option("--graph", inv.graph_file, "Graph file (JSON or text)");
    preset_opt->excludes(graph_opt);
    app.add_option("--radius", inv.radius, "Ball radius L");
    app.add_option("--format", inv.format, "json or dot")->capture_default_str();
    app.add_option("--out", inv.out_file, "Write output to FILE instead of stdout");
    app.add_option("--max-vertices", inv.max_vertices, "Vertex cap for balls")
        ->capture_default_str();
    app.add_option("--max-generators", inv.max_generators, "Generator cap for graphs")
        ->capture_default_str();

    struct Spec {
      char const* name;
      char const* help;
      char const* positional;  // nullptr: none
    };
    static constexpr Spec subcommands[] = {
        {"nf", "Shortlex normal form of a word", "word"},
        {"mul", "Product of two words", "words"},
        {"order", "Whether a word has order two", "word"},
        {"cliques", "All spherical subsets", nullptr},
        {"maxclique", "The chosen maximum clique S", nullptr},
        {"gamma", "The involution gamma", nullptr},
        {"ball", "Summary of the ball of radius L (dot: 1-skeleton)", nullptr},
        {"cubes", "Cubes of the ball, or those at a vertex", "vertex"},
        {"fixed", "Fixed loci of gamma inside the ball", nullptr},
        {"profile", "Displacement of gamma per sphere", nullptr},
        {"certify", "Full verification certificate", nullptr},
        {"export", "Ball as JSON or DOT", nullptr},
    };
    for (auto const& s : subcommands) {
      auto* sub = app.add_subcommand(s.name, s.help);
      if (s.positional != nullptr) {
        sub->add_option(s.positional, inv.words, "Word(s) over the generator labels");
      }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return invalid_input;
    }
    if (inv.preset.empty() && inv.graph_file.empty()) {
      err << "error: one of --preset or --graph is required\n";
      return invalid_input;
    }

    auto const command = app.get_subcommands().front()->get_name();
    try {
      auto [text, failed] = execute(command, inv);
      if (inv.out_file.empty()) {
        out << text;
      } else {
        std::ofstream file(inv.out_file, std::ios::binary);
        if (!file || !(file << text)) {
          err << "error: cannot write \"" << inv.out_file << "\"\n";
          return invalid_input;
        }
      }
      return failed ? verification_failed : success;
    } catch (ResourceCapError const& e) {
      err << "error: " << e.what() << "\n";
      return resource_cap;
    } catch (OverflowError const& e) {
      err << "error: " << e.what() << "\n";
      return resource_cap;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return invalid_input;
    }
  }

}  // namespace racg::cli
