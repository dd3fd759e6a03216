#include "racg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "racg/errors.hpp"

namespace racg {

  namespace {

    bool is_blank(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    std::vector<std::string> split_ws(std::string_view text) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_blank(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_blank(text[j])) {
          ++j;
        }
        if (j > i) {
          out.emplace_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    DefiningGraph parse_json_graph(std::string_view text) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(ParseError::Kind::malformed,
                         "",
                         std::string("malformed JSON graph: ") + e.what());
      }
      if (!doc.is_object() || !doc.contains("vertices")
          || !doc["vertices"].is_array()) {
        throw ParseError(ParseError::Kind::malformed,
                         "vertices",
                         "JSON graph needs a \"vertices\" array");
      }
      std::vector<std::string> labels;
      for (auto const& v : doc["vertices"]) {
        if (!v.is_string()) {
          throw ParseError(ParseError::Kind::invalid_label,
                           v.dump(),
                           "vertex label must be a string: " + v.dump());
        }
        labels.push_back(v.get<std::string>());
      }
      std::vector<std::pair<std::string, std::string>> edges;
      if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
          throw ParseError(ParseError::Kind::malformed,
                           "edges",
                           "\"edges\" must be an array");
        }
        for (auto const& e : doc["edges"]) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_string()
              || !e[1].is_string()) {
            throw ParseError(ParseError::Kind::malformed,
                             e.dump(),
                             "edge must be a pair of labels: " + e.dump());
          }
          edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
      }
      return DefiningGraph(std::move(labels), edges);
    }

    DefiningGraph parse_text_graph(std::string_view text) {
      std::istringstream                               in{std::string(text)};
      std::string                                      line;
      std::vector<std::string>                         labels;
      std::vector<std::pair<std::string, std::string>> edges;
      bool                                             have_labels = false;
      while (std::getline(in, line)) {
        auto tokens = split_ws(line);
        if (!have_labels) {
          if (tokens.empty()) {
            continue;
          }
          labels      = std::move(tokens);
          have_labels = true;
          continue;
        }
        if (tokens.empty()) {
          continue;
        }
        if (tokens.size() != 2) {
          throw ParseError(ParseError::Kind::malformed,
                           line,
                           "edge line must hold exactly two labels: \"" + line
                               + "\"");
        }
        edges.emplace_back(tokens[0], tokens[1]);
      }
      return DefiningGraph(std::move(labels), edges);
    }

  }  // namespace

  std::vector<Generator> GeneratorSet::members() const {
    std::vector<Generator> out;
    out.reserve(size());
    for (auto m = _mask; m != 0; m &= m - 1) {
      out.push_back(static_cast<Generator>(std::countr_zero(m)));
    }
    return out;
  }

  bool canonical_less(GeneratorSet a, GeneratorSet b) noexcept {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    auto diff = a.mask() ^ b.mask();
    if (diff == 0) {
      return false;
    }
    // Equal sizes: the set owning the lowest differing member sorts first.
    return ((a.mask() >> std::countr_zero(diff)) & 1U) != 0;
  }

  DefiningGraph::DefiningGraph(
      std::vector<std::string>                                labels,
      std::vector<std::pair<std::string, std::string>> const& edges)
      : _labels(std::move(labels)), _neighbors(_labels.size()) {
    if (_labels.empty()) {
      throw ParseError(ParseError::Kind::empty_vertex_list,
                       "",
                       "the vertex list is empty");
    }
    if (_labels.size() > max_generators) {
      throw ParseError(ParseError::Kind::too_many_generators,
                       std::to_string(_labels.size()),
                       "at most 64 generators are supported, got "
                           + std::to_string(_labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (auto const& l : _labels) {
      if (l.empty() || std::any_of(l.begin(), l.end(), is_blank)) {
        throw ParseError(ParseError::Kind::invalid_label,
                         l,
                         "invalid label \"" + l
                             + "\": labels are non-empty and contain no "
                               "whitespace");
      }
      if (!seen.insert(l).second) {
        throw ParseError(
            ParseError::Kind::duplicate_label, l, "duplicate label \"" + l + "\"");
      }
    }
    for (auto const& [u, v] : edges) {
      auto a = find(u);
      if (!a) {
        throw ParseError(ParseError::Kind::unknown_label,
                         u,
                         "edge references unknown label \"" + u + "\"");
      }
      auto b = find(v);
      if (!b) {
        throw ParseError(ParseError::Kind::unknown_label,
                         v,
                         "edge references unknown label \"" + v + "\"");
      }
      if (*a == *b) {
        throw ParseError(
            ParseError::Kind::self_loop, u, "self-loop on label \"" + u + "\"");
      }
      _neighbors[*a].insert(*b);
      _neighbors[*b].insert(*a);
    }
  }

  std::optional<Generator> DefiningGraph::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Generator>(it - _labels.begin());
  }

  GeneratorSet DefiningGraph::all() const noexcept {
    return size() == 64 ? GeneratorSet(~std::uint64_t{0})
                        : GeneratorSet((std::uint64_t{1} << size()) - 1);
  }

  std::vector<std::pair<Generator, Generator>> DefiningGraph::edges() const {
    std::vector<std::pair<Generator, Generator>> out;
    for (Generator a = 0; a < size(); ++a) {
      for (Generator b = a + 1; b < size(); ++b) {
        if (adjacent(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool DefiningGraph::is_complete() const noexcept {
    for (Generator a = 0; a < size(); ++a) {
      if (_neighbors[a].size() != size() - 1) {
        return false;
      }
    }
    return true;
  }

  DefiningGraph parse_graph(std::string_view text) {
    auto first = std::find_if_not(text.begin(), text.end(), is_blank);
    if (first != text.end() && *first == '{') {
      return parse_json_graph(text);
    }
    return parse_text_graph(text);
  }

  std::vector<std::string> const& preset_names() {
    static std::vector<std::string> const names
        = {"square", "dinfty", "pentagon", "grid"};
    return names;
  }

  std::optional<DefiningGraph> preset(std::string_view name) {
    if (name == "square") {
      return DefiningGraph({"a", "b"}, {{"a", "b"}});
    } else if (name == "dinfty") {
      return DefiningGraph({"a", "b"}, {});
    } else if (name == "pentagon") {
      return DefiningGraph(
          {"v0", "v1", "v2", "v3", "v4"},
          {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v0"}});
    } else if (name == "grid") {
      return DefiningGraph(
          {"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    }
    return std::nullopt;
  }

  std::vector<Generator> parse_word(DefiningGraph const& graph,
                                    std::string_view     text) {
    auto tokens = split_ws(text);
    if (tokens.empty()) {
      return {};
    }
    if (tokens.size() == 1 && tokens[0] == "e" && !graph.find("e")) {
      return {};
    }
    bool const single_chars
        = std::all_of(graph.labels().begin(),
                      graph.labels().end(),
                      [](std::string const& l) { return l.size() == 1; });
    std::vector<Generator> word;
    for (auto const& tok : tokens) {
      if (auto g = graph.find(tok)) {
        word.push_back(*g);
        continue;
      }
      if (!single_chars) {
        throw ParseError(
            ParseError::Kind::unknown_label, tok, "unknown label \"" + tok + "\"");
      }
      for (char c : tok) {
        auto g = graph.find(std::string_view(&c, 1));
        if (!g) {
          throw ParseError(ParseError::Kind::unknown_label,
                           std::string(1, c),
                           "unknown label \"" + std::string(1, c) + "\" in \""
                               + tok + "\"");
        }
        word.push_back(*g);
      }
    }
    return word;
  }

  std::string format_word(DefiningGraph const&          graph,
                          std::vector<Generator> const& word) {
    std::string out;
    for (auto g : word) {
      if (!out.empty()) {
        out += ' ';
      }
      out += graph.label(g);
    }
    return out;
  }

  std::vector<std::string> format_set(DefiningGraph const& graph,
                                      GeneratorSet         set) {
    std::vector<std::string> out;
    for (auto g : set.members()) {
      out.push_back(graph.label(g));
    }
    return out;
  }

}  // namespace racg
