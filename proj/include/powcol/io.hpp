// Cayley table text/JSON formats and DOT export.
//
// Text format:
//
//   N
//   t(0,0) t(0,1) ... t(0,N-1)
//   ...
//   t(N-1,0) ... t(N-1,N-1)
//
// where row g, column h holds the 0-based index of g * h.  Lines starting
// with '#' are comments; "# name: <text>" lines, if present, give the N
// element names in order.
//
// JSON format: {"size": N, "table": [[...], ...], "names": [...],
// "metadata": "..."} with names and metadata optional.

#ifndef POWCOL_IO_HPP_
#define POWCOL_IO_HPP_

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coloring.hpp"
#include "error.hpp"
#include "magma.hpp"
#include "power_graph.hpp"

namespace powcol {

  inline Magma parse_magma(std::string_view text) {
    std::vector<std::string>               names;
    std::optional<std::size_t>             n;
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t                            line_no = 0;
    std::size_t                            last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }

      std::size_t first = 0;
      while (first < line.size()
             && std::isspace(static_cast<unsigned char>(line[first]))) {
        ++first;
      }
      if (first == line.size()) {
        continue;
      }
      if (line[first] == '#') {
        constexpr std::string_view tag = "name:";
        auto body = line.substr(first + 1);
        auto at   = body.find_first_not_of(" \t");
        if (at != std::string_view::npos && body.substr(at, tag.size()) == tag) {
          auto value = body.substr(at + tag.size());
          auto b     = value.find_first_not_of(" \t");
          auto e     = value.find_last_not_of(" \t");
          names.emplace_back(b == std::string_view::npos
                                 ? std::string_view{}
                                 : value.substr(b, e - b + 1));
        }
        continue;
      }

      std::vector<std::int64_t> values;
      std::size_t               col = first;
      while (col < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[col]))) {
          ++col;
          continue;
        }
        std::size_t start = col;
        if (line[col] == '-' || line[col] == '+') {
          ++col;
        }
        std::size_t digits = col;
        while (col < line.size()
               && std::isdigit(static_cast<unsigned char>(line[col]))) {
          ++col;
        }
        if (digits == col
            || (col < line.size()
                && !std::isspace(static_cast<unsigned char>(line[col])))) {
          throw ParseError(line_no, start + 1, "expected an integer");
        }
        try {
          values.push_back(std::stoll(std::string(line.substr(start, col - start))));
        } catch (std::out_of_range const&) {
          throw ParseError(line_no, start + 1, "integer out of range");
        }
      }

      if (!n) {
        if (values.size() != 1 || values[0] < 1) {
          throw ParseError(line_no, first + 1,
                           "expected the element count N >= 1");
        }
        n = static_cast<std::size_t>(values[0]);
      } else if (rows.size() == *n) {
        throw ParseError(line_no, first + 1, "unexpected data after the table");
      } else {
        if (values.size() != *n) {
          throw ParseError(line_no, first + 1,
                           "expected " + std::to_string(*n) + " entries, got "
                               + std::to_string(values.size()));
        }
        rows.push_back(std::move(values));
      }
      last_line = line_no;
    }
    if (!n) {
      throw ParseError(1, 1, "empty input");
    }
    if (rows.size() != *n) {
      throw ParseError(last_line + 1, 1,
                       "expected " + std::to_string(*n) + " rows, got "
                           + std::to_string(rows.size()));
    }
    if (!names.empty() && names.size() != *n) {
      throw ParseError(last_line, 1,
                       "expected " + std::to_string(*n) + " name lines, got "
                           + std::to_string(names.size()));
    }
    return build_magma(rows, std::move(names));
  }

  inline std::string serialize_magma(Magma const& m) {
    std::string out = std::to_string(m.size()) + "\n";
    for (element_type g = 0; g < m.size(); ++g) {
      auto row = m.row(g);
      for (std::size_t h = 0; h < row.size(); ++h) {
        out += (h ? " " : "") + std::to_string(row[h]);
      }
      out += "\n";
    }
    for (auto const& name : m.names()) {
      out += "# name: " + name + "\n";
    }
    return out;
  }

  inline nlohmann::ordered_json magma_to_json(Magma const& m) {
    nlohmann::ordered_json j;
    j["size"]  = m.size();
    auto table = nlohmann::ordered_json::array();
    for (element_type g = 0; g < m.size(); ++g) {
      auto row = m.row(g);
      table.push_back(std::vector<element_type>(row.begin(), row.end()));
    }
    j["table"] = std::move(table);
    if (m.has_names()) {
      j["names"] = m.names();
    }
    if (!m.metadata().empty()) {
      j["metadata"] = m.metadata();
    }
    return j;
  }

  inline Magma magma_from_json(nlohmann::json const& j) {
    try {
      auto table = j.at("table").get<std::vector<std::vector<std::int64_t>>>();
      if (j.contains("size") && j.at("size").get<std::size_t>() != table.size()) {
        throw DimensionMismatch("size field does not match the table");
      }
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      std::string metadata;
      if (j.contains("metadata")) {
        metadata = j.at("metadata").get<std::string>();
      }
      return build_magma(table, std::move(names), std::move(metadata));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(1, 1, e.what());
    }
  }

  //! Reads a Cayley file, JSON when the first non-blank character is '{'.
  inline Magma read_magma_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto text  = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(1, e.byte, e.what());
      }
      return magma_from_json(j);
    }
    return parse_magma(text);
  }

  namespace detail {

    inline std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

  }  // namespace detail

  struct DotOptions {
    bool                     directed = false;
    std::vector<std::string> labels;  // optional per-vertex display names
  };

  //! DOT text for P(G), or D(G) when directed (self-loops omitted).  With a
  //! colouring each vertex carries color_tag="A(n,i)" / "B(p)" / "C(m,n)".
  //! Vertices ascend and edges are lexicographic.
  inline std::string export_dot(PowerGraph const&     pg,
                                Coloring const*       coloring = nullptr,
                                DotOptions const&     options  = {}) {
    std::string out = options.directed ? "digraph D {\n" : "graph P {\n";
    for (vertex_type v = 0; v < pg.n_vertices(); ++v) {
      out += "  " + std::to_string(v);
      std::string attrs;
      if (coloring) {
        auto tag = coloring->assignment.at(v).to_string();
        auto label
            = options.labels.empty() ? tag : options.labels[v] + " " + tag;
        attrs = "label=" + detail::dot_quote(label)
                + ", color_tag=" + detail::dot_quote(tag);
      } else if (!options.labels.empty()) {
        attrs = "label=" + detail::dot_quote(options.labels[v]);
      }
      if (!attrs.empty()) {
        out += " [" + attrs + "]";
      }
      out += ";\n";
    }
    auto const arrow = options.directed ? " -> " : " -- ";
    for (auto const& [x, y] : options.directed ? pg.arcs() : pg.edges()) {
      out += "  " + std::to_string(x) + arrow + std::to_string(y) + ";\n";
    }
    return out + "}\n";
  }

  inline std::vector<std::string> element_labels(Magma const& m) {
    if (!m.has_names()) {
      return {};
    }
    return m.names();
  }

}  // namespace powcol

#endif  // POWCOL_IO_HPP_
