// Command-line front end.  Exit codes: 0 success, 1 a claim failed (or the
// input is not power-associative), 2 usage or input error.

#ifndef POWCOL_CLI_HPP_
#define POWCOL_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "families.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "oracle.hpp"
#include "symbolic.hpp"
#include "verify.hpp"

namespace powcol {

  using AnyFamily = std::variant<IntegerGroup, IntegerTimesCyclic, FreeMonogenic>;

  //! "Z", "FreeMono", "ZxZk:<k>" or "ZxZk(<k>)".
  inline AnyFamily parse_symbolic_family(std::string const& text) {
    if (text == "Z") {
      return IntegerGroup{};
    }
    if (text == "FreeMono") {
      return FreeMonogenic{};
    }
    if (text.rfind("ZxZk", 0) == 0 && text.size() > 5) {
      auto arg = text.substr(5);
      if (text[4] == '(' && arg.back() == ')') {
        arg.pop_back();
      } else if (text[4] != ':') {
        arg.clear();
      }
      try {
        std::size_t used = 0;
        auto        k    = std::stoll(arg, &used);
        if (used == arg.size()) {
          return IntegerTimesCyclic{k};
        }
      } catch (std::exception const&) {
      }
    }
    throw ParameterOutOfRange("unknown symbolic family '" + text
                              + "' (expected Z, ZxZk:<k> or FreeMono)");
  }

  namespace detail {

    struct InputOptions {
      std::string file;
      std::string family;

      void attach(CLI::App* cmd) {
        cmd->add_option("input", file, "Cayley table file (text or JSON)");
        cmd->add_option("--family,-f", family,
                        "generated family, e.g. cyclic(12), monogenic(3,2)");
      }

      [[nodiscard]] Magma load() const {
        if (!family.empty() && !file.empty()) {
          throw CLI::ValidationError("give either an input file or --family");
        }
        if (!family.empty()) {
          return generate(parse_family_spec(family));
        }
        if (file.empty()) {
          throw CLI::ValidationError("an input file or --family is required");
        }
        return read_magma_file(file);
      }
    };

    inline void write_output(std::string const& path,
                             std::string const& text,
                             std::ostream&      out) {
      if (path.empty() || path == "-") {
        out << text;
        return;
      }
      std::ofstream f(path);
      if (!f) {
        throw Error("cannot write '" + path + "'");
      }
      f << text;
    }

    inline void print_claims(std::vector<ClaimResult> const& claims,
                             std::ostream&                   out) {
      for (auto const& c : claims) {
        out << "  " << to_string(c.verdict) << "  " << c.name;
        if (!c.detail.empty()) {
          out << "  (" << c.detail << ")";
        }
        out << "\n";
      }
    }

  }  // namespace detail

  inline int run_cli(int                argc,
                     char const* const* argv,
                     std::ostream&      out = std::cout,
                     std::ostream&      err = std::cerr) {
    CLI::App app{"Power graphs of finite magmas and their explicit colouring",
                 "powcol"};
    app.require_subcommand(1);

    Limits limits;
    try {
      limits = Limits::from_environment();
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    // gen
    auto*       gen = app.add_subcommand("gen", "write the Cayley table of a family");
    std::string gen_family, gen_output;
    bool        gen_json = false;
    gen->add_option("--family,-f", gen_family, "family spec")->required();
    gen->add_option("--output,-o", gen_output, "output file (default stdout)");
    gen->add_flag("--json", gen_json, "write JSON instead of text");

    // analyze
    auto*                analyze_cmd = app.add_subcommand("analyze", "JSON analysis report");
    detail::InputOptions analyze_in;
    analyze_in.attach(analyze_cmd);

    // color
    auto*                color_cmd = app.add_subcommand("color", "print the explicit colouring");
    detail::InputOptions color_in;
    color_in.attach(color_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the claim suite");
    detail::InputOptions verify_in;
    bool                 verify_corpus = false;
    verify_in.attach(verify_cmd);
    verify_cmd->add_flag("--corpus", verify_corpus, "verify the default corpus");

    // chi
    auto*                chi_cmd = app.add_subcommand("chi", "chromatic number");
    detail::InputOptions chi_in;
    chi_in.attach(chi_cmd);
    chi_cmd->add_option("--limit", limits.chromatic,
                        "vertex cap for the exact search");

    // window
    auto* window_cmd = app.add_subcommand("window", "analyse a window of an infinite family");
    std::string  window_family;
    std::int64_t window_W = limits.window_W, window_E = limits.window_E;
    bool         window_list = false;
    window_cmd->add_option("--family,-f", window_family, "Z, ZxZk:<k> or FreeMono")
        ->required();
    window_cmd->add_option("--W", window_W, "coordinate bound");
    window_cmd->add_option("--E", window_E, "exponent bound");
    window_cmd->add_flag("--list", window_list, "also list every element's colour");

    // export-dot
    auto*                dot_cmd = app.add_subcommand("export-dot", "DOT export");
    detail::InputOptions dot_in;
    std::string          dot_output;
    bool                 dot_directed = false, dot_color = false;
    dot_in.attach(dot_cmd);
    dot_cmd->add_flag("--directed", dot_directed, "export D(G) instead of P(G)");
    dot_cmd->add_flag("--color", dot_color, "attach the explicit colouring");
    dot_cmd->add_option("--output,-o", dot_output, "output file (default stdout)");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (gen->parsed()) {
        auto m = generate(parse_family_spec(gen_family));
        detail::write_output(gen_output,
                             gen_json ? magma_to_json(m).dump(2) + "\n"
                                      : serialize_magma(m),
                             out);
        return 0;
      }

      if (analyze_cmd->parsed()) {
        auto r = analyze(analyze_in.load(), limits);
        out << to_json(r).dump(2) << "\n";
        return r.any_failed() ? 1 : 0;
      }

      if (color_cmd->parsed()) {
        auto m  = color_in.load();
        auto pa = check_power_associativity(m);
        if (!pa.passed()) {
          err << "not power-associative: witness (" << pa.witness->element << ","
              << pa.witness->a << "," << pa.witness->b << ")\n";
          return 1;
        }
        auto pg = build_power_graph(m);
        auto c  = paper_color_finite(m, pg);
        for (element_type g = 0; g < m.size(); ++g) {
          out << m.name(g) << " " << c.assignment[g].to_string() << "\n";
        }
        out << "palette " << c.palette_size() << "\n";
        return verify_proper_coloring(pg, c).empty() ? 0 : 1;
      }

      if (verify_cmd->parsed()) {
        if (verify_corpus) {
          std::size_t failed = 0, count = 0;
          for (auto const& spec : default_corpus()) {
            auto r = analyze(generate(spec), limits);
            ++count;
            bool bad = r.any_failed();
            failed += bad;
            out << (bad ? "FAIL " : "ok   ") << spec.to_string() << "\n";
            if (bad) {
              detail::print_claims(r.claims, out);
            }
          }
          out << count - failed << "/" << count << " magmas pass\n";
          return failed == 0 ? 0 : 1;
        }
        auto m = verify_in.load();
        auto r = analyze(m, limits);
        out << (m.metadata().empty() ? std::string("input") : m.metadata())
            << " (" << m.size() << " elements)\n";
        detail::print_claims(r.claims, out);
        return r.any_failed() ? 1 : 0;
      }

      if (chi_cmd->parsed()) {
        auto m  = chi_in.load();
        auto pg = build_power_graph(m);
        auto b  = chromatic_bounds(pg, limits.chromatic, limits.clique);
        if (b.exact) {
          out << b.lower << "\n";
        } else {
          out << "bounded " << b.lower << " " << b.upper << "\n";
        }
        return 0;
      }

      if (window_cmd->parsed()) {
        auto   family = parse_symbolic_family(window_family);
        Window w{window_W, window_E};
        w.validate();
        return std::visit(
            [&](auto const& f) {
              auto r = verify_window(f, w);
              auto j = to_json(r);
              if (window_list) {
                auto wc     = color_window(f, w);
                auto colors = nlohmann::ordered_json::array();
                for (std::size_t v = 0; v < wc.window_graph.elements.size(); ++v) {
                  colors.push_back(
                      {{"element", f.to_string(wc.window_graph.elements[v])},
                       {"color", wc.coloring.assignment[v].to_string()}});
                }
                j["coloring"] = std::move(colors);
              }
              out << j.dump(2) << "\n";
              return r.any_failed() ? 1 : 0;
            },
            family);
      }

      if (dot_cmd->parsed()) {
        auto       m  = dot_in.load();
        auto       pg = build_power_graph(m);
        DotOptions opts{dot_directed, element_labels(m)};
        std::optional<Coloring> c;
        if (dot_color) {
          auto pa = check_power_associativity(m);
          if (!pa.passed()) {
            err << "not power-associative; cannot colour\n";
            return 1;
          }
          c = paper_color_finite(m, pg);
        }
        detail::write_output(dot_output,
                             export_dot(pg, c ? &*c : nullptr, opts), out);
        return 0;
      }
    } catch (CLI::ValidationError const& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace powcol

#endif  // POWCOL_CLI_HPP_
