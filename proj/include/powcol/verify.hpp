// Per-magma and per-window claim suites, and the JSON analysis report.

#ifndef POWCOL_VERIFY_HPP_
#define POWCOL_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "coloring.hpp"
#include "limits.hpp"
#include "magma.hpp"
#include "oracle.hpp"
#include "power_graph.hpp"
#include "symbolic.hpp"

namespace powcol {

  enum class Verdict { pass, fail, skipped };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::skipped:
        return "skipped";
    }
    return "?";
  }

  struct ClaimResult {
    std::string name;
    Verdict     verdict = Verdict::pass;
    std::string detail;  // failure witness or reason for skipping
  };

  namespace detail {

    inline ClaimResult pass(std::string name, std::string detail = {}) {
      return {std::move(name), Verdict::pass, std::move(detail)};
    }
    inline ClaimResult fail(std::string name, std::string detail) {
      return {std::move(name), Verdict::fail, std::move(detail)};
    }
    inline ClaimResult skip(std::string name, std::string reason) {
      return {std::move(name), Verdict::skipped, std::move(reason)};
    }

  }  // namespace detail

  //! g^q is cyclic for every non-cyclic g with pre-period p and order n and
  //! every p < q <= n, and (g^q)^(n-p+1) = g^q.
  inline ClaimResult check_tail_powers_cyclic(Magma const& m) {
    std::string const name = "tail_powers_cyclic";
    for (auto const& prof : m.profiles()) {
      if (prof.cyclic) {
        continue;
      }
      auto const p = *prof.pre_period, n = prof.order;
      for (auto q = p + 1; q <= n; ++q) {
        auto gq = m.power(prof.element, q);
        if (!m.profile(gq).cyclic) {
          return detail::fail(name, "g=" + std::to_string(prof.element)
                                        + " q=" + std::to_string(q)
                                        + ": g^q is not cyclic");
        }
        if (m.power(gq, n - p + 1) != gq) {
          return detail::fail(name, "g=" + std::to_string(prof.element)
                                        + " q=" + std::to_string(q)
                                        + ": (g^q)^(n-p+1) != g^q");
        }
      }
    }
    return detail::pass(name);
  }

  //! For each order n, the cyclic elements of order n split into cliques of
  //! size exactly phi(n) with no edges between them.
  inline ClaimResult check_cyclic_cliques(Magma const& m, PowerGraph const& pg) {
    std::string const name = "cyclic_cliques";
    for (auto n : cyclic_orders(m)) {
      auto classes = cyclic_clique_decomposition(m, pg, n);
      std::vector<vertex_type> members;
      std::vector<std::vector<vertex_type>> partition;
      for (auto const& cls : classes) {
        partition.emplace_back(cls.begin(), cls.end());
        members.insert(members.end(), cls.begin(), cls.end());
      }
      std::sort(members.begin(), members.end());
      auto report = is_clique_union(pg, members, partition);
      if (!report.is_clique_union) {
        return detail::fail(name, "order " + std::to_string(n) + ": pair ("
                                      + std::to_string(report.witness->first)
                                      + ","
                                      + std::to_string(report.witness->second)
                                      + ") breaks the clique union");
      }
      auto const phi = totient(n);
      for (auto s : report.clique_sizes) {
        if (s != phi) {
          return detail::fail(name, "order " + std::to_string(n)
                                        + ": clique of size " + std::to_string(s)
                                        + " != phi(n) = " + std::to_string(phi));
        }
      }
    }
    return detail::pass(name);
  }

  //! Distinct non-cyclic elements with equal pre-period are never adjacent.
  inline ClaimResult check_pre_period_independence(Magma const& m, PowerGraph const& pg) {
    std::string const name = "pre_period_independence";
    std::map<std::uint64_t, std::vector<vertex_type>> by_pre_period;
    for (auto const& p : m.profiles()) {
      if (!p.cyclic) {
        by_pre_period[*p.pre_period].push_back(p.element);
      }
    }
    for (auto const& [p, group] : by_pre_period) {
      auto r = is_independent(pg, group);
      if (!r) {
        return detail::fail(name, "pre-period " + std::to_string(p)
                                      + ": elements "
                                      + std::to_string(r.witness->first) + " and "
                                      + std::to_string(r.witness->second)
                                      + " are adjacent");
      }
    }
    return detail::pass(name);
  }

  inline std::string describe_edges(std::vector<Edge> const& edges) {
    std::string s;
    for (std::size_t i = 0; i < edges.size() && i < 5; ++i) {
      s += (i ? " " : "") + std::string("{") + std::to_string(edges[i].first)
           + "," + std::to_string(edges[i].second) + "}";
    }
    if (edges.size() > 5) {
      s += " ...";
    }
    return s;
  }

  //! Everything the analyze and verify commands report about one magma.
  struct AnalysisReport {
    std::string                              metadata;
    std::size_t                              size = 0;
    std::optional<PowerAssociativityWitness> witness;
    std::vector<ElementProfile>              profiles;
    std::vector<std::string>                 names;
    std::optional<Coloring>                  coloring;
    std::optional<ChromaticBounds>           chromatic;
    std::vector<ClaimResult>                 claims;
    std::vector<std::string>                 violations;

    [[nodiscard]] bool power_associative() const noexcept {
      return !witness.has_value();
    }

    [[nodiscard]] bool any_failed() const {
      return std::any_of(claims.begin(), claims.end(), [](auto const& c) {
        return c.verdict == Verdict::fail;
      });
    }

    [[nodiscard]] ClaimResult const* claim(std::string const& name) const {
      for (auto const& c : claims) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }
  };

  //! Runs the full claim suite on m.  Claims that need exact oracles are
  //! skipped (with a reason) past the configured limits.
  inline AnalysisReport analyze(Magma const& m, Limits const& limits = {}) {
    AnalysisReport r;
    r.metadata = m.metadata();
    r.size     = m.size();
    r.names    = m.names();

    auto pa   = check_power_associativity(m);
    r.witness = pa.witness;
    if (!pa.passed()) {
      auto const& w = *pa.witness;
      r.claims.push_back(detail::fail(
          "power_associativity",
          "witness (g,a,b) = (" + std::to_string(w.element) + ","
              + std::to_string(w.a) + "," + std::to_string(w.b) + ")"));
      r.violations.push_back(r.claims.back().detail);
      for (auto const* name :
           {"tail_powers_cyclic", "cyclic_cliques", "pre_period_independence",
            "proper_coloring", "oracle_consistency", "palette_vs_chi"}) {
        r.claims.push_back(detail::skip(name, "magma is not power-associative"));
      }
      return r;
    }
    r.claims.push_back(detail::pass("power_associativity"));
    r.profiles = m.profiles();

    auto pg    = build_power_graph(m);
    r.coloring = paper_color_finite(m, pg);

    r.claims.push_back(check_tail_powers_cyclic(m));
    r.claims.push_back(check_cyclic_cliques(m, pg));
    r.claims.push_back(check_pre_period_independence(m, pg));

    auto bad = verify_proper_coloring(pg, *r.coloring);
    if (bad.empty()) {
      r.claims.push_back(detail::pass("proper_coloring"));
    } else {
      r.claims.push_back(detail::fail(
          "proper_coloring", "monochromatic edges " + describe_edges(bad)));
    }

    auto const palette = r.coloring->palette_size();
    if (m.size() <= limits.clique) {
      auto bounds = chromatic_bounds(pg, limits.chromatic, limits.clique);
      r.chromatic = bounds;
      auto greedy = greedy_color(pg);
      bool ok     = bounds.clique_size <= bounds.lower
                && bounds.upper <= greedy.palette_size()
                && verify_proper_coloring(pg, greedy).empty();
      r.claims.push_back(
          ok ? detail::pass("oracle_consistency",
                            bounds.exact ? "clique <= chi <= greedy"
                                         : "clique <= greedy (chi not exact)")
             : detail::fail("oracle_consistency",
                            "clique " + std::to_string(bounds.clique_size)
                                + ", chi bounds ["
                                + std::to_string(bounds.lower) + ","
                                + std::to_string(bounds.upper) + "], greedy "
                                + std::to_string(greedy.palette_size())));
      if (bounds.exact) {
        r.claims.push_back(
            palette >= bounds.lower
                ? detail::pass("palette_vs_chi",
                               "palette " + std::to_string(palette) + " >= chi "
                                   + std::to_string(bounds.lower))
                : detail::fail("palette_vs_chi",
                               "palette " + std::to_string(palette) + " < chi "
                                   + std::to_string(bounds.lower)));
      } else {
        r.claims.push_back(detail::skip(
            "palette_vs_chi", "exact chromatic number skipped: "
                                  + std::to_string(m.size()) + " > "
                                  + std::to_string(limits.chromatic)
                                  + " vertices"));
      }
    } else {
      auto greedy = greedy_color(pg);
      r.chromatic = ChromaticBounds{1, greedy.palette_size(), false, 0};
      auto reason = std::to_string(m.size()) + " > "
                    + std::to_string(limits.clique) + " vertices";
      r.claims.push_back(detail::skip("oracle_consistency", reason));
      r.claims.push_back(detail::skip("palette_vs_chi", reason));
    }

    for (auto const& c : r.claims) {
      if (c.verdict == Verdict::fail) {
        r.violations.push_back(c.name + ": " + c.detail);
      }
    }
    return r;
  }

  inline nlohmann::ordered_json profile_to_json(ElementProfile const& p) {
    nlohmann::ordered_json j;
    j["element"] = p.element;
    j["order"]   = p.order;
    j["index"]   = p.index;
    j["period"]  = p.period;
    j["cyclic"]  = p.cyclic;
    if (p.pre_period) {
      j["pre_period"] = *p.pre_period;
    } else {
      j["pre_period"] = nullptr;
    }
    return j;
  }

  inline nlohmann::ordered_json to_json(AnalysisReport const& r) {
    nlohmann::ordered_json j;
    j["metadata"]          = r.metadata;
    j["size"]              = r.size;
    j["power_associative"] = r.power_associative();
    if (r.witness) {
      j["witness"] = {{"g", r.witness->element},
                      {"a", r.witness->a},
                      {"b", r.witness->b}};
    } else {
      j["witness"] = nullptr;
    }
    auto profiles = nlohmann::ordered_json::array();
    for (auto const& p : r.profiles) {
      auto pj = profile_to_json(p);
      if (!r.names.empty()) {
        pj["name"] = r.names[p.element];
      }
      if (r.coloring) {
        pj["color"] = r.coloring->assignment[p.element].to_string();
      }
      profiles.push_back(std::move(pj));
    }
    j["profiles"] = std::move(profiles);
    if (r.coloring) {
      j["palette_size"] = r.coloring->palette_size();
    } else {
      j["palette_size"] = nullptr;
    }
    if (r.chromatic) {
      nlohmann::ordered_json chi;
      chi["mode"] = r.chromatic->exact ? "exact" : "bounded";
      if (r.chromatic->exact) {
        chi["value"] = r.chromatic->lower;
      } else {
        chi["lower"] = r.chromatic->lower;
        chi["upper"] = r.chromatic->upper;
      }
      j["chromatic_number"] = std::move(chi);
      if (r.chromatic->clique_size > 0) {
        j["max_clique_size"] = r.chromatic->clique_size;
      } else {
        j["max_clique_size"] = nullptr;
      }
    } else {
      j["chromatic_number"] = nullptr;
      j["max_clique_size"]  = nullptr;
    }
    auto claims = nlohmann::ordered_json::array();
    for (auto const& c : r.claims) {
      nlohmann::ordered_json cj;
      cj["name"]    = c.name;
      cj["verdict"] = to_string(c.verdict);
      cj["detail"]  = c.detail;
      claims.push_back(std::move(cj));
    }
    j["claims"]     = std::move(claims);
    j["violations"] = r.violations;
    return j;
  }

  //! Claim suite over one window of a symbolic family.
  struct WindowReport {
    std::string              family;
    Window                   window;
    std::size_t              n_elements       = 0;
    std::size_t              n_infinite       = 0;
    std::size_t              n_edges          = 0;
    std::size_t              n_components     = 0;
    std::size_t              splits           = 0;
    std::size_t              palette_size     = 0;
    std::size_t              equations_checked = 0;
    std::vector<ClaimResult> claims;

    [[nodiscard]] bool any_failed() const {
      return std::any_of(claims.begin(), claims.end(), [](auto const& c) {
        return c.verdict == Verdict::fail;
      });
    }
  };

  template <SymbolicFamily F>
  WindowReport verify_window(F const& f, Window const& w) {
    WindowReport r;
    r.family = f.name();
    r.window = w;

    auto        wc = color_window(f, w);
    auto const& wg = wc.window_graph;
    auto const& pg = wg.graph;
    auto const  n  = wg.elements.size();
    r.n_elements   = n;
    r.n_edges      = pg.n_edges();
    r.n_components = wc.components.size();
    r.splits       = wc.splits;
    r.palette_size = wc.coloring.palette_size();

    std::vector<bool> infinite(n);
    for (vertex_type v = 0; v < n; ++v) {
      infinite[v] = f.infinite_order(wg.elements[v]);
      r.n_infinite += infinite[v];
    }

    // Every G(x, m, n) is independent and contains no finite-order element.
    {
      std::optional<std::string> indep_failure, finite_failure;
      for (vertex_type v = 0; v < n && !indep_failure; ++v) {
        if (!infinite[v]) {
          continue;
        }
        auto const& x = wg.elements[v];
        for (std::int64_t m = 1; m <= w.E && !indep_failure; ++m) {
          for (std::int64_t k = 1; k <= w.E; ++k) {
            auto sols = f.solve_power_equation(
                x, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k), w);
            ++r.equations_checked;
            auto verts = wg.vertices_of(sols);
            for (auto y : verts) {
              if (!infinite[y] && !finite_failure) {
                finite_failure = f.to_string(wg.elements[y]) + " in G("
                                 + f.to_string(x) + "," + std::to_string(m)
                                 + "," + std::to_string(k) + ")";
              }
            }
            auto ind = is_independent(pg, verts);
            if (!ind) {
              indep_failure = "G(" + f.to_string(x) + "," + std::to_string(m)
                              + "," + std::to_string(k) + ") contains edge "
                              + f.to_string(wg.elements[ind.witness->first])
                              + " -- "
                              + f.to_string(wg.elements[ind.witness->second]);
              break;
            }
          }
        }
      }
      r.claims.push_back(indep_failure
                             ? detail::fail("solution_set_independence", *indep_failure)
                             : detail::pass("solution_set_independence"));
      r.claims.push_back(finite_failure
                             ? detail::fail("finite_order_exclusion", *finite_failure)
                             : detail::pass("finite_order_exclusion"));
    }

    // Window-relative closure: y in C(x) via x^m = y^n, z adjacent to y via
    // y^p = z^q with mp, nq <= E forces z in C(x).
    {
      // powers_of[v]: (z, j) with z = v^j, least j, z != v
      std::vector<std::vector<std::pair<vertex_type, std::uint64_t>>> powers_of(n),
          roots_of(n);
      for (vertex_type v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        seen[v] = true;
        for (std::int64_t j = 2; j <= w.E; ++j) {
          auto z = wg.find(f.power(wg.elements[v], static_cast<std::uint64_t>(j)));
          if (z && !seen[*z]) {
            seen[*z] = true;
            powers_of[v].emplace_back(*z, j);
            roots_of[*z].emplace_back(v, j);
          }
        }
      }
      std::optional<std::string> failure;
      for (vertex_type v = 0; v < n && !failure; ++v) {
        if (!infinite[v]) {
          continue;
        }
        auto const& x   = wg.elements[v];
        auto        wit = component_witnesses(f, x, w);
        VertexSet   members(n);
        for (auto const& t : wit) {
          members.set(wg.index.at(t.y));
        }
        auto check = [&](RelationWitness const& t, vertex_type z,
                         std::uint64_t p, std::uint64_t q) {
          if (!infinite[z] || t.m * p > static_cast<std::uint64_t>(w.E)
              || t.n * q > static_cast<std::uint64_t>(w.E) || members.test(z)) {
            return;
          }
          failure = f.to_string(wg.elements[z]) + " adjacent to "
                    + f.to_string(t.y) + " but missing from C("
                    + f.to_string(x) + ")";
        };
        for (auto const& t : wit) {
          auto y = wg.index.at(t.y);
          for (auto const& [z, j] : powers_of[y]) {
            check(t, z, j, 1);  // z = y^j
          }
          for (auto const& [z, j] : roots_of[y]) {
            check(t, z, 1, j);  // y = z^j
          }
          if (failure) {
            break;
          }
        }
      }
      r.claims.push_back(failure ? detail::fail("component_closure", *failure)
                                 : detail::pass("component_closure"));
    }

    // Window components never mix true components.
    {
      std::optional<std::string> failure;
      for (auto const& comp : wc.components) {
        auto key = f.component_key(wg.elements[comp.front()]);
        for (auto v : comp) {
          if (f.component_key(wg.elements[v]) != key) {
            failure = f.to_string(wg.elements[comp.front()]) + " and "
                      + f.to_string(wg.elements[v])
                      + " lie in different components";
            break;
          }
        }
      }
      r.claims.push_back(failure ? detail::fail("component_structure", *failure)
                                 : detail::pass("component_structure",
                                                std::to_string(wc.splits)
                                                    + " window split(s)"));
    }

    // The assembled colouring is proper, checked twice.
    {
      auto bad = verify_proper_coloring(pg, wc.coloring);
      std::map<ColorTag, std::vector<vertex_type>> classes;
      for (vertex_type v = 0; v < n; ++v) {
        classes[wc.coloring.assignment[v]].push_back(v);
      }
      std::optional<std::string> class_failure;
      for (auto const& [tag, verts] : classes) {
        auto ind = is_independent(pg, verts);
        if (!ind) {
          class_failure = "colour class " + tag.to_string() + " contains "
                          + f.to_string(wg.elements[ind.witness->first]) + " -- "
                          + f.to_string(wg.elements[ind.witness->second]);
          break;
        }
      }
      if (bad.empty() && !class_failure) {
        r.claims.push_back(detail::pass("proper_coloring"));
      } else {
        r.claims.push_back(detail::fail(
            "proper_coloring",
            class_failure ? *class_failure
                          : "monochromatic edges " + describe_edges(bad)));
      }
    }
    return r;
  }

  inline nlohmann::ordered_json to_json(WindowReport const& r) {
    nlohmann::ordered_json j;
    j["family"]            = r.family;
    j["W"]                 = r.window.W;
    j["E"]                 = r.window.E;
    j["elements"]          = r.n_elements;
    j["infinite_order"]    = r.n_infinite;
    j["edges"]             = r.n_edges;
    j["components"]        = r.n_components;
    j["splits"]            = r.splits;
    j["palette_size"]      = r.palette_size;
    j["equations_checked"] = r.equations_checked;
    auto claims            = nlohmann::ordered_json::array();
    for (auto const& c : r.claims) {
      nlohmann::ordered_json cj;
      cj["name"]    = c.name;
      cj["verdict"] = to_string(c.verdict);
      cj["detail"]  = c.detail;
      claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    return j;
  }

}  // namespace powcol

#endif  // POWCOL_VERIFY_HPP_
