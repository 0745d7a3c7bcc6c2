// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Expected values come from support/brute_force.hpp, which
// works on raw tables only.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "powcol/cli.hpp"
#include "powcol/powcol.hpp"
#include "support/brute_force.hpp"

using namespace powcol;

namespace {

  struct Entry {
    std::string  name;
    Magma        magma;
    PowerGraph   graph;
    brute::Table table;
  };

  brute::Table table_of(Magma const& m) {
    brute::Table t(m.size(), std::vector<std::int64_t>(m.size()));
    for (element_type g = 0; g < m.size(); ++g) {
      for (element_type h = 0; h < m.size(); ++h) {
        t[g][h] = m(g, h);
      }
    }
    return t;
  }

  std::vector<Entry> const& corpus() {
    static std::vector<Entry> entries = [] {
      std::vector<Entry> out;
      for (auto const& spec : default_corpus()) {
        auto m  = generate(spec);
        auto pg = build_power_graph(m);
        auto t  = table_of(m);
        out.push_back({spec.to_string(), std::move(m), std::move(pg), std::move(t)});
      }
      return out;
    }();
    return entries;
  }

  // Powers g^1 .. g^(2N+1), enough to contain the whole tail and one cycle.
  std::vector<std::int64_t> power_sequence(brute::Table const& t, std::int64_t g) {
    std::vector<std::int64_t> seq{g};
    for (std::size_t k = 1; k <= 2 * t.size(); ++k) {
      seq.push_back(t[seq.back()][g]);
    }
    return seq;
  }

  // Index: least i such that g^i reappears later in the sequence.
  std::size_t brute_index(brute::Table const& t, std::int64_t g) {
    auto seq = power_sequence(t, g);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (seq[i] == seq[j]) {
          return i + 1;
        }
      }
    }
    return seq.size();
  }

  bool brute_cyclic(brute::Table const& t, std::int64_t g) {
    return brute_index(t, g) == 1;
  }

  std::vector<std::pair<std::size_t, std::size_t>> brute_edges(brute::Table const& t) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = x + 1; y < t.size(); ++y) {
        if (brute::adjacent(t, x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void fail(std::string const& what) {
      if (ok) {
        detail = what;
      }
      ok = false;
    }
  };

  using Seconds = std::chrono::duration<double>;

  bool report(int number, std::string const& title,
              std::function<Outcome()> const& body) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    auto secs = Seconds(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!o.detail.empty()) {
      line << " [" << o.detail << "]";
    }
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    return o.ok;
  }

  // 1: the explicit colouring is proper on every corpus magma.
  Outcome proper_on_corpus() {
    Outcome     o;
    std::size_t checked = 0, edges = 0;
    for (auto const& e : corpus()) {
      auto c = paper_color_finite(e.magma, e.graph);
      if (!verify_proper_coloring(e.graph, c).empty()) {
        o.fail(e.name + ": verify_proper_coloring reports monochromatic edges");
      }
      for (auto [x, y] : brute_edges(e.table)) {
        ++edges;
        if (c.assignment[x] == c.assignment[y]) {
          o.fail(e.name + ": elements " + std::to_string(x) + ", "
                 + std::to_string(y) + " share " + c.assignment[x].to_string());
        }
      }
      ++checked;
    }
    if (o.ok) {
      o.detail = std::to_string(checked) + " magmas, " + std::to_string(edges)
                 + " edges";
    }
    return o;
  }

  // 2: cyclic elements of each order n split into disjoint phi(n)-cliques.
  Outcome cyclic_cliques() {
    Outcome     o;
    std::size_t classes_checked = 0;
    for (auto const& e : corpus()) {
      std::map<std::size_t, std::vector<vertex_type>> expected;
      for (std::size_t g = 0; g < e.table.size(); ++g) {
        if (brute_cyclic(e.table, g)) {
          expected[brute::order(e.table, g)].push_back(g);
        }
      }
      auto orders = cyclic_orders(e.magma);
      if (orders.size() != expected.size()) {
        o.fail(e.name + ": set of cyclic orders differs");
        continue;
      }
      for (auto const& [n, members] : expected) {
        auto classes = cyclic_clique_decomposition(e.magma, e.graph, n);
        std::vector<std::vector<vertex_type>> partition;
        for (auto const& cls : classes) {
          partition.emplace_back(cls.begin(), cls.end());
        }
        auto r = is_clique_union(e.graph, members, partition);
        if (!r.is_clique_union) {
          o.fail(e.name + ": order " + std::to_string(n) + " is not a clique union");
          continue;
        }
        for (auto s : r.clique_sizes) {
          ++classes_checked;
          if (s != brute::totient(n)) {
            o.fail(e.name + ": order " + std::to_string(n) + " clique of size "
                   + std::to_string(s));
          }
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(classes_checked) + " cliques";
    }
    return o;
  }

  // 3: distinct non-cyclic elements with equal pre-period are non-adjacent.
  Outcome equal_pre_period_independent() {
    Outcome     o;
    std::size_t pairs = 0;
    for (auto const& e : corpus()) {
      std::vector<std::size_t> pre(e.table.size(), 0);
      for (std::size_t g = 0; g < e.table.size(); ++g) {
        pre[g] = brute_index(e.table, g) - 1;
      }
      for (std::size_t x = 0; x < e.table.size(); ++x) {
        for (std::size_t y = x + 1; y < e.table.size(); ++y) {
          if (pre[x] == 0 || pre[x] != pre[y]) {
            continue;
          }
          ++pairs;
          if (brute::adjacent(e.table, x, y)) {
            o.fail(e.name + ": " + std::to_string(x) + " and " + std::to_string(y)
                   + " share pre-period " + std::to_string(pre[x]));
          }
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(pairs) + " pairs";
    }
    return o;
  }

  // 4: the tail of a non-cyclic element is cyclic past its pre-period.
  Outcome tail_powers_cyclic() {
    Outcome     o;
    std::size_t checks = 0;
    for (auto const& e : corpus()) {
      auto const& t = e.table;
      for (std::size_t g = 0; g < t.size(); ++g) {
        auto p = brute_index(t, g) - 1;
        if (p == 0) {
          continue;
        }
        auto n = brute::order(t, g);
        for (auto q = p + 1; q <= n; ++q) {
          ++checks;
          auto gq = brute::power(t, g, q);
          if (!brute_cyclic(t, gq)) {
            o.fail(e.name + ": g=" + std::to_string(g) + " q=" + std::to_string(q)
                   + " gives a non-cyclic power");
          }
          if (brute::power(t, gq, n - p + 1) != gq) {
            o.fail(e.name + ": g=" + std::to_string(g) + " q=" + std::to_string(q)
                   + " breaks (g^q)^(n-p+1) = g^q");
          }
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(checks) + " (g, q) pairs";
    }
    return o;
  }

  // 5: independence, closure and properness on symbolic windows.
  Outcome symbolic_windows() {
    Outcome     o;
    Window      w{50, 24};
    std::size_t windows = 0, equations = 0, splits = 0;
    auto        run     = [&](auto const& f) {
      auto r = verify_window(f, w);
      ++windows;
      equations += r.equations_checked;
      splits += r.splits;
      for (auto const& c : r.claims) {
        if (c.verdict != Verdict::pass) {
          o.fail(f.name() + " " + c.name + ": " + c.detail);
        }
      }
    };
    run(IntegerGroup{});
    for (std::int64_t k = 2; k <= 12; ++k) {
      run(IntegerTimesCyclic{k});
    }
    run(FreeMonogenic{});
    if (o.ok) {
      o.detail = std::to_string(windows) + " windows, " + std::to_string(equations)
                 + " equations, " + std::to_string(splits) + " window splits";
    }
    return o;
  }

  // 6: clique <= chi <= greedy on the corpus, exact chi on tiny graphs, and
  // chi(cyclic(p)) = p.
  Outcome oracle_consistency() {
    Outcome     o;
    std::size_t sandwiched = 0, exhaustive = 0;
    for (auto const& e : corpus()) {
      auto n = e.magma.size();
      if (n > 64) {
        continue;
      }
      auto clique = max_clique(e.graph).size();
      auto chi    = chromatic_number(e.graph);
      auto greedy = greedy_color(e.graph).palette_size();
      ++sandwiched;
      if (!(clique <= chi && chi <= greedy)) {
        o.fail(e.name + ": clique " + std::to_string(clique) + ", chi "
               + std::to_string(chi) + ", greedy " + std::to_string(greedy));
      }
      if (n <= 8) {
        ++exhaustive;
        auto expected = brute::chromatic_number(n, brute_edges(e.table));
        if (chi != expected) {
          o.fail(e.name + ": chi " + std::to_string(chi) + " but enumeration gives "
                 + std::to_string(expected));
        }
      }
    }
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      auto t     = brute::cyclic_table(p);
      auto edges = brute_edges(t);
      if (edges.size() != static_cast<std::size_t>(p * (p - 1) / 2)) {
        o.fail("cyclic(" + std::to_string(p) + ") power graph is not complete");
      }
      auto chi = chromatic_number(build_power_graph(build_magma(t)));
      if (chi != static_cast<std::size_t>(p)) {
        o.fail("chi(cyclic(" + std::to_string(p) + ")) = " + std::to_string(chi));
      }
    }
    if (o.ok) {
      o.detail = std::to_string(sandwiched) + " graphs sandwiched, "
                 + std::to_string(exhaustive) + " enumerated, 6 primes";
    }
    return o;
  }

  // 7: the explicit palette never undercuts the exact chromatic number.
  Outcome palette_vs_chi() {
    Outcome     o;
    std::size_t compared = 0, skipped = 0, tight = 0;
    for (auto const& e : corpus()) {
      auto b = chromatic_bounds(e.graph);
      if (!b.exact) {
        ++skipped;
        continue;
      }
      ++compared;
      auto palette = paper_color_finite(e.magma, e.graph).palette_size();
      tight += palette == b.lower;
      if (palette < b.lower) {
        o.fail(e.name + ": palette " + std::to_string(palette) + " < chi "
               + std::to_string(b.lower));
      }
    }
    if (o.ok) {
      o.detail = std::to_string(compared) + " compared (" + std::to_string(tight)
                 + " tight), " + std::to_string(skipped) + " above the chi limit";
    }
    return o;
  }

  // 8: the 2-element non-power-associative magma is rejected.
  Outcome rejects_non_power_associative() {
    Outcome o;
    auto    m = build_magma(brute::non_power_associative_table());
    // independent confirmation: (g g) g != g (g g) for g = 0
    auto const& t = brute::non_power_associative_table();
    if (t[t[0][0]][0] == t[0][t[0][0]]) {
      o.fail("table is unexpectedly power-associative at g=0");
    }
    auto r = check_power_associativity(m);
    if (r.passed()) {
      o.fail("check_power_associativity accepted the table");
      return o;
    }
    auto const& w = *r.witness;
    if (w.element != 0 || w.a != 2 || w.b != 2) {
      o.fail("witness (" + std::to_string(w.element) + "," + std::to_string(w.a)
             + "," + std::to_string(w.b) + "), expected (0,2,2)");
    }

    auto path = std::filesystem::temp_directory_path() / "powcol_acceptance_npa.cay";
    std::ofstream(path) << serialize_magma(m);
    char const*        argv[] = {"powcol", "analyze", nullptr};
    std::string        arg    = path.string();
    argv[2]                   = arg.c_str();
    std::ostringstream out, err;
    int                code = run_cli(3, argv, out, err);
    std::filesystem::remove(path);
    if (code != 1) {
      o.fail("analyze exited " + std::to_string(code) + ", expected 1");
    }
    if (o.ok) {
      o.detail = "witness (0,2,2), analyze exit 1";
    }
    return o;
  }

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "explicit colouring is proper on the corpus", proper_on_corpus);
  all &= report(2, "cyclic elements form phi(n)-cliques", cyclic_cliques);
  all &= report(3, "equal pre-period pairs are non-adjacent",
                equal_pre_period_independent);
  all &= report(4, "tail powers are cyclic", tail_powers_cyclic);
  all &= report(5, "symbolic windows W=50 E=24", symbolic_windows);
  all &= report(6, "oracle consistency", oracle_consistency);
  all &= report(7, "palette >= exact chi", palette_vs_chi);
  all &= report(8, "non-power-associative input rejected",
                rejects_non_power_associative);
  std::cout << (all ? "all criteria pass" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
