// Brute-force ground truth on power graphs: independence and clique-union
// checks, maximum clique, first-fit colouring and the exact chromatic number.

#ifndef POWCOL_ORACLE_HPP_
#define POWCOL_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "error.hpp"
#include "power_graph.hpp"

namespace powcol {

  inline constexpr std::size_t default_clique_limit    = 256;
  inline constexpr std::size_t default_chromatic_limit = 64;

  using Edge = std::pair<vertex_type, vertex_type>;

  struct IndependenceReport {
    bool                independent = true;
    std::optional<Edge> witness;

    explicit operator bool() const noexcept {
      return independent;
    }
  };

  inline IndependenceReport is_independent(PowerGraph const&               pg,
                                           std::vector<vertex_type> const& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (pg.adjacent(s[i], s[j])) {
          return {false, Edge{std::min(s[i], s[j]), std::max(s[i], s[j])}};
        }
      }
    }
    return {};
  }

  struct CliqueUnionReport {
    bool                     is_clique_union = true;
    std::vector<std::size_t> clique_sizes;  // ascending
    std::optional<Edge>      witness;
  };

  //! Checks that every class of partition is a clique and that no edge joins
  //! two different classes.  partition must cover s exactly once.
  inline CliqueUnionReport
  is_clique_union(PowerGraph const&                            pg,
                  std::vector<vertex_type> const&              s,
                  std::vector<std::vector<vertex_type>> const& partition) {
    std::size_t const        n = pg.n_vertices();
    std::vector<std::size_t> class_of(n, static_cast<std::size_t>(-1));
    VertexSet                target = make_vertex_set(n, s);
    VertexSet                covered(n);
    for (std::size_t c = 0; c < partition.size(); ++c) {
      for (auto v : partition[c]) {
        if (v >= n || !target.test(v) || covered.test(v)) {
          throw PartitionMismatch("vertex " + std::to_string(v)
                                  + " is outside the set or repeated");
        }
        covered.set(v);
        class_of[v] = c;
      }
    }
    if (covered != target) {
      throw PartitionMismatch("partition does not cover the vertex set");
    }

    CliqueUnionReport report;
    for (auto const& cls : partition) {
      report.clique_sizes.push_back(cls.size());
    }
    std::sort(report.clique_sizes.begin(), report.clique_sizes.end());

    auto members = to_vector(target);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto x = members[i], y = members[j];
        bool same = class_of[x] == class_of[y];
        if (same != pg.adjacent(x, y)) {
          report.is_clique_union = false;
          report.witness         = Edge{x, y};
          return report;
        }
      }
    }
    return report;
  }

  namespace detail {

    // Greedy colouring of cand into independent classes; order lists the
    // vertices class by class and bound[i] is the class number of order[i].
    inline void color_sort(PowerGraph const&         pg,
                           VertexSet const&          cand,
                           std::vector<vertex_type>& order,
                           std::vector<std::size_t>& bound) {
      order.clear();
      bound.clear();
      VertexSet   uncolored = cand;
      std::size_t color     = 0;
      while (uncolored.any()) {
        ++color;
        VertexSet q = uncolored;
        for (auto v = q.find_first(); v != VertexSet::npos;
             v      = q.find_next(v)) {
          q -= pg.neighbours(v);
          uncolored.reset(v);
          order.push_back(v);
          bound.push_back(color);
        }
      }
    }

    // Branch and bound; stops as soon as a clique of size target is found.
    inline void expand(PowerGraph const&         pg,
                       VertexSet                 cand,
                       std::vector<vertex_type>& current,
                       std::vector<vertex_type>& best,
                       std::size_t               target) {
      std::vector<vertex_type> order;
      std::vector<std::size_t> bound;
      color_sort(pg, cand, order, bound);
      for (std::size_t i = order.size(); i-- > 0;) {
        if (best.size() >= target
            || current.size() + bound[i] <= best.size()) {
          return;
        }
        auto v = order[i];
        current.push_back(v);
        VertexSet next = cand & pg.neighbours(v);
        if (next.none()) {
          if (current.size() > best.size()) {
            best = current;
          }
        } else {
          expand(pg, std::move(next), current, best, target);
        }
        current.pop_back();
        cand.reset(v);
      }
    }

    inline std::size_t clique_number(PowerGraph const& pg,
                                     VertexSet const&  cand) {
      std::vector<vertex_type> current, best;
      expand(pg, cand, current, best, static_cast<std::size_t>(-1));
      return best.size();
    }

    inline bool has_clique(PowerGraph const& pg,
                           VertexSet const&  cand,
                           std::size_t       size) {
      if (size == 0) {
        return true;
      }
      if (cand.count() < size) {
        return false;
      }
      std::vector<vertex_type> current, best;
      expand(pg, cand, current, best, size);
      return best.size() >= size;
    }

  }  // namespace detail

  //! A maximum clique, ascending.  Among all maximum cliques the
  //! lexicographically smallest is returned.
  inline std::vector<vertex_type>
  max_clique(PowerGraph const& pg, std::size_t limit = default_clique_limit) {
    std::size_t const n = pg.n_vertices();
    if (n > limit) {
      throw LimitExceeded("max_clique: " + std::to_string(n)
                          + " vertices exceeds limit " + std::to_string(limit));
    }
    VertexSet         cand  = pg.all_vertices();
    std::size_t const omega = detail::clique_number(pg, cand);

    std::vector<vertex_type> chosen;
    for (auto v = cand.find_first(); v != VertexSet::npos && chosen.size() < omega;
         v      = cand.find_next(v)) {
      VertexSet rest = cand & pg.neighbours(v);
      for (auto u = rest.find_first(); u != VertexSet::npos && u < v;
           u      = rest.find_next(u)) {
        rest.reset(u);
      }
      if (detail::has_clique(pg, rest, omega - chosen.size() - 1)) {
        chosen.push_back(v);
        rest.set(v);
        cand = std::move(rest);
      }
    }
    return chosen;
  }

  //! First-fit colouring along order; colours are 0, 1, 2, ...
  inline IntColoring greedy_color(PowerGraph const&               pg,
                                  std::vector<vertex_type> const& order) {
    std::size_t const        n = pg.n_vertices();
    std::size_t const        unset = static_cast<std::size_t>(-1);
    IntColoring              c{std::vector<std::size_t>(n, unset)};
    std::vector<std::size_t> stamp(n + 1, unset);
    for (auto v : order) {
      auto const& nb = pg.neighbours(v);
      for (auto w = nb.find_first(); w != VertexSet::npos;
           w      = nb.find_next(w)) {
        if (c.assignment[w] != unset) {
          stamp[c.assignment[w]] = v;
        }
      }
      std::size_t color = 0;
      while (stamp[color] == v) {
        ++color;
      }
      c.assignment[v] = color;
    }
    return c;
  }

  //! Vertices by descending degree, ties by ascending index.
  inline std::vector<vertex_type> degree_order(PowerGraph const& pg) {
    std::vector<vertex_type> order(pg.n_vertices());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return pg.degree(a) > pg.degree(b);
    });
    return order;
  }

  inline IntColoring greedy_color(PowerGraph const& pg) {
    return greedy_color(pg, degree_order(pg));
  }

  namespace detail {

    // DSATUR backtracking for a k-colouring with the clique pre-coloured.
    class KColorSearch {
     public:
      KColorSearch(PowerGraph const&               pg,
                   std::size_t                     k,
                   std::vector<vertex_type> const& clique)
          : pg_(pg),
            k_(k),
            n_(pg.n_vertices()),
            color_(n_, none),
            forbidden_(n_ * k, 0),
            saturation_(n_, 0) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
          assign(clique[i], i);
        }
        used_ = clique.size();
        left_ = n_ - clique.size();
      }

      bool run() {
        if (left_ == 0) {
          return true;
        }
        auto        v     = select();
        std::size_t limit = std::min(k_, used_ + 1);
        for (std::size_t c = 0; c < limit; ++c) {
          if (forbidden_[v * k_ + c] != 0) {
            continue;
          }
          std::size_t const saved_used = used_;
          used_                        = std::max(used_, c + 1);
          assign(v, c);
          --left_;
          if (run()) {
            return true;
          }
          ++left_;
          unassign(v);
          used_ = saved_used;
        }
        return false;
      }

     private:
      static constexpr std::size_t none = static_cast<std::size_t>(-1);

      vertex_type select() const {
        vertex_type best     = none;
        std::size_t best_sat = 0, best_deg = 0;
        for (vertex_type v = 0; v < n_; ++v) {
          if (color_[v] != none) {
            continue;
          }
          std::size_t deg = 0;
          auto const& nb  = pg_.neighbours(v);
          for (auto w = nb.find_first(); w != VertexSet::npos;
               w      = nb.find_next(w)) {
            deg += color_[w] == none;
          }
          if (best == none || saturation_[v] > best_sat
              || (saturation_[v] == best_sat && deg > best_deg)) {
            best     = v;
            best_sat = saturation_[v];
            best_deg = deg;
          }
        }
        return best;
      }

      void assign(vertex_type v, std::size_t c) {
        color_[v]      = c;
        auto const& nb = pg_.neighbours(v);
        for (auto w = nb.find_first(); w != VertexSet::npos;
             w      = nb.find_next(w)) {
          if (forbidden_[w * k_ + c]++ == 0) {
            ++saturation_[w];
          }
        }
      }

      void unassign(vertex_type v) {
        auto const c   = color_[v];
        color_[v]      = none;
        auto const& nb = pg_.neighbours(v);
        for (auto w = nb.find_first(); w != VertexSet::npos;
             w      = nb.find_next(w)) {
          if (--forbidden_[w * k_ + c] == 0) {
            --saturation_[w];
          }
        }
      }

      PowerGraph const&        pg_;
      std::size_t              k_;
      std::size_t              n_;
      std::vector<std::size_t> color_;
      std::vector<std::size_t> forbidden_;
      std::vector<std::size_t> saturation_;
      std::size_t              used_ = 0;
      std::size_t              left_ = 0;
    };

  }  // namespace detail

  //! Exact chromatic number: tries k = clique size, k + 1, ... below the
  //! first-fit bound.
  inline std::size_t chromatic_number(PowerGraph const& pg,
                                      std::size_t limit = default_chromatic_limit) {
    std::size_t const n = pg.n_vertices();
    if (n > limit) {
      throw LimitExceeded("chromatic_number: " + std::to_string(n)
                          + " vertices exceeds limit " + std::to_string(limit));
    }
    if (n == 0) {
      return 0;
    }
    auto              clique = max_clique(pg, n);
    std::size_t const upper  = greedy_color(pg).palette_size();
    for (std::size_t k = clique.size(); k < upper; ++k) {
      if (detail::KColorSearch(pg, k, clique).run()) {
        return k;
      }
    }
    return upper;
  }

  //! Exact chromatic number when within limits, otherwise clique and
  //! first-fit bounds.
  struct ChromaticBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool        exact = false;
    std::size_t clique_size = 0;  // 0 when max_clique was skipped
  };

  inline ChromaticBounds
  chromatic_bounds(PowerGraph const& pg,
                   std::size_t       chromatic_limit = default_chromatic_limit,
                   std::size_t       clique_limit    = default_clique_limit) {
    ChromaticBounds b;
    b.upper = greedy_color(pg).palette_size();
    b.lower = pg.n_vertices() == 0 ? 0 : 1;
    if (pg.n_vertices() <= clique_limit) {
      b.clique_size = max_clique(pg, clique_limit).size();
      b.lower       = b.clique_size;
    }
    if (pg.n_vertices() <= chromatic_limit) {
      b.lower = b.upper = chromatic_number(pg, chromatic_limit);
      b.exact           = true;
    }
    return b;
  }

}  // namespace powcol

#endif  // POWCOL_ORACLE_HPP_
