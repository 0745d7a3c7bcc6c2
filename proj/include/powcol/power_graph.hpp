// The power graph P(G) and the directed power relation D(G).

#ifndef POWCOL_POWER_GRAPH_HPP_
#define POWCOL_POWER_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"
#include "magma.hpp"

namespace powcol {

  using vertex_type = std::size_t;
  using VertexSet   = boost::dynamic_bitset<std::uint64_t>;

  inline VertexSet make_vertex_set(std::size_t                     n,
                                   std::vector<vertex_type> const& members) {
    VertexSet s(n);
    for (auto v : members) {
      s.set(v);
    }
    return s;
  }

  inline std::vector<vertex_type> to_vector(VertexSet const& s) {
    std::vector<vertex_type> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
      out.push_back(v);
    }
    return out;
  }

  //! Undirected power graph plus the directed relation it forgets.  The
  //! directed relation keeps the self-loop x -> x (x = x^1); the undirected
  //! view has no self-loops.
  class PowerGraph {
   public:
    PowerGraph() = default;

    //! Builds both views from out-neighbour sets of D(G).  The self-loop is
    //! added when missing.
    explicit PowerGraph(std::vector<VertexSet> directed)
        : directed_(std::move(directed)) {
      std::size_t const n = directed_.size();
      undirected_.assign(n, VertexSet(n));
      for (vertex_type x = 0; x < n; ++x) {
        directed_[x].set(x);
        auto const& out = directed_[x];
        for (auto y = out.find_first(); y != VertexSet::npos;
             y      = out.find_next(y)) {
          if (y != x) {
            undirected_[x].set(y);
            undirected_[y].set(x);
          }
        }
      }
    }

    [[nodiscard]] std::size_t n_vertices() const noexcept {
      return directed_.size();
    }

    [[nodiscard]] bool adjacent(vertex_type x, vertex_type y) const {
      return undirected_[x].test(y);
    }

    //! True iff y is a power of x.
    [[nodiscard]] bool is_power_of(vertex_type y, vertex_type x) const {
      return directed_[x].test(y);
    }

    [[nodiscard]] VertexSet const& neighbours(vertex_type x) const {
      return undirected_[x];
    }

    [[nodiscard]] VertexSet const& out_neighbours(vertex_type x) const {
      return directed_[x];
    }

    [[nodiscard]] std::size_t degree(vertex_type x) const {
      return undirected_[x].count();
    }

    [[nodiscard]] std::size_t n_edges() const {
      std::size_t total = 0;
      for (auto const& row : undirected_) {
        total += row.count();
      }
      return total / 2;
    }

    //! Undirected edges {x, y} with x < y, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<vertex_type, vertex_type>>
    edges() const {
      std::vector<std::pair<vertex_type, vertex_type>> out;
      for (vertex_type x = 0; x < n_vertices(); ++x) {
        auto const& row = undirected_[x];
        for (auto y = row.find_next(x); y != VertexSet::npos;
             y      = row.find_next(y)) {
          out.emplace_back(x, y);
        }
      }
      return out;
    }

    //! Directed arcs x -> y with x != y, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<vertex_type, vertex_type>>
    arcs() const {
      std::vector<std::pair<vertex_type, vertex_type>> out;
      for (vertex_type x = 0; x < n_vertices(); ++x) {
        auto const& row = directed_[x];
        for (auto y = row.find_first(); y != VertexSet::npos;
             y      = row.find_next(y)) {
          if (y != x) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

    [[nodiscard]] VertexSet all_vertices() const {
      VertexSet s(n_vertices());
      s.set();
      return s;
    }

   private:
    std::vector<VertexSet> directed_;
    std::vector<VertexSet> undirected_;
  };

  //! D(G) has x -> y iff y is in {x^k : 1 <= k <= order(x)}.
  inline PowerGraph build_power_graph(Magma const& m) {
    std::size_t const      n = m.size();
    std::vector<VertexSet> directed(n, VertexSet(n));
    for (element_type x = 0; x < n; ++x) {
      for (auto y : m.distinct_powers(x)) {
        directed[x].set(y);
      }
    }
    return PowerGraph(std::move(directed));
  }

  //! Connected components of the subgraph induced by subset, each sorted
  //! ascending, components ordered by their minimal vertex.
  inline std::vector<std::vector<vertex_type>>
  connected_components(PowerGraph const& pg, VertexSet const& subset) {
    std::vector<std::vector<vertex_type>> out;
    VertexSet                             unseen = subset;
    std::vector<vertex_type>              stack;
    for (auto root = unseen.find_first(); root != VertexSet::npos;
         root      = unseen.find_next(root)) {
      std::vector<vertex_type> comp;
      unseen.reset(root);
      stack.push_back(root);
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        VertexSet next = pg.neighbours(v) & unseen;
        for (auto w = next.find_first(); w != VertexSet::npos;
             w      = next.find_next(w)) {
          unseen.reset(w);
          stack.push_back(w);
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  inline std::vector<std::vector<vertex_type>>
  connected_components(PowerGraph const&               pg,
                       std::vector<vertex_type> const& subset) {
    return connected_components(pg, make_vertex_set(pg.n_vertices(), subset));
  }

}  // namespace powcol

#endif  // POWCOL_POWER_GRAPH_HPP_
