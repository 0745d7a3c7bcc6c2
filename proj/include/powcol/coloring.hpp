// Tagged colours and the explicit colouring of a finite power-associative
// magma: cyclic elements by (order, position in their clique), non-cyclic
// elements by pre-period.

#ifndef POWCOL_COLORING_HPP_
#define POWCOL_COLORING_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "magma.hpp"
#include "power_graph.hpp"

namespace powcol {

  //! Euler's totient.
  inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  //! A(n, i): i-th member of a clique of cyclic elements of order n.
  struct CyclicColor {
    std::uint64_t order;
    std::uint64_t position;
    auto          operator<=>(CyclicColor const&) const = default;
  };

  //! B(p): non-cyclic element of finite order with pre-period p.
  struct PrePeriodColor {
    std::uint64_t pre_period;
    auto          operator<=>(PrePeriodColor const&) const = default;
  };

  //! C(m, n): element y of infinite-order component with x^m = y^n.
  struct RelationColor {
    std::uint64_t m;
    std::uint64_t n;
    auto          operator<=>(RelationColor const&) const = default;
  };

  //! One colour from the three disjoint namespaces A, B and C.
  class ColorTag {
   public:
    using value_type = std::variant<CyclicColor, PrePeriodColor, RelationColor>;

    ColorTag() = default;
    ColorTag(CyclicColor c) : value_(c) {}     // NOLINT(runtime/explicit)
    ColorTag(PrePeriodColor c) : value_(c) {}  // NOLINT(runtime/explicit)
    ColorTag(RelationColor c) : value_(c) {}   // NOLINT(runtime/explicit)

    static ColorTag A(std::uint64_t n, std::uint64_t i) {
      return CyclicColor{n, i};
    }
    static ColorTag B(std::uint64_t p) {
      return PrePeriodColor{p};
    }
    static ColorTag C(std::uint64_t m, std::uint64_t n) {
      return RelationColor{m, n};
    }

    [[nodiscard]] value_type const& value() const noexcept {
      return value_;
    }

    template <typename T>
    [[nodiscard]] bool holds() const noexcept {
      return std::holds_alternative<T>(value_);
    }

    //! "A(n,i)", "B(p)" or "C(m,n)".
    [[nodiscard]] std::string to_string() const {
      return std::visit(
          [](auto const& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CyclicColor>) {
              return "A(" + std::to_string(c.order) + ","
                     + std::to_string(c.position) + ")";
            } else if constexpr (std::is_same_v<T, PrePeriodColor>) {
              return "B(" + std::to_string(c.pre_period) + ")";
            } else {
              return "C(" + std::to_string(c.m) + "," + std::to_string(c.n)
                     + ")";
            }
          },
          value_);
    }

    bool operator==(ColorTag const&) const = default;
    auto operator<=>(ColorTag const&) const = default;

   private:
    value_type value_;
  };

  //! Vertex v gets colour assignment[v].
  template <typename Color>
  struct BasicColoring {
    std::vector<Color> assignment;

    [[nodiscard]] std::set<Color> palette() const {
      return {assignment.begin(), assignment.end()};
    }

    [[nodiscard]] std::size_t palette_size() const {
      return palette().size();
    }

    bool operator==(BasicColoring const&) const = default;
  };

  using Coloring = BasicColoring<ColorTag>;

  //! Colours from a plain integer palette, as produced by the oracles.
  using IntColoring = BasicColoring<std::size_t>;

  struct CyclicOfOrder {
    std::uint64_t order;
    bool          operator==(CyclicOfOrder const&) const = default;
  };

  struct NonCyclicFinite {
    std::uint64_t pre_period;
    bool          operator==(NonCyclicFinite const&) const = default;
  };

  using ElementClass = std::variant<CyclicOfOrder, NonCyclicFinite>;

  inline ElementClass classify_element(ElementProfile const& p) {
    if (p.cyclic) {
      return CyclicOfOrder{p.order};
    }
    return NonCyclicFinite{*p.pre_period};
  }

  //! Splits the cyclic elements of order n into classes of the relation
  //! "x is a power of y and y is a power of x".  Classes are sorted by
  //! their minimal member and members ascend.
  inline std::vector<std::vector<element_type>>
  cyclic_clique_decomposition(Magma const&      m,
                              PowerGraph const& pg,
                              std::uint64_t     n) {
    std::vector<element_type> members;
    for (auto const& p : m.profiles()) {
      if (p.cyclic && p.order == n) {
        members.push_back(p.element);
      }
    }
    std::vector<std::vector<element_type>> classes;
    std::vector<bool>                      placed(m.size(), false);
    for (auto x : members) {
      if (placed[x]) {
        continue;
      }
      std::vector<element_type> cls;
      for (auto y : members) {
        if (!placed[y] && pg.is_power_of(y, x) && pg.is_power_of(x, y)) {
          placed[y] = true;
          cls.push_back(y);
        }
      }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  //! Orders of cyclic elements occurring in m, ascending.
  inline std::vector<std::uint64_t> cyclic_orders(Magma const& m) {
    std::set<std::uint64_t> orders;
    for (auto const& p : m.profiles()) {
      if (p.cyclic) {
        orders.insert(p.order);
      }
    }
    return {orders.begin(), orders.end()};
  }

  //! A(n, rank in its clique) for cyclic elements and B(pre-period) for the
  //! rest.  m must be power-associative.
  inline Coloring paper_color_finite(Magma const& m, PowerGraph const& pg) {
    Coloring c;
    c.assignment.resize(m.size());
    for (auto n : cyclic_orders(m)) {
      for (auto const& cls : cyclic_clique_decomposition(m, pg, n)) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          c.assignment[cls[i]] = ColorTag::A(n, i + 1);
        }
      }
    }
    for (auto const& p : m.profiles()) {
      if (!p.cyclic) {
        c.assignment[p.element] = ColorTag::B(*p.pre_period);
      }
    }
    return c;
  }

  inline Coloring paper_color_finite(Magma const& m) {
    return paper_color_finite(m, build_power_graph(m));
  }

  //! Every edge {x, y} (x < y) whose endpoints share a colour.
  template <typename Color>
  std::vector<std::pair<vertex_type, vertex_type>>
  verify_proper_coloring(PowerGraph const& pg, BasicColoring<Color> const& c) {
    if (c.assignment.size() < pg.n_vertices()) {
      throw MissingAssignment("vertex " + std::to_string(c.assignment.size())
                              + " has no colour");
    }
    std::vector<std::pair<vertex_type, vertex_type>> bad;
    for (auto const& [x, y] : pg.edges()) {
      if (c.assignment[x] == c.assignment[y]) {
        bad.emplace_back(x, y);
      }
    }
    return bad;
  }

}  // namespace powcol

#endif  // POWCOL_COLORING_HPP_
