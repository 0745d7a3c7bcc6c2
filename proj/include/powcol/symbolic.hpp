// Infinite families handled symbolically on finite windows: the infinite
// cyclic group Z, the direct product Z x Z_k and the free monogenic
// semigroup N+.
//
// A family is any type satisfying SymbolicFamily below.  To add a family,
// provide closed-form powers, the closed-form solution set of x^m = y^n, the
// minimal relation between two elements of the same component, the
// enumeration of a window in canonical order, and the finite-order part as a
// magma (if any).

#ifndef POWCOL_SYMBOLIC_HPP_
#define POWCOL_SYMBOLIC_HPP_

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "error.hpp"
#include "magma.hpp"
#include "power_graph.hpp"

namespace powcol {

  enum class FamilyKind { Z, ZxZk, FreeMono };

  //! An element of one of the symbolic families.  Z stores the exponent a of
  //! the generator t (the element t^a); ZxZk stores (a, b) with b in [0, k);
  //! FreeMono stores the exponent a >= 1 of the free generator.
  struct WindowElement {
    FamilyKind   family = FamilyKind::Z;
    std::int64_t a      = 0;
    std::int64_t b      = 0;

    bool operator==(WindowElement const&) const = default;

    //! Canonical order: by family, then (|a|, a, b).
    std::strong_ordering operator<=>(WindowElement const& o) const {
      auto key = [](WindowElement const& e) {
        return std::tuple(static_cast<int>(e.family),
                          e.a < 0 ? -e.a : e.a, e.a, e.b);
      };
      return key(*this) <=> key(o);
    }
  };

  //! Coordinates are bounded by |a| <= W; relation and adjacency exponents by
  //! E.
  struct Window {
    std::int64_t W = 1;
    std::int64_t E = 1;

    static constexpr std::int64_t max_bound = 1'000'000;

    void validate() const {
      if (W < 1 || E < 1 || W > max_bound || E > max_bound) {
        throw ParameterOutOfRange("window bounds must satisfy 1 <= W, E <= "
                                  + std::to_string(max_bound));
      }
    }
  };

  template <typename F>
  concept SymbolicFamily
      = requires(F const& f, WindowElement const& x, std::uint64_t j,
                 Window const& w) {
          { f.kind() } -> std::same_as<FamilyKind>;
          { f.name() } -> std::convertible_to<std::string>;
          { f.enumerate(w) } -> std::same_as<std::vector<WindowElement>>;
          { f.in_window(x, w) } -> std::same_as<bool>;
          { f.power(x, j) } -> std::same_as<WindowElement>;
          { f.infinite_order(x) } -> std::same_as<bool>;
          { f.solve_power_equation(x, j, j, w) }
            -> std::same_as<std::vector<WindowElement>>;
          { f.minimal_relation(x, x) }
            -> std::same_as<std::optional<std::pair<std::uint64_t, std::uint64_t>>>;
          { f.component_key(x) } -> std::same_as<int>;
          { f.finite_part() } -> std::same_as<std::optional<Magma>>;
          { f.finite_index(x) } -> std::same_as<element_type>;
          { f.to_string(x) } -> std::same_as<std::string>;
        };

  namespace detail {

    inline std::int64_t mod(std::int64_t v, std::int64_t k) {
      auto r = v % k;
      return r < 0 ? r + k : r;
    }

    // Inverse of u modulo k, gcd(u, k) = 1.
    inline std::int64_t inverse_mod(std::int64_t u, std::int64_t k) {
      std::int64_t r0 = k, r1 = mod(u, k), s0 = 0, s1 = 1;
      while (r1 != 0) {
        auto q = r0 / r1;
        r0     = std::exchange(r1, r0 - q * r1);
        s0     = std::exchange(s1, s0 - q * s1);
      }
      return mod(s0, k);
    }

    inline int sign(std::int64_t v) {
      return (v > 0) - (v < 0);
    }

    // Primitive (m, n) with m * a = n * a2, for a, a2 of equal nonzero sign.
    inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
    primitive_ratio(std::int64_t a, std::int64_t a2) {
      if (sign(a) == 0 || sign(a) != sign(a2)) {
        return std::nullopt;
      }
      auto g = std::gcd(a, a2);
      return std::pair<std::uint64_t, std::uint64_t>(std::abs(a2) / g,
                                                     std::abs(a) / g);
    }

    inline std::vector<std::int64_t> signed_range(std::int64_t W) {
      // canonical order by (|a|, a)
      std::vector<std::int64_t> out{0};
      for (std::int64_t v = 1; v <= W; ++v) {
        out.push_back(-v);
        out.push_back(v);
      }
      return out;
    }

  }  // namespace detail

  //! The infinite cyclic group <t>, written multiplicatively; t^a has
  //! infinite order iff a != 0.
  class IntegerGroup {
   public:
    [[nodiscard]] FamilyKind kind() const noexcept {
      return FamilyKind::Z;
    }
    [[nodiscard]] std::string name() const {
      return "Z";
    }

    [[nodiscard]] WindowElement element(std::int64_t a) const {
      return {FamilyKind::Z, a, 0};
    }

    [[nodiscard]] std::vector<WindowElement> enumerate(Window const& w) const {
      std::vector<WindowElement> out;
      for (auto a : detail::signed_range(w.W)) {
        out.push_back(element(a));
      }
      return out;
    }

    [[nodiscard]] bool in_window(WindowElement const& x, Window const& w) const {
      return std::abs(x.a) <= w.W;
    }

    [[nodiscard]] WindowElement power(WindowElement const& x,
                                      std::uint64_t        j) const {
      return element(x.a * static_cast<std::int64_t>(j));
    }

    [[nodiscard]] bool infinite_order(WindowElement const& x) const {
      return x.a != 0;
    }

    //! {y : y^n = x^m} inside the window.
    [[nodiscard]] std::vector<WindowElement>
    solve_power_equation(WindowElement const& x,
                         std::uint64_t        m,
                         std::uint64_t        n,
                         Window const&        w) const {
      auto const target = x.a * static_cast<std::int64_t>(m);
      auto const nn     = static_cast<std::int64_t>(n);
      if (target % nn != 0 || std::abs(target / nn) > w.W) {
        return {};
      }
      return {element(target / nn)};
    }

    [[nodiscard]] std::optional<std::pair<std::uint64_t, std::uint64_t>>
    minimal_relation(WindowElement const& x, WindowElement const& y) const {
      return detail::primitive_ratio(x.a, y.a);
    }

    [[nodiscard]] int component_key(WindowElement const& x) const {
      return detail::sign(x.a);
    }

    [[nodiscard]] std::optional<Magma> finite_part() const {
      return build_magma({{0}}, {}, "trivial");
    }

    [[nodiscard]] element_type finite_index(WindowElement const&) const {
      return 0;
    }

    [[nodiscard]] std::string to_string(WindowElement const& x) const {
      return "t^" + std::to_string(x.a);
    }
  };

  //! Z x Z_k; (a, b) has infinite order iff a != 0.
  class IntegerTimesCyclic {
   public:
    explicit IntegerTimesCyclic(std::int64_t k) : k_(k) {
      if (k < 1 || k > Window::max_bound) {
        throw ParameterOutOfRange("ZxZk needs 1 <= k <= "
                                  + std::to_string(Window::max_bound));
      }
    }

    [[nodiscard]] std::int64_t k() const noexcept {
      return k_;
    }
    [[nodiscard]] FamilyKind kind() const noexcept {
      return FamilyKind::ZxZk;
    }
    [[nodiscard]] std::string name() const {
      return "ZxZk:" + std::to_string(k_);
    }

    [[nodiscard]] WindowElement element(std::int64_t a, std::int64_t b) const {
      return {FamilyKind::ZxZk, a, detail::mod(b, k_)};
    }

    //! Canonical order by (|a|, a, b).
    [[nodiscard]] std::vector<WindowElement> enumerate(Window const& w) const {
      std::vector<WindowElement> out;
      for (auto a : detail::signed_range(w.W)) {
        for (std::int64_t b = 0; b < k_; ++b) {
          out.push_back(element(a, b));
        }
      }
      return out;
    }

    [[nodiscard]] bool in_window(WindowElement const& x, Window const& w) const {
      return std::abs(x.a) <= w.W;
    }

    [[nodiscard]] WindowElement power(WindowElement const& x,
                                      std::uint64_t        j) const {
      auto jj = static_cast<std::int64_t>(j);
      return element(x.a * jj, detail::mod(x.b * detail::mod(jj, k_), k_));
    }

    [[nodiscard]] bool infinite_order(WindowElement const& x) const {
      return x.a != 0;
    }

    //! First coordinate as in Z; the second solves n b' = m b (mod k), which
    //! has gcd(n, k) solutions when gcd(n, k) divides m b and none otherwise.
    [[nodiscard]] std::vector<WindowElement>
    solve_power_equation(WindowElement const& x,
                         std::uint64_t        m,
                         std::uint64_t        n,
                         Window const&        w) const {
      auto const mm     = static_cast<std::int64_t>(m);
      auto const nn     = static_cast<std::int64_t>(n);
      auto const target = x.a * mm;
      if (target % nn != 0 || std::abs(target / nn) > w.W) {
        return {};
      }
      auto const c = detail::mod(detail::mod(mm, k_) * x.b, k_);
      auto const g = std::gcd(detail::mod(nn, k_), k_);  // gcd(0, k) = k
      if (c % g != 0) {
        return {};
      }
      auto const step = k_ / g;
      auto const b0
          = (c / g) * detail::inverse_mod(nn / g, step) % step;
      std::vector<WindowElement> out;
      for (std::int64_t t = 0; t < g; ++t) {
        out.push_back(element(target / nn, b0 + t * step));
      }
      return out;
    }

    //! All solutions of x^m = y^n are multiples of the primitive ratio of the
    //! first coordinates; the multiplier is the additive order of the
    //! resulting discrepancy in Z_k.
    [[nodiscard]] std::optional<std::pair<std::uint64_t, std::uint64_t>>
    minimal_relation(WindowElement const& x, WindowElement const& y) const {
      auto base = detail::primitive_ratio(x.a, y.a);
      if (!base) {
        return std::nullopt;
      }
      auto [m0, n0] = *base;
      auto d = detail::mod(static_cast<std::int64_t>(m0 % k_) * x.b
                               - static_cast<std::int64_t>(n0 % k_) * y.b,
                           k_);
      auto t = static_cast<std::uint64_t>(k_ / std::gcd(d, k_));
      return std::pair{t * m0, t * n0};
    }

    [[nodiscard]] int component_key(WindowElement const& x) const {
      return detail::sign(x.a);
    }

    //! The finite-order elements (0, b) form Z_k.
    [[nodiscard]] std::optional<Magma> finite_part() const {
      std::vector<std::vector<std::int64_t>> table(
          k_, std::vector<std::int64_t>(k_));
      for (std::int64_t i = 0; i < k_; ++i) {
        for (std::int64_t j = 0; j < k_; ++j) {
          table[i][j] = (i + j) % k_;
        }
      }
      return build_magma(table, {}, "cyclic(" + std::to_string(k_) + ")");
    }

    [[nodiscard]] element_type finite_index(WindowElement const& x) const {
      return static_cast<element_type>(x.b);
    }

    [[nodiscard]] std::string to_string(WindowElement const& x) const {
      return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
    }

   private:
    std::int64_t k_;
  };

  //! The free monogenic semigroup {g, g^2, ...}; every element has infinite
  //! order.
  class FreeMonogenic {
   public:
    [[nodiscard]] FamilyKind kind() const noexcept {
      return FamilyKind::FreeMono;
    }
    [[nodiscard]] std::string name() const {
      return "FreeMono";
    }

    [[nodiscard]] WindowElement element(std::int64_t e) const {
      return {FamilyKind::FreeMono, e, 0};
    }

    [[nodiscard]] std::vector<WindowElement> enumerate(Window const& w) const {
      std::vector<WindowElement> out;
      for (std::int64_t e = 1; e <= w.W; ++e) {
        out.push_back(element(e));
      }
      return out;
    }

    [[nodiscard]] bool in_window(WindowElement const& x, Window const& w) const {
      return x.a >= 1 && x.a <= w.W;
    }

    [[nodiscard]] WindowElement power(WindowElement const& x,
                                      std::uint64_t        j) const {
      return element(x.a * static_cast<std::int64_t>(j));
    }

    [[nodiscard]] bool infinite_order(WindowElement const&) const {
      return true;
    }

    [[nodiscard]] std::vector<WindowElement>
    solve_power_equation(WindowElement const& x,
                         std::uint64_t        m,
                         std::uint64_t        n,
                         Window const&        w) const {
      auto const target = x.a * static_cast<std::int64_t>(m);
      auto const nn     = static_cast<std::int64_t>(n);
      if (target % nn != 0 || target / nn > w.W) {
        return {};
      }
      return {element(target / nn)};
    }

    [[nodiscard]] std::optional<std::pair<std::uint64_t, std::uint64_t>>
    minimal_relation(WindowElement const& x, WindowElement const& y) const {
      return detail::primitive_ratio(x.a, y.a);
    }

    [[nodiscard]] int component_key(WindowElement const&) const {
      return 1;
    }

    [[nodiscard]] std::optional<Magma> finite_part() const {
      return std::nullopt;
    }

    [[nodiscard]] element_type finite_index(WindowElement const&) const {
      return 0;
    }

    [[nodiscard]] std::string to_string(WindowElement const& x) const {
      return "g^" + std::to_string(x.a);
    }
  };

  static_assert(SymbolicFamily<IntegerGroup>);
  static_assert(SymbolicFamily<IntegerTimesCyclic>);
  static_assert(SymbolicFamily<FreeMonogenic>);

  template <SymbolicFamily F>
  WindowElement sym_power(F const& f, WindowElement const& x, std::uint64_t j) {
    return f.power(x, j);
  }

  //! The elements of a window as graph vertices, in canonical order, with
  //! x -> y whenever y = x^j for some 1 <= j <= E.
  struct WindowGraph {
    std::vector<WindowElement>           elements;
    std::map<WindowElement, vertex_type> index;
    PowerGraph                           graph;

    [[nodiscard]] std::optional<vertex_type>
    find(WindowElement const& x) const {
      auto it = index.find(x);
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::vector<vertex_type>
    vertices_of(std::vector<WindowElement> const& xs) const {
      std::vector<vertex_type> out;
      for (auto const& x : xs) {
        out.push_back(index.at(x));
      }
      return out;
    }
  };

  template <SymbolicFamily F>
  WindowGraph build_window_graph(F const& f, Window const& w) {
    w.validate();
    WindowGraph g;
    g.elements = f.enumerate(w);
    for (vertex_type i = 0; i < g.elements.size(); ++i) {
      g.index.emplace(g.elements[i], i);
    }
    std::size_t const      n = g.elements.size();
    std::vector<VertexSet> directed(n, VertexSet(n));
    for (vertex_type i = 0; i < n; ++i) {
      for (std::int64_t j = 1; j <= w.E; ++j) {
        auto y = f.power(g.elements[i], static_cast<std::uint64_t>(j));
        if (auto v = g.find(y)) {
          directed[i].set(*v);
        }
      }
    }
    g.graph = PowerGraph(std::move(directed));
    return g;
  }

  //! One member y of a window component together with a witness x^m = y^n.
  struct RelationWitness {
    WindowElement y;
    std::uint64_t m;
    std::uint64_t n;
  };

  //! Every (y, m, n) with y in the window, y^n = x^m and 1 <= m, n <= E.
  template <SymbolicFamily F>
  std::vector<RelationWitness>
  component_witnesses(F const& f, WindowElement const& x, Window const& w) {
    std::vector<RelationWitness> out;
    for (std::int64_t m = 1; m <= w.E; ++m) {
      for (std::int64_t n = 1; n <= w.E; ++n) {
        for (auto const& y : f.solve_power_equation(
                 x, static_cast<std::uint64_t>(m),
                 static_cast<std::uint64_t>(n), w)) {
          out.push_back({y, static_cast<std::uint64_t>(m),
                         static_cast<std::uint64_t>(n)});
        }
      }
    }
    return out;
  }

  //! The union of G(x, m, n) over 1 <= m, n <= E, restricted to the window;
  //! sorted and without duplicates.
  template <SymbolicFamily F>
  std::vector<WindowElement>
  component_window(F const& f, WindowElement const& x, Window const& w) {
    std::vector<WindowElement> out;
    for (auto const& r : component_witnesses(f, x, w)) {
      out.push_back(r.y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  //! Colouring of a whole window.  components lists the infinite-order
  //! components (closure of component_window inside the window) as vertex
  //! lists; representatives[i] is the canonical minimum of components[i].
  struct WindowColoring {
    WindowGraph                           window_graph;
    Coloring                              coloring;
    std::vector<std::vector<vertex_type>> components;
    std::vector<vertex_type>              representatives;
    //! Components of the infinite family that the window cuts into several
    //! window components: components.size() minus the number of true
    //! components that meet the window.
    std::size_t splits = 0;
  };

  //! Infinite-order y in the component of x_a gets C(m, n) for the
  //! lexicographically least (m, n) with x_a^m = y^n.  Finite-order elements
  //! get the finite colouring of the family's torsion part.
  template <SymbolicFamily F>
  WindowColoring color_window(F const& f, Window const& w) {
    WindowColoring out;
    out.window_graph    = build_window_graph(f, w);
    auto const&       g = out.window_graph;
    std::size_t const n = g.elements.size();
    out.coloring.assignment.resize(n);

    std::vector<vertex_type> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](vertex_type v) {
      while (parent[v] != v) {
        v = parent[v] = parent[parent[v]];
      }
      return v;
    };
    for (vertex_type i = 0; i < n; ++i) {
      if (!f.infinite_order(g.elements[i])) {
        continue;
      }
      for (auto const& y : component_window(f, g.elements[i], w)) {
        auto a = find(i), b = find(g.index.at(y));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }

    std::map<vertex_type, std::size_t> slot;
    std::map<int, bool>                keys;
    for (vertex_type i = 0; i < n; ++i) {
      if (!f.infinite_order(g.elements[i])) {
        continue;
      }
      keys[f.component_key(g.elements[i])] = true;
      auto root = find(i);
      auto it   = slot.find(root);
      if (it == slot.end()) {
        it = slot.emplace(root, out.components.size()).first;
        out.components.emplace_back();
        out.representatives.push_back(i);
      }
      out.components[it->second].push_back(i);
    }
    out.splits = out.components.size() - keys.size();

    for (std::size_t c = 0; c < out.components.size(); ++c) {
      auto const& rep = g.elements[out.representatives[c]];
      for (auto v : out.components[c]) {
        auto rel = f.minimal_relation(rep, g.elements[v]);
        if (!rel) {
          throw NoRelationInBound("no relation between " + f.to_string(rep)
                                  + " and " + f.to_string(g.elements[v]));
        }
        out.coloring.assignment[v] = ColorTag::C(rel->first, rel->second);
      }
    }

    if (auto torsion = f.finite_part()) {
      auto finite = paper_color_finite(*torsion);
      for (vertex_type i = 0; i < n; ++i) {
        if (!f.infinite_order(g.elements[i])) {
          out.coloring.assignment[i]
              = finite.assignment[f.finite_index(g.elements[i])];
        }
      }
    }
    return out;
  }

}  // namespace powcol

#endif  // POWCOL_SYMBOLIC_HPP_
