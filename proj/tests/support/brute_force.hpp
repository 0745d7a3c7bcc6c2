// Test-only oracles.  Everything here works from raw Cayley tables, edge
// lists or closed-form arithmetic and never calls into the code paths it is
// used to check.

#ifndef POWCOL_TESTS_BRUTE_FORCE_HPP_
#define POWCOL_TESTS_BRUTE_FORCE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace brute {

  using Table = std::vector<std::vector<std::int64_t>>;

  inline Table cyclic_table(std::int64_t n) {
    Table t(n, std::vector<std::int64_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        t[i][j] = (i + j) % n;
      }
    }
    return t;
  }

  // Index i is g^(i+1) in the monogenic semigroup of index 3, period 2.
  inline Table m32_table() {
    return {{1, 2, 3, 2}, {2, 3, 2, 3}, {3, 2, 3, 2}, {2, 3, 2, 3}};
  }

  // g*g = h, h*h = g, g*h = g, h*g = h with g = 0, h = 1.
  inline Table non_power_associative_table() {
    return {{1, 0}, {1, 0}};
  }

  // Left-normed power by repeated multiplication.
  inline std::int64_t power(Table const& t, std::int64_t g, std::uint64_t k) {
    std::int64_t x = g;
    for (std::uint64_t i = 1; i < k; ++i) {
      x = t[x][g];
    }
    return x;
  }

  // |{g^k : k >= 1}| by accumulating powers until the set stops growing for
  // N + 1 consecutive steps.
  inline std::size_t order(Table const& t, std::int64_t g) {
    std::set<std::int64_t> seen;
    std::int64_t           x = g;
    for (std::size_t k = 1; k <= 2 * t.size() + 1; ++k) {
      seen.insert(x);
      x = t[x][g];
    }
    return seen.size();
  }

  inline bool is_power(Table const& t, std::int64_t y, std::int64_t x) {
    std::int64_t p = x;
    for (std::size_t k = 1; k <= 2 * t.size() + 1; ++k) {
      if (p == y) {
        return true;
      }
      p = t[p][x];
    }
    return false;
  }

  inline bool adjacent(Table const& t, std::int64_t x, std::int64_t y) {
    return x != y && (is_power(t, y, x) || is_power(t, x, y));
  }

  inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
      c += std::gcd(i, n) == 1;
    }
    return c;
  }

  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

  // Least k such that some assignment in {0..k-1}^n is proper; plain
  // odometer enumeration.
  inline std::size_t chromatic_number(std::size_t n, Edges const& edges) {
    if (n == 0) {
      return 0;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::size_t> c(n, 0);
      while (true) {
        bool ok = std::all_of(edges.begin(), edges.end(), [&](auto const& e) {
          return c[e.first] != c[e.second];
        });
        if (ok) {
          return k;
        }
        std::size_t i = 0;
        while (i < n && ++c[i] == k) {
          c[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    }
    return n;
  }

  // Lexicographically least maximum clique over all subsets (n <= 20).
  inline std::vector<std::size_t> max_clique(std::size_t n, Edges const& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) {
      adj[a][b] = adj[b][a] = true;
    }
    std::vector<std::size_t> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
        }
      }
      bool clique = true;
      for (std::size_t i = 0; i < s.size() && clique; ++i) {
        for (std::size_t j = i + 1; j < s.size() && clique; ++j) {
          clique = adj[s[i]][s[j]];
        }
      }
      if (clique && (s.size() > best.size() || (s.size() == best.size() && s < best))) {
        best = s;
      }
    }
    return best;
  }

}  // namespace brute

#endif  // POWCOL_TESTS_BRUTE_FORCE_HPP_
