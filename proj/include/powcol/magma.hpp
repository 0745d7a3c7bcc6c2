// Finite magmas given by Cayley tables, their left-normed powers, monogenic
// profiles (order, index, period, pre-period) and the power-associativity
// check.

#ifndef POWCOL_MAGMA_HPP_
#define POWCOL_MAGMA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace powcol {

  //! Dense element index in [0, N).
  using element_type = std::uint32_t;

  //! Monogenic data of one element g.  The sequence g, g^2, g^3, ... is a
  //! tail of length index - 1 followed by a cycle of length period.
  struct ElementProfile {
    element_type element = 0;
    std::uint64_t order  = 1;  // |{g^k : k >= 1}|
    std::uint64_t index  = 1;  // smallest m with g^m = g^(m+r), r >= 1
    std::uint64_t period = 1;  // smallest such r
    bool          cyclic = true;
    //! Only present for non-cyclic elements, where it equals index - 1.
    std::optional<std::uint64_t> pre_period;

    bool operator==(ElementProfile const&) const = default;
  };

  //! A finite magma on the elements 0..N-1.  Immutable once built; profiles
  //! and power sequences are computed at construction.
  class Magma {
   public:
    [[nodiscard]] std::size_t size() const noexcept {
      return n_;
    }

    //! The product g * h.
    [[nodiscard]] element_type operator()(element_type g,
                                          element_type h) const noexcept {
      return table_[static_cast<std::size_t>(g) * n_ + h];
    }

    [[nodiscard]] std::span<element_type const> row(element_type g) const {
      return {table_.data() + static_cast<std::size_t>(g) * n_, n_};
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    [[nodiscard]] bool has_names() const noexcept {
      return !names_.empty();
    }

    //! Display name of g: its name when present, otherwise its index.
    [[nodiscard]] std::string name(element_type g) const {
      return names_.empty() ? std::to_string(g) : names_[g];
    }

    [[nodiscard]] std::string const& metadata() const noexcept {
      return metadata_;
    }

    [[nodiscard]] ElementProfile const& profile(element_type g) const {
      return profiles_[g];
    }

    [[nodiscard]] std::vector<ElementProfile> const& profiles() const noexcept {
      return profiles_;
    }

    //! g^1, g^2, ..., g^order in order (all distinct).
    [[nodiscard]] std::span<element_type const>
    distinct_powers(element_type g) const {
      return powers_[g];
    }

    //! Left-normed power g^k (g^1 = g, g^(k+1) = g^k * g), k >= 1.  Exponents
    //! past the cycle are reduced using index and period, so any 64-bit k is
    //! fine.
    [[nodiscard]] element_type power(element_type g, std::uint64_t k) const {
      auto const& p = profiles_[g];
      if (k > p.order) {
        k = p.index + (k - p.index) % p.period;
      }
      return powers_[g][k - 1];
    }

    //! Equality of the operation and the element names; metadata is a
    //! free-form annotation and does not participate.
    friend bool operator==(Magma const& a, Magma const& b) {
      return a.n_ == b.n_ && a.table_ == b.table_ && a.names_ == b.names_;
    }

    friend Magma build_magma(std::vector<std::vector<std::int64_t>> const&,
                             std::vector<std::string>,
                             std::string);

   private:
    Magma(std::size_t               n,
          std::vector<element_type> table,
          std::vector<std::string>  names,
          std::string               metadata)
        : n_(n),
          table_(std::move(table)),
          names_(std::move(names)),
          metadata_(std::move(metadata)) {
      compute_profiles();
    }

    void compute_profiles() {
      profiles_.resize(n_);
      powers_.resize(n_);
      // first_seen[x] = exponent at which x first appeared for the current g
      std::vector<std::uint64_t> first_seen(n_, 0);
      for (element_type g = 0; g < n_; ++g) {
        auto& seq = powers_[g];
        seq.clear();
        element_type  x = g;
        std::uint64_t k = 1;
        while (first_seen[x] == 0) {
          first_seen[x] = k;
          seq.push_back(x);
          x = (*this)(x, g);
          ++k;
        }
        ElementProfile& p = profiles_[g];
        p.element         = g;
        p.index           = first_seen[x];
        p.period          = k - first_seen[x];
        p.order           = seq.size();
        p.cyclic          = p.index == 1;
        p.pre_period      = p.cyclic ? std::nullopt
                                     : std::optional<std::uint64_t>(p.index - 1);
        for (auto y : seq) {
          first_seen[y] = 0;
        }
      }
    }

    std::size_t                            n_;
    std::vector<element_type>              table_;
    std::vector<std::string>               names_;
    std::string                            metadata_;
    std::vector<ElementProfile>            profiles_;
    std::vector<std::vector<element_type>> powers_;
  };

  //! Validates and builds a magma from a square Cayley table; row g, column h
  //! holds g * h.
  inline Magma build_magma(std::vector<std::vector<std::int64_t>> const& table,
                           std::vector<std::string> names    = {},
                           std::string              metadata = {}) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw DimensionMismatch("Cayley table is empty");
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (table[r].size() != n) {
        throw DimensionMismatch("row " + std::to_string(r) + " has "
                                + std::to_string(table[r].size())
                                + " entries, expected "
                                + std::to_string(n));
      }
      for (std::size_t c = 0; c < n; ++c) {
        auto v = table[r][c];
        if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
          throw ClosureViolation(r, c, v);
        }
        flat.push_back(static_cast<element_type>(v));
      }
    }
    if (!names.empty()) {
      if (names.size() != n) {
        throw DimensionMismatch("expected " + std::to_string(n)
                                + " names, got "
                                + std::to_string(names.size()));
      }
      std::unordered_set<std::string> seen;
      for (auto const& s : names) {
        if (!seen.insert(s).second) {
          throw DuplicateName("duplicate element name '" + s + "'");
        }
      }
    }
    return Magma(n, std::move(flat), std::move(names), std::move(metadata));
  }

  inline element_type power(Magma const& m, element_type g, std::uint64_t k) {
    return m.power(g, k);
  }

  inline ElementProfile const& element_profile(Magma const& m, element_type g) {
    return m.profile(g);
  }

  //! Witness (g, a, b) with g^a * g^b != g^(a+b).
  struct PowerAssociativityWitness {
    element_type  element;
    std::uint64_t a;
    std::uint64_t b;

    bool operator==(PowerAssociativityWitness const&) const = default;
  };

  struct PowerAssociativityReport {
    std::optional<PowerAssociativityWitness> witness;

    [[nodiscard]] bool passed() const noexcept {
      return !witness.has_value();
    }
  };

  //! Checks g^a * g^b = g^(a+b) for every g and all 1 <= a, b <= 2L, where L
  //! is the size of the left-normed closure of g.
  //!
  //! The bound is complete: every exponent above L reduces to one in
  //! [index, L] with the same residue mod period, and the reduction commutes
  //! with addition once both summands are at least index.  So exponents in
  //! [1, L] already realise every product g^a * g^b that can occur.
  //!
  //! Pairs with b <= a are swept before pairs with b > a (each half in
  //! lexicographic order); the first failure is returned as the witness.
  inline PowerAssociativityReport check_power_associativity(Magma const& m) {
    for (element_type g = 0; g < m.size(); ++g) {
      std::uint64_t const bound = 2 * m.profile(g).order;
      auto holds = [&](std::uint64_t a, std::uint64_t b) {
        return m(m.power(g, a), m.power(g, b)) == m.power(g, a + b);
      };
      for (std::uint64_t a = 1; a <= bound; ++a) {
        for (std::uint64_t b = 1; b <= a; ++b) {
          if (!holds(a, b)) {
            return {PowerAssociativityWitness{g, a, b}};
          }
        }
      }
      for (std::uint64_t a = 1; a <= bound; ++a) {
        for (std::uint64_t b = a + 1; b <= bound; ++b) {
          if (!holds(a, b)) {
            return {PowerAssociativityWitness{g, a, b}};
          }
        }
      }
    }
    return {};
  }

}  // namespace powcol

#endif  // POWCOL_MAGMA_HPP_
