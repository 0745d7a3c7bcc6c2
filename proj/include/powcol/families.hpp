// Generators for the standard corpus of finite magmas and the family
// specification syntax used by the command line.

#ifndef POWCOL_FAMILIES_HPP_
#define POWCOL_FAMILIES_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "io.hpp"
#include "magma.hpp"

namespace powcol {

  //! Largest magma the generators will produce.
  inline constexpr std::uint64_t max_generated_size = 4096;

  struct FamilySpec {
    enum class Kind {
      cyclic,
      dihedral,
      monogenic,
      symmetric,
      quaternion8,
      full_transformation,
      product,
      from_file
    };

    Kind                       kind = Kind::cyclic;
    std::vector<std::uint64_t> params;
    std::vector<FamilySpec>    factors;  // two factors for product
    std::string                path;     // from_file

    static FamilySpec cyclic(std::uint64_t n) {
      return {Kind::cyclic, {n}, {}, {}};
    }
    static FamilySpec dihedral(std::uint64_t n) {
      return {Kind::dihedral, {n}, {}, {}};
    }
    static FamilySpec monogenic(std::uint64_t index, std::uint64_t period) {
      return {Kind::monogenic, {index, period}, {}, {}};
    }
    static FamilySpec symmetric(std::uint64_t n) {
      return {Kind::symmetric, {n}, {}, {}};
    }
    static FamilySpec quaternion8() {
      return {Kind::quaternion8, {}, {}, {}};
    }
    static FamilySpec full_transformation(std::uint64_t n) {
      return {Kind::full_transformation, {n}, {}, {}};
    }
    static FamilySpec product(FamilySpec a, FamilySpec b) {
      return {Kind::product, {}, {std::move(a), std::move(b)}, {}};
    }
    static FamilySpec from_file(std::string path) {
      return {Kind::from_file, {}, {}, std::move(path)};
    }

    //! Canonical text form, e.g. "product(cyclic(2),monogenic(3,2))".
    [[nodiscard]] std::string to_string() const {
      auto args = [this](std::string const& name) {
        std::string s = name + "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
          s += (i ? "," : "") + std::to_string(params[i]);
        }
        return s + ")";
      };
      switch (kind) {
        case Kind::cyclic:
          return args("cyclic");
        case Kind::dihedral:
          return args("dihedral");
        case Kind::monogenic:
          return args("monogenic");
        case Kind::symmetric:
          return args("symmetric");
        case Kind::quaternion8:
          return "quaternion8";
        case Kind::full_transformation:
          return args("full_transformation");
        case Kind::product:
          return "product(" + factors[0].to_string() + ","
                 + factors[1].to_string() + ")";
        case Kind::from_file:
          return "file(" + path + ")";
      }
      return {};
    }
  };

  namespace detail {

    using Table = std::vector<std::vector<std::int64_t>>;

    inline Table make_table(std::size_t n,
                            std::function<std::int64_t(std::size_t,
                                                       std::size_t)> op) {
      Table t(n, std::vector<std::int64_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i][j] = op(i, j);
        }
      }
      return t;
    }

    inline void require(bool ok, std::string const& what) {
      if (!ok) {
        throw ParameterOutOfRange(what);
      }
    }

    // Index of a map [0,n) -> [0,n) read as a base-n numeral, most
    // significant digit first.
    inline std::size_t encode(std::vector<std::size_t> const& f, std::size_t n) {
      std::size_t code = 0;
      for (auto v : f) {
        code = code * n + v;
      }
      return code;
    }

    inline std::vector<std::size_t> decode(std::size_t code, std::size_t n) {
      std::vector<std::size_t> f(n);
      for (std::size_t i = n; i-- > 0;) {
        f[i] = code % n;
        code /= n;
      }
      return f;
    }

  }  // namespace detail

  //! Cayley table of the requested structure.  Products index (a, b) as
  //! a * |B| + b; permutations and transformations compose left to right
  //! (apply the left factor first).
  inline Magma generate(FamilySpec const& spec) {
    using Kind = FamilySpec::Kind;
    using detail::require;
    auto const label = spec.to_string();
    auto       param = [&](std::size_t i) { return spec.params.at(i); };

    switch (spec.kind) {
      case Kind::cyclic: {
        auto n = param(0);
        require(n >= 1 && n <= max_generated_size, "cyclic(n) needs 1 <= n <= "
                    + std::to_string(max_generated_size));
        return build_magma(
            detail::make_table(n, [n](auto i, auto j) { return (i + j) % n; }),
            {}, label);
      }
      case Kind::dihedral: {
        // r^i s^a at index i + n a
        auto n = param(0);
        require(n >= 1 && 2 * n <= max_generated_size,
                "dihedral(n) needs 1 <= 2n <= "
                    + std::to_string(max_generated_size));
        return build_magma(detail::make_table(2 * n,
                                              [n](auto x, auto y) {
                                                auto i = x % n, a = x / n;
                                                auto k = y % n, b = y / n;
                                                auto r = a == 0
                                                             ? (i + k) % n
                                                             : (i + n - k) % n;
                                                return r + n * ((a + b) % 2);
                                              }),
                           {}, label);
      }
      case Kind::monogenic: {
        // element i is g^(i+1)
        auto m = param(0), r = param(1);
        require(m >= 1 && r >= 1 && m + r - 1 <= max_generated_size,
                "monogenic(m,r) needs m, r >= 1 and m + r - 1 <= "
                    + std::to_string(max_generated_size));
        auto reduce = [m, r](std::uint64_t s) {
          return s < m + r ? s : m + (s - m) % r;
        };
        return build_magma(detail::make_table(m + r - 1,
                                              [&](auto i, auto j) {
                                                return reduce(i + j + 2) - 1;
                                              }),
                           {}, label);
      }
      case Kind::symmetric: {
        auto n = param(0);
        require(n >= 1 && n <= 5, "symmetric(n) needs 1 <= n <= 5");
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t>              p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        auto index_of = [&](std::vector<std::size_t> const& q) {
          return static_cast<std::int64_t>(
              std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        return build_magma(detail::make_table(perms.size(),
                                              [&](auto x, auto y) {
                                                std::vector<std::size_t> q(n);
                                                for (std::size_t t = 0; t < n;
                                                     ++t) {
                                                  q[t] = perms[y][perms[x][t]];
                                                }
                                                return index_of(q);
                                              }),
                           {}, label);
      }
      case Kind::quaternion8: {
        // index 2u + s is (-1)^s times unit u of {1, i, j, k}
        static constexpr std::array<std::array<int, 4>, 4> unit{
            {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
        static constexpr std::array<std::array<int, 4>, 4> sign{
            {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
        return build_magma(
            detail::make_table(8,
                               [](auto x, auto y) {
                                 auto u = x / 2, v = y / 2;
                                 auto s = (x % 2 + y % 2 + sign[u][v]) % 2;
                                 return 2 * unit[u][v] + s;
                               }),
            {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, label);
      }
      case Kind::full_transformation: {
        auto n = param(0);
        require(n >= 1 && n <= 4, "full_transformation(n) needs 1 <= n <= 4");
        std::size_t size = 1;
        for (std::size_t t = 0; t < n; ++t) {
          size *= n;
        }
        return build_magma(detail::make_table(size,
                                              [n](auto x, auto y) {
                                                auto f = detail::decode(x, n);
                                                auto g = detail::decode(y, n);
                                                std::vector<std::size_t> h(n);
                                                for (std::size_t t = 0; t < n;
                                                     ++t) {
                                                  h[t] = g[f[t]];
                                                }
                                                return detail::encode(h, n);
                                              }),
                           {}, label);
      }
      case Kind::product: {
        require(spec.factors.size() == 2, "product needs two factors");
        auto a = generate(spec.factors[0]);
        auto b = generate(spec.factors[1]);
        auto nb = b.size();
        require(a.size() * nb <= max_generated_size,
                "product size exceeds " + std::to_string(max_generated_size));
        return build_magma(
            detail::make_table(a.size() * nb,
                               [&](auto x, auto y) {
                                 auto l = a(static_cast<element_type>(x / nb),
                                            static_cast<element_type>(y / nb));
                                 auto r = b(static_cast<element_type>(x % nb),
                                            static_cast<element_type>(y % nb));
                                 return static_cast<std::int64_t>(l * nb + r);
                               }),
            {}, label);
      }
      case Kind::from_file:
        return read_magma_file(spec.path);
    }
    throw ParameterOutOfRange("unknown family");
  }

  //! Parses the canonical text form produced by FamilySpec::to_string, e.g.
  //! "cyclic(12)", "monogenic(3,2)", "product(cyclic(2),symmetric(3))",
  //! "file(data/z2.cay)".  "transformation" abbreviates
  //! "full_transformation".
  inline FamilySpec parse_family_spec(std::string_view text) {
    std::size_t pos  = 0;
    auto        fail = [&](std::string const& what) -> FamilySpec {
      throw ParameterOutOfRange("bad family spec '" + std::string(text)
                                + "' at offset " + std::to_string(pos) + ": "
                                + what);
    };
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= text.size() || text[pos] != c) {
        fail(std::string("expected '") + c + "'");
      }
      ++pos;
    };

    std::function<FamilySpec()> parse = [&]() -> FamilySpec {
      skip();
      std::size_t start = pos;
      while (pos < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[pos]))
                 || text[pos] == '_')) {
        ++pos;
      }
      std::string name(text.substr(start, pos - start));
      if (name == "quaternion8") {
        return FamilySpec::quaternion8();
      }
      if (name == "product") {
        expect('(');
        auto a = parse();
        expect(',');
        auto b = parse();
        expect(')');
        return FamilySpec::product(std::move(a), std::move(b));
      }
      if (name == "file") {
        expect('(');
        auto close = text.rfind(')');
        if (close == std::string_view::npos || close < pos) {
          return fail("unterminated file(...)");
        }
        std::string path(text.substr(pos, close - pos));
        pos = close + 1;
        return FamilySpec::from_file(path);
      }
      std::vector<std::uint64_t> args;
      expect('(');
      do {
        skip();
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        if (digits == pos) {
          return fail("expected a number");
        }
        args.push_back(std::stoull(std::string(text.substr(digits, pos - digits))));
        skip();
      } while (pos < text.size() && text[pos] == ',' && ++pos);
      expect(')');

      auto arity = [&](std::size_t k) {
        if (args.size() != k) {
          fail(name + " takes " + std::to_string(k) + " argument(s)");
        }
      };
      FamilySpec spec;
      if (name == "cyclic") {
        arity(1);
        spec = FamilySpec::cyclic(args[0]);
      } else if (name == "dihedral") {
        arity(1);
        spec = FamilySpec::dihedral(args[0]);
      } else if (name == "monogenic") {
        arity(2);
        spec = FamilySpec::monogenic(args[0], args[1]);
      } else if (name == "symmetric") {
        arity(1);
        spec = FamilySpec::symmetric(args[0]);
      } else if (name == "full_transformation" || name == "transformation") {
        arity(1);
        spec = FamilySpec::full_transformation(args[0]);
      } else {
        return fail("unknown family '" + name + "'");
      }
      return spec;
    };

    auto spec = parse();
    skip();
    if (pos != text.size()) {
      fail("trailing characters");
    }
    return spec;
  }

  //! Default verification corpus: cyclic(1..64), dihedral(3..16),
  //! monogenic(m,r) for m, r in [1,8], symmetric(3..4), quaternion8,
  //! full_transformation(2..3), and ten pseudo-random direct products of
  //! those (seeded, at most 256 elements each).
  inline std::vector<FamilySpec> default_corpus(std::uint64_t seed = 20240611) {
    std::vector<FamilySpec> out;
    for (std::uint64_t n = 1; n <= 64; ++n) {
      out.push_back(FamilySpec::cyclic(n));
    }
    for (std::uint64_t n = 3; n <= 16; ++n) {
      out.push_back(FamilySpec::dihedral(n));
    }
    for (std::uint64_t m = 1; m <= 8; ++m) {
      for (std::uint64_t r = 1; r <= 8; ++r) {
        out.push_back(FamilySpec::monogenic(m, r));
      }
    }
    out.push_back(FamilySpec::symmetric(3));
    out.push_back(FamilySpec::symmetric(4));
    out.push_back(FamilySpec::quaternion8());
    out.push_back(FamilySpec::full_transformation(2));
    out.push_back(FamilySpec::full_transformation(3));

    auto size_of = [](FamilySpec const& s) -> std::uint64_t {
      switch (s.kind) {
        case FamilySpec::Kind::cyclic:
          return s.params[0];
        case FamilySpec::Kind::dihedral:
          return 2 * s.params[0];
        case FamilySpec::Kind::monogenic:
          return s.params[0] + s.params[1] - 1;
        case FamilySpec::Kind::symmetric:
          return s.params[0] == 3 ? 6 : 24;
        case FamilySpec::Kind::quaternion8:
          return 8;
        default:
          return s.params[0] == 2 ? 4 : 27;
      }
    };

    std::size_t const                          base = out.size();
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, base - 1);
    for (std::size_t made = 0; made < 10;) {
      auto const& a = out[pick(rng)];
      auto const& b = out[pick(rng)];
      if (size_of(a) < 2 || size_of(b) < 2 || size_of(a) * size_of(b) > 256) {
        continue;
      }
      out.push_back(FamilySpec::product(a, b));
      ++made;
    }
    return out;
  }

}  // namespace powcol

#endif  // POWCOL_FAMILIES_HPP_
