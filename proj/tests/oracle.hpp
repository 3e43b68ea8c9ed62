#pragma once

// Naive checkers over token maps. They share no code with the library: no
// index tables, no report types, and every law is written out directly from
// its definition. Tests compare library verdicts against these.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grpd/group.hpp"
#include "grpd/group_groupoid.hpp"
#include "grpd/groupoid.hpp"

namespace oracle {

  using Map   = std::map<std::string, std::string>;
  using Table = std::map<std::pair<std::string, std::string>, std::string>;

  inline std::optional<std::string> get(Map const& m, std::string const& k) {
    auto it = m.find(k);
    if (it == m.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  inline std::optional<std::string> get(Table const& t, std::string const& a, std::string const& b) {
    auto it = t.find({a, b});
    if (it == t.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  inline bool is_group(grpd::GroupTables const& g) {
    auto const& E = g.elements;
    for (auto const& a : E) {
      for (auto const& b : E) {
        if (!get(g.op, a, b)) {
          return false;
        }
      }
    }
    for (auto const& a : E) {
      for (auto const& b : E) {
        for (auto const& c : E) {
          if (*get(g.op, *get(g.op, a, b), c) != *get(g.op, a, *get(g.op, b, c))) {
            return false;
          }
        }
      }
    }
    for (auto const& a : E) {
      auto inv = get(g.inverse, a);
      if (!inv || *get(g.op, g.identity, a) != a || *get(g.op, a, g.identity) != a
          || *get(g.op, a, *inv) != g.identity || *get(g.op, *inv, a) != g.identity) {
        return false;
      }
    }
    return true;
  }

  inline bool is_commutative(grpd::GroupTables const& g) {
    for (auto const& a : g.elements) {
      for (auto const& b : g.elements) {
        if (get(g.op, a, b) != get(g.op, b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool composable(grpd::GroupoidTables const& g, std::string const& x, std::string const& y) {
    return g.target.at(x) == g.source.at(y);
  }

  inline std::size_t count_composable(grpd::GroupoidTables const& g) {
    std::size_t n = 0;
    for (auto const& x : g.arrows) {
      for (auto const& y : g.arrows) {
        n += composable(g, x, y) ? 1 : 0;
      }
    }
    return n;
  }

  // Groupoid axioms, written as in the definition: the product is defined
  // exactly on composable pairs, has the right endpoints, is associative,
  // units are two-sided and inverses invert. Units map injectively and
  // source and target are onto.
  inline bool is_groupoid(grpd::GroupoidTables const& g) {
    for (auto const& x : g.arrows) {
      for (auto const& y : g.arrows) {
        auto xy = get(g.product, x, y);
        if (composable(g, x, y) != xy.has_value()) {
          return false;
        }
        if (xy && (g.source.at(*xy) != g.source.at(x) || g.target.at(*xy) != g.target.at(y))) {
          return false;
        }
      }
    }
    for (auto const& x : g.arrows) {
      for (auto const& y : g.arrows) {
        for (auto const& z : g.arrows) {
          if (composable(g, x, y) && composable(g, y, z)) {
            auto l = get(g.product, *get(g.product, x, y), z);
            auto r = get(g.product, x, *get(g.product, y, z));
            if (!l || !r || *l != *r) {
              return false;
            }
          }
        }
      }
    }
    std::set<std::string> units;
    for (auto const& u : g.objects) {
      auto e = g.unit.at(u);
      if (g.source.at(e) != u || g.target.at(e) != u) {
        return false;
      }
      units.insert(e);
    }
    if (units.size() != g.objects.size()) {
      return false;
    }
    for (auto const& x : g.arrows) {
      auto ea = g.unit.at(g.source.at(x));
      auto eb = g.unit.at(g.target.at(x));
      auto xi = g.inverse.at(x);
      if (get(g.product, ea, x) != x || get(g.product, x, eb) != x) {
        return false;
      }
      if (get(g.product, x, xi) != ea || get(g.product, xi, x) != eb) {
        return false;
      }
    }
    std::set<std::string> srcs, tgts;
    for (auto const& x : g.arrows) {
      srcs.insert(g.source.at(x));
      tgts.insert(g.target.at(x));
    }
    return srcs.size() == g.objects.size() && tgts.size() == g.objects.size();
  }

  inline bool is_hom(Map const& f, grpd::GroupTables const& a, grpd::GroupTables const& b) {
    for (auto const& x : a.elements) {
      for (auto const& y : a.elements) {
        auto xy = get(a.op, x, y);
        if (!xy || get(b.op, f.at(x), f.at(y)) != f.at(*xy)) {
          return false;
        }
      }
    }
    return true;
  }

  // Group-groupoid by the homomorphism-plus-interchange characterisation.
  inline bool is_group_groupoid(grpd::GroupGroupoidTables const& gg) {
    auto const& g = gg.base;
    auto const& A = gg.arrow_group;
    auto const& O = gg.object_group;
    if (!is_groupoid(g) || !is_group(A) || !is_group(O)) {
      return false;
    }
    if (!is_hom(g.source, A, O) || !is_hom(g.target, A, O) || !is_hom(g.inverse, A, A)) {
      return false;
    }
    if (!is_hom(g.unit, O, A)) {
      return false;
    }
    for (auto const& x : g.arrows) {
      for (auto const& y : g.arrows) {
        if (!composable(g, x, y)) {
          continue;
        }
        for (auto const& z : g.arrows) {
          for (auto const& t : g.arrows) {
            if (!composable(g, z, t)) {
              continue;
            }
            auto xz = *get(A.op, x, z);
            auto yt = *get(A.op, y, t);
            if (!composable(g, xz, yt)) {
              return false;
            }
            if (*get(A.op, *get(g.product, x, y), *get(g.product, z, t)) != *get(g.product, xz, yt)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // Z_n on tokens "0".."n-1", built by modular arithmetic.
  inline grpd::GroupTables cyclic(int n) {
    grpd::GroupTables t;
    for (int i = 0; i < n; ++i) {
      t.elements.push_back(std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t.op[{std::to_string(i), std::to_string(j)}] = std::to_string((i + j) % n);
      }
      t.inverse[std::to_string(i)] = std::to_string((n - i) % n);
    }
    t.identity = "0";
    return t;
  }

  // Token-level relabelling: every token s becomes rename.at(s).
  inline grpd::GroupTables relabel(grpd::GroupTables const& t, Map const& rename) {
    grpd::GroupTables out;
    for (auto const& e : t.elements) {
      out.elements.push_back(rename.at(e));
    }
    for (auto const& [k, v] : t.op) {
      out.op[{rename.at(k.first), rename.at(k.second)}] = rename.at(v);
    }
    for (auto const& [k, v] : t.inverse) {
      out.inverse[rename.at(k)] = rename.at(v);
    }
    out.identity = rename.at(t.identity);
    return out;
  }

  // Moves the group structure along a random permutation of its carrier:
  // the result is again a group on the same tokens, but generally unrelated
  // to the groupoid that sits on those tokens.
  inline grpd::GroupTables transport(grpd::GroupTables const& t, std::mt19937& rng) {
    std::vector<std::string> image = t.elements;
    std::shuffle(image.begin(), image.end(), rng);
    Map rename;
    for (std::size_t i = 0; i < image.size(); ++i) {
      rename[t.elements[i]] = image[i];
    }
    auto out     = relabel(t, rename);
    out.elements = t.elements;
    return out;
  }

}  // namespace oracle
