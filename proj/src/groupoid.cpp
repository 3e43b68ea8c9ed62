#include "grpd/groupoid.hpp"

#include <algorithm>

#include "grpd/error.hpp"

namespace grpd {

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroupoid
  ////////////////////////////////////////////////////////////////////////

  void FiniteGroupoid::build_indices() {
    object_index_.clear();
    arrow_index_.clear();
    for (std::size_t u = 0; u < objects_.size(); ++u) {
      if (!object_index_.emplace(objects_[u], u).second) {
        throw MalformedStructure("duplicate object '" + objects_[u] + "'");
      }
    }
    for (std::size_t x = 0; x < arrows_.size(); ++x) {
      if (!arrow_index_.emplace(arrows_[x], x).second) {
        throw MalformedStructure("duplicate arrow '" + arrows_[x] + "'");
      }
    }
  }

  void FiniteGroupoid::check_ranges() const {
    std::size_t const m = objects_.size();
    std::size_t const n = arrows_.size();
    auto              in_range = [](std::vector<std::size_t> const& v, std::size_t bound) {
      return std::all_of(v.begin(), v.end(), [&](std::size_t i) { return i < bound; });
    };
    if (source_.size() != n || target_.size() != n || inverse_.size() != n || unit_.size() != m
        || product_.size() != n * n) {
      throw MalformedStructure("structure map sizes do not match the object and arrow counts");
    }
    if (!in_range(source_, m) || !in_range(target_, m) || !in_range(unit_, n)
        || !in_range(inverse_, n)) {
      throw MalformedStructure("structure map refers to an undeclared identifier");
    }
    for (auto v : product_) {
      if (v != npos && v >= n) {
        throw MalformedStructure("product table refers to an undeclared arrow");
      }
    }
  }

  FiniteGroupoid::FiniteGroupoid(GroupoidTables const& t) {
    objects_ = t.objects;
    arrows_  = t.arrows;
    build_indices();

    auto lookup_object = [&](std::string const& token, char const* what) {
      auto it = object_index_.find(token);
      if (it == object_index_.end()) {
        throw MalformedStructure(std::string(what) + " refers to undeclared object '" + token + "'");
      }
      return it->second;
    };
    auto lookup_arrow = [&](std::string const& token, char const* what) {
      auto it = arrow_index_.find(token);
      if (it == arrow_index_.end()) {
        throw MalformedStructure(std::string(what) + " refers to undeclared arrow '" + token + "'");
      }
      return it->second;
    };

    std::size_t const n = arrows_.size();
    std::size_t const m = objects_.size();
    source_.assign(n, npos);
    target_.assign(n, npos);
    inverse_.assign(n, npos);
    unit_.assign(m, npos);
    product_.assign(n * n, npos);

    for (auto const& [x, u] : t.source) {
      source_[lookup_arrow(x, "source")] = lookup_object(u, "source");
    }
    for (auto const& [x, u] : t.target) {
      target_[lookup_arrow(x, "target")] = lookup_object(u, "target");
    }
    for (auto const& [x, y] : t.inverse) {
      inverse_[lookup_arrow(x, "inverse")] = lookup_arrow(y, "inverse");
    }
    for (auto const& [u, x] : t.unit) {
      unit_[lookup_object(u, "unit")] = lookup_arrow(x, "unit");
    }
    for (auto const& [key, z] : t.product) {
      std::size_t x = lookup_arrow(key.first, "product");
      std::size_t y = lookup_arrow(key.second, "product");
      product_[x * n + y] = lookup_arrow(z, "product");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (source_[x] == npos || target_[x] == npos || inverse_[x] == npos) {
        throw MalformedStructure("arrow '" + arrows_[x] + "' lacks a source, target or inverse");
      }
    }
    for (std::size_t u = 0; u < m; ++u) {
      if (unit_[u] == npos) {
        throw MalformedStructure("object '" + objects_[u] + "' has no unit arrow");
      }
    }
  }

  FiniteGroupoid FiniteGroupoid::from_indices(std::vector<std::string> objects,
                                              std::vector<std::string> arrows,
                                              std::vector<std::size_t> source,
                                              std::vector<std::size_t> target,
                                              std::vector<std::size_t> unit,
                                              std::vector<std::size_t> inverse,
                                              std::vector<std::size_t> product) {
    FiniteGroupoid g;
    g.objects_ = std::move(objects);
    g.arrows_  = std::move(arrows);
    g.source_  = std::move(source);
    g.target_  = std::move(target);
    g.unit_    = std::move(unit);
    g.inverse_ = std::move(inverse);
    g.product_ = std::move(product);
    g.check_ranges();
    g.build_indices();
    return g;
  }

  std::optional<std::size_t> FiniteGroupoid::find_object(std::string_view token) const {
    auto it = object_index_.find(std::string(token));
    return it == object_index_.end() ? std::nullopt : std::optional(it->second);
  }

  std::optional<std::size_t> FiniteGroupoid::find_arrow(std::string_view token) const {
    auto it = arrow_index_.find(std::string(token));
    return it == arrow_index_.end() ? std::nullopt : std::optional(it->second);
  }

  std::size_t FiniteGroupoid::object_index(std::string_view token) const {
    auto u = find_object(token);
    if (!u) {
      throw UnknownObject("unknown object '" + std::string(token) + "'");
    }
    return *u;
  }

  std::size_t FiniteGroupoid::arrow_index(std::string_view token) const {
    auto x = find_arrow(token);
    if (!x) {
      throw UnknownArrow("unknown arrow '" + std::string(token) + "'");
    }
    return *x;
  }

  std::size_t FiniteGroupoid::multiply(std::size_t x, std::size_t y) const {
    if (!composable(x, y)) {
      throw NotComposable("'" + arrows_[x] + "' and '" + arrows_[y] + "' are not composable");
    }
    std::size_t z = product_entry(x, y);
    if (z == npos) {
      throw MalformedStructure("no product entry for composable pair ('" + arrows_[x] + "', '"
                               + arrows_[y] + "')");
    }
    return z;
  }

  GroupoidTables FiniteGroupoid::tables() const {
    GroupoidTables t;
    t.objects         = objects_;
    t.arrows          = arrows_;
    std::size_t const n = arrows_.size();
    for (std::size_t x = 0; x < n; ++x) {
      t.source.emplace(arrows_[x], objects_[source_[x]]);
      t.target.emplace(arrows_[x], objects_[target_[x]]);
      t.inverse.emplace(arrows_[x], arrows_[inverse_[x]]);
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t z = product_entry(x, y);
        if (z != npos) {
          t.product.emplace(TokenPair{arrows_[x], arrows_[y]}, arrows_[z]);
        }
      }
    }
    for (std::size_t u = 0; u < objects_.size(); ++u) {
      t.unit.emplace(objects_[u], arrows_[unit_[u]]);
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate_groupoid(FiniteGroupoid const& g, GroupoidOptions const& opts) {
    ValidationReport  report;
    std::size_t const n = g.num_arrows();
    std::size_t const m = g.num_objects();
    auto const&       A = g.arrows();
    auto const&       O = g.objects();

    // Composable-pair domain and endpoints of products.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = g.product_entry(x, y);
        if (g.composable(x, y)) {
          if (xy == npos) {
            report.add("product-domain-missing", {A[x], A[y]},
                       "composable pair has no product entry");
            continue;
          }
          if (g.source(xy) != g.source(x)) {
            report.add("product-source", {A[x], A[y]}, "source(x.y) differs from source(x)");
          }
          if (g.target(xy) != g.target(y)) {
            report.add("product-target", {A[x], A[y]}, "target(x.y) differs from target(y)");
          }
        } else if (xy != npos) {
          report.add("product-domain-extra", {A[x], A[y]},
                     "product entry given for a non-composable pair");
        }
      }
    }

    // Associativity over every composable triple; both sides must exist.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t xy = g.product_entry(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (!g.composable(y, z)) {
            continue;
          }
          std::size_t yz  = g.product_entry(y, z);
          std::size_t lhs = npos;
          std::size_t rhs = npos;
          if (xy != npos && g.composable(xy, z)) {
            lhs = g.product_entry(xy, z);
          }
          if (yz != npos && g.composable(x, yz)) {
            rhs = g.product_entry(x, yz);
          }
          if (lhs == npos || rhs == npos) {
            report.add("associativity", {A[x], A[y], A[z]},
                       lhs == npos ? "(x.y).z is undefined" : "x.(y.z) is undefined");
          } else if (lhs != rhs) {
            report.add("associativity", {A[x], A[y], A[z]}, "(x.y).z differs from x.(y.z)");
          }
        }
      }
    }

    // Units.
    for (std::size_t u = 0; u < m; ++u) {
      std::size_t eu = g.unit(u);
      if (g.source(eu) != u || g.target(eu) != u) {
        report.add("unit-endpoints", {O[u]}, "unit(u) does not start and end at u");
      }
      for (std::size_t v = u + 1; v < m; ++v) {
        if (g.unit(v) == eu) {
          report.add("unit-injective", {O[u], O[v]}, "two objects share a unit arrow");
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t left  = g.unit(g.source(x));
      std::size_t right = g.unit(g.target(x));
      if (!g.composable(left, x) || g.product_entry(left, x) != x) {
        report.add("left-unit", {A[x]}, "unit(source(x)).x differs from x");
      }
      if (!g.composable(x, right) || g.product_entry(x, right) != x) {
        report.add("right-unit", {A[x]}, "x.unit(target(x)) differs from x");
      }
    }

    // Inverses.
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t inv = g.inverse(x);
      if (!g.composable(inv, x) || g.product_entry(inv, x) != g.unit(g.target(x))) {
        report.add("left-inverse", {A[x]}, "inverse(x).x differs from unit(target(x))");
      }
      if (!g.composable(x, inv) || g.product_entry(x, inv) != g.unit(g.source(x))) {
        report.add("right-inverse", {A[x]}, "x.inverse(x) differs from unit(source(x))");
      }
    }

    // Surjectivity of source and target.
    std::vector<bool> hit_source(m, false);
    std::vector<bool> hit_target(m, false);
    for (std::size_t x = 0; x < n; ++x) {
      hit_source[g.source(x)] = true;
      hit_target[g.target(x)] = true;
    }
    for (std::size_t u = 0; u < m; ++u) {
      for (auto [hit, rule] : {std::pair{&hit_source, "source-surjective"},
                               std::pair{&hit_target, "target-surjective"}}) {
        if ((*hit)[u]) {
          continue;
        }
        if (opts.allow_nonsurjective) {
          report.note(rule, "warning", "object " + O[u] + " is not hit");
        } else {
          report.add(rule, {O[u]}, "object is not hit");
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  bool composable(FiniteGroupoid const& g, std::string_view x, std::string_view y) {
    return g.composable(g.arrow_index(x), g.arrow_index(y));
  }

  std::vector<std::size_t> fiber_indices(FiniteGroupoid const& g, Side side, std::size_t u) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      if ((side == Side::source ? g.source(x) : g.target(x)) == u) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::set<std::string> fiber(FiniteGroupoid const& g, Side side, std::string_view u) {
    std::set<std::string> out;
    for (auto x : fiber_indices(g, side, g.object_index(u))) {
      out.insert(g.arrow(x));
    }
    return out;
  }

  std::vector<std::size_t> isotropy_indices(FiniteGroupoid const& g, std::size_t u) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      if (g.source(x) == u && g.target(x) == u) {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {

    // Restricts the product to G(u). Products leaving G(u) become missing
    // entries; returns nullopt when the unit or an inverse leaves G(u).
    std::optional<GroupTable> isotropy_table(FiniteGroupoid const& g, std::size_t u) {
      auto const               members = isotropy_indices(g, u);
      std::size_t const        k       = members.size();
      std::vector<std::size_t> local(g.num_arrows(), npos);
      std::vector<std::string> elements;
      for (std::size_t i = 0; i < k; ++i) {
        local[members[i]] = i;
        elements.push_back(g.arrow(members[i]));
      }
      if (k == 0 || local[g.unit(u)] == npos) {
        return std::nullopt;
      }
      std::vector<std::size_t> op(k * k, npos);
      std::vector<std::size_t> inverse(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          std::size_t z = g.product_entry(members[i], members[j]);
          op[i * k + j] = z == npos ? npos : local[z];
        }
        inverse[i] = local[g.inverse(members[i])];
        if (inverse[i] == npos) {
          return std::nullopt;
        }
      }
      return GroupTable::from_indices(std::move(elements), std::move(op), local[g.unit(u)],
                                      std::move(inverse));
    }

    // x^-1 . z . x for every z in G(source(x)); violations go to `report`.
    std::optional<std::vector<std::size_t>> conjugation_map(FiniteGroupoid const& g,
                                                            std::size_t           x,
                                                            ValidationReport&     report) {
      std::string const        rule = "conjugation-isomorphism";
      std::size_t const        u    = g.source(x);
      std::size_t const        v    = g.target(x);
      std::size_t const        xi   = g.inverse(x);
      auto const               dom  = isotropy_indices(g, u);
      std::vector<std::size_t> image(g.num_arrows(), npos);
      bool                     ok = true;

      for (auto z : dom) {
        std::size_t left = g.composable(xi, z) ? g.product_entry(xi, z) : npos;
        std::size_t full = left != npos && g.composable(left, x) ? g.product_entry(left, x) : npos;
        if (full == npos) {
          report.add(rule, {g.arrow(x), g.arrow(z)}, "x^-1.z.x is undefined");
          ok = false;
        } else if (g.source(full) != v || g.target(full) != v) {
          report.add(rule, {g.arrow(x), g.arrow(z)}, "x^-1.z.x is not a loop at target(x)");
          ok = false;
        } else {
          image[z] = full;
        }
      }
      if (!ok) {
        return std::nullopt;
      }
      auto const codom = isotropy_indices(g, v);
      if (codom.size() != dom.size()) {
        report.add(rule, {g.arrow(x)}, "isotropy groups at the endpoints differ in size");
        return std::nullopt;
      }
      std::vector<bool> hit(g.num_arrows(), false);
      for (auto z : dom) {
        if (hit[image[z]]) {
          report.add(rule, {g.arrow(x), g.arrow(z)}, "conjugation is not injective");
          ok = false;
        }
        hit[image[z]] = true;
      }
      for (auto z1 : dom) {
        for (auto z2 : dom) {
          std::size_t z12 = g.product_entry(z1, z2);
          std::size_t rhs = g.product_entry(image[z1], image[z2]);
          if (z12 == npos || image.at(z12) == npos || rhs == npos || image[z12] != rhs) {
            report.add(rule, {g.arrow(x), g.arrow(z1), g.arrow(z2)},
                       "conjugation does not preserve the product");
            ok = false;
          }
        }
      }
      if (!ok) {
        return std::nullopt;
      }
      return image;
    }

  }  // namespace

  GroupTable isotropy_group(FiniteGroupoid const& g, std::string_view u) {
    std::size_t const ui = g.object_index(u);
    auto              t  = isotropy_table(g, ui);
    if (!t || !validate_group(*t).valid()) {
      throw InternalCheckFailed("isotropy at '" + std::string(u) + "' is not a group");
    }
    return std::move(*t);
  }

  bool is_transitive(FiniteGroupoid const& g) {
    std::size_t const m = g.num_objects();
    std::vector<bool> hit(m * m, false);
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      hit[g.source(x) * m + g.target(x)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  std::map<std::string, std::string> conjugation_iso(FiniteGroupoid const& g, std::string_view x) {
    std::size_t const xi = g.arrow_index(x);
    ValidationReport  report;
    auto              image = conjugation_map(g, xi, report);
    if (!image) {
      throw InternalCheckFailed("conjugation by '" + std::string(x)
                                + "' is not a group isomorphism");
    }
    std::map<std::string, std::string> out;
    for (auto z : isotropy_indices(g, g.source(xi))) {
      out.emplace(g.arrow(z), g.arrow((*image)[z]));
    }
    return out;
  }

  ValidationReport structure_identities(FiniteGroupoid const& g) {
    ValidationReport  report;
    std::size_t const n = g.num_arrows();
    std::size_t const m = g.num_objects();
    auto const&       A = g.arrows();
    auto const&       O = g.objects();

    for (std::size_t x = 0; x < n; ++x) {
      std::size_t xi = g.inverse(x);
      if (g.source(xi) != g.target(x)) {
        report.add("source-of-inverse", {A[x]}, "source(x^-1) differs from target(x)");
      }
      if (g.target(xi) != g.source(x)) {
        report.add("target-of-inverse", {A[x]}, "target(x^-1) differs from source(x)");
      }
      if (g.inverse(xi) != x) {
        report.add("inverse-involution", {A[x]}, "(x^-1)^-1 differs from x");
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t xy = g.product_entry(x, y);
        if (xy == npos) {
          report.add("inverse-of-product", {A[x], A[y]}, "x.y is undefined");
          continue;
        }
        if (g.source(xy) != g.source(x)) {
          report.add("source-of-product", {A[x], A[y]}, "source(x.y) differs from source(x)");
        }
        if (g.target(xy) != g.target(y)) {
          report.add("target-of-product", {A[x], A[y]}, "target(x.y) differs from target(y)");
        }
        std::size_t yi = g.inverse(y);
        if (!g.composable(yi, xi)) {
          report.add("inverse-of-product", {A[x], A[y]}, "(y^-1, x^-1) is not composable");
        } else if (g.product_entry(yi, xi) != g.inverse(xy)) {
          report.add("inverse-of-product", {A[x], A[y]}, "(x.y)^-1 differs from y^-1.x^-1");
        }
      }
    }

    for (std::size_t u = 0; u < m; ++u) {
      std::size_t eu = g.unit(u);
      if (g.source(eu) != u) {
        report.add("unit-source", {O[u]}, "source(unit(u)) differs from u");
      }
      if (g.target(eu) != u) {
        report.add("unit-target", {O[u]}, "target(unit(u)) differs from u");
      }
      if (!g.composable(eu, eu) || g.product_entry(eu, eu) != eu) {
        report.add("unit-idempotent", {O[u]}, "unit(u).unit(u) differs from unit(u)");
      }
      if (g.inverse(eu) != eu) {
        report.add("unit-self-inverse", {O[u]}, "unit(u)^-1 differs from unit(u)");
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      conjugation_map(g, x, report);
    }

    if (is_transitive(g) && m > 1) {
      auto first = isotropy_table(g, 0);
      if (!first || !validate_group(*first).valid()) {
        report.add("isotropy-isomorphic", {O[0]}, "isotropy at this object is not a group");
      } else if (first->order() > isomorphism_search_cap) {
        report.note("isotropy-isomorphic", "skipped",
                    "isotropy order " + std::to_string(first->order()) + " exceeds search cap "
                        + std::to_string(isomorphism_search_cap));
      } else {
        for (std::size_t u = 1; u < m; ++u) {
          auto other = isotropy_table(g, u);
          if (!other || !validate_group(*other).valid()) {
            report.add("isotropy-isomorphic", {O[u]}, "isotropy at this object is not a group");
          } else if (!find_isomorphism(*first, *other)) {
            report.add("isotropy-isomorphic", {O[0], O[u]}, "isotropy groups are not isomorphic");
          }
        }
      }
    }
    return report;
  }

}  // namespace grpd
