#include "grpd/group_groupoid.hpp"

#include <algorithm>

#include "grpd/constructions.hpp"
#include "grpd/error.hpp"
#include "grpd/morphism.hpp"

namespace grpd {

  ////////////////////////////////////////////////////////////////////////
  // GroupGroupoid
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool same_elements(std::vector<std::string> a, std::vector<std::string> b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

  }  // namespace

  GroupGroupoid::GroupGroupoid(FiniteGroupoid base, GroupTable arrow_group, GroupTable object_group)
      : base_(std::make_shared<FiniteGroupoid const>(std::move(base))),
        arrow_group_(std::move(arrow_group)),
        object_group_(std::move(object_group)) {
    if (!same_elements(arrow_group_.elements(), base_->arrows())) {
      throw MalformedStructure("arrow group elements differ from the arrow set");
    }
    if (!same_elements(object_group_.elements(), base_->objects())) {
      throw MalformedStructure("object group elements differ from the object set");
    }
    if (arrow_group_.elements() != base_->arrows()) {
      arrow_group_ = arrow_group_.reindexed(base_->arrows());
    }
    if (object_group_.elements() != base_->objects()) {
      object_group_ = object_group_.reindexed(base_->objects());
    }
  }

  namespace {

    GroupTable table_over(std::vector<std::string> const& elements, GroupTables t) {
      t.elements = elements;
      try {
        return GroupTable(t);
      } catch (MalformedTable const& e) {
        throw MalformedStructure(e.what());
      }
    }

  }  // namespace

  GroupGroupoid::GroupGroupoid(GroupGroupoidTables const& t)
      : GroupGroupoid(FiniteGroupoid(t.base),
                      table_over(t.base.arrows, t.arrow_group),
                      table_over(t.base.objects, t.object_group)) {}

  GroupGroupoidTables GroupGroupoid::tables() const {
    return {base_->tables(), arrow_group_.tables(), object_group_.tables()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Interchange
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::pair<std::size_t, std::size_t>> composable_pairs(FiniteGroupoid const& g) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t x = 0; x < g.num_arrows(); ++x) {
        for (std::size_t y = 0; y < g.num_arrows(); ++y) {
          if (g.composable(x, y)) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

  }  // namespace

  ValidationReport check_interchange(GroupGroupoid const& gg) {
    ValidationReport      report;
    FiniteGroupoid const& g  = gg.base();
    GroupTable const&     op = gg.arrow_group();
    auto const            P  = composable_pairs(g);
    auto const&           A  = g.arrows();

    for (auto [x, y] : P) {
      std::size_t xy = g.product_entry(x, y);
      for (auto [z, t] : P) {
        Witness     w{A[x], A[y], A[z], A[t]};
        std::size_t zt = g.product_entry(z, t);
        std::size_t xz = op.op(x, z);
        std::size_t yt = op.op(y, t);
        if (xy == npos || zt == npos || xz == npos || yt == npos) {
          report.add("interchange", w, "an operand is undefined");
          continue;
        }
        if (!g.composable(xz, yt)) {
          report.add("interchange", w, "(x+z, y+t) is not composable");
          continue;
        }
        std::size_t lhs = op.op(xy, zt);
        std::size_t rhs = g.product_entry(xz, yt);
        if (lhs != rhs) {
          report.add("interchange", w, "(x.y)+(z.t) differs from (x+z).(y+t)");
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group-groupoid criteria
  ////////////////////////////////////////////////////////////////////////

  namespace {

    ValidationReport prerequisites(GroupGroupoid const& gg) {
      ValidationReport report;
      report.merge(validate_groupoid(gg.base()), "groupoid.");
      report.merge(validate_group(gg.arrow_group()), "arrow-group.");
      report.merge(validate_group(gg.object_group()), "object-group.");
      return report;
    }

    // Operation, identity and group inverse as groupoid morphisms, each
    // checked by the generic morphism validator.
    ValidationReport by_structure_morphisms(GroupGroupoid const& gg) {
      ValidationReport report = prerequisites(gg);
      if (!report.valid()) {
        return report;
      }
      auto const&       G  = gg.base_ptr();
      GroupTable const& A  = gg.arrow_group();
      GroupTable const& O  = gg.object_group();
      std::size_t const n  = G->num_arrows();
      std::size_t const m  = G->num_objects();

      auto square = std::make_shared<FiniteGroupoid const>(direct_product_groupoids_unchecked(*G, *G));
      std::vector<std::size_t> op_arrows(n * n);
      std::vector<std::size_t> op_objects(m * m);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
          op_arrows[x * n + z] = A.op(x, z);
        }
      }
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
          op_objects[u * m + v] = O.op(u, v);
        }
      }
      report.merge(validate_morphism(Morphism(square, G, std::move(op_arrows), std::move(op_objects))),
                   "operation-morphism.");

      auto point = std::make_shared<FiniteGroupoid const>(null_groupoid({"lambda"}));
      report.merge(validate_morphism(Morphism(point, G, {A.identity()}, {O.identity()})),
                   "identity-morphism.");

      std::vector<std::size_t> inv_arrows(n);
      std::vector<std::size_t> inv_objects(m);
      for (std::size_t x = 0; x < n; ++x) {
        inv_arrows[x] = A.inverse(x);
      }
      for (std::size_t u = 0; u < m; ++u) {
        inv_objects[u] = O.inverse(u);
      }
      report.merge(validate_morphism(Morphism(G, G, std::move(inv_arrows), std::move(inv_objects))),
                   "inverse-morphism.");
      return report;
    }

    // Structure maps as group homomorphisms plus the interchange law.
    ValidationReport by_homomorphisms(GroupGroupoid const& gg) {
      ValidationReport report = prerequisites(gg);
      if (!report.valid()) {
        return report;
      }
      FiniteGroupoid const& g = gg.base();
      std::size_t const     n = g.num_arrows();
      std::size_t const     m = g.num_objects();
      std::vector<std::size_t> src(n), tgt(n), inv(n), unit(m);
      for (std::size_t x = 0; x < n; ++x) {
        src[x] = g.source(x);
        tgt[x] = g.target(x);
        inv[x] = g.inverse(x);
      }
      for (std::size_t u = 0; u < m; ++u) {
        unit[u] = g.unit(u);
      }
      report.merge(check_group_hom(src, gg.arrow_group(), gg.object_group(), "source-hom"));
      report.merge(check_group_hom(tgt, gg.arrow_group(), gg.object_group(), "target-hom"));
      report.merge(check_group_hom(unit, gg.object_group(), gg.arrow_group(), "unit-hom"));
      report.merge(check_group_hom(inv, gg.arrow_group(), gg.arrow_group(), "inversion-hom"));
      report.merge(check_interchange(gg));
      return report;
    }

  }  // namespace

  ValidationReport check_group_groupoid(GroupGroupoid const& gg, GroupGroupoidMode mode) {
    ValidationReport report;
    auto             verdict = [](ValidationReport const& r) { return r.valid() ? "pass" : "fail"; };
    if (mode == GroupGroupoidMode::def31 || mode == GroupGroupoidMode::both) {
      auto r = by_structure_morphisms(gg);
      report.merge(r, "def31.");
      report.note("def31", verdict(r), "structure maps of the group are groupoid morphisms");
    }
    if (mode == GroupGroupoidMode::def32 || mode == GroupGroupoidMode::both) {
      auto r = by_homomorphisms(gg);
      report.merge(r, "def32.");
      report.note("def32", verdict(r), "homomorphisms and interchange law");
    }
    if (mode == GroupGroupoidMode::both) {
      bool p31 = report.has_note("def31", "pass");
      bool p32 = report.has_note("def32", "pass");
      if (p31 != p32) {
        report.add("disagreement", {}, std::string("def31 verdict ") + (p31 ? "pass" : "fail")
                                           + " but def32 verdict " + (p32 ? "pass" : "fail"));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived identities
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void require_valid_parts(GroupGroupoid const& gg, char const* what) {
      if (!prerequisites(gg).valid()) {
        throw InvalidInput(std::string(what) + " needs a valid groupoid and valid groups");
      }
    }

  }  // namespace

  ValidationReport check_derived_identities(GroupGroupoid const& gg) {
    require_valid_parts(gg, "derived identity check");
    ValidationReport      report;
    FiniteGroupoid const& g  = gg.base();
    GroupTable const&     G  = gg.arrow_group();
    GroupTable const&     G0 = gg.object_group();
    std::size_t const     n  = g.num_arrows();
    std::size_t const     m  = g.num_objects();
    std::size_t const     e  = G.identity();
    std::size_t const     e0 = G0.identity();
    auto const&           A  = g.arrows();
    auto const&           O  = g.objects();

    // Homomorphism properties and the interchange law.
    {
      std::vector<std::size_t> src(n), tgt(n), inv(n), unit(m);
      for (std::size_t x = 0; x < n; ++x) {
        src[x] = g.source(x);
        tgt[x] = g.target(x);
        inv[x] = g.inverse(x);
      }
      for (std::size_t u = 0; u < m; ++u) {
        unit[u] = g.unit(u);
      }
      report.merge(check_group_hom(src, G, G0, "source-hom"));
      report.merge(check_group_hom(tgt, G, G0, "target-hom"));
      report.merge(check_group_hom(inv, G, G, "inversion-hom"));
      report.merge(check_group_hom(unit, G0, G, "unit-hom"));
      report.merge(check_interchange(gg));
    }

    // The group inverse is compatible with the groupoid product.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t xb = G.inverse(x);
        std::size_t yb = G.inverse(y);
        if (!g.composable(xb, yb)) {
          report.add("group-inverse-preserves-product", {A[x], A[y]},
                     "(inv(x), inv(y)) is not composable");
        } else if (G.inverse(g.product_entry(x, y)) != g.product_entry(xb, yb)) {
          report.add("group-inverse-preserves-product", {A[x], A[y]},
                     "inv(x.y) differs from inv(x).inv(y)");
        }
      }
    }

    // Source and target are epimorphisms, unit a monomorphism, inversion an
    // automorphism; each fixes identities and commutes with group inverses.
    {
      std::vector<bool> hit_src(m, false), hit_tgt(m, false), hit_inv(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        hit_src[g.source(x)]  = true;
        hit_tgt[g.target(x)]  = true;
        hit_inv[g.inverse(x)] = true;
      }
      for (std::size_t u = 0; u < m; ++u) {
        if (!hit_src[u]) {
          report.add("source-epimorphism", {O[u]}, "object not in the image of source");
        }
        if (!hit_tgt[u]) {
          report.add("target-epimorphism", {O[u]}, "object not in the image of target");
        }
        for (std::size_t v = u + 1; v < m; ++v) {
          if (g.unit(u) == g.unit(v)) {
            report.add("unit-monomorphism", {O[u], O[v]}, "unit map is not injective");
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!hit_inv[x]) {
          report.add("inversion-automorphism", {A[x]}, "arrow not in the image of inversion");
        }
      }
    }
    if (g.source(e) != e0) {
      report.add("source-identity", {A[e]}, "source(e) differs from e0");
    }
    if (g.target(e) != e0) {
      report.add("target-identity", {A[e]}, "target(e) differs from e0");
    }
    if (g.unit(e0) != e) {
      report.add("unit-identity", {O[e0]}, "unit(e0) differs from e");
    }
    if (g.inverse(e) != e) {
      report.add("inversion-identity", {A[e]}, "e^-1 differs from e");
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t xb = G.inverse(x);
      if (g.source(xb) != G0.inverse(g.source(x))) {
        report.add("source-group-inverse", {A[x]}, "source(inv(x)) differs from inv(source(x))");
      }
      if (g.target(xb) != G0.inverse(g.target(x))) {
        report.add("target-group-inverse", {A[x]}, "target(inv(x)) differs from inv(target(x))");
      }
      if (g.inverse(xb) != G.inverse(g.inverse(x))) {
        report.add("inversion-group-inverse", {A[x]}, "(inv(x))^-1 differs from inv(x^-1)");
      }
      if (G.inverse(xb) != x) {
        report.add("group-inverse-involution", {A[x]}, "inv(inv(x)) differs from x");
      }
    }
    for (std::size_t u = 0; u < m; ++u) {
      if (g.unit(G0.inverse(u)) != G.inverse(g.unit(u))) {
        report.add("unit-group-inverse", {O[u]}, "unit(inv(u)) differs from inv(unit(u))");
      }
    }

    // Group inverse reverses the operation; it is a homomorphism exactly
    // when the groups commute.
    bool const commutative = is_commutative(G) && is_commutative(G0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = G.op(x, y);
        if (G.inverse(xy) != G.op(G.inverse(y), G.inverse(x))) {
          report.add("group-inverse-antihom", {A[x], A[y]}, "inv(x+y) differs from inv(y)+inv(x)");
        }
        if (commutative && G.inverse(xy) != G.op(G.inverse(x), G.inverse(y))) {
          report.add("group-inverse-hom", {A[x], A[y]}, "inv(x+y) differs from inv(x)+inv(y)");
        }
      }
    }
    if (!commutative) {
      report.note("group-inverse-hom", "not-applicable",
                  "arrow or object group is not commutative");
    }

    // The group identity acts as a unit on the fibres over e0.
    auto const src_fiber = fiber_indices(g, Side::source, e0);
    auto const tgt_fiber = fiber_indices(g, Side::target, e0);
    for (auto y : src_fiber) {
      if (!g.composable(e, y) || g.product_entry(e, y) != y) {
        report.add("identity-left-unit", {A[y]}, "e.y differs from y");
      }
    }
    for (auto x : tgt_fiber) {
      if (!g.composable(x, e) || g.product_entry(x, e) != x) {
        report.add("identity-right-unit", {A[x]}, "x.e differs from x");
      }
    }

    // Translating either factor of a product by a fibre element over e0.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t xy = g.product_entry(x, y);
        for (auto t : src_fiber) {
          std::size_t yt = G.op(y, t);
          if (!g.composable(x, yt)) {
            report.add("right-translation", {A[x], A[y], A[t]}, "(x, y+t) is not composable");
          } else if (g.product_entry(x, yt) != G.op(xy, t)) {
            report.add("right-translation", {A[x], A[y], A[t]}, "x.(y+t) differs from x.y+t");
          }
        }
        for (auto z : tgt_fiber) {
          std::size_t xz = G.op(x, z);
          if (!g.composable(xz, y)) {
            report.add("left-translation", {A[x], A[y], A[z]}, "(x+z, y) is not composable");
          } else if (g.product_entry(xz, y) != G.op(xy, z)) {
            report.add("left-translation", {A[x], A[y], A[z]}, "(x+z).y differs from x.y+z");
          }
        }
      }
    }

    // On the isotropy group at e0 the groupoid product is the group operation.
    auto const iso = isotropy_indices(g, e0);
    for (auto x : iso) {
      for (auto y : iso) {
        if (g.product_entry(x, y) != G.op(x, y)) {
          report.add("isotropy-product-is-group-op", {A[x], A[y]}, "x.y differs from x+y");
        }
      }
      if (g.inverse(x) != G.inverse(x)) {
        report.add("isotropy-inverse-is-group-inverse", {A[x]}, "x^-1 differs from inv(x)");
      }
    }
    return report;
  }

  ValidationReport reconstruct_from_group(GroupGroupoid const& gg) {
    require_valid_parts(gg, "reconstruction");
    ValidationReport      report;
    FiniteGroupoid const& g = gg.base();
    GroupTable const&     G = gg.arrow_group();
    auto const&           A = g.arrows();
    auto                  sum = [&](std::size_t a, std::size_t b) {
      return a == npos || b == npos ? npos : G.op(a, b);
    };

    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      std::size_t shift = G.inverse(g.unit(g.target(x)));
      for (std::size_t y = 0; y < g.num_arrows(); ++y) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t computed = sum(sum(x, shift), y);
        if (computed != g.product_entry(x, y)) {
          report.add("product-from-group-op", {A[x], A[y]},
                     "x + inv(unit(target(x))) + y differs from the stored x.y");
        }
      }
      std::size_t computed = sum(sum(g.unit(g.source(x)), G.inverse(x)), g.unit(g.target(x)));
      if (computed != g.inverse(x)) {
        report.add("inverse-from-group-op", {A[x]},
                   "unit(source(x)) + inv(x) + unit(target(x)) differs from the stored x^-1");
      }
    }
    return report;
  }

}  // namespace grpd
