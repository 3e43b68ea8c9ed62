#include "grpd/substructures.hpp"

#include <vector>

#include "grpd/constructions.hpp"
#include "grpd/error.hpp"

namespace grpd {

  namespace {

    std::vector<std::size_t> arrow_indices(FiniteGroupoid const& g, std::set<std::string> const& s) {
      std::vector<std::size_t> out;
      for (auto const& token : s) {
        auto x = g.find_arrow(token);
        if (!x) {
          throw NotSubset("'" + token + "' is not an arrow of the groupoid");
        }
        out.push_back(*x);
      }
      return out;
    }

    std::vector<std::size_t> object_indices(FiniteGroupoid const& g, std::set<std::string> const& s) {
      std::vector<std::size_t> out;
      for (auto const& token : s) {
        auto u = g.find_object(token);
        if (!u) {
          throw NotSubset("'" + token + "' is not an object of the groupoid");
        }
        out.push_back(*u);
      }
      return out;
    }

    std::set<std::string> tokens(FiniteGroupoid const& g, std::vector<std::size_t> const& xs) {
      std::set<std::string> out;
      for (auto x : xs) {
        out.insert(g.arrow(x));
      }
      return out;
    }

  }  // namespace

  ValidationReport check_subgroupoid(FiniteGroupoid const& g, SubStructure const& s) {
    ValidationReport report;
    auto const       H  = arrow_indices(g, s.arrows);
    auto const       H0 = object_indices(g, s.objects);
    if (H.empty()) {
      report.add("nonempty-arrows", {}, "H is empty");
    }
    if (H0.empty()) {
      report.add("nonempty-objects", {}, "H0 is empty");
    }

    std::vector<bool> in_h(g.num_arrows(), false);
    std::vector<bool> in_h0(g.num_objects(), false);
    for (auto x : H) {
      in_h[x] = true;
    }
    for (auto u : H0) {
      in_h0[u] = true;
    }

    // source(H) = H0 and target(H) = H0
    std::vector<bool> src_hit(g.num_objects(), false);
    std::vector<bool> tgt_hit(g.num_objects(), false);
    for (auto x : H) {
      src_hit[g.source(x)] = true;
      tgt_hit[g.target(x)] = true;
      if (!in_h0[g.source(x)]) {
        report.add("source-image", {g.arrow(x)}, "source lies outside H0");
      }
      if (!in_h0[g.target(x)]) {
        report.add("target-image", {g.arrow(x)}, "target lies outside H0");
      }
    }
    for (auto u : H0) {
      if (!src_hit[u]) {
        report.add("source-image", {g.object(u)}, "object of H0 is not the source of any arrow of H");
      }
      if (!tgt_hit[u]) {
        report.add("target-image", {g.object(u)}, "object of H0 is not the target of any arrow of H");
      }
    }

    for (auto x : H) {
      for (auto y : H) {
        if (!g.composable(x, y)) {
          continue;
        }
        std::size_t xy = g.product_entry(x, y);
        if (xy == npos || !in_h[xy]) {
          report.add("closed-product", {g.arrow(x), g.arrow(y)}, "x.y lies outside H");
        }
      }
      if (!in_h[g.inverse(x)]) {
        report.add("closed-inverse", {g.arrow(x)}, "x^-1 lies outside H");
      }
    }
    return report;
  }

  ValidationReport check_group_subgroupoid(GroupGroupoid const& gg, SubStructure const& s) {
    ValidationReport report = check_subgroupoid(gg.base(), s);
    report.merge(check_subgroup(gg.arrow_group(), arrow_indices(gg.base(), s.arrows), "arrow-subgroup"));
    report.merge(
        check_subgroup(gg.object_group(), object_indices(gg.base(), s.objects), "object-subgroup"));
    return report;
  }

  SubStructure isotropy_bundle(GroupGroupoid const& gg) {
    FiniteGroupoid const& g = gg.base();
    SubStructure          out;
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      if (g.source(x) == g.target(x)) {
        out.arrows.insert(g.arrow(x));
      }
    }
    out.objects = {g.objects().begin(), g.objects().end()};
    if (!check_group_subgroupoid(gg, out).valid()) {
      throw InternalCheckFailed("isotropy bundle is not a group-subgroupoid");
    }
    return out;
  }

  UnitFibers unit_fiber_subgroups(GroupGroupoid const& gg) {
    FiniteGroupoid const& g  = gg.base();
    GroupTable const&     G  = gg.arrow_group();
    std::size_t const     e0 = gg.object_group().identity();

    auto const src = fiber_indices(g, Side::source, e0);
    auto const tgt = fiber_indices(g, Side::target, e0);
    auto const iso = isotropy_indices(g, e0);

    ValidationReport report;
    report.merge(check_subgroup(G, src, "source-fiber"));
    report.merge(check_subgroup(G, tgt, "target-fiber"));

    UnitFibers out{tokens(g, src), tokens(g, tgt), tokens(g, iso)};
    report.merge(check_group_subgroupoid(gg, SubStructure{out.isotropy, {g.object(e0)}}),
                 "isotropy.");
    for (auto x : iso) {
      for (auto y : iso) {
        if (g.product_entry(x, y) != G.op(x, y)) {
          report.add("isotropy-product-is-group-op", {g.arrow(x), g.arrow(y)}, "x.y differs from x+y");
        }
      }
      if (g.inverse(x) != G.inverse(x)) {
        report.add("isotropy-inverse-is-group-inverse", {g.arrow(x)}, "x^-1 differs from inv(x)");
      }
    }
    if (!report.valid()) {
      auto const& v = *report.violations().begin();
      throw InternalCheckFailed("fibres over the object identity fail " + v.rule + ": " + v.message);
    }
    return out;
  }

  ValidationReport validate_gg_morphism(Morphism const& m, GroupGroupoid const& a, GroupGroupoid const& b) {
    if (!(m.source() == a.base()) || !(m.target() == b.base())) {
      throw DomainMismatch("morphism does not run between the given group-groupoids");
    }
    ValidationReport report = validate_morphism(m);
    report.merge(check_group_hom(m.arrow_map(), a.arrow_group(), b.arrow_group(), "arrow-hom"));
    report.merge(check_group_hom(m.object_map(), a.object_group(), b.object_group(), "object-hom"));
    return report;
  }

  AnchorMorphism anchor_morphism(GroupGroupoid const& gg) {
    FiniteGroupoid const& g      = gg.base();
    GroupGroupoid         target = group_pair_groupoid(gg.object_group());
    std::size_t const     m      = g.num_objects();

    // pair_groupoid places (u|v) at u * m + v, objects in object-group order,
    // which is the base object order.
    std::vector<std::size_t> f(g.num_arrows());
    std::vector<std::size_t> f0(m);
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      f[x] = g.source(x) * m + g.target(x);
    }
    for (std::size_t u = 0; u < m; ++u) {
      f0[u] = u;
    }
    Morphism map(gg.base_ptr(), target.base_ptr(), std::move(f), std::move(f0));
    auto     report = validate_gg_morphism(map, gg, target);
    if (!report.valid()) {
      auto const& v = *report.violations().begin();
      throw InternalCheckFailed("anchor map fails " + v.rule + ": " + v.message);
    }
    return AnchorMorphism{std::move(target), std::move(map)};
  }

}  // namespace grpd
