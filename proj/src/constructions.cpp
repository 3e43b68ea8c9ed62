#include "grpd/constructions.hpp"

#include "grpd/error.hpp"
#include "grpd/substructures.hpp"

namespace grpd {

  namespace {

    FiniteGroupoid checked(FiniteGroupoid g, char const* what) {
      auto report = validate_groupoid(g);
      if (!report.valid()) {
        auto const& v = *report.violations().begin();
        throw InternalCheckFailed(std::string(what) + " fails " + v.rule + ": " + v.message);
      }
      return g;
    }

    GroupGroupoid checked(GroupGroupoid gg, char const* what) {
      auto report = check_group_groupoid(gg, GroupGroupoidMode::both);
      if (!report.valid()) {
        auto const& v = *report.violations().begin();
        throw InternalCheckFailed(std::string(what) + " fails " + v.rule + ": " + v.message);
      }
      return gg;
    }

    void require_group(GroupTable const& t) {
      auto report = validate_group(t);
      if (!report.valid()) {
        auto const& v = *report.violations().begin();
        throw InvalidGroup("not a group: " + v.rule + " fails at " + v.message);
      }
    }

    GroupTable trivial_group(std::string const& token) {
      return GroupTable::from_indices({token}, {0}, 0, {0});
    }

  }  // namespace

  FiniteGroupoid null_groupoid(std::vector<std::string> const& objects) {
    if (objects.empty()) {
      throw EmptySet("null groupoid needs at least one object");
    }
    std::size_t const        n = objects.size();
    std::vector<std::size_t> id(n);
    std::vector<std::size_t> product(n * n, npos);
    for (std::size_t u = 0; u < n; ++u) {
      id[u]               = u;
      product[u * n + u] = u;
    }
    return checked(FiniteGroupoid::from_indices(objects, objects, id, id, id, id, std::move(product)),
                   "null groupoid");
  }

  FiniteGroupoid group_as_single_unit_groupoid(GroupTable const& t) {
    require_group(t);
    std::size_t const        n = t.order();
    std::vector<std::size_t> zeros(n, 0);
    std::vector<std::size_t> inverse(n);
    std::vector<std::size_t> product(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      inverse[a] = t.inverse(a);
      for (std::size_t b = 0; b < n; ++b) {
        product[a * n + b] = t.op(a, b);
      }
    }
    return checked(FiniteGroupoid::from_indices({t.element(t.identity())}, t.elements(), zeros, zeros,
                                                {t.identity()}, std::move(inverse), std::move(product)),
                   "single-unit groupoid");
  }

  FiniteGroupoid pair_groupoid(std::vector<std::string> const& objects) {
    if (objects.empty()) {
      throw EmptySet("pair groupoid needs at least one object");
    }
    std::size_t const        k = objects.size();
    std::size_t const        n = k * k;
    std::vector<std::string> arrows;
    std::vector<std::size_t> source(n), target(n), inverse(n), unit(k);
    std::vector<std::size_t> product(n * n, npos);
    for (std::size_t a = 0; a < k; ++a) {
      unit[a] = a * k + a;
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t x = a * k + b;
        arrows.push_back(pair_token(objects[a], objects[b]));
        source[x]  = a;
        target[x]  = b;
        inverse[x] = b * k + a;
        for (std::size_t c = 0; c < k; ++c) {
          product[x * n + (b * k + c)] = a * k + c;
        }
      }
    }
    return checked(FiniteGroupoid::from_indices(objects, std::move(arrows), std::move(source),
                                                std::move(target), std::move(unit), std::move(inverse),
                                                std::move(product)),
                   "pair groupoid");
  }

  FiniteGroupoid direct_product_groupoids_unchecked(FiniteGroupoid const& g, FiniteGroupoid const& k) {
    std::size_t const ng = g.num_arrows();
    std::size_t const nk = k.num_arrows();
    std::size_t const mg = g.num_objects();
    std::size_t const mk = k.num_objects();
    std::size_t const n  = ng * nk;

    std::vector<std::string> objects;
    std::vector<std::string> arrows;
    for (auto const& u : g.objects()) {
      for (auto const& v : k.objects()) {
        objects.push_back(pair_token(u, v));
      }
    }
    for (auto const& x : g.arrows()) {
      for (auto const& y : k.arrows()) {
        arrows.push_back(pair_token(x, y));
      }
    }
    std::vector<std::size_t> source(n), target(n), inverse(n), unit(mg * mk);
    std::vector<std::size_t> product(n * n, npos);
    for (std::size_t a = 0; a < ng; ++a) {
      for (std::size_t b = 0; b < nk; ++b) {
        std::size_t x = a * nk + b;
        source[x]     = g.source(a) * mk + k.source(b);
        target[x]     = g.target(a) * mk + k.target(b);
        inverse[x]    = g.inverse(a) * nk + k.inverse(b);
      }
    }
    for (std::size_t u = 0; u < mg; ++u) {
      for (std::size_t v = 0; v < mk; ++v) {
        unit[u * mk + v] = g.unit(u) * nk + k.unit(v);
      }
    }
    // Only pairs with both components tabulated get an entry.
    for (std::size_t a1 = 0; a1 < ng; ++a1) {
      for (std::size_t a2 = 0; a2 < ng; ++a2) {
        std::size_t ga = g.product_entry(a1, a2);
        if (ga == npos) {
          continue;
        }
        for (std::size_t b1 = 0; b1 < nk; ++b1) {
          for (std::size_t b2 = 0; b2 < nk; ++b2) {
            std::size_t kb = k.product_entry(b1, b2);
            if (kb != npos) {
              product[(a1 * nk + b1) * n + (a2 * nk + b2)] = ga * nk + kb;
            }
          }
        }
      }
    }
    return FiniteGroupoid::from_indices(std::move(objects), std::move(arrows), std::move(source),
                                        std::move(target), std::move(unit), std::move(inverse),
                                        std::move(product));
  }

  FiniteGroupoid direct_product_groupoids(FiniteGroupoid const& g, FiniteGroupoid const& k) {
    if (!validate_groupoid(g).valid() || !validate_groupoid(k).valid()) {
      throw InvalidInput("direct product needs two valid groupoids");
    }
    return checked(direct_product_groupoids_unchecked(g, k), "direct product");
  }

  GroupGroupoid null_group_groupoid(GroupTable const& t) {
    require_group(t);
    return checked(GroupGroupoid(null_groupoid(t.elements()), t, t), "null group-groupoid");
  }

  GroupGroupoid single_unit_overlay(GroupTable const& t) {
    return GroupGroupoid(group_as_single_unit_groupoid(t), t, trivial_group(t.element(t.identity())));
  }

  GroupGroupoid single_unit_group_groupoid(GroupTable const& t) {
    require_group(t);
    if (auto pair = non_commuting_pair(t)) {
      throw NonCommutativeGroup("group is not commutative: " + t.element(pair->first) + " and "
                                    + t.element(pair->second) + " do not commute",
                                t.element(pair->first), t.element(pair->second));
    }
    return checked(single_unit_overlay(t), "single-unit group-groupoid");
  }

  GroupGroupoid group_pair_groupoid(GroupTable const& t) {
    require_group(t);
    return checked(GroupGroupoid(pair_groupoid(t.elements()), direct_product_groups(t, t), t),
                   "group-pair groupoid");
  }

  GroupGroupoidProduct direct_product_group_groupoids(GroupGroupoid const& a, GroupGroupoid const& b) {
    if (!check_group_groupoid(a, GroupGroupoidMode::def32).valid()
        || !check_group_groupoid(b, GroupGroupoidMode::def32).valid()) {
      throw InvalidInput("direct product needs two group-groupoids");
    }
    GroupGroupoid product = checked(
        GroupGroupoid(direct_product_groupoids(a.base(), b.base()),
                      direct_product_groups(a.arrow_group(), b.arrow_group()),
                      direct_product_groups(a.object_group(), b.object_group())),
        "direct product of group-groupoids");

    std::size_t const        na = a.base().num_arrows(), nb = b.base().num_arrows();
    std::size_t const        ma = a.base().num_objects(), mb = b.base().num_objects();
    std::vector<std::size_t> fa(na * nb), fb(na * nb), f0a(ma * mb), f0b(ma * mb);
    for (std::size_t x = 0; x < na * nb; ++x) {
      fa[x] = x / nb;
      fb[x] = x % nb;
    }
    for (std::size_t u = 0; u < ma * mb; ++u) {
      f0a[u] = u / mb;
      f0b[u] = u % mb;
    }
    Morphism pr_a(product.base_ptr(), a.base_ptr(), std::move(fa), std::move(f0a));
    Morphism pr_b(product.base_ptr(), b.base_ptr(), std::move(fb), std::move(f0b));
    if (!validate_gg_morphism(pr_a, product, a).valid()
        || !validate_gg_morphism(pr_b, product, b).valid()) {
      throw InternalCheckFailed("canonical projections are not group-groupoid morphisms");
    }
    return GroupGroupoidProduct{std::move(product), std::move(pr_a), std::move(pr_b)};
  }

}  // namespace grpd
