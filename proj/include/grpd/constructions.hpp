#pragma once

#include <string>
#include <vector>

#include "grpd/group.hpp"
#include "grpd/group_groupoid.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/morphism.hpp"

namespace grpd {

  // Every constructor below validates its result before returning and throws
  // InternalCheckFailed if that fails. Composite identifiers are written
  // "(left|right)".

  // Arrows = objects; every structure map is the identity and u.u = u.
  // Throws EmptySet.
  FiniteGroupoid null_groupoid(std::vector<std::string> const& objects);

  // One object (the identity token), arrows = group elements, product = group
  // operation. Throws InvalidGroup.
  FiniteGroupoid group_as_single_unit_groupoid(GroupTable const& t);

  // Arrows (x|y) for x, y in `objects`, with (x|y).(y|z) = (x|z). Arrow
  // (x_i|x_j) has index i * |objects| + j. Throws EmptySet.
  FiniteGroupoid pair_groupoid(std::vector<std::string> const& objects);

  // Componentwise structure on G x K over G0 x K0. Arrow (g|k) has index
  // g * |K| + k, object (u|v) has index u * |K0| + v. Throws InvalidInput
  // unless both factors are valid groupoids.
  FiniteGroupoid direct_product_groupoids(FiniteGroupoid const& g, FiniteGroupoid const& k);

  // Same layout as direct_product_groupoids without validating the factors.
  FiniteGroupoid direct_product_groupoids_unchecked(FiniteGroupoid const& g,
                                                    FiniteGroupoid const& k);

  // Null groupoid on the elements of t, with t on both arrows and objects.
  GroupGroupoid null_group_groupoid(GroupTable const& t);

  // Single-object groupoid with m = group operation; requires t commutative.
  // Throws NonCommutativeGroup carrying a non-commuting pair.
  GroupGroupoid single_unit_group_groupoid(GroupTable const& t);

  // The same overlay without the commutativity requirement or validation.
  // For non-commutative t it is a groupoid with a group on its arrows but
  // not a group-groupoid.
  GroupGroupoid single_unit_overlay(GroupTable const& t);

  // Pair groupoid on the elements of t, arrow group componentwise, object
  // group t.
  GroupGroupoid group_pair_groupoid(GroupTable const& t);

  struct GroupGroupoidProduct {
    GroupGroupoid product;
    Morphism      first_projection;
    Morphism      second_projection;
  };

  // Throws InvalidInput unless both factors pass check_group_groupoid.
  GroupGroupoidProduct direct_product_group_groupoids(GroupGroupoid const& a,
                                                      GroupGroupoid const& b);

}  // namespace grpd
