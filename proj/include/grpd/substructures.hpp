#pragma once

#include <set>
#include <string>

#include "grpd/group_groupoid.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/morphism.hpp"
#include "grpd/report.hpp"

namespace grpd {

  // Candidate sub-structure (H, H0) of a groupoid, given by tokens.
  struct SubStructure {
    std::set<std::string> arrows;
    std::set<std::string> objects;

    friend bool operator==(SubStructure const&, SubStructure const&) = default;
  };

  // Validates a candidate; never completes closures. Rules: nonempty-arrows,
  // nonempty-objects, source-image, target-image, closed-product,
  // closed-inverse. Throws NotSubset for tokens outside g.
  ValidationReport check_subgroupoid(FiniteGroupoid const& g, SubStructure const& s);

  // check_subgroupoid plus subgroup tests on H (arrow-subgroup-*) and H0
  // (object-subgroup-*).
  ValidationReport check_group_subgroupoid(GroupGroupoid const& gg, SubStructure const& s);

  // Arrows whose source equals their target, over all objects. Verified to be
  // a group-subgroupoid before it is returned.
  SubStructure isotropy_bundle(GroupGroupoid const& gg);

  struct UnitFibers {
    std::set<std::string> source_fiber;  // arrows starting at e0
    std::set<std::string> target_fiber;  // arrows ending at e0
    std::set<std::string> isotropy;      // loops at e0
  };

  // The three fibres over the object identity e0. The first two are verified
  // as subgroups of the arrow group; the loops at e0 as a group-subgroupoid
  // over {e0} on which product and inverse agree with the group operation
  // and group inverse. Throws InternalCheckFailed otherwise.
  UnitFibers unit_fiber_subgroups(GroupGroupoid const& gg);

  // validate_morphism plus arrow-hom and object-hom for the two components.
  // Throws DomainMismatch if m does not run between a.base() and b.base().
  ValidationReport validate_gg_morphism(Morphism const& m, GroupGroupoid const& a, GroupGroupoid const& b);

  struct AnchorMorphism {
    GroupGroupoid target;  // pair groupoid over the object group
    Morphism      map;     // x -> (source(x)|target(x)), identity on objects
  };

  // Verified with validate_gg_morphism before it is returned.
  AnchorMorphism anchor_morphism(GroupGroupoid const& gg);

}  // namespace grpd
