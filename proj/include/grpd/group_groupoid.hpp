#pragma once

#include <memory>

#include "grpd/group.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"

namespace grpd {

  // Token-level description of a groupoid with group structures on its arrows
  // and objects. Group element sets are implied by the arrows and objects.
  struct GroupGroupoidTables {
    GroupoidTables base;
    GroupTables    arrow_group;
    GroupTables    object_group;

    friend bool operator==(GroupGroupoidTables const&, GroupGroupoidTables const&) = default;
  };

  // A finite groupoid plus group tables on its arrow and object sets. Both
  // group tables are stored in the groupoid's index order, so arrow index x
  // and group element index x denote the same token.
  class GroupGroupoid {
   public:
    // Throws MalformedStructure if the group element sets differ from the
    // arrow and object sets.
    GroupGroupoid(FiniteGroupoid base, GroupTable arrow_group, GroupTable object_group);
    explicit GroupGroupoid(GroupGroupoidTables const& tables);

    FiniteGroupoid const&                        base() const noexcept { return *base_; }
    std::shared_ptr<FiniteGroupoid const> const& base_ptr() const noexcept { return base_; }
    GroupTable const& arrow_group() const noexcept { return arrow_group_; }
    GroupTable const& object_group() const noexcept { return object_group_; }

    GroupGroupoidTables tables() const;

   private:
    std::shared_ptr<FiniteGroupoid const> base_;
    GroupTable                            arrow_group_;
    GroupTable                            object_group_;
  };

  // Interchange law on every pair of composable pairs (x,y), (z,t):
  // (x+z, y+t) is composable and (x.y)+(z.t) = (x+z).(y+t).
  ValidationReport check_interchange(GroupGroupoid const& gg);

  // Two independent characterisations of a group-groupoid.
  enum class GroupGroupoidMode {
    // Group operation, identity and group inverse are groupoid morphisms
    // (from G x G, from the one-object null groupoid, and from G itself).
    def31,
    // Source, target, unit and inversion are group homomorphisms and the
    // interchange law holds.
    def32,
    // Run both and flag any disagreement between the verdicts.
    both,
  };

  // Rule ids are prefixed "def31." / "def32."; mode `both` adds a
  // "disagreement" violation if exactly one route fails.
  ValidationReport check_group_groupoid(GroupGroupoid const& gg,
                                        GroupGroupoidMode    mode = GroupGroupoidMode::both);

  // Identities that hold in every group-groupoid, each reported under its own
  // rule id. The commutative-only identity is noted "not-applicable" when
  // either group is non-commutative.
  ValidationReport check_derived_identities(GroupGroupoid const& gg);

  // Recomputes every product as x + inv(unit(target(x))) + y and every
  // inverse as unit(source(x)) + inv(x) + unit(target(x)) using only the
  // group operation and structure maps; compares with the stored tables.
  ValidationReport reconstruct_from_group(GroupGroupoid const& gg);

}  // namespace grpd
