#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace grpd {

  using Witness = std::vector<std::string>;

  struct Violation {
    std::string rule;
    Witness     witness;
    std::string message;

    auto operator<=>(Violation const&) const = default;
  };

  // Informational entries that do not affect validity: checks that were
  // skipped, not applicable, or downgraded to warnings.
  struct Note {
    std::string rule;
    std::string status;
    std::string message;

    auto operator<=>(Note const&) const = default;
  };

  // Ordered collection of violations. Ordering is by rule id, then witness,
  // then message, independent of insertion order.
  class ValidationReport {
   public:
    bool valid() const noexcept { return violations_.empty(); }

    std::set<Violation> const& violations() const noexcept { return violations_; }
    std::set<Note> const&      notes() const noexcept { return notes_; }

    void add(std::string rule, Witness witness, std::string message);
    void note(std::string rule, std::string status, std::string message);

    // Copies every entry of `other`, prefixing rule ids with `prefix`.
    void merge(ValidationReport const& other, std::string_view prefix = {});

    bool has_rule(std::string_view rule) const;
    bool has_violation(std::string_view rule, Witness const& witness) const;
    bool has_note(std::string_view rule, std::string_view status) const;

    friend bool operator==(ValidationReport const&, ValidationReport const&) = default;

   private:
    std::set<Violation> violations_;
    std::set<Note>      notes_;
  };

}  // namespace grpd
