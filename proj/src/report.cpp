#include "grpd/report.hpp"

#include <algorithm>

namespace grpd {

  void ValidationReport::add(std::string rule, Witness witness, std::string message) {
    violations_.insert(Violation{std::move(rule), std::move(witness), std::move(message)});
  }

  void ValidationReport::note(std::string rule, std::string status, std::string message) {
    notes_.insert(Note{std::move(rule), std::move(status), std::move(message)});
  }

  void ValidationReport::merge(ValidationReport const& other, std::string_view prefix) {
    for (auto const& v : other.violations_) {
      add(std::string(prefix) + v.rule, v.witness, v.message);
    }
    for (auto const& n : other.notes_) {
      note(std::string(prefix) + n.rule, n.status, n.message);
    }
  }

  bool ValidationReport::has_rule(std::string_view rule) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](Violation const& v) { return v.rule == rule; });
  }

  bool ValidationReport::has_violation(std::string_view rule, Witness const& witness) const {
    return std::any_of(violations_.begin(), violations_.end(), [&](Violation const& v) {
      return v.rule == rule && v.witness == witness;
    });
  }

  bool ValidationReport::has_note(std::string_view rule, std::string_view status) const {
    return std::any_of(notes_.begin(), notes_.end(), [&](Note const& n) {
      return n.rule == rule && n.status == status;
    });
  }

}  // namespace grpd
