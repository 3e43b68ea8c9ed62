#include "grpd/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "grpd/error.hpp"

namespace grpd {

  std::string pair_token(std::string_view left, std::string_view right) {
    std::string out;
    out.reserve(left.size() + right.size() + 3);
    out += '(';
    out += left;
    out += '|';
    out += right;
    out += ')';
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  void GroupTable::build_index() {
    index_.clear();
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second) {
        throw MalformedTable("duplicate group element '" + elements_[i] + "'");
      }
    }
  }

  GroupTable::GroupTable(GroupTables const& tables) {
    elements_ = tables.elements;
    if (elements_.empty()) {
      throw MalformedTable("group has no elements");
    }
    build_index();
    std::size_t const n = elements_.size();
    op_.assign(n * n, npos);
    for (auto const& [key, value] : tables.op) {
      std::size_t a = index_of(key.first);
      std::size_t b = index_of(key.second);
      op_[a * n + b] = index_of(value);
    }
    identity_ = index_of(tables.identity);
    inverse_.assign(n, npos);
    for (auto const& [key, value] : tables.inverse) {
      inverse_[index_of(key)] = index_of(value);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (inverse_[i] == npos) {
        throw MalformedTable("no inverse given for '" + elements_[i] + "'");
      }
    }
  }

  GroupTable GroupTable::from_indices(std::vector<std::string> elements,
                                      std::vector<std::size_t> op,
                                      std::size_t              identity,
                                      std::vector<std::size_t> inverse) {
    GroupTable t;
    std::size_t const n = elements.size();
    if (n == 0) {
      throw MalformedTable("group has no elements");
    }
    if (op.size() != n * n || inverse.size() != n || identity >= n) {
      throw MalformedTable("group table dimensions do not match element count");
    }
    for (auto v : op) {
      if (v != npos && v >= n) {
        throw MalformedTable("group table entry out of range");
      }
    }
    for (auto v : inverse) {
      if (v >= n) {
        throw MalformedTable("inverse out of range");
      }
    }
    t.elements_ = std::move(elements);
    t.op_       = std::move(op);
    t.identity_ = identity;
    t.inverse_  = std::move(inverse);
    t.build_index();
    return t;
  }

  std::optional<std::size_t> GroupTable::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t GroupTable::index_of(std::string_view token) const {
    auto i = find(token);
    if (!i) {
      throw MalformedTable("unknown group element '" + std::string(token) + "'");
    }
    return *i;
  }

  GroupTable GroupTable::reindexed(std::span<std::string const> order) const {
    std::size_t const n = order.size();
    if (n != elements_.size()) {
      throw MalformedTable("reindexing with a different element count");
    }
    std::vector<std::size_t> old_of_new(n);
    std::vector<std::size_t> new_of_old(n, npos);
    for (std::size_t i = 0; i < n; ++i) {
      auto old = find(order[i]);
      if (!old || new_of_old[*old] != npos) {
        throw MalformedTable("reindexing order is not a permutation of the elements");
      }
      old_of_new[i]    = *old;
      new_of_old[*old] = i;
    }
    auto map_new = [&](std::size_t old) { return old == npos ? npos : new_of_old[old]; };
    std::vector<std::size_t> op(n * n);
    std::vector<std::size_t> inverse(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        op[a * n + b] = map_new(this->op(old_of_new[a], old_of_new[b]));
      }
      inverse[a] = map_new(inverse_[old_of_new[a]]);
    }
    return from_indices({order.begin(), order.end()}, std::move(op), new_of_old[identity_],
                        std::move(inverse));
  }

  GroupTables GroupTable::tables() const {
    GroupTables out;
    out.elements = elements_;
    std::size_t const n = elements_.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto c = op(a, b);
        if (c != npos) {
          out.op.emplace(TokenPair{elements_[a], elements_[b]}, elements_[c]);
        }
      }
      out.inverse.emplace(elements_[a], elements_[inverse_[a]]);
    }
    out.identity = elements_[identity_];
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  ValidationReport validate_group(GroupTable const& t) {
    ValidationReport  report;
    std::size_t const n  = t.order();
    auto const&       el = t.elements();

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t.op(a, b) == npos) {
          report.add("closure", {el[a], el[b]}, "product is not defined within the element set");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = t.op(a, b);
        if (ab == npos) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t bc = t.op(b, c);
          if (bc == npos) {
            continue;
          }
          std::size_t lhs = t.op(ab, c);
          std::size_t rhs = t.op(a, bc);
          if (lhs != rhs) {
            report.add("associativity", {el[a], el[b], el[c]},
                       "(a+b)+c differs from a+(b+c)");
          }
        }
      }
    }
    std::size_t const e = t.identity();
    for (std::size_t a = 0; a < n; ++a) {
      if (t.op(e, a) != a) {
        report.add("left-identity", {el[a]}, "identity+a differs from a");
      }
      if (t.op(a, e) != a) {
        report.add("right-identity", {el[a]}, "a+identity differs from a");
      }
      std::size_t inv = t.inverse(a);
      if (t.op(inv, a) != e) {
        report.add("left-inverse", {el[a]}, "inverse(a)+a differs from the identity");
      }
      if (t.op(a, inv) != e) {
        report.add("right-inverse", {el[a]}, "a+inverse(a) differs from the identity");
      }
    }
    return report;
  }

  std::optional<std::pair<std::size_t, std::size_t>> non_commuting_pair(GroupTable const& t) {
    std::size_t const n = t.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (t.op(a, b) != t.op(b, a)) {
          return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  bool is_commutative(GroupTable const& t) {
    return !non_commuting_pair(t).has_value();
  }

  ValidationReport check_group_hom(std::span<std::size_t const> f,
                                   GroupTable const&            from,
                                   GroupTable const&            to,
                                   std::string const&           rule) {
    if (f.size() != from.order()) {
      throw DomainMismatch("map is not total on the source group");
    }
    for (auto v : f) {
      if (v >= to.order()) {
        throw DomainMismatch("map image lies outside the target group");
      }
    }
    ValidationReport  report;
    std::size_t const n = from.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = from.op(a, b);
        if (ab == npos) {
          report.add(rule, {from.element(a), from.element(b)}, "source product undefined");
          continue;
        }
        if (f[ab] != to.op(f[a], f[b])) {
          report.add(rule, {from.element(a), from.element(b)}, "f(a+b) differs from f(a)+f(b)");
        }
      }
    }
    return report;
  }

  bool is_group_hom(std::span<std::size_t const> f, GroupTable const& from, GroupTable const& to) {
    return check_group_hom(f, from, to).valid();
  }

  bool is_group_hom(std::map<std::string, std::string> const& f,
                    GroupTable const&                         from,
                    GroupTable const&                         to) {
    std::vector<std::size_t> indices(from.order(), npos);
    for (auto const& [key, value] : f) {
      auto a = from.find(key);
      auto b = to.find(value);
      if (!a || !b) {
        throw DomainMismatch("map mentions '" + key + "' -> '" + value
                             + "' outside the given groups");
      }
      indices[*a] = *b;
    }
    if (std::find(indices.begin(), indices.end(), npos) != indices.end()) {
      throw DomainMismatch("map is not total on the source group");
    }
    return is_group_hom(indices, from, to);
  }

  ValidationReport check_subgroup(GroupTable const&            t,
                                  std::span<std::size_t const> subset,
                                  std::string const&           prefix) {
    ValidationReport report;
    if (subset.empty()) {
      report.add(prefix + "-nonempty", {}, "subset is empty");
      return report;
    }
    std::vector<bool> member(t.order(), false);
    for (auto i : subset) {
      member.at(i) = true;
    }
    if (!member[t.identity()]) {
      report.add(prefix + "-identity", {t.element(t.identity())}, "identity is not in the subset");
    }
    for (auto a : subset) {
      for (auto b : subset) {
        std::size_t ab = t.op(a, b);
        if (ab == npos || !member[ab]) {
          report.add(prefix + "-op-closed", {t.element(a), t.element(b)},
                     "a+b leaves the subset");
        }
      }
      if (!member[t.inverse(a)]) {
        report.add(prefix + "-inverse-closed", {t.element(a)}, "inverse leaves the subset");
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<bool> generated_by(GroupTable const& t, std::vector<std::size_t> const& gens) {
      std::vector<bool>        seen(t.order(), false);
      std::vector<std::size_t> frontier{t.identity()};
      seen[t.identity()] = true;
      while (!frontier.empty()) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        for (auto g : gens) {
          std::size_t y = t.op(x, g);
          if (y != npos && !seen[y]) {
            seen[y] = true;
            frontier.push_back(y);
          }
        }
      }
      return seen;
    }

    std::size_t element_order(GroupTable const& t, std::size_t x) {
      std::size_t k = 1;
      std::size_t y = x;
      while (y != t.identity()) {
        y = t.op(y, x);
        if (y == npos || ++k > t.order()) {
          return npos;
        }
      }
      return k;
    }

    // Extends a generator assignment to a map by walking words; npos-free
    // result only if the assignment is consistent.
    std::optional<std::vector<std::size_t>> extend(GroupTable const&               a,
                                                   GroupTable const&               b,
                                                   std::vector<std::size_t> const& gens,
                                                   std::vector<std::size_t> const& images) {
      std::vector<std::size_t> f(a.order(), npos);
      f[a.identity()] = b.identity();
      std::vector<std::size_t> frontier{a.identity()};
      while (!frontier.empty()) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          std::size_t y  = a.op(x, gens[k]);
          std::size_t fy = b.op(f[x], images[k]);
          if (y == npos || fy == npos) {
            return std::nullopt;
          }
          if (f[y] == npos) {
            f[y] = fy;
            frontier.push_back(y);
          } else if (f[y] != fy) {
            return std::nullopt;
          }
        }
      }
      return f;
    }

  }  // namespace

  std::optional<std::vector<std::size_t>> find_isomorphism(GroupTable const& a, GroupTable const& b) {
    if (a.order() != b.order()) {
      return std::nullopt;
    }
    std::vector<std::size_t> gens;
    std::vector<bool>        covered = generated_by(a, gens);
    for (std::size_t x = 0; x < a.order(); ++x) {
      if (!covered[x]) {
        gens.push_back(x);
        covered = generated_by(a, gens);
      }
    }
    std::vector<std::vector<std::size_t>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t ord = element_order(a, gens[k]);
      for (std::size_t y = 0; y < b.order(); ++y) {
        if (element_order(b, y) == ord) {
          candidates[k].push_back(y);
        }
      }
      if (candidates[k].empty()) {
        return std::nullopt;
      }
    }

    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<std::size_t> images(gens.size());
    while (true) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        images[k] = candidates[k][choice[k]];
      }
      if (auto f = extend(a, b, gens, images)) {
        std::vector<bool> hit(b.order(), false);
        bool              bijective = true;
        for (auto v : *f) {
          if (v == npos || hit[v]) {
            bijective = false;
            break;
          }
          hit[v] = true;
        }
        if (bijective && is_group_hom(*f, a, b)) {
          return f;
        }
      }
      std::size_t k = 0;
      while (k < gens.size() && ++choice[k] == candidates[k].size()) {
        choice[k] = 0;
        ++k;
      }
      if (k == gens.size()) {
        return std::nullopt;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  GroupTable cyclic_group(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("cyclic group of order 0");
    }
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < n; ++i) {
      elements.push_back(std::to_string(i));
    }
    std::vector<std::size_t> op(n * n);
    std::vector<std::size_t> inverse(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        op[a * n + b] = (a + b) % n;
      }
      inverse[a] = (n - a) % n;
    }
    return GroupTable::from_indices(std::move(elements), std::move(op), 0, std::move(inverse));
  }

  GroupTable symmetric_group(std::size_t n) {
    if (n == 0 || n > 6) {
      throw InvalidInput("symmetric group degree must be between 1 and 6");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::string>                        elements;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index.emplace(perms[i], i);
      std::string token;
      for (auto v : perms[i]) {
        token += static_cast<char>('0' + v);
      }
      elements.push_back(std::move(token));
    }
    std::size_t const        m = perms.size();
    std::vector<std::size_t> op(m * m);
    std::vector<std::size_t> inverse(m);
    std::vector<std::size_t> r(n);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        // apply a, then b
        for (std::size_t i = 0; i < n; ++i) {
          r[i] = perms[b][perms[a][i]];
        }
        op[a * m + b] = index.at(r);
      }
      for (std::size_t i = 0; i < n; ++i) {
        r[perms[a][i]] = i;
      }
      inverse[a] = index.at(r);
    }
    return GroupTable::from_indices(std::move(elements), std::move(op), 0, std::move(inverse));
  }

  GroupTable direct_product_groups(GroupTable const& a, GroupTable const& b) {
    std::size_t const        na = a.order();
    std::size_t const        nb = b.order();
    std::vector<std::string> elements;
    elements.reserve(na * nb);
    for (auto const& x : a.elements()) {
      for (auto const& y : b.elements()) {
        elements.push_back(pair_token(x, y));
      }
    }
    std::size_t const        n = na * nb;
    std::vector<std::size_t> op(n * n, npos);
    std::vector<std::size_t> inverse(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t l = a.op(x / nb, y / nb);
        std::size_t r = b.op(x % nb, y % nb);
        if (l != npos && r != npos) {
          op[x * n + y] = l * nb + r;
        }
      }
      inverse[x] = a.inverse(x / nb) * nb + b.inverse(x % nb);
    }
    return GroupTable::from_indices(std::move(elements), std::move(op),
                                    a.identity() * nb + b.identity(), std::move(inverse));
  }

  GroupTable named_group(std::string_view spec) {
    std::optional<GroupTable> result;
    std::size_t               start = 0;
    while (start <= spec.size()) {
      std::size_t      end  = spec.find('x', start);
      std::string_view part = spec.substr(start, end == std::string_view::npos ? spec.npos : end - start);
      if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'S')) {
        throw InvalidInput("unknown group '" + std::string(spec) + "' (expected e.g. Z3, S3, Z2xZ2)");
      }
      std::size_t n    = 0;
      auto [ptr, ec]   = std::from_chars(part.data() + 1, part.data() + part.size(), n);
      if (ec != std::errc{} || ptr != part.data() + part.size() || n == 0) {
        throw InvalidInput("bad group order in '" + std::string(part) + "'");
      }
      GroupTable g = part[0] == 'Z' ? cyclic_group(n) : symmetric_group(n);
      result       = result ? direct_product_groups(*result, g) : std::move(g);
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return std::move(*result);
  }

}  // namespace grpd
