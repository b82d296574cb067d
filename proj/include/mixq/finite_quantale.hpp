#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mixq/error.hpp"

namespace mixq {

/// Raw quantale-table document. Row/column order of every matrix follows
/// `elements`; entries of `tensor`/`oplus` are element indices.
struct QuantaleTable {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> tensor;
  std::size_t unit = 0;
  std::size_t dualizing = 0;
  std::optional<std::vector<std::vector<std::size_t>>> oplus;
};

QuantaleTable parse_quantale_table(const nlohmann::json& doc);
nlohmann::json to_json(const QuantaleTable& table);

/// Raised when a table parses but fails one of the structural laws.
class QuantaleLoadError : public DomainError {
 public:
  QuantaleLoadError(std::string law, std::vector<std::string> witness);
  const std::string& law() const { return law_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::string law_;
  std::vector<std::string> witness_;
};

/// A finite star-autonomous quantale given by tables. Joins, meets, star and
/// residuals are derived once at construction; afterwards every operation is
/// a table lookup.
class FiniteQuantale {
 public:
  struct Element {
    std::uint32_t index = 0;
    friend bool operator==(Element, Element) = default;
    friend auto operator<=>(Element, Element) = default;
  };
  using element_type = Element;

  /// Derives all tables, checking only what derivation needs (a lattice
  /// order). Used to inspect deliberately broken tables.
  static FiniteQuantale build_unchecked(QuantaleTable table);

  const QuantaleTable& table() const { return table_; }
  std::size_t size() const { return table_.elements.size(); }
  const std::vector<Element>& elements() const { return elems_; }
  Element element(std::string_view name) const;
  const std::string& name(Element e) const { return table_.elements[e.index]; }

  bool leq(Element a, Element b) const { return table_.leq[a.index][b.index]; }
  bool equal(Element a, Element b) const { return a == b; }
  Element join(Element a, Element b) const { return at(join_, a, b); }
  Element meet(Element a, Element b) const { return at(meet_, a, b); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Element tensor(Element a, Element b) const { return Element{static_cast<std::uint32_t>(table_.tensor[a.index][b.index])}; }
  Element unit() const { return Element{static_cast<std::uint32_t>(table_.unit)}; }
  Element dualizing() const { return Element{static_cast<std::uint32_t>(table_.dualizing)}; }
  /// x★ := x ⊸ 0.
  Element star(Element a) const { return star_[a.index]; }
  /// a ⊸ b = ⋁{x | a ⊗ x ≤ b}, straight from the tensor table.
  Element lres_table(Element a, Element b) const { return at(lres_, a, b); }
  /// b ⟜ a = ⋁{x | x ⊗ a ≤ b}.
  Element rres_table(Element a, Element b) const { return at(rres_, a, b); }
  std::string to_string(Element a) const { return name(a); }

 private:
  using Grid = std::vector<std::vector<Element>>;
  static Element at(const Grid& g, Element a, Element b) { return g[a.index][b.index]; }

  QuantaleTable table_;
  std::vector<Element> elems_;
  Grid join_, meet_, lres_, rres_;
  std::vector<Element> star_;
  Element bottom_, top_;
};

/// Parses and fully validates a table document: lattice, monoid,
/// distributivity, involution, cyclicity, the optional declared oplus table,
/// and finally the exhaustive law suite.
FiniteQuantale load_finite_quantale(const nlohmann::json& doc);
FiniteQuantale load_finite_quantale_file(const std::filesystem::path& path);

/// Structural validation of an already-built quantale; throws QuantaleLoadError.
void validate_finite_quantale(const FiniteQuantale& q);

/// Names accepted by `builtin`: "bool2", "sugihara3".
nlohmann::json builtin_document(std::string_view name);
FiniteQuantale builtin(std::string_view name);

}  // namespace mixq
