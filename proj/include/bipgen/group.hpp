#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bipgen {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASubgroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width bit vector over the elements 0..n-1 of a group, with a cached
/// population count. Doubles as the canonical key of a subgroup carrier.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> elems);

  std::size_t universe() const { return universe_; }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  /// Returns true if x was newly inserted.
  bool insert(Element x);

  std::vector<Element> elements() const;
  std::span<const std::uint64_t> words() const { return words_; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  /// Lexicographic comparison of the ascending element lists.
  bool lex_less(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Group-theoretic properties of a subgroup. The implication chain
/// cyclic => abelian => nilpotent => solvable is enforced by make().
struct PropertyFlags {
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;

  static PropertyFlags make(bool cyclic, bool abelian, bool nilpotent, bool solvable);

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// A finite group as a Cayley table. The identity is always element 0.
class GroupTable {
 public:
  GroupTable(std::string spec, std::size_t order, std::vector<Element> table,
             std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& spec() const { return spec_; }

  /// Exhaustive associativity check for order <= 64, otherwise `samples`
  /// random triples.
  bool check_associative(std::size_t samples = 10000) const;

  ElementSet full_set() const;

 private:
  std::string spec_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// Builds a group from a family specification such as "D:8", "Q:16", "S:4"
/// or "X(Z:2,Z:2)". See README for the grammar.
GroupTable make_group(std::string_view spec, std::size_t cap = kDefaultOrderCap);

/// Order the spec would produce, without building the table.
std::size_t spec_order(std::string_view spec);

/// Smallest subgroup containing the seeds.
ElementSet generate(const GroupTable& g, const ElementSet& seeds);
ElementSet generate(const GroupTable& g, std::span<const Element> gens);

/// Extends an existing subgroup by extra generators. `base` must already be
/// a subgroup generated by `base_gens`.
ElementSet extend(const GroupTable& g, const ElementSet& base,
                  std::span<const Element> base_gens, Element extra);

std::uint32_t element_order(const GroupTable& g, Element x);

bool is_subgroup(const GroupTable& g, const ElementSet& carrier);

PropertyFlags classify(const GroupTable& g, const ElementSet& carrier);

/// Re-indexes a subgroup as a standalone group (identity first, then the
/// remaining elements in ascending order).
GroupTable induced_group(const GroupTable& g, const ElementSet& carrier);

}  // namespace bipgen
