#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordprop {

/// Index of an element inside one particular Group; meaningless across groups.
using Element = std::uint32_t;

/// Hard cap on the order of any group this library will construct.
inline constexpr std::size_t kDefaultOrderCap = 20000;

/// Orders up to this size get exhaustive associativity checks; larger
/// tables are checked on a fixed-seed random sample of triples.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;
inline constexpr std::size_t kAssociativitySamples = 100000;

class GroupError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedTable,
    kNotLatinSquare,
    kNoIdentity,
    kNoInverse,
    kNotAssociative,
    kNotAPermutation,
    kOrderCapExceeded,
    kUnsupportedParams,
    kBadElement,
  };

  GroupError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(GroupError::Kind kind);

/// A finite group stored as its full Cayley table.
///
/// Instances are immutable once constructed and always satisfy the group
/// axioms (see validate()). Element indices run over [0, order()).
class Group {
 public:
  /// Validates `table` and discovers the identity and inverses.
  static Group from_cayley_table(const std::vector<std::vector<Element>>& table,
                                 std::string name);

  /// Closure of permutation generators (image arrays on `points` points).
  /// Element 0 is the identity; elements are numbered in breadth-first
  /// discovery order, generators applied in list order on the right.
  static Group from_permutation_generators(
      std::size_t points, const std::vector<std::vector<std::uint32_t>>& generators,
      std::string name, std::size_t order_cap = kDefaultOrderCap);

  /// Same as from_cayley_table for a row-major `order` x `order` table.
  static Group from_flat_table(std::vector<Element> flat, std::size_t order, std::string name);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  Element identity() const noexcept { return identity_; }

  Element multiply(Element a, Element b) const {
    check(a);
    check(b);
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Element inverse(Element a) const {
    check(a);
    return inverse_[a];
  }

  /// Unchecked row access for hot loops.
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  bool is_abelian() const;
  std::vector<Element> center() const;

  std::vector<std::vector<Element>> table() const;

  Group with_name(std::string name) const;

  friend bool operator==(const Group& lhs, const Group& rhs) {
    return lhs.order_ == rhs.order_ && lhs.table_ == rhs.table_;
  }

 private:
  Group() = default;

  void check(Element a) const {
    if (a >= order_) {
      throw GroupError(GroupError::Kind::kBadElement,
                       "element index " + std::to_string(a) + " out of range for group of order " +
                           std::to_string(order_));
    }
  }

  void validate();

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string name_;
};

/// Componentwise product; pair (a, b) has index a * |h| + b.
Group direct_product(const Group& g, const Group& h, std::size_t order_cap = kDefaultOrderCap);

/// Integers modulo `n` under addition.
Group cyclic_group(std::size_t n, std::string name = {});

/// Closure of invertible `dim` x `dim` matrices over Z/modulus, each given
/// row-major. Same numbering rules as from_permutation_generators.
Group matrix_group_mod(std::size_t dim, std::uint32_t modulus,
                       const std::vector<std::vector<std::uint32_t>>& generators,
                       std::string name, std::size_t order_cap = kDefaultOrderCap);

}  // namespace wordprop
