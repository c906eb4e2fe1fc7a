#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordprop/group.hpp"

namespace wordprop {

enum class Family {
  kCyclic,             // n: integers mod n
  kDihedral,           // n >= 3: symmetries of the n-gon, order 2n
  kSymmetric,          // k <= 7
  kAlternating,        // k <= 7
  kQuaternion8,        // no parameters
  kHeisenberg,         // odd prime p: unitriangular 3x3 matrices mod p, order p^3
  kElementaryAbelian,  // prime p, rank k: (Z/p)^k
};

const char* to_string(Family family);
/// Names as printed by to_string ("cyclic", "elementary-abelian", ...).
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family;
  std::vector<std::uint32_t> params;

  /// Order predicted by the family formula; throws on unsupported params.
  std::size_t order() const;
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A catalog member: one family instance or a direct product of several.
struct CatalogEntry {
  std::string name;
  std::vector<FamilySpec> factors;

  std::size_t order() const;
};

Group builtin(const FamilySpec& spec);
Group builtin(Family family, std::vector<std::uint32_t> params = {});
Group build(const CatalogEntry& entry);

/// Families up to `max_order` followed by pairwise direct products of
/// nontrivial members whose order stays within `max_order`.
std::vector<CatalogEntry> default_catalog(std::size_t max_order);

/// Malformed group or report file, with the byte offset of the problem when
/// the JSON itself is broken.
class FileFormatError : public std::runtime_error {
 public:
  FileFormatError(const std::string& what, std::size_t offset = 0)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses a Cayley table object {"name", "order", "table"} or a permutation
/// generator object {"name", "points", "generators"}.
Group parse_group_file(std::string_view text, const std::string& origin = "<input>");
Group load_group(const std::filesystem::path& path);

std::string cayley_file_text(const Group& g);
void save_group(const Group& g, const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace wordprop
