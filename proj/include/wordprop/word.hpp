#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordprop/group.hpp"

namespace wordprop {

enum class Var : std::uint8_t { kX = 0, kY = 1 };

struct Letter {
  Var var;
  bool inverse;

  Letter inverted() const { return {var, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class WordError : public std::runtime_error {
 public:
  enum class Kind { kSyntaxError, kUnknownVariable, kUnknownName };

  WordError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what), kind_(kind), offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the parsed text (0 for kUnknownName).
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Longest word the parser will expand powers into.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 20;

/// A freely reduced word in the free group on x and y.
class Word {
 public:
  Word() = default;

  /// Freely reduces `letters`.
  static Word from_letters(const std::vector<Letter>& letters, std::string source = {});

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::string& source() const noexcept { return source_; }

  /// Canonical text: x, y for generators and X, Y for their inverses, "1"
  /// for the empty word. Parses back to the same word.
  std::string to_string() const;

  Word inverse() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<Letter> letters_;
  std::string source_;
};

/// Stack-based free reduction.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

/// Parses the word grammar:
///
///   word    := term+
///   term    := factor ('^' integer)*
///   factor  := 'x' | 'y' | 'X' | 'Y' | '1' | '(' word ')' | '[' word (',' word)+ ']'
///
/// X and Y denote inverses, `^-1` inverts, `^k` repeats, and brackets are
/// left-normed commutators: [u,v] = u^-1 v^-1 u v, [u,v,w] = [[u,v],w].
/// Whitespace is ignored.
Word parse_word(std::string_view text);

/// Built-in words: "commutator", "engel<K>", "power<K>" (K >= 1).
Word named_word(std::string_view name);

/// Substitution of group elements for x and y.
struct Assignment {
  Element x;
  Element y;
};

Element evaluate(const Word& w, const Group& g, Assignment a);

/// Exhaustive check over all |G|^2 assignments.
bool is_identity_in(const Word& w, const Group& g);

}  // namespace wordprop
