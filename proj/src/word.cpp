#include "wordprop/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace wordprop {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word Word::from_letters(const std::vector<Letter>& letters, std::string source) {
  Word w;
  w.letters_ = free_reduce(letters);
  w.source_ = std::move(source);
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    const char base = l.var == Var::kX ? 'x' : 'y';
    out.push_back(l.inverse ? static_cast<char>(std::toupper(base)) : base);
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
  return w;
}

namespace {

using Letters = std::vector<Letter>;

Letters invert(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Letters concat(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return free_reduce(a);
}

// [u, v] = u^-1 v^-1 u v
Letters commutator(const Letters& u, const Letters& v) {
  return concat(concat(concat(invert(u), invert(v)), u), v);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Letters parse() {
    skip_space();
    if (at_end()) syntax_error("expected a word");
    Letters w = word();
    if (!at_end()) syntax_error(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void syntax_error(const std::string& msg) const { syntax_error_at(pos_, msg); }

  [[noreturn]] void syntax_error_at(std::size_t at, const std::string& msg) const {
    throw WordError(WordError::Kind::kSyntaxError, at,
                    "syntax error at offset " + std::to_string(at) + ": " + msg);
  }

  static bool starts_factor(char c) {
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Letters word() {
    skip_space();
    if (at_end() || !starts_factor(peek())) syntax_error("expected a word");
    Letters out;
    while (!at_end() && starts_factor(peek())) {
      out = concat(std::move(out), term());
      check_length(out.size());
      skip_space();
    }
    return out;
  }

  Letters term() {
    Letters base = factor();
    skip_space();
    while (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t exp_at = pos_;
      const long long k = integer();
      base = power(base, k, exp_at);
      skip_space();
    }
    return base;
  }

  long long integer() {
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) syntax_error("expected an integer exponent");
    long long value = 0;
    const char* first = text_.data() + digits;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      syntax_error_at(start, "exponent out of range");
    }
    return text_[start] == '-' ? -value : value;
  }

  Letters power(const Letters& base, long long k, std::size_t exp_at) const {
    const unsigned long long reps = static_cast<unsigned long long>(k < 0 ? -k : k);
    if (!base.empty() && reps > kMaxWordLength / base.size()) {
      syntax_error_at(exp_at, "power expands past the maximum word length");
    }
    const Letters unit = k < 0 ? invert(base) : base;
    Letters out;
    out.reserve(unit.size() * reps);
    for (unsigned long long i = 0; i < reps; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return free_reduce(out);
  }

  void check_length(std::size_t n) const {
    if (n > kMaxWordLength) syntax_error("word exceeds the maximum length");
  }

  Letters factor() {
    const char c = peek();
    switch (c) {
      case 'x': ++pos_; return {{Var::kX, false}};
      case 'X': ++pos_; return {{Var::kX, true}};
      case 'y': ++pos_; return {{Var::kY, false}};
      case 'Y': ++pos_; return {{Var::kY, true}};
      case '1': ++pos_; return {};
      case '(': {
        ++pos_;
        Letters inner = word();
        expect(')');
        return inner;
      }
      case '[': {
        ++pos_;
        Letters acc = word();
        skip_space();
        if (at_end() || peek() != ',') syntax_error("commutator needs at least two entries");
        while (!at_end() && peek() == ',') {
          ++pos_;
          acc = commutator(acc, word());
          check_length(acc.size());
          skip_space();
        }
        expect(']');
        return acc;
      }
      default:
        break;
    }
    throw WordError(WordError::Kind::kUnknownVariable, pos_,
                    "unknown variable '" + std::string(1, c) + "' at offset " +
                        std::to_string(pos_) + " (only x and y are allowed)");
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) syntax_error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) {
  Parser p(text);
  return Word::from_letters(p.parse(), std::string(text));
}

Word named_word(std::string_view name) {
  const auto unknown = [&] {
    throw WordError(WordError::Kind::kUnknownName, 0,
                    "unknown word name '" + std::string(name) +
                        "' (expected commutator, engel<K> or power<K>)");
  };
  const auto suffix = [&](std::string_view prefix, long long max) -> long long {
    const std::string_view rest = name.substr(prefix.size());
    long long k = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || k < 1 || k > max) {
      unknown();
    }
    return k;
  };

  if (name == "commutator") return parse_word("[x,y]");
  if (name.starts_with("engel")) {
    const long long k = suffix("engel", 16);
    std::string text = "[x";
    for (long long i = 0; i < k; ++i) text += ",y";
    text += "]";
    return parse_word(text);
  }
  if (name.starts_with("power")) {
    const long long k = suffix("power", static_cast<long long>(kMaxWordLength));
    return parse_word("x^" + std::to_string(k));
  }
  unknown();
  return {};
}

Element evaluate(const Word& w, const Group& g, Assignment a) {
  // Validates the assignment as a side effect.
  const Element values[2][2] = {{g.multiply(a.x, g.identity()), g.inverse(a.x)},
                                {g.multiply(a.y, g.identity()), g.inverse(a.y)}};
  Element acc = g.identity();
  for (const Letter& l : w.letters()) {
    acc = g.row(acc)[values[static_cast<int>(l.var)][l.inverse ? 1 : 0]];
  }
  return acc;
}

bool is_identity_in(const Word& w, const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (evaluate(w, g, {x, y}) != g.identity()) return false;
  return true;
}

}  // namespace wordprop
