#pragma once

// Signed-letter words over interned generator names, free reduction and the
// alternating products used by triangle Artin presentations.
//
// Textual syntax (parse_word / to_string):
//
//   word   := factor*
//   factor := atom ("^" integer)?
//   atom   := ident | "(" word ")" | "1"
//   ident  := [a-z][0-9_]* | [A-Z][0-9_]* | "{" name "}"
//
// An uppercase identifier is the inverse of its lowercase spelling, so "A" is
// "a^-1". Whitespace, '.' and '*' are ignored between factors. Names that are
// not a single letter followed by digits/underscores are written in braces.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artin/error.hpp"

namespace artin {

  namespace detail {
    class symbol_table {
     public:
      symbol_table() { intern(""); }

      std::uint32_t intern(std::string_view name) {
        {
          std::shared_lock lock(mutex_);
          auto it = index_.find(std::string(name));
          if (it != index_.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(mutex_);
        auto [it, inserted] = index_.try_emplace(
            std::string(name), static_cast<std::uint32_t>(names_.size()));
        if (inserted) {
          names_.emplace_back(name);
        }
        return it->second;
      }

      std::string const& name(std::uint32_t id) const {
        std::shared_lock lock(mutex_);
        return names_[id];
      }

     private:
      mutable std::shared_mutex                      mutex_;
      std::deque<std::string>                        names_;
      std::unordered_map<std::string, std::uint32_t> index_;
    };

    inline symbol_table& symbols() {
      static symbol_table table;
      return table;
    }
  }  // namespace detail

  // Interned generator name. Equality is identity of the name; ordering is by
  // the name's spelling so that every sorted output is reproducible.
  class Symbol {
   public:
    Symbol() = default;
    explicit Symbol(std::string_view name)
        : id_(detail::symbols().intern(name)) {}

    std::string const& name() const {
      return detail::symbols().name(id_);
    }
    std::uint32_t id() const noexcept {
      return id_;
    }
    bool empty() const noexcept {
      return id_ == 0;
    }

    friend bool operator==(Symbol a, Symbol b) noexcept {
      return a.id_ == b.id_;
    }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
      if (a.id_ == b.id_) {
        return std::strong_ordering::equal;
      }
      int c = a.name().compare(b.name());
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

   private:
    std::uint32_t id_ = 0;
  };

  struct SymbolHash {
    std::size_t operator()(Symbol s) const noexcept {
      return std::hash<std::uint32_t>{}(s.id());
    }
  };

  // A generator raised to +1 or -1.
  struct GenSym {
    Symbol sym;
    int    sign = 1;

    GenSym() = default;
    GenSym(Symbol s, int e) : sym(s), sign(e) {
      if (s.empty()) {
        throw input_error("generator name must be nonempty");
      }
      if (e != 1 && e != -1) {
        throw input_error("generator sign must be +1 or -1");
      }
    }
    GenSym(std::string_view name, int e = 1) : GenSym(Symbol(name), e) {}

    std::string const& name() const {
      return sym.name();
    }
    GenSym inverse() const {
      return GenSym(sym, -sign);
    }
    bool is_inverse_of(GenSym other) const noexcept {
      return sym == other.sym && sign == -other.sign;
    }

    friend bool operator==(GenSym const&, GenSym const&) = default;
    friend std::strong_ordering operator<=>(GenSym const& a, GenSym const& b) {
      if (auto c = a.sym <=> b.sym; c != 0) {
        return c;
      }
      // a < a^-1 in the lexicographic order used for tie-breaks
      return b.sign <=> a.sign;
    }
  };

  class Word {
   public:
    using value_type     = GenSym;
    using const_iterator = std::vector<GenSym>::const_iterator;

    Word() = default;
    explicit Word(std::vector<GenSym> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<GenSym> letters) : letters_(letters) {}

    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    GenSym const& operator[](std::size_t i) const {
      return letters_[i];
    }
    const_iterator begin() const noexcept {
      return letters_.begin();
    }
    const_iterator end() const noexcept {
      return letters_.end();
    }
    std::vector<GenSym> const& letters() const noexcept {
      return letters_;
    }

    Word inverse() const {
      std::vector<GenSym> out;
      out.reserve(letters_.size());
      for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return Word(std::move(out));
    }

    // Concatenation without reduction.
    friend Word operator*(Word const& a, Word const& b) {
      std::vector<GenSym> out(a.letters_);
      out.insert(out.end(), b.letters_.begin(), b.letters_.end());
      return Word(std::move(out));
    }

    // w^k by concatenation; negative k uses the inverse.
    Word pow(int k) const {
      Word                base = k < 0 ? inverse() : *this;
      std::vector<GenSym> out;
      for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        out.insert(out.end(), base.letters_.begin(), base.letters_.end());
      }
      return Word(std::move(out));
    }

    Word subword(std::size_t first, std::size_t count) const {
      return Word(std::vector<GenSym>(
          letters_.begin() + static_cast<std::ptrdiff_t>(first),
          letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      return std::lexicographical_compare_three_way(
          a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
          b.letters_.end());
    }

   private:
    std::vector<GenSym> letters_;
  };

  inline Word letter(std::string_view name, int sign = 1) {
    return Word{GenSym(name, sign)};
  }

  inline bool is_freely_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].is_inverse_of(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  inline Word free_reduce(Word const& w) {
    std::vector<GenSym> stack;
    stack.reserve(w.size());
    for (auto const& g : w) {
      if (!stack.empty() && stack.back().is_inverse_of(g)) {
        stack.pop_back();
      } else {
        stack.push_back(g);
      }
    }
    return Word(std::move(stack));
  }

  // Freely and cyclically reduced representative of the conjugacy class.
  inline Word cyclically_reduce(Word const& w) {
    Word        r     = free_reduce(w);
    std::size_t first = 0, last = r.size();
    while (last - first >= 2 && r[first].is_inverse_of(r[last - 1])) {
      ++first;
      --last;
    }
    return r.subword(first, last - first);
  }

  // Rotation of w by k letters: w[k..] w[..k].
  inline Word rotate(Word const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    return w.subword(k, w.size() - k) * w.subword(0, k);
  }

  inline int exponent_sum(Word const& w, Symbol s) {
    int total = 0;
    for (auto const& g : w) {
      if (g.sym == s) {
        total += g.sign;
      }
    }
    return total;
  }

  // Image under the degree map sending every generator to 1.
  inline int degree(Word const& w) {
    int total = 0;
    for (auto const& g : w) {
      total += g.sign;
    }
    return total;
  }

  // g h g h ... of length L starting with g.
  inline Word alternating_product(GenSym g, GenSym h, int length) {
    if (length < 1) {
      throw input_error("alternating product length must be positive, got "
                        + std::to_string(length));
    }
    if (g == h) {
      throw input_error("alternating product needs two distinct letters");
    }
    std::vector<GenSym> out;
    out.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
      out.push_back(i % 2 == 0 ? g : h);
    }
    return Word(std::move(out));
  }

  namespace detail {
    inline bool is_plain_name(std::string const& name) {
      if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    class word_parser {
     public:
      explicit word_parser(std::string_view text) : text_(text) {}

      Word parse() {
        Word w = parse_sequence();
        skip_separators();
        if (pos_ != text_.size()) {
          fail("unexpected character");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw input_error("cannot parse word \"" + std::string(text_)
                          + "\" at offset " + std::to_string(pos_) + ": "
                          + why);
      }

      void skip_separators() {
        while (pos_ < text_.size()
               && (std::isspace(static_cast<unsigned char>(text_[pos_]))
                   || text_[pos_] == '.' || text_[pos_] == '*')) {
          ++pos_;
        }
      }

      bool at_end_of_sequence() {
        skip_separators();
        return pos_ == text_.size() || text_[pos_] == ')';
      }

      Word parse_sequence() {
        std::vector<GenSym> out;
        while (!at_end_of_sequence()) {
          Word f = parse_factor();
          out.insert(out.end(), f.begin(), f.end());
        }
        return Word(std::move(out));
      }

      Word parse_factor() {
        Word atom = parse_atom();
        skip_separators();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          return atom.pow(parse_integer());
        }
        return atom;
      }

      int parse_integer() {
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
          negative = text_[pos_] == '-';
          ++pos_;
        }
        std::size_t start = pos_;
        long        value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + (text_[pos_] - '0');
          if (value > 1'000'000) {
            fail("exponent too large");
          }
          ++pos_;
        }
        if (start == pos_) {
          fail("expected an integer exponent");
        }
        return static_cast<int>(negative ? -value : value);
      }

      Word parse_atom() {
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          Word inner = parse_sequence();
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("unbalanced parenthesis");
          }
          ++pos_;
          return inner;
        }
        if (c == '1') {
          ++pos_;
          return Word();
        }
        if (c == '{') {
          auto close = text_.find('}', pos_);
          if (close == std::string_view::npos || close == pos_ + 1) {
            fail("bad braced name");
          }
          std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
          pos_ = close + 1;
          return Word{GenSym(name, 1)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
          std::string name(1, static_cast<char>(
                                  std::tolower(static_cast<unsigned char>(c))));
          int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
          ++pos_;
          while (pos_ < text_.size()
                 && (std::isdigit(static_cast<unsigned char>(text_[pos_]))
                     || text_[pos_] == '_')) {
            name.push_back(text_[pos_++]);
          }
          return Word{GenSym(name, sign)};
        }
        fail("unexpected character");
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace detail

  inline Word parse_word(std::string_view text) {
    return detail::word_parser(text).parse();
  }

  inline std::string to_string(GenSym const& g) {
    std::string out = detail::is_plain_name(g.name())
                          ? g.name()
                          : "{" + g.name() + "}";
    if (g.sign < 0) {
      out += "^-1";
    }
    return out;
  }

  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& g : w) {
      out += to_string(g);
    }
    return out;
  }

}  // namespace artin
