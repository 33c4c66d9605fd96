#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/matgroup.hpp"

namespace bianchi {

struct Syllable {
  std::string gen;
  long exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in named generators, stored as syllables x^e with
/// adjacent syllables on distinct generators. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::string name, long exp = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  /// Letter length, the sum of |exponent| over syllables.
  std::size_t length() const;

  Word inverse() const;
  Word pow(long k) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

  /// `t^-5*u`; the identity prints as `1`.
  std::string to_string() const;

 private:
  std::vector<Syllable> syl_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Macros = std::map<std::string, Word, std::less<>>;

/// Parses the word grammar:
///   word    := factor ( ['*'] factor )*
///   factor  := primary [ '^' integer ]
///   primary := identifier | '1' | '(' word ')' | '[' word ',' word ']'
/// `[x, y]` is x*y*x^-1*y^-1. Identifiers naming a macro are expanded. When
/// `alphabet` is non-null, any other identifier outside it is rejected.
Word parse_word(std::string_view text, const Macros& macros = {},
                const std::vector<std::string>* alphabet = nullptr);

/// Finitely presented group with named generators.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws std::invalid_argument on duplicate generators or a relator using
  /// a generator outside the list.
  void validate() const;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// File format: a `gens: a l t u` line followed by `rel: <word>` lines.
/// Blank lines and `#` comments are ignored.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);
Presentation read_presentation_file(const std::filesystem::path& path);

using Dictionary = std::map<std::string, ProjMat, std::less<>>;

/// Image of w under the homomorphism from the free group fixed by `dict`.
/// Throws std::out_of_range when a generator has no image.
ProjMat eval(const Word& w, const Dictionary& dict);

/// Swan's presentation of PSL_2(Z[i]) on a, l, t, u with relators
/// a^2, l^2, (tl)^2, (ul)^2, (al)^2, (ta)^3, (ual)^3, [t,u].
Presentation swan_presentation();
Dictionary swan_dictionary();

struct MeridianTable {
  Macros macros;
  std::vector<Word> entries;
};

inline constexpr std::size_t kMeridianCount = 42;

/// Data directory: $BIANCHI_DATA_DIR when set, else the build-time default.
std::filesystem::path data_dir();

/// Reads meridians.txt. Lines `# name = word` define macros; other `#` lines
/// are comments; each remaining non-blank line is one meridian. Throws
/// std::runtime_error unless exactly 42 meridians are present.
MeridianTable load_meridians(const std::filesystem::path& file = data_dir() / "meridians.txt");
MeridianTable parse_meridians(std::string_view text);

}  // namespace bianchi
