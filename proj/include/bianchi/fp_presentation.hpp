#pragma once

#include <string>
#include <vector>

#include "bianchi/words.hpp"

namespace bianchi::fp {

/// Letter k > 0 is generator k-1; -k is its inverse.
using Letters = std::vector<int>;

inline int generator_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }

void free_reduce(Letters& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
void cyclic_reduce(Letters& w);
Letters inverse(const Letters& w);
Letters concat(const Letters& u, const Letters& v);

/// Presentation over integer letters, the working form of all fpcore
/// algorithms. Generator names are carried for output only.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Letters> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t total_length() const;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Throws std::invalid_argument on a letter outside the generator range.
void validate(const Presentation& p);

Letters to_letters(const Word& w, const std::vector<std::string>& generators);
Word to_word(const Letters& w, const std::vector<std::string>& generators);
Presentation from_words(const bianchi::Presentation& p);
bianchi::Presentation to_words(const Presentation& p);

}  // namespace bianchi::fp
