#include "bianchi/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef BIANCHI_DEFAULT_DATA_DIR
#define BIANCHI_DEFAULT_DATA_DIR "data"
#endif

namespace bianchi {

namespace {

// Appends s to syllables, cancelling against the tail.
void push_syllable(std::vector<Syllable>& out, const Syllable& s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

class WordParser {
 public:
  WordParser(std::string_view text, const Macros& macros, const std::vector<std::string>* alphabet)
      : text_(text), macros_(macros), alphabet_(alphabet) {}

  Word parse() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("word syntax error: " + msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(' || ch == '[' || ch == '1';
  }

  Word parse_word() {
    Word w;
    bool first = true;
    while (true) {
      skip_space();
      if (!first && pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after '*'");
      }
      if (!at_factor_start()) break;
      w = w * parse_factor();
      first = false;
    }
    return w;
  }

  Word parse_factor() {
    Word base = parse_primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      base = base.pow(parse_integer());
    }
    return base;
  }

  long parse_integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const bool paren = pos_ < text_.size() && text_[pos_] == '(';
    if (paren) {
      ++pos_;
      const long inner = parse_integer();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' after exponent");
      ++pos_;
      return negative ? -inner : inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 12) fail("exponent too large");
    const long value = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -value : value;
  }

  Word parse_primary() {
    skip_space();
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Word inner = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      Word x = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      Word y = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return x * y * x.inverse() * y.inverse();
    }
    if (ch == '1') {
      ++pos_;
      return Word();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (const auto it = macros_.find(name); it != macros_.end()) return it->second;
    if (alphabet_ != nullptr && std::find(alphabet_->begin(), alphabet_->end(), name) == alphabet_->end()) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return Word::generator(name);
  }

  std::string_view text_;
  const Macros& macros_;
  const std::vector<std::string>* alphabet_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Word::Word(std::vector<Syllable> syllables) {
  for (const Syllable& s : syllables) push_syllable(syl_, s);
}

Word Word::generator(std::string name, long exp) { return Word({Syllable{std::move(name), exp}}); }

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Syllable& s : syl_) n += static_cast<std::size_t>(std::labs(s.exp));
  return n;
}

Word Word::inverse() const {
  Word out;
  out.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.syl_.push_back({it->gen, -it->exp});
  return out;
}

Word Word::pow(long k) const {
  if (k == 0 || syl_.empty()) return {};
  const Word base = k < 0 ? inverse() : *this;
  const long n = k < 0 ? -k : k;
  Word out;
  for (long i = 0; i < n; ++i) {
    for (const Syllable& s : base.syl_) push_syllable(out.syl_, s);
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  for (const Syllable& s : v.syl_) push_syllable(out.syl_, s);
  return out;
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const Syllable& s : syl_) {
    if (!out.empty()) out += '*';
    out += s.gen;
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

Word parse_word(std::string_view text, const Macros& macros, const std::vector<std::string>* alphabet) {
  return WordParser(text, macros, alphabet).parse();
}

void Presentation::validate() const {
  std::set<std::string, std::less<>> names;
  for (const std::string& g : generators) {
    if (!names.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
  }
  for (const Word& r : relators) {
    for (const Syllable& s : r.syllables()) {
      if (!names.contains(s.gen)) {
        throw std::invalid_argument("relator " + r.to_string() + " uses unknown generator '" + s.gen + "'");
      }
    }
  }
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto located = [&](const std::string& msg) {
      return std::invalid_argument("presentation line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw located("duplicate gens line");
      std::istringstream names(line.substr(5));
      std::string g;
      while (names >> g) p.generators.push_back(g);
      have_gens = true;
    } else if (line.rfind("rel:", 0) == 0) {
      if (!have_gens) throw located("rel before gens");
      try {
        p.relators.push_back(parse_word(line.substr(4), {}, &p.generators));
      } catch (const ParseError& e) {
        throw located(e.what());
      }
    } else {
      throw located("expected 'gens:' or 'rel:'");
    }
  }
  if (!have_gens) throw std::invalid_argument("presentation has no gens line");
  p.validate();
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& g : p.generators) out += ' ' + g;
  out += '\n';
  for (const Word& r : p.relators) out += "rel: " + r.to_string() + '\n';
  return out;
}

Presentation read_presentation_file(const std::filesystem::path& path) {
  return parse_presentation(read_file(path));
}

ProjMat eval(const Word& w, const Dictionary& dict) {
  ProjMat out = ProjMat::identity();
  for (const Syllable& s : w.syllables()) {
    const auto it = dict.find(s.gen);
    if (it == dict.end()) throw std::out_of_range("eval: no matrix for generator '" + s.gen + "'");
    out = out * it->second.pow(s.exp);
  }
  return out;
}

Presentation swan_presentation() {
  Presentation p;
  p.generators = {"a", "l", "t", "u"};
  for (const char* r : {"a^2", "l^2", "(t*l)^2", "(u*l)^2", "(a*l)^2", "(t*a)^3", "(u*a*l)^3", "[t,u]"}) {
    p.relators.push_back(parse_word(r, {}, &p.generators));
  }
  return p;
}

Dictionary swan_dictionary() {
  return {
      {"a", ProjMat::gaussian(0, 0, -1, 0, 1, 0, 0, 0)},
      {"l", ProjMat::gaussian(0, -1, 0, 0, 0, 0, 0, 1)},
      {"t", ProjMat::gaussian(1, 0, 1, 0, 0, 0, 1, 0)},
      {"u", ProjMat::gaussian(1, 0, 0, 1, 0, 0, 1, 0)},
  };
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("BIANCHI_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return BIANCHI_DEFAULT_DATA_DIR;
}

MeridianTable parse_meridians(std::string_view text) {
  MeridianTable table;
  const std::vector<std::string> swan_gens = swan_presentation().generators;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    try {
      if (line[0] == '#') {
        const std::string body = trim(std::string_view(line).substr(1));
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;
        const std::string name = trim(std::string_view(body).substr(0, eq));
        const bool identifier =
            !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
              return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            });
        if (!identifier) continue;
        table.macros[name] = parse_word(std::string_view(body).substr(eq + 1), table.macros, &swan_gens);
        continue;
      }
      table.entries.push_back(parse_word(line, table.macros, &swan_gens));
    } catch (const ParseError& e) {
      throw std::runtime_error("meridian line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (table.entries.size() != kMeridianCount) {
    throw std::runtime_error("meridian table has " + std::to_string(table.entries.size()) + " entries, expected " +
                             std::to_string(kMeridianCount));
  }
  return table;
}

MeridianTable load_meridians(const std::filesystem::path& file) { return parse_meridians(read_file(file)); }

}  // namespace bianchi
