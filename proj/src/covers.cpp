#include "bianchi/covers.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bianchi/coset.hpp"
#include "bianchi/words.hpp"

namespace bianchi {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int generator_index(const fp::Presentation& p, const std::string& name) {
  const auto it = std::find(p.generators.begin(), p.generators.end(), name);
  if (it == p.generators.end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return static_cast<int>(it - p.generators.begin());
}

void check_shape(const Monodromy& m) {
  fp::validate(m.source);
  if (m.degree < 1) throw std::invalid_argument("monodromy degree must be positive");
  if (m.images.size() != m.source.generator_count()) throw std::invalid_argument("one permutation per generator is required");
  for (const fp::Perm& p : m.images) {
    if (p.size() != static_cast<std::size_t>(m.degree)) throw std::invalid_argument("permutation of the wrong degree");
    std::vector<bool> hit(p.size(), false);
    for (int x : p) {
      if (x < 0 || x >= m.degree || hit[static_cast<std::size_t>(x)]) throw std::invalid_argument("image is not a permutation");
      hit[static_cast<std::size_t>(x)] = true;
    }
  }
  for (const auto& comp : m.components) {
    if (comp.empty()) throw std::invalid_argument("empty link component");
    for (const std::string& g : comp) generator_index(m.source, g);
  }
}

bool transitive(const Monodromy& m) {
  std::vector<bool> seen(static_cast<std::size_t>(m.degree), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const fp::Perm& p : m.images) {
      const int y = p[static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == static_cast<std::size_t>(m.degree);
}

std::vector<int> sorted_cycle_type(const fp::Perm& p) {
  std::vector<int> t = fp::cycle_type(p);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

MonodromyCheck check_monodromy(const Monodromy& m) {
  check_shape(m);
  MonodromyCheck out;
  for (std::size_t r = 0; r < m.source.relators.size(); ++r) {
    if (!fp::perm_is_identity(fp::perm_eval(m.source.relators[r], m.images, m.degree))) {
      out.valid = false;
      out.failing_relator = r;
      out.message = "relator " + std::to_string(r + 1) + " (" +
                    fp::to_word(m.source.relators[r], m.source.generators).to_string() + ") is not the identity";
      break;
    }
  }
  out.transitive = transitive(m);
  if (!out.transitive) {
    out.valid = false;
    if (out.message.empty()) out.message = "image does not act transitively on 1.." + std::to_string(m.degree);
  }
  for (const auto& comp : m.components) {
    const auto first = sorted_cycle_type(m.images[static_cast<std::size_t>(generator_index(m.source, comp.front()))]);
    for (const std::string& g : comp) {
      if (sorted_cycle_type(m.images[static_cast<std::size_t>(generator_index(m.source, g))]) != first) {
        out.warnings.push_back("meridians " + comp.front() + " and " + g + " of one component have non-conjugate images");
      }
    }
  }
  return out;
}

Monodromy extend_trivially(const Monodromy& m, const fp::Presentation& full,
                           const std::vector<std::vector<std::string>>& new_components) {
  check_shape(m);
  fp::validate(full);
  std::set<std::string> fresh;
  for (const auto& comp : new_components) {
    if (comp.empty()) throw std::invalid_argument("empty link component");
    for (const std::string& g : comp) {
      if (std::find(m.source.generators.begin(), m.source.generators.end(), g) != m.source.generators.end()) {
        throw std::invalid_argument("new meridian '" + g + "' already has an image");
      }
      fresh.insert(g);
    }
  }
  Monodromy out;
  out.source = full;
  out.degree = m.degree;
  out.components = m.components;
  out.components.insert(out.components.end(), new_components.begin(), new_components.end());
  for (const std::string& g : full.generators) {
    const auto it = std::find(m.source.generators.begin(), m.source.generators.end(), g);
    if (it != m.source.generators.end()) {
      out.images.push_back(m.images[static_cast<std::size_t>(it - m.source.generators.begin())]);
    } else if (fresh.count(g) != 0) {
      out.images.push_back(fp::perm_identity(m.degree));
    } else {
      throw std::invalid_argument("generator '" + g + "' is neither an old generator nor a new meridian");
    }
  }
  for (const std::string& g : fresh) generator_index(full, g);
  for (std::size_t r = 0; r < full.relators.size(); ++r) {
    if (!fp::perm_is_identity(fp::perm_eval(full.relators[r], out.images, out.degree))) {
      throw fp::RelatorViolation("relator " + std::to_string(r + 1) + " of the larger link group fails under the extension", r);
    }
  }
  return out;
}

Monodromy extend_trivially(const Monodromy& m, const std::vector<std::vector<std::string>>& new_components) {
  fp::Presentation full = m.source;
  for (const auto& comp : new_components) full.generators.insert(full.generators.end(), comp.begin(), comp.end());
  return extend_trivially(m, full, new_components);
}

std::vector<int> branch_preimage_counts(const Monodromy& m) {
  check_shape(m);
  std::vector<int> out;
  for (const auto& comp : m.components) {
    out.push_back(static_cast<int>(fp::cycle_type(m.images[static_cast<std::size_t>(generator_index(m.source, comp.front()))]).size()));
  }
  return out;
}

Monodromy parse_monodromy(std::string_view text) {
  std::string presentation_text;
  std::vector<std::pair<std::string, std::string>> assignments;
  std::vector<std::vector<std::string>> components;
  std::optional<int> degree;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto located = [&](const std::string& msg) {
      return std::invalid_argument("monodromy line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.rfind("gens:", 0) == 0 || line.rfind("rel:", 0) == 0) {
      presentation_text += line + '\n';
    } else if (line.rfind("degree", 0) == 0) {
      std::string rest = trim(std::string_view(line).substr(6));
      if (!rest.empty() && rest[0] == ':') rest = trim(std::string_view(rest).substr(1));
      try {
        std::size_t used = 0;
        degree = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw located("bad degree '" + rest + "'");
      }
      if (*degree < 1) throw located("degree must be positive");
    } else if (line.rfind("gen ", 0) == 0) {
      const auto arrow = line.find("->");
      if (arrow == std::string::npos) throw located("expected 'gen <name> -> <cycles>'");
      assignments.emplace_back(trim(std::string_view(line).substr(4, arrow - 4)), trim(std::string_view(line).substr(arrow + 2)));
    } else if (line.rfind("component:", 0) == 0) {
      std::istringstream names(line.substr(10));
      std::vector<std::string> comp;
      std::string g;
      while (names >> g) comp.push_back(g);
      if (comp.empty()) throw located("empty component");
      components.push_back(std::move(comp));
    } else {
      throw located("unrecognized line");
    }
  }
  if (!degree) throw std::invalid_argument("monodromy file has no degree line");

  Monodromy m;
  m.degree = *degree;
  if (!presentation_text.empty()) {
    m.source = fp::from_words(parse_presentation(presentation_text));
  } else {
    for (const auto& [name, cycles] : assignments) m.source.generators.push_back(name);
  }
  m.images.assign(m.source.generator_count(), fp::perm_identity(m.degree));
  std::set<std::string> assigned;
  for (const auto& [name, cycles] : assignments) {
    if (!assigned.insert(name).second) throw std::invalid_argument("generator '" + name + "' assigned twice");
    m.images[static_cast<std::size_t>(generator_index(m.source, name))] = fp::parse_cycles(cycles, m.degree);
  }
  if (components.empty()) {
    for (const std::string& g : m.source.generators) components.push_back({g});
  }
  m.components = std::move(components);
  check_shape(m);
  return m;
}

Monodromy read_monodromy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monodromy(buf.str());
}

std::string print_monodromy(const Monodromy& m) {
  std::string out = "degree: " + std::to_string(m.degree) + '\n';
  out += print_presentation(fp::to_words(m.source));
  for (std::size_t g = 0; g < m.images.size(); ++g) {
    out += "gen " + m.source.generators[g] + " -> " + fp::cycles_to_string(m.images[g]) + '\n';
  }
  for (const auto& comp : m.components) {
    out += "component:";
    for (const std::string& g : comp) out += ' ' + g;
    out += '\n';
  }
  return out;
}

}  // namespace bianchi
