#include "garlink/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "garlink/errors.hpp"

namespace garlink::io {

using garside::ComplementTable;
using garside::MonoidPresentation;
using words::Alphabet;
using words::Letter;
using words::PositiveWord;

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix, std::string* rest) {
  if (s.rfind(prefix, 0) != 0) return false;
  *rest = trim(s.substr(prefix.size()));
  return true;
}

std::pair<std::string, std::string> split_once(const std::string& s, char sep,
                                               const std::string& context) {
  auto pos = s.find(sep);
  if (pos == std::string::npos) {
    throw InputError("expected '" + std::string(1, sep) + "' in " + context + ": '" + s + "'");
  }
  return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

}  // namespace

ComplementTable PresentationFile::left_table() const {
  if (explicit_left) return *explicit_left;
  return ComplementTable::derive_left(presentation);
}

ComplementTable PresentationFile::right_table() const {
  if (explicit_right) return *explicit_right;
  return ComplementTable::derive_right(presentation);
}

PresentationFile parse_presentation(std::istream& in) {
  PresentationFile file;
  bool have_generators = false;
  std::vector<std::tuple<std::string, std::string, std::string, bool>> pending_complements;
  std::vector<std::pair<std::string, std::string>> pending_relations;
  std::vector<std::pair<std::string, std::int64_t>> pending_weights;
  std::optional<std::string> pending_delta;
  std::optional<std::string> pending_distinguished;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    std::string rest;
    try {
      if (starts_with(line, "base", &rest)) {
        if (rest.empty() || rest[0] != '=') throw InputError("expected 'base = ...'");
        file.base = trim(rest.substr(1));
      } else if (starts_with(line, "generators", &rest)) {
        if (rest.empty() || rest[0] != '=') throw InputError("expected 'generators = ...'");
        std::istringstream names(trim(rest.substr(1)));
        std::vector<std::string> list;
        std::string n;
        while (names >> n) list.push_back(n);
        file.presentation.alphabet = Alphabet(list);
        file.presentation.weights.assign(list.size(), 1);
        have_generators = true;
      } else if (starts_with(line, "weight", &rest)) {
        auto [name, value] = split_once(rest, '=', "weight line");
        pending_weights.emplace_back(name, std::stoll(value));
      } else if (starts_with(line, "relation:", &rest)) {
        auto [l, r] = split_once(rest, '=', "relation");
        pending_relations.emplace_back(l, r);
      } else if (starts_with(line, "complement-left:", &rest)) {
        auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw InputError("expected '->' in complement entry");
        std::istringstream head(trim(rest.substr(0, arrow)));
        std::string x, y, extra;
        if (!(head >> x >> y) || (head >> extra)) {
          throw InputError("complement entry needs exactly two letters before '->'");
        }
        pending_complements.emplace_back(x, y, trim(rest.substr(arrow + 2)), true);
      } else if (starts_with(line, "complement-right:", &rest)) {
        auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw InputError("expected '->' in complement entry");
        std::istringstream head(trim(rest.substr(0, arrow)));
        std::string x, y, extra;
        if (!(head >> x >> y) || (head >> extra)) {
          throw InputError("complement entry needs exactly two letters before '->'");
        }
        pending_complements.emplace_back(x, y, trim(rest.substr(arrow + 2)), false);
      } else if (starts_with(line, "delta", &rest)) {
        if (rest.empty() || rest[0] != '=') throw InputError("expected 'delta = ...'");
        pending_delta = trim(rest.substr(1));
      } else if (starts_with(line, "distinguished", &rest)) {
        if (rest.empty() || rest[0] != '=') throw InputError("expected 'distinguished = ...'");
        pending_distinguished = trim(rest.substr(1));
      } else {
        throw InputError("unrecognized line");
      }
    } catch (const std::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what() + " ['" + line + "']");
    }
  }

  if (!have_generators && !file.base) {
    throw InputError("presentation file must declare 'generators = ...' or 'base = ...'");
  }

  const Alphabet& alphabet = file.presentation.alphabet;
  auto need_letter = [&](const std::string& n) {
    auto idx = alphabet.find(n);
    if (!idx) throw InputError("unknown generator '" + n + "'");
    return *idx;
  };
  for (const auto& [name, w] : pending_weights) {
    if (w < 1) throw InputError("weight of '" + name + "' must be positive");
    file.presentation.weights.at(static_cast<std::size_t>(need_letter(name))) = w;
  }
  for (const auto& [l, r] : pending_relations) {
    file.presentation.relations.emplace_back(words::parse_positive_word(l, alphabet),
                                             words::parse_positive_word(r, alphabet));
  }
  for (const auto& [x, y, word, is_left] : pending_complements) {
    auto& table = is_left ? file.explicit_left : file.explicit_right;
    if (!table) table = ComplementTable(alphabet);
    table->set(need_letter(x), need_letter(y), words::parse_positive_word(word, alphabet));
  }
  if (pending_delta) file.delta = words::parse_positive_word(*pending_delta, alphabet);
  if (pending_distinguished) {
    file.distinguished = words::parse_signed_word(*pending_distinguished, alphabet);
  }
  return file;
}

PresentationFile parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

PresentationFile load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file '" + path + "'");
  return parse_presentation(in);
}

std::string format_presentation(const MonoidPresentation& pres,
                                const std::optional<PositiveWord>& delta) {
  std::ostringstream out;
  out << "generators =";
  for (const std::string& n : pres.alphabet.names()) out << ' ' << n;
  out << "\n";
  for (std::size_t i = 0; i < pres.weights.size(); ++i) {
    if (pres.weights[i] != 1) {
      out << "weight " << pres.alphabet.name(static_cast<Letter>(i)) << " = " << pres.weights[i]
          << "\n";
    }
  }
  for (const auto& [l, r] : pres.relations) {
    out << "relation: " << words::to_string(l, pres.alphabet) << " = "
        << words::to_string(r, pres.alphabet) << "\n";
  }
  if (delta) out << "delta = " << words::to_string(*delta, pres.alphabet) << "\n";
  return out.str();
}

}  // namespace garlink::io
