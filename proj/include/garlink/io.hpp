#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "garlink/garside.hpp"

namespace garlink::io {

// Line-oriented presentation file:
//   # comment
//   base = Z            (or Z/<k>; selects a built-in base group)
//   generators = a b
//   weight a = 1        (optional, default 1)
//   relation: a b a = b a b
//   complement-left: a b -> b a     (explicit table entry; overrides derivation)
//   complement-right: a b -> b a
//   delta = a b a
//   distinguished = a^2             (base-group files)
struct PresentationFile {
  std::optional<std::string> base;  // "Z" or "Z/<k>"
  garside::MonoidPresentation presentation;
  std::optional<garside::ComplementTable> explicit_left;
  std::optional<garside::ComplementTable> explicit_right;
  std::optional<words::PositiveWord> delta;
  std::optional<words::SignedWord> distinguished;

  // Explicit table if given, else derived from the relations.
  garside::ComplementTable left_table() const;
  garside::ComplementTable right_table() const;
};

PresentationFile parse_presentation(std::istream& in);
PresentationFile parse_presentation_text(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);

std::string format_presentation(const garside::MonoidPresentation& pres,
                                const std::optional<words::PositiveWord>& delta);

}  // namespace garlink::io
