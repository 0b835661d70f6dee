#include "garlink/braidrep.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "garlink/errors.hpp"

namespace garlink::braidrep {

using words::Letter;
using words::SignedLetter;

Alphabet braid_alphabet(int strands) {
  if (strands < 1) throw InputError("braid words need at least one strand");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(strands - 1));
  for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
  return Alphabet(names);
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  BraidWord w;
  w.strands = strands;
  w.letters = words::parse_signed_word(text, braid_alphabet(strands));
  return w;
}

void BraidWord::validate() const {
  if (strands < 1) throw InputError("braid word has no strands");
  for (const SignedLetter& l : letters.letters) {
    if (l.index < 0 || l.index > strands - 2) {
      throw InputError("braid letter index out of range for strand count");
    }
  }
}

std::string BraidWord::to_string() const {
  return words::to_string(letters, braid_alphabet(strands));
}

BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& alpha) {
  if (beta.strands != alpha.strands) {
    throw InputError("markov conjugation needs equal strand counts");
  }
  BraidWord out;
  out.strands = beta.strands;
  out.letters = words::free_reduce(
      words::concat(words::concat(words::inverse(alpha.letters), beta.letters), alpha.letters));
  return out;
}

BraidWord markov_stabilize(const BraidWord& beta, int sign) {
  BraidWord out;
  out.strands = beta.strands + 1;
  out.letters = beta.letters;
  out.letters.letters.push_back({static_cast<Letter>(beta.strands - 1), sign >= 0 ? +1 : -1});
  out.letters = words::free_reduce(out.letters);
  return out;
}

std::vector<int> braid_permutation(const BraidWord& beta) {
  beta.validate();
  std::vector<int> pos(static_cast<std::size_t>(beta.strands));
  std::iota(pos.begin(), pos.end(), 1);
  for (const SignedLetter& l : beta.letters.letters) {
    std::swap(pos[static_cast<std::size_t>(l.index)], pos[static_cast<std::size_t>(l.index) + 1]);
  }
  // pos[j] = strand occupying position j+1 at the end; invert to map strands.
  std::vector<int> image(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    image[static_cast<std::size_t>(pos[j] - 1)] = static_cast<int>(j) + 1;
  }
  return image;
}

ArtinRepresentation::ArtinRepresentation(std::shared_ptr<const freeprod::BaseGroup> base,
                                         SignedWord h, int strands)
    : ambient_(std::move(base), strands), h_(ambient_.base().normal_form(h)) {
  if (h_.empty()) {
    throw InputError("the distinguished element h must be non-trivial in H");
  }
}

FreeProductElement ArtinRepresentation::h_elem(int factor) const {
  return ambient_.inject(factor, h_);
}

FreeProductElement ArtinRepresentation::generator(int factor, Letter x) const {
  SignedWord w;
  w.letters.push_back({x, +1});
  return ambient_.inject(factor, w);
}

FreeProductElement ArtinRepresentation::apply_generator(int k, int sign,
                                                        const FreeProductElement& g) const {
  if (k < 1 || k > strands() - 1) throw InputError("generator index out of range");
  SignedWord h_inv = words::inverse(h_);
  FreeProductElement out;
  for (const freeprod::Syllable& s : g.syllables) {
    FreeProductElement piece;
    if (sign >= 0) {
      if (s.factor == k) {
        // phi_k(y) -> h_k^{-1} phi_{k+1}(y) h_k
        piece = ambient_.multiply(
            ambient_.multiply(ambient_.inject(k, h_inv), ambient_.inject(k + 1, s.content)),
            ambient_.inject(k, h_));
      } else if (s.factor == k + 1) {
        // phi_{k+1}(y) -> h_k phi_k(y) h_k^{-1}
        piece = ambient_.multiply(
            ambient_.multiply(ambient_.inject(k, h_), ambient_.inject(k, s.content)),
            ambient_.inject(k, h_inv));
      } else {
        piece = {{s}};
      }
    } else {
      // Inverse automorphism, solved from the defining formulas:
      // phi_k(y) -> h_{k+1}^{-1} phi_{k+1}(y) h_{k+1},
      // phi_{k+1}(y) -> h_{k+1} phi_k(y) h_{k+1}^{-1}.
      if (s.factor == k) {
        piece = ambient_.multiply(
            ambient_.multiply(ambient_.inject(k + 1, h_inv), ambient_.inject(k + 1, s.content)),
            ambient_.inject(k + 1, h_));
      } else if (s.factor == k + 1) {
        piece = ambient_.multiply(
            ambient_.multiply(ambient_.inject(k + 1, h_), ambient_.inject(k, s.content)),
            ambient_.inject(k + 1, h_inv));
      } else {
        piece = {{s}};
      }
    }
    out = ambient_.multiply(out, piece);
  }
  return out;
}

FreeProductElement ArtinRepresentation::apply_braid(const BraidWord& beta,
                                                    const FreeProductElement& g) const {
  if (beta.strands != strands()) throw InputError("strand count mismatch");
  beta.validate();
  FreeProductElement cur = g;
  for (const SignedLetter& l : beta.letters.letters) {
    cur = apply_generator(l.index + 1, l.sign, cur);
  }
  return cur;
}

garside::MonoidPresentation braid_presentation(int strands) {
  Alphabet alphabet = braid_alphabet(strands);
  std::vector<std::pair<PositiveWord, PositiveWord>> relations;
  for (Letter i = 0; i + 1 < static_cast<Letter>(alphabet.size()); ++i) {
    for (Letter j = i + 1; j < static_cast<Letter>(alphabet.size()); ++j) {
      if (j == i + 1) {
        relations.emplace_back(PositiveWord({i, j, i}), PositiveWord({j, i, j}));
      } else {
        relations.emplace_back(PositiveWord({i, j}), PositiveWord({j, i}));
      }
    }
  }
  return garside::MonoidPresentation::unit_weights(std::move(alphabet), std::move(relations));
}

PositiveWord braid_delta(int strands) {
  // Half twist: s1 . s2 s1 . s3 s2 s1 . ... (empty for one strand)
  PositiveWord delta;
  for (int i = 1; i < strands; ++i) {
    for (int j = i; j >= 1; --j) delta.letters.push_back(static_cast<Letter>(j - 1));
  }
  return delta;
}

std::shared_ptr<const garside::GarsideStructure> braid_structure(int strands) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const garside::GarsideStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(strands);
  if (it != cache.end()) return it->second;
  garside::MonoidPresentation pres = braid_presentation(strands);
  auto structure = std::make_shared<garside::GarsideStructure>(
      pres, garside::ComplementTable::derive_left(pres),
      garside::ComplementTable::derive_right(pres), braid_delta(strands));
  if (!structure->verified()) {
    throw std::logic_error("braid monoid failed Garside verification for n = " +
                           std::to_string(strands));
  }
  cache.emplace(strands, structure);
  return structure;
}

bool braid_is_trivial(const BraidWord& beta, std::int64_t cap) {
  beta.validate();
  if (beta.strands == 1 || beta.letters.empty()) return true;
  return braid_structure(beta.strands)->group_trivial(beta.letters, cap);
}

}  // namespace garlink::braidrep
