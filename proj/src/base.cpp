#include "cocoa/base.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace cocoa {

Alphabet::Alphabet(std::vector<std::string> aps) : aps_(std::move(aps)) {
  if (aps_.size() > kMaxAps) {
    throw InvalidParameter("too many atomic propositions (max " + std::to_string(kMaxAps) + ")");
  }
  const Letter count = Letter{1} << aps_.size();
  letters_.reserve(count);
  for (Letter l = 0; l < count; ++l) letters_.push_back(l);
  rebuild_index();
}

Alphabet::Alphabet(std::vector<std::string> aps, std::vector<Letter> letters)
  : aps_(std::move(aps)), letters_(std::move(letters)) {
  if (aps_.size() > kMaxAps) {
    throw InvalidParameter("too many atomic propositions (max " + std::to_string(kMaxAps) + ")");
  }
  if (letters_.empty()) throw InvalidParameter("alphabet has no letters");
  const Letter limit = Letter{1} << aps_.size();
  for (Letter l : letters_) {
    if (l >= limit) throw InvalidParameter("letter uses an undeclared proposition");
  }
  rebuild_index();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (index_[letters_[i]] != static_cast<std::int32_t>(i)) {
      throw InvalidParameter("duplicate letter in alphabet");
    }
  }
}

Alphabet Alphabet::singletons(std::vector<std::string> aps) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < aps.size(); ++i) letters.push_back(Letter{1} << i);
  return Alphabet(std::move(aps), std::move(letters));
}

void Alphabet::rebuild_index() {
  index_.assign(std::size_t{1} << aps_.size(), -1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (index_[letters_[i]] < 0) index_[letters_[i]] = static_cast<std::int32_t>(i);
  }
}

std::optional<std::size_t> Alphabet::index_of(Letter letter) const {
  if (letter >= index_.size() || index_[letter] < 0) return std::nullopt;
  return static_cast<std::size_t>(index_[letter]);
}

std::size_t Alphabet::require_index(Letter letter) const {
  auto idx = index_of(letter);
  if (!idx) throw InvalidParameter("letter " + letter_name(letter) + " is not in the alphabet");
  return *idx;
}

std::optional<std::size_t> Alphabet::ap_index(const std::string& name) const {
  auto it = std::find(aps_.begin(), aps_.end(), name);
  if (it == aps_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - aps_.begin());
}

std::string Alphabet::letter_name(Letter letter) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < aps_.size(); ++i) {
    if (letter & (Letter{1} << i)) {
      if (!first) out += ' ';
      out += aps_[i];
      first = false;
    }
  }
  return out + "}";
}

void LassoWord::validate(const Alphabet& alphabet) const {
  if (period.empty()) throw InvalidParameter("lasso period must be non-empty");
  for (Letter l : prefix) alphabet.require_index(l);
  for (Letter l : period) alphabet.require_index(l);
}

namespace {

std::vector<Letter> parse_letters(const std::string& text, std::size_t& pos, std::size_t end,
                                  const Alphabet& alphabet) {
  std::vector<Letter> out;
  while (pos < end) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '{') throw ParseError(pos, "expected '{'");
    ++pos;
    Letter letter = 0;
    while (true) {
      while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= end) throw ParseError(pos, "unterminated letter");
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < end && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == '_' || text[pos] == '#' || text[pos] == '$')) {
        ++pos;
      }
      if (start == pos) throw ParseError(pos, "expected proposition name");
      std::string name = text.substr(start, pos - start);
      auto idx = alphabet.ap_index(name);
      if (!idx) throw UnknownAtom(name);
      letter |= Letter{1} << *idx;
    }
    out.push_back(letter);
  }
  return out;
}

}  // namespace

LassoWord parse_lasso(const std::string& text, const Alphabet& alphabet) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError(text.size(), "expected ';' before the period");
  if (text.find(';', semi + 1) != std::string::npos) throw ParseError(semi, "more than one ';'");
  LassoWord word;
  std::size_t pos = 0;
  word.prefix = parse_letters(text, pos, semi, alphabet);
  pos = semi + 1;
  word.period = parse_letters(text, pos, text.size(), alphabet);
  if (word.period.empty()) throw ParseError(text.size(), "empty period");
  word.validate(alphabet);
  return word;
}

std::string format_lasso(const LassoWord& word, const Alphabet& alphabet) {
  std::string out;
  for (Letter l : word.prefix) out += alphabet.letter_name(l);
  out += ';';
  for (Letter l : word.period) out += alphabet.letter_name(l);
  return out;
}

namespace {

bool is_canonical_period(const std::vector<std::size_t>& w) {
  // Lyndon word: strictly smaller than all its proper rotations.
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      auto a = w[i];
      auto b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: not primitive
    }
  }
  return true;
}

void for_each_sequence(std::size_t letters, std::size_t length,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> seq(length, 0);
  while (true) {
    fn(seq);
    std::size_t i = 0;
    while (i < length && ++seq[i] == letters) seq[i++] = 0;
    if (i == length) return;
  }
}

}  // namespace

std::vector<LassoWord> enumerate_lassos(const Alphabet& alphabet, std::size_t max_prefix,
                                        std::size_t max_period, bool canonical) {
  std::vector<std::vector<Letter>> prefixes;
  std::vector<std::vector<Letter>> periods;
  const std::size_t k = alphabet.size();
  auto to_letters = [&](const std::vector<std::size_t>& seq) {
    std::vector<Letter> out;
    out.reserve(seq.size());
    // Reverse so that enumeration order is lexicographic on the first letter.
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(alphabet.letter(*it));
    return out;
  };
  for (std::size_t len = 0; len <= max_prefix; ++len) {
    for_each_sequence(k, len, [&](const auto& seq) { prefixes.push_back(to_letters(seq)); });
  }
  for (std::size_t len = 1; len <= max_period; ++len) {
    for_each_sequence(k, len, [&](const auto& seq) {
      std::vector<std::size_t> forward(seq.rbegin(), seq.rend());
      if (!canonical || is_canonical_period(forward)) periods.push_back(to_letters(seq));
    });
  }
  std::vector<LassoWord> out;
  out.reserve(prefixes.size() * periods.size());
  for (const auto& p : prefixes) {
    for (const auto& v : periods) out.push_back(LassoWord{p, v});
  }
  return out;
}

void Budget::check(std::size_t count, const char* what) const {
  if (max_states_ != 0 && count > max_states_) {
    throw ResourceLimit(std::string(what) + ": state cap of " + std::to_string(max_states_) +
                        " exceeded");
  }
  check_time(what);
}

void Budget::check_time(const char* what) const {
  if (timeout_s_ > 0.0 && elapsed_seconds() > timeout_s_) {
    std::ostringstream msg;
    msg << what << ": time budget of " << timeout_s_ << " s exceeded";
    throw ResourceLimit(msg.str());
  }
}

double Budget::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

}  // namespace cocoa
