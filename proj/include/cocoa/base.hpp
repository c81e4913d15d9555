// Shared vocabulary: letters, alphabets, lasso words, errors and resource budgets.
#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocoa {

/// A letter is a set of atomic propositions, stored as a bitmask over AP indices.
using Letter = std::uint32_t;

inline constexpr std::size_t kMaxAps = 24;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
    : Error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnknownAtom : public Error {
public:
  explicit UnknownAtom(const std::string& name)
    : Error("unknown atomic proposition '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class InvalidParameter : public Error { using Error::Error; };
class NotNnf : public Error { using Error::Error; };
class IncompatibleAutomata : public Error { using Error::Error; };
class InternalError : public Error { using Error::Error; };

class NotWeak : public Error {
public:
  explicit NotWeak(std::vector<std::uint32_t> scc)
    : Error("automaton is not weak: SCC mixes accepting and rejecting states"),
      scc_(std::move(scc)) {}
  const std::vector<std::uint32_t>& scc() const noexcept { return scc_; }

private:
  std::vector<std::uint32_t> scc_;
};

class ResourceLimit : public Error { using Error::Error; };

/// Atomic propositions plus the letters (subsets) that make up the alphabet.
class Alphabet {
public:
  Alphabet() = default;
  /// Full alphabet 2^aps.
  explicit Alphabet(std::vector<std::string> aps);
  /// Restricted alphabet; letters keep their given order.
  Alphabet(std::vector<std::string> aps, std::vector<Letter> letters);

  /// Only the singleton letters {p} for every AP p.
  static Alphabet singletons(std::vector<std::string> aps);

  const std::vector<std::string>& aps() const noexcept { return aps_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter letter(std::size_t index) const { return letters_.at(index); }

  std::optional<std::size_t> index_of(Letter letter) const;
  /// Like index_of but throws InvalidParameter for letters outside the alphabet.
  std::size_t require_index(Letter letter) const;

  std::optional<std::size_t> ap_index(const std::string& name) const;

  /// "{a b}" style rendering; "{}" for the empty letter.
  std::string letter_name(Letter letter) const;

  bool operator==(const Alphabet& other) const {
    return aps_ == other.aps_ && letters_ == other.letters_;
  }

private:
  void rebuild_index();

  std::vector<std::string> aps_;
  std::vector<Letter> letters_;
  std::vector<std::int32_t> index_;  // mask -> letter index, -1 if absent
};

/// Ultimately periodic word prefix · period^ω.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  std::size_t length() const noexcept { return prefix.size() + period.size(); }
  /// Successor position in the folded lasso 0..length()-1.
  std::size_t next(std::size_t pos) const noexcept {
    return pos + 1 < length() ? pos + 1 : prefix.size();
  }
  Letter at(std::size_t pos) const noexcept {
    return pos < prefix.size() ? prefix[pos] : period[pos - prefix.size()];
  }
  /// Letter at an arbitrary position of the infinite word.
  Letter letter_at(std::size_t i) const noexcept {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }

  /// Throws InvalidParameter if the period is empty or a letter is not in alphabet.
  void validate(const Alphabet& alphabet) const;

  bool operator==(const LassoWord&) const = default;
};

/// Parses "{a b}{};{a}" (prefix letters, ';', period letters).
LassoWord parse_lasso(const std::string& text, const Alphabet& alphabet);
std::string format_lasso(const LassoWord& word, const Alphabet& alphabet);

/// All lassos with |prefix| <= max_prefix and 1 <= |period| <= max_period.  With
/// canonical set, periods are primitive and rotation-minimal (Lyndon words).
std::vector<LassoWord> enumerate_lassos(const Alphabet& alphabet, std::size_t max_prefix,
                                        std::size_t max_period, bool canonical = true);

/// Caps on construction size and wall time; zero means unlimited.
class Budget {
public:
  static constexpr std::size_t kDefaultMaxStates = 1'000'000;
  static constexpr double kDefaultTimeoutSeconds = 300.0;

  Budget() : Budget(kDefaultMaxStates, kDefaultTimeoutSeconds) {}
  Budget(std::size_t max_states, double timeout_seconds)
    : max_states_(max_states), timeout_s_(timeout_seconds),
      start_(std::chrono::steady_clock::now()) {}

  static Budget unlimited() { return Budget(0, 0.0); }

  /// Throws ResourceLimit if count exceeds the state cap or time is up.
  void check(std::size_t count, const char* what) const;
  void check_time(const char* what) const;
  double elapsed_seconds() const;

  std::size_t max_states() const noexcept { return max_states_; }
  double timeout_seconds() const noexcept { return timeout_s_; }

private:
  std::size_t max_states_;
  double timeout_s_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cocoa
