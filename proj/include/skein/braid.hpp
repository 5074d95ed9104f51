#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// One letter of a mixed braid word: the loop generator t or a braid generator sigma_i.
struct Letter {
  bool is_t = false;
  int index = 0;  // sigma index (>= 1); 0 for t
  int sign = 1;   // +1 or -1

  static Letter T(int sign = 1) { return {true, 0, sign}; }
  static Letter S(int i, int sign = 1) { return {false, i, sign}; }
  Letter inverse() const { return {is_t, index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in B_{1,n}; `strands` counts the moving strands only.
struct MixedBraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  MixedBraidWord() = default;
  MixedBraidWord(int n, std::vector<Letter> ls);  // validates indices

  size_t size() const { return letters.size(); }
  int sigma_count() const;
  int t_count() const;  // signed count of t letters
  MixedBraidWord inverse() const;
  MixedBraidWord operator*(const MixedBraidWord& o) const;  // concatenation, same strands
  std::string str() const;  // re-parsable text, e.g. "t s1 t s1^-1"
  friend bool operator==(const MixedBraidWord&, const MixedBraidWord&) = default;
};

struct ParseError : std::invalid_argument {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct StrandMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Tokens: `t`, `sK`, `tK`, `tK'`, each with an optional `^N` / `^-1` suffix.
MixedBraidWord parse_word(const std::string& text, int strands);

/// Defining word of t_i^k (plain) or t'_i^k (primed).
MixedBraidWord expand_looping(int i, bool primed, int k, int strands = 0);

int exponent_sum(const MixedBraidWord& w);

/// Cancel adjacent g g^-1 pairs until none remain.
MixedBraidWord free_reduce(const MixedBraidWord& w);

enum class MoveKind { Conj, Stab, LoopConj, Bbm };
struct Move {
  MoveKind kind;
  int sign = 1;
  MixedBraidWord beta;  // only for Conj

  static Move conj(MixedBraidWord b) { return {MoveKind::Conj, 1, std::move(b)}; }
  static Move stab(int s) { return {MoveKind::Stab, s, {}}; }
  static Move loop_conj(int s) { return {MoveKind::LoopConj, s, {}}; }
  static Move bbm(int s) { return {MoveKind::Bbm, s, {}}; }
};

MixedBraidWord apply_move(const MixedBraidWord& w, const Move& m);

// Loop monomials -------------------------------------------------------------

enum class LoopKind { Plain, Primed };

/// t_{i1}^{k1} ... t_{im}^{km} * tail, indices increasing, exponents nonzero.
struct LoopMonomial {
  LoopKind kind = LoopKind::Primed;
  std::map<int, int> exponents;
  MixedBraidWord tail;  // sigma letters only

  LoopMonomial() = default;
  LoopMonomial(LoopKind k, std::map<int, int> exps, MixedBraidWord tl = {});

  int exponent_total() const;
  int max_index() const;  // -1 if no loops
  // Defining word on `strands` strands (at least max_index + 1 and the tail's).
  MixedBraidWord to_word(int strands = 0) const;
  std::string str() const;  // "t^2 t1'^3 | s1"
  friend bool operator==(const LoopMonomial&, const LoopMonomial&) = default;
};

int index_of(const LoopMonomial& m);

/// Ordering of loop monomials; equal loop parts fall back to tail length, then letters.
std::strong_ordering compare_monomials(const LoopMonomial& a, const LoopMonomial& b);

/// Ordering on symbols x_n that^m.
std::strong_ordering compare_D(std::pair<int, int> a, std::pair<int, int> b);

struct MonomialLess {
  bool operator()(const LoopMonomial& a, const LoopMonomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

}  // namespace skein
