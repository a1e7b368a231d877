#pragma once

// Finitely supported permutations of {1, 2, 3, ...}.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsw {

/// One-line notation (w(1), ..., w(m)) with trailing fixed points trimmed,
/// so S_p inside S_{p+1} is a literal inclusion of values.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `oneline` is a bijection of {1..m}.
  explicit Permutation(const std::vector<int>& oneline);

  /// The adjacent transposition s_r = (r r+1).
  static Permutation simple(int r);
  /// s_{word[0]} o s_{word[1]} o ... ; no reducedness required.
  static Permutation from_word(std::span<const int> word);

  int operator()(int i) const;
  int support() const { return static_cast<int>(oneline_.size()); }
  bool is_identity() const { return oneline_.empty(); }
  std::vector<int> oneline() const { return {oneline_.begin(), oneline_.end()}; }

  Permutation inverse() const;
  int length() const;
  bool has_right_descent(int r) const { return (*this)(r) > (*this)(r + 1); }
  bool has_left_descent(int r) const;
  /// w o s_r, i.e. the positions r and r+1 swapped.
  Permutation times_simple(int r) const;
  /// s_r o w, i.e. the values r and r+1 swapped.
  Permutation simple_times(int r) const;

  /// Reduced word obtained by repeatedly peeling the rightmost right descent.
  std::vector<int> reduced_word() const;
  /// True iff w(1) < w(2) < ... < w(p).
  bool is_min_coset_rep(int p) const;

  std::string to_string() const;       // [2,3,1]
  std::string to_word_string() const;  // s1*s2, "id" for the identity

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  void trim();

  std::vector<std::uint8_t> oneline_;
};

/// (u o w)(i) = u(w(i)).
Permutation compose(const Permutation& u, const Permutation& w);

inline int length(const Permutation& w) { return w.length(); }

/// {r < bound : w(r) > w(r+1)}.
std::vector<int> right_descents(const Permutation& w, int bound);

struct CosetDecomposition {
  Permutation representative;  // increasing on 1..p
  Permutation parabolic;       // supported on 1..p
};

/// w = representative o parabolic with additive lengths.
CosetDecomposition coset_decompose(const Permutation& w, int p);

/// Fixes 1..k and acts as w on the translated indices.
Permutation shift(const Permutation& w, int k);

/// All of S_m in lexicographic one-line order.
std::vector<Permutation> all_permutations(int m);
/// Minimal representatives of the cosets w S_p inside S_m.
std::vector<Permutation> min_coset_reps(int m, int p);

/// Accepts "[2,3,1]", a generator word "s1*s2", or "id".
Permutation parse_permutation(std::string_view text);

}  // namespace qsw
