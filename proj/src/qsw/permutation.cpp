#include "qsw/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qsw {

Permutation::Permutation(const std::vector<int>& oneline) {
  const int m = static_cast<int>(oneline.size());
  if (m > 255) throw std::invalid_argument("permutation support too large");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int x : oneline) {
    if (x < 1 || x > m || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation of 1..m");
    seen[static_cast<std::size_t>(x)] = true;
  }
  oneline_.assign(oneline.begin(), oneline.end());
  trim();
}

void Permutation::trim() {
  while (!oneline_.empty() && oneline_.back() == oneline_.size()) oneline_.pop_back();
}

Permutation Permutation::simple(int r) {
  if (r < 1) throw std::invalid_argument("simple transposition index must be >= 1");
  return Permutation().times_simple(r);
}

Permutation Permutation::from_word(std::span<const int> word) {
  Permutation w;
  for (int r : word) w = w.times_simple(r);
  return w;
}

int Permutation::operator()(int i) const {
  if (i >= 1 && i <= support()) return oneline_[static_cast<std::size_t>(i - 1)];
  return i;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.oneline_.resize(oneline_.size());
  for (std::size_t k = 0; k < oneline_.size(); ++k)
    inv.oneline_[oneline_[k] - 1U] = static_cast<std::uint8_t>(k + 1);
  return inv;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < oneline_.size(); ++a)
    for (std::size_t b = a + 1; b < oneline_.size(); ++b)
      if (oneline_[a] > oneline_[b]) ++inv;
  return inv;
}

bool Permutation::has_left_descent(int r) const {
  // r+1 appears before r in one-line notation.
  for (std::uint8_t x : oneline_) {
    if (x == r) return false;
    if (x == r + 1) return true;
  }
  return false;
}

Permutation Permutation::times_simple(int r) const {
  Permutation w = *this;
  if (w.support() < r + 1) {
    const auto old = w.oneline_.size();
    w.oneline_.resize(static_cast<std::size_t>(r) + 1);
    for (std::size_t k = old; k < w.oneline_.size(); ++k) w.oneline_[k] = static_cast<std::uint8_t>(k + 1);
  }
  std::swap(w.oneline_[static_cast<std::size_t>(r) - 1], w.oneline_[static_cast<std::size_t>(r)]);
  w.trim();
  return w;
}

Permutation Permutation::simple_times(int r) const {
  Permutation w = *this;
  if (w.support() < r + 1) {
    const auto old = w.oneline_.size();
    w.oneline_.resize(static_cast<std::size_t>(r) + 1);
    for (std::size_t k = old; k < w.oneline_.size(); ++k) w.oneline_[k] = static_cast<std::uint8_t>(k + 1);
  }
  for (auto& x : w.oneline_) {
    if (x == r)
      x = static_cast<std::uint8_t>(r + 1);
    else if (x == r + 1)
      x = static_cast<std::uint8_t>(r);
  }
  w.trim();
  return w;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    int r = w.support() - 1;
    while (!w.has_right_descent(r)) --r;
    word.push_back(r);
    w = w.times_simple(r);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::is_min_coset_rep(int p) const {
  for (int r = 1; r < p; ++r)
    if (has_right_descent(r)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < oneline_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(oneline_[k]);
  }
  return s + "]";
}

std::string Permutation::to_word_string() const {
  if (is_identity()) return "id";
  std::string s;
  for (int r : reduced_word()) {
    if (!s.empty()) s += "*";
    s += "s" + std::to_string(r);
  }
  return s;
}

Permutation compose(const Permutation& u, const Permutation& w) {
  const int m = std::max(u.support(), w.support());
  std::vector<int> line(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) line[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation(line);
}

std::vector<int> right_descents(const Permutation& w, int bound) {
  if (bound < 1) throw std::invalid_argument("right_descents: bound must be >= 1");
  std::vector<int> out;
  for (int r = 1; r < bound; ++r)
    if (w.has_right_descent(r)) out.push_back(r);
  return out;
}

CosetDecomposition coset_decompose(const Permutation& w, int p) {
  if (p < 0) throw std::invalid_argument("coset_decompose: p must be >= 0");
  const int m = std::max(w.support(), p);
  std::vector<int> line(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) line[static_cast<std::size_t>(i - 1)] = w(i);
  std::sort(line.begin(), line.begin() + p);
  Permutation rep(line);
  return {rep, compose(rep.inverse(), w)};
}

Permutation shift(const Permutation& w, int k) {
  if (k < 0) throw std::invalid_argument("shift: k must be >= 0");
  if (w.is_identity() || k == 0) return w;
  std::vector<int> line(static_cast<std::size_t>(k + w.support()));
  std::iota(line.begin(), line.begin() + k, 1);
  for (int i = 1; i <= w.support(); ++i) line[static_cast<std::size_t>(k + i - 1)] = w(i) + k;
  return Permutation(line);
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> line(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Permutation> min_coset_reps(int m, int p) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(m))
    if (w.is_min_coset_rep(p)) out.push_back(w);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "id" || s == "[]" || s.empty()) return {};
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("permutation: missing ']'");
    std::vector<int> line;
    std::size_t pos = 1;
    while (pos < s.size() - 1) {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size() - 1;
      line.push_back(std::stoi(s.substr(pos, end - pos)));
      pos = end + 1;
    }
    return Permutation(line);
  }
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's' && s[pos] != 't') throw std::invalid_argument("permutation word: expected s<k>");
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    word.push_back(std::stoi(s.substr(pos + 1, end - pos - 1)));
    if (word.back() < 1) throw std::invalid_argument("permutation word: index must be >= 1");
    pos = end + 1;
  }
  return Permutation::from_word(word);
}

}  // namespace qsw
