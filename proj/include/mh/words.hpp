// Mutation words: paths in the n-ary labelled tree, where consecutive
// labels differ. Labels are 1-based throughout the library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mh {

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::size_t> labels);

  /// Throws InvalidWord when a label is outside 1..n or repeats its
  /// predecessor.
  void validate(std::size_t n) const;

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t operator[](std::size_t t) const { return labels_[t]; }
  std::span<const std::size_t> labels() const noexcept { return labels_; }

  std::optional<std::size_t> last() const;
  Word prefix(std::size_t length) const;
  Word reversed() const;
  Word appended(std::size_t label) const;

  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::size_t> labels_;
};

/// 1,2,...,n repeated, beginning at `start`.
Word cyclic_word(std::size_t n, std::size_t length, std::size_t start = 1);

/// Seeded uniform choice among the labels that differ from the previous one
/// (splitmix64). With `window` set, a label that has been absent for
/// window/2 steps is forced, so every label appears in every window of that
/// length.
Word random_word(std::size_t n, std::size_t length, std::uint64_t seed,
                 std::optional<std::size_t> window = std::nullopt);

/// Comma- or whitespace-separated labels, e.g. "2,1" or "2 1".
Word parse_word(std::string_view text);

Word read_word_file(const std::string& path);

/// True when every label 1..n occurs in every length-`window` slice of the
/// word. Words shorter than the window are checked as a single slice.
bool is_generic_prefix(const Word& word, std::size_t n, std::size_t window);

inline std::size_t default_generic_window(std::size_t n) { return 4 * n; }

std::string to_string(const Word& word, char separator = ',');

/// splitmix64 step; exposed so tests can reproduce seeded streams.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace mh
