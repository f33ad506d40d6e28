#include "mh/words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mh/errors.hpp"
#include "mh/numeric.hpp"

namespace mh {

Word::Word(std::vector<std::size_t> labels) : labels_(std::move(labels)) {}

void Word::validate(std::size_t n) const {
  for (std::size_t t = 0; t < labels_.size(); ++t) {
    if (labels_[t] < 1 || labels_[t] > n) {
      throw InvalidWord("label " + std::to_string(labels_[t]) + " at position " +
                        std::to_string(t + 1) + " is outside 1.." + std::to_string(n));
    }
    if (t > 0 && labels_[t] == labels_[t - 1]) {
      throw InvalidWord("label " + std::to_string(labels_[t]) + " repeats at position " +
                        std::to_string(t + 1));
    }
  }
}

std::optional<std::size_t> Word::last() const {
  if (labels_.empty()) return std::nullopt;
  return labels_.back();
}

Word Word::prefix(std::size_t length) const {
  length = std::min(length, labels_.size());
  return Word({labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(length)});
}

Word Word::reversed() const { return Word({labels_.rbegin(), labels_.rend()}); }

Word Word::appended(std::size_t label) const {
  std::vector<std::size_t> next;
  next.reserve(labels_.size() + 1);
  next = labels_;
  next.push_back(label);
  return Word(std::move(next));
}

Word cyclic_word(std::size_t n, std::size_t length, std::size_t start) {
  if (n < 2) throw InvalidWord("cyclic words need at least two labels");
  if (start < 1 || start > n) throw InvalidWord("cyclic start outside 1..n");
  std::vector<std::size_t> labels(length);
  for (std::size_t t = 0; t < length; ++t) labels[t] = (start - 1 + t) % n + 1;
  return Word(std::move(labels));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Word random_word(std::size_t n, std::size_t length, std::uint64_t seed,
                 std::optional<std::size_t> window) {
  if (n < 2) throw InvalidWord("random words need at least two labels");
  std::uint64_t state = seed;
  std::vector<std::size_t> last_seen(n + 1, 0);
  std::vector<std::size_t> labels;
  labels.reserve(length);
  std::size_t prev = 0;
  for (std::size_t t = 1; t <= length; ++t) {
    std::size_t pick = 0;
    if (window) {
      std::size_t oldest = 0;
      std::size_t age = 0;
      bool any = false;
      for (std::size_t d = 1; d <= n; ++d) {
        if (d == prev) continue;
        if (!any || t - last_seen[d] > age) {
          oldest = d;
          age = t - last_seen[d];
          any = true;
        }
      }
      if (age >= *window / 2) pick = oldest;
    }
    if (pick == 0) {
      std::uint64_t choices = prev == 0 ? n : n - 1;
      pick = static_cast<std::size_t>(splitmix64(state) % choices) + 1;
      if (prev != 0 && pick >= prev) ++pick;
    }
    labels.push_back(pick);
    last_seen[pick] = t;
    prev = pick;
  }
  return Word(std::move(labels));
}

Word parse_word(std::string_view text) {
  std::vector<std::size_t> labels;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    BigInt v = parse_bigint(token);
    if (v < 1 || !v.fits_ulong_p()) throw InvalidWord("bad label '" + token + "'");
    labels.push_back(v.get_ui());
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '[' || c == ']') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Word(std::move(labels));
}

Word read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read word file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word(buf.str());
}

bool is_generic_prefix(const Word& word, std::size_t n, std::size_t window) {
  if (window == 0) return false;
  const auto labels = word.labels();
  const std::size_t span = std::min(window, labels.size());
  if (span == 0) return false;
  std::vector<std::size_t> counts(n + 1, 0);
  std::size_t present = 0;
  auto add = [&](std::size_t label) {
    if (label <= n && counts[label]++ == 0) ++present;
  };
  auto remove = [&](std::size_t label) {
    if (label <= n && --counts[label] == 0) --present;
  };
  for (std::size_t t = 0; t < span; ++t) add(labels[t]);
  if (present != n) return false;
  for (std::size_t t = span; t < labels.size(); ++t) {
    add(labels[t]);
    remove(labels[t - span]);
    if (present != n) return false;
  }
  return true;
}

std::string to_string(const Word& word, char separator) {
  std::string out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) out.push_back(separator);
    out += std::to_string(word[t]);
  }
  return out;
}

}  // namespace mh
