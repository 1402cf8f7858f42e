#ifndef CPMU_PERMUTATION_HPP
#define CPMU_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpmu {

/**
 * A permutation of {1, ..., n} in one-line notation, n >= 1.
 *
 * Construction validates that the values are a rearrangement of 1..n.
 * Indexing through operator[] is 0-based; every position that is reported
 * to a user (occurrence starts, tails) is 1-based.
 */
class Permutation {
public:
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Parses either a compact digit string ("231", only for n <= 9) or a
  /// comma-separated list ("2,5,7,1,4,8,9,3,6,10").
  static Permutation parse(std::string_view text);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  /// Canonical comma-separated form.
  std::string str() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  /// Shorter permutations first, then lexicographic on values. This is the
  /// node order used by every export.
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b);

private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation standardize(std::span<const int> s);

  std::vector<int> values_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Left and right tail lengths of a text with respect to a pattern.
struct TailProfile {
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const TailProfile &, const TailProfile &) = default;
};

enum class Side { Left, Right };

/// The permutation order isomorphic to a sequence of distinct integers.
/// Throws InvalidInput on empty input or repeated entries.
Permutation standardize(std::span<const int> s);

/// Ascending 1-based start positions of all consecutive occurrences of
/// `pattern` in `text`.
std::vector<std::size_t> occurrences(const Permutation &pattern,
                                     const Permutation &text);

/// True iff `pattern` occurs at least once in `text`; stops at the first hit.
bool contains(const Permutation &text, const Permutation &pattern);

/// Throws NotContained when the pattern does not occur.
TailProfile tails(const Permutation &pattern, const Permutation &text);

/// Prefix (Side::Left) or suffix (Side::Right) pattern of length k.
Permutation affix_pattern(const Permutation &t, std::size_t k, Side side);

bool is_bifix(const Permutation &t, std::size_t k);

/// Standard form of t with its first and/or last letter removed.
Permutation trim(const Permutation &t, bool drop_first, bool drop_last);

bool is_monotone(const Permutation &t);

/// Alternating in either sense (a1<a2>a3... or a1>a2<a3...) with the
/// odd-position and even-position subsequences each monotone.
bool is_monotone_alternating(const Permutation &t);

} // namespace cpmu

template <> struct std::hash<cpmu::Permutation> {
  std::size_t operator()(const cpmu::Permutation &p) const noexcept;
};

#endif // CPMU_PERMUTATION_HPP
