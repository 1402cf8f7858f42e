#include "cpmu/permutation.hpp"

#include "cpmu/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cpmu {

namespace {

// Positions of `s` listed by increasing value. A window w is order
// isomorphic to s iff w is strictly increasing along this order.
std::vector<std::size_t> value_order(std::span<const int> s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  return order;
}

bool matches_at(std::span<const std::size_t> order, std::span<const int> text,
                std::size_t offset) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (text[offset + order[j - 1]] >= text[offset + order[j]])
      return false;
  }
  return true;
}

void require_length(const Permutation &t, std::size_t k, const char *what) {
  if (k < 1 || k > t.size())
    throw InvalidInput(std::string(what) + ": length " + std::to_string(k) +
                       " out of range 1.." + std::to_string(t.size()));
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0)
    throw InvalidInput("permutation must be non-empty");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InvalidInput("value " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
    if (seen[v])
      throw InvalidInput("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(std::string_view text) {
  auto trim_ws = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = trim_ws(text);
  if (text.empty())
    throw InvalidInput("empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    // Compact form: one digit per letter, so "10" is (1,0) and rejected.
    for (char c : text) {
      if (c < '0' || c > '9')
        throw InvalidInput("unexpected character '" + std::string(1, c) +
                           "' in permutation \"" + std::string(text) + "\"");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos)
        comma = text.size();
      auto field = trim_ws(text.substr(pos, comma - pos));
      int v = 0;
      auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
        throw InvalidInput("bad entry \"" + std::string(field) +
                           "\" in permutation \"" + std::string(text) + "\"");
      values.push_back(v);
      pos = comma + 1;
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  out.reserve(values_.size() * 3);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation &a, const Permutation &b) {
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << p.str();
}

Permutation standardize(std::span<const int> s) {
  if (s.empty())
    throw InvalidInput("cannot standardize an empty sequence");
  auto order = value_order(s);
  std::vector<int> out(s.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && s[order[rank - 1]] == s[order[rank]])
      throw InvalidInput("cannot standardize a sequence with repeated entries");
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::vector<std::size_t> occurrences(const Permutation &pattern,
                                     const Permutation &text) {
  std::vector<std::size_t> starts;
  const auto k = pattern.size();
  const auto n = text.size();
  if (k > n)
    return starts;
  const auto order = value_order(pattern.values());
  for (std::size_t i = 0; i + k <= n; ++i) {
    if (matches_at(order, text.values(), i))
      starts.push_back(i + 1);
  }
  return starts;
}

bool contains(const Permutation &text, const Permutation &pattern) {
  const auto k = pattern.size();
  const auto n = text.size();
  if (k > n)
    return false;
  if (k == n)
    return text == pattern;
  const auto order = value_order(pattern.values());
  for (std::size_t i = 0; i + k <= n; ++i) {
    if (matches_at(order, text.values(), i))
      return true;
  }
  return false;
}

TailProfile tails(const Permutation &pattern, const Permutation &text) {
  const auto starts = occurrences(pattern, text);
  if (starts.empty())
    throw NotContained(pattern.str() + " does not occur in " + text.str());
  return {starts.front() - 1, text.size() - (starts.back() + pattern.size() - 1)};
}

Permutation affix_pattern(const Permutation &t, std::size_t k, Side side) {
  require_length(t, k, "affix_pattern");
  auto v = t.values();
  return standardize(side == Side::Left ? v.first(k) : v.last(k));
}

bool is_bifix(const Permutation &t, std::size_t k) {
  require_length(t, k, "is_bifix");
  const auto order = value_order(t.values().first(k));
  return matches_at(order, t.values(), t.size() - k);
}

Permutation trim(const Permutation &t, bool drop_first, bool drop_last) {
  const std::size_t drop = (drop_first ? 1 : 0) + (drop_last ? 1 : 0);
  if (t.size() <= drop)
    throw InvalidInput("trimming " + t.str() + " leaves nothing");
  return standardize(t.values().subspan(drop_first ? 1 : 0, t.size() - drop));
}

bool is_monotone(const Permutation &t) {
  const auto v = t.values();
  return std::is_sorted(v.begin(), v.end()) ||
         std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

bool is_monotone_alternating(const Permutation &t) {
  const auto v = t.values();
  const auto n = v.size();
  for (std::size_t i = 2; i < n; ++i) {
    const bool up_before = v[i - 2] < v[i - 1];
    const bool up_here = v[i - 1] < v[i];
    if (up_before == up_here)
      return false;
  }
  auto parity_monotone = [&](std::size_t first) {
    std::vector<int> sub;
    for (std::size_t i = first; i < n; i += 2)
      sub.push_back(v[i]);
    return std::is_sorted(sub.begin(), sub.end()) ||
           std::is_sorted(sub.begin(), sub.end(), std::greater<>{});
  };
  return parity_monotone(0) && parity_monotone(1);
}

} // namespace cpmu

std::size_t std::hash<cpmu::Permutation>::operator()(
    const cpmu::Permutation &p) const noexcept {
  std::size_t h = p.size();
  for (int v : p.values())
    h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
