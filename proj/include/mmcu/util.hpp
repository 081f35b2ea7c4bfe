// util.hpp — sorted-vector set helpers and bounded lexicographic subset enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mmcu {

// All "sets" in the public API are sorted, duplicate-free vectors.

template <typename T>
bool contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

template <typename T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
std::vector<T> set_intersection(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
std::vector<T> set_difference(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

namespace detail {
template <typename Visitor>
bool subset_rec(int n, int max_size, int start, std::vector<int>& cur, Visitor& visit) {
  if (!visit(static_cast<const std::vector<int>&>(cur))) return false;
  if (static_cast<int>(cur.size()) == max_size) return true;
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    if (!subset_rec(n, max_size, i + 1, cur, visit)) return false;
    cur.pop_back();
  }
  return true;
}
}  // namespace detail

// Visits every subset of {0,..,n-1} with at most max_size elements, as a
// sorted index vector, in lexicographic order: {}, {0}, {0,1}, {0,1,2}, ...
// The visitor returns false to stop; the function returns false iff stopped.
template <typename Visitor>
bool for_each_subset_lex(int n, int max_size, Visitor&& visit) {
  std::vector<int> cur;
  return detail::subset_rec(n, std::min(n, max_size), 0, cur, visit);
}

inline std::vector<std::vector<int>> all_subsets_lex(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for_each_subset_lex(n, max_size, [&](const std::vector<int>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// Number of subsets of an n-element set with at most max_size elements,
// saturating at `cap` to avoid overflow. Used for enumeration guards.
inline double subset_count(int n, int max_size) {
  double total = 0.0, c = 1.0;
  for (int i = 0; i <= std::min(n, max_size); ++i) {
    if (i > 0) c = c * (n - i + 1) / i;
    total += c;
    if (total > 1e18) return 1e18;
  }
  return total;
}

}  // namespace mmcu
