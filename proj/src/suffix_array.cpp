#include "sadic/suffix_array.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sadic {

namespace {

using Vec = std::vector<std::int32_t>;

void induce(const Vec& s, const std::vector<bool>& ls, const Vec& sum_s, const Vec& sum_l,
            const Vec& lms, Vec& sa) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  std::fill(sa.begin(), sa.end(), -1);
  Vec buf(sum_s);
  for (std::int32_t d : lms) {
    if (d == n) continue;
    sa[buf[s[d]]++] = d;
  }
  buf = sum_l;
  sa[buf[s[n - 1]]++] = n - 1;
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t v = sa[i];
    if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
  }
  buf = sum_l;
  for (std::int32_t i = n - 1; i >= 0; --i) {
    const std::int32_t v = sa[i];
    if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
  }
}

Vec sa_is(const Vec& s, std::int32_t upper) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? Vec{0, 1} : Vec{1, 0};

  Vec sa(n);
  // ls[i] true means suffix i is S-type.
  std::vector<bool> ls(n, false);
  for (std::int32_t i = n - 2; i >= 0; --i) {
    ls[i] = s[i] == s[i + 1] ? ls[i + 1] : s[i] < s[i + 1];
  }
  Vec sum_l(upper + 1, 0), sum_s(upper + 1, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    if (!ls[i]) {
      ++sum_s[s[i]];
    } else {
      ++sum_l[s[i] + 1];
    }
  }
  for (std::int32_t i = 0; i <= upper; ++i) {
    sum_s[i] += sum_l[i];
    if (i < upper) sum_l[i + 1] += sum_s[i];
  }

  Vec lms_map(n + 1, -1);
  std::int32_t m = 0;
  for (std::int32_t i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms_map[i] = m++;
  }
  Vec lms;
  lms.reserve(m);
  for (std::int32_t i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms.push_back(i);
  }

  induce(s, ls, sum_s, sum_l, lms, sa);

  if (m) {
    Vec sorted_lms;
    sorted_lms.reserve(m);
    for (std::int32_t v : sa) {
      if (lms_map[v] != -1) sorted_lms.push_back(v);
    }
    Vec rec_s(m);
    std::int32_t rec_upper = 0;
    rec_s[lms_map[sorted_lms[0]]] = 0;
    for (std::int32_t i = 1; i < m; ++i) {
      std::int32_t l = sorted_lms[i - 1], r = sorted_lms[i];
      const std::int32_t end_l = lms_map[l] + 1 < m ? lms[lms_map[l] + 1] : n;
      const std::int32_t end_r = lms_map[r] + 1 < m ? lms[lms_map[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l) {
          if (s[l] != s[r]) break;
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++rec_upper;
      rec_s[lms_map[sorted_lms[i]]] = rec_upper;
    }
    const Vec rec_sa = sa_is(rec_s, rec_upper);
    for (std::int32_t i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
    induce(s, ls, sum_s, sum_l, sorted_lms, sa);
  }
  return sa;
}

}  // namespace

std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper) {
  if (upper < 0) throw std::invalid_argument("suffix_array: negative alphabet bound");
  for (std::int32_t c : s) {
    if (c < 0 || c > upper) throw std::invalid_argument("suffix_array: symbol outside [0, upper]");
  }
  return sa_is(s, upper);
}

std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s,
                                    const std::vector<std::int32_t>& sa) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> lcp(n, 0);
  if (n == 0) return lcp;
  std::vector<std::int32_t> rank(n);
  for (std::int32_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (h > 0) --h;
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::int32_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
  }
  return lcp;
}

}  // namespace sadic
