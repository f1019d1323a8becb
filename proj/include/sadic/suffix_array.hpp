#pragma once

// Suffix array (SA-IS) and LCP array (Kasai) over integer alphabets.

#include <cstdint>
#include <vector>

namespace sadic {

/// Suffix array of s, whose symbols lie in [0, upper].
std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper);

/// lcp[k] = longest common prefix of suffixes sa[k-1] and sa[k]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s,
                                    const std::vector<std::int32_t>& sa);

}  // namespace sadic
