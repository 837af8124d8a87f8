#ifndef RULEKIT_SELECTION_HPP
#define RULEKIT_SELECTION_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace rulekit {

// Indices [first, last) of a container of n rows. Throws if last > n or
// first > last.
std::vector<std::size_t> range_indices(std::size_t first, std::size_t last, std::size_t n);

// Indices of the set entries of a boolean mask; mask.size() must equal n.
std::vector<std::size_t> mask_indices(const std::vector<bool>& mask, std::size_t n);

// Throws if any index is >= n.
void check_indices(const std::vector<std::size_t>& indices, std::size_t n);

// k distinct indices drawn uniformly from [0, n) (partial Fisher-Yates).
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

template <class T>
T select_range(const T& x, std::size_t first, std::size_t last) {
    return x.select(range_indices(first, last, x.size()));
}

template <class T>
T select_mask(const T& x, const std::vector<bool>& mask) {
    return x.select(mask_indices(mask, x.size()));
}

template <class T>
T sample_rows(const T& x, std::size_t k, std::uint64_t seed) {
    return x.select(sample_indices(x.size(), k, seed));
}

inline std::vector<bool> negate(const std::vector<bool>& mask) {
    std::vector<bool> out(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) out[i] = !mask[i];
    return out;
}

}  // namespace rulekit

#endif  // RULEKIT_SELECTION_HPP
