#include "rulekit/selection.hpp"

#include <numeric>
#include <string>

#include "rulekit/error.hpp"

namespace rulekit {

std::vector<std::size_t> range_indices(std::size_t first, std::size_t last, std::size_t n) {
    if (first > last || last > n)
        throw Error("range [" + std::to_string(first) + ", " + std::to_string(last) +
                    ") out of bounds for " + std::to_string(n) + " rows");
    std::vector<std::size_t> out(last - first);
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::vector<std::size_t> mask_indices(const std::vector<bool>& mask, std::size_t n) {
    if (mask.size() != n)
        throw Error("mask length " + std::to_string(mask.size()) + " does not match " +
                    std::to_string(n) + " rows");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) out.push_back(i);
    return out;
}

void check_indices(const std::vector<std::size_t>& indices, std::size_t n) {
    for (auto i : indices)
        if (i >= n)
            throw Error("index " + std::to_string(i) + " out of bounds for " + std::to_string(n) +
                        " rows");
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n)
        throw Error("cannot sample " + std::to_string(k) + " rows from " + std::to_string(n));
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        // Unbiased rejection draw in [0, span).
        std::uint64_t span = n - i;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = rng();
        } while (draw >= limit);
        std::swap(pool[i], pool[i + draw % span]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace rulekit
