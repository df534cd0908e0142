#pragma once

#include "lenz/exactnum.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lenz::detail {

/// Calls fn(indices) for every increasing k-subset of [0, n), in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k == 0) {
        std::vector<std::size_t> none;
        fn(std::span<const std::size_t>(none));
        return;
    }
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// k-subsets of [0, n) whose smallest element is `head`.
template <class Fn>
void for_each_combination_with_head(std::size_t n, std::size_t k, std::size_t head, Fn&& fn) {
    if (k == 0 || head >= n) return;
    std::vector<std::size_t> full(k);
    full[0] = head;
    for_each_combination(n - head - 1, k - 1, [&](std::span<const std::size_t> tail) {
        for (std::size_t i = 0; i < tail.size(); ++i) full[i + 1] = head + 1 + tail[i];
        fn(std::span<const std::size_t>(full));
    });
}

/// Elementary symmetric polynomial e_m(values) by the usual DP.
inline BigInt elementary_symmetric(std::span<const BigInt> values, long long m) {
    if (m < 0) return 0;
    std::vector<BigInt> e(static_cast<std::size_t>(m) + 1, BigInt(0));
    e[0] = 1;
    for (const auto& v : values) {
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * v;
    }
    return e[static_cast<std::size_t>(m)];
}

}  // namespace lenz::detail
