#pragma once

#include "lenz/construction.hpp"
#include "lenz/detail/combinatorics.hpp"
#include "lenz/detail/parallel.hpp"
#include "lenz/exactnum.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace lenz {

/// Summands of f_k: product term, good-pair term, inscribed-triangle term.
struct FormulaTerms {
    BigInt delta1 = 0;
    BigInt delta2 = 0;
    BigInt delta3 = 0;
    friend bool operator==(const FormulaTerms&, const FormulaTerms&) = default;
};

struct FormulaResult {
    BigInt value = 0;
    std::vector<PartitionVector> argmax;  // maximization only; nondecreasing, sorted
    std::optional<FormulaTerms> terms;
    bool touches_boundary = false;        // maximization only
    long long window = 0;                 // maximization only: window actually searched
};

/// n - [n not divisible by 4]
inline long long good_pairs_formula(long long n_i) { return n_i - (n_i % 4 != 0 ? 1 : 0); }

/// (n - p)/3 + [p > 8](p - 8) with p = n mod 12
inline long long triangles_formula(long long n_i) {
    const long long p = n_i % 12;
    return (n_i - p) / 3 + (p > 8 ? p - 8 : 0);
}

namespace detail {

inline void check_partition(const PartitionVector& v) {
    for (long long x : v.entries) {
        if (x < 0) throw domain_error("partition entries must be nonnegative");
    }
}

/// sum over I in C(pool, m) of prod_{i in I} n_i, enumerated literally
inline BigInt sum_of_products(const std::vector<long long>& n, const std::vector<std::size_t>& pool, std::size_t m) {
    BigInt acc = 0;
    for_each_combination(pool.size(), m, [&](std::span<const std::size_t> I) {
        BigInt prod = 1;
        for (std::size_t i : I) prod *= n[pool[i]];
        acc += prod;
    });
    return acc;
}

inline FormulaTerms f_k_terms(const PartitionVector& part, long long k) {
    const auto& n = part.entries;
    const std::size_t r = n.size();
    std::vector<std::size_t> all(r);
    for (std::size_t i = 0; i < r; ++i) all[i] = i;

    FormulaTerms t;
    t.delta1 = sum_of_products(n, all, static_cast<std::size_t>(k));
    for (long long l = 1; l <= k / 2; ++l) {
        for_each_combination(r, static_cast<std::size_t>(l), [&](std::span<const std::size_t> J) {
            BigInt pairs = 1;
            std::vector<std::size_t> rest;
            for (std::size_t i = 0, j = 0; i < r; ++i) {
                if (j < J.size() && J[j] == i) {
                    pairs *= good_pairs_formula(n[i]);
                    ++j;
                } else {
                    rest.push_back(i);
                }
            }
            t.delta2 += pairs * sum_of_products(n, rest, static_cast<std::size_t>(k - 2 * l));
        });
    }
    if (k == 3) {
        for (long long x : n) t.delta3 += triangles_formula(x);
    }
    return t;
}

}  // namespace detail

/// f_k(n_1, ..., n_r): the number of regular (k-1)-simplices realized by the even Lenz
/// construction with these class sizes.
inline FormulaResult eval_f_k(const PartitionVector& partition, long long k) {
    if (k < 3) throw domain_error("f_k needs k >= 3");
    if (static_cast<long long>(partition.r()) < k) throw domain_error("f_k needs r >= k");
    detail::check_partition(partition);
    FormulaResult res;
    res.terms = detail::f_k_terms(partition, k);
    res.value = res.terms->delta1 + res.terms->delta2 + res.terms->delta3;
    return res;
}

/// Triangle count of R^{2r} at the case-selected partition.
inline FormulaResult eval_T2r_closed(long long n, long long r) {
    auto res = eval_f_k(theorem12_partition(n, r), 3);
    res.argmax = {theorem12_partition(n, r).sorted()};
    return res;
}

/// C(r,3) (n/r)^3 + (r-1) n^2 / r + n/3, defined when 12r divides n.
inline FormulaResult eval_corollary13(long long n, long long r) {
    if (r < 3) throw domain_error("corollary formula needs r >= 3");
    if (n <= 0 || n % (12 * r) != 0) throw domain_error("corollary formula needs n divisible by 12r");
    const Rational nr{BigInt(n), BigInt(r)};
    const Rational v = Rational(binomial(r, 3)) * nr * nr * nr +
                       Rational(BigInt(r - 1) * BigInt(n) * BigInt(n), BigInt(r)) + Rational(BigInt(n), BigInt(3));
    if (!v.is_integer()) throw domain_error("corollary formula produced a non-integer");
    FormulaResult res;
    res.value = v.num();
    FormulaTerms t;
    t.delta1 = (Rational(binomial(r, 3)) * nr * nr * nr).num();
    t.delta2 = BigInt(r - 1) * BigInt(n) * BigInt(n) / BigInt(r);
    t.delta3 = BigInt(n / 3);
    res.terms = t;
    return res;
}

/// f_3 without its inscribed-triangle term: triangles of side sqrt(2)*gamma only.
inline FormulaResult eval_unit_triangle_formula(const PartitionVector& partition) {
    if (partition.r() < 3) throw domain_error("unit triangle formula needs r >= 3");
    detail::check_partition(partition);
    FormulaResult res;
    FormulaTerms t = detail::f_k_terms(partition, 3);
    t.delta3 = 0;
    res.value = t.delta1 + t.delta2;
    res.terms = t;
    return res;
}

/// Leading term C(r,k) (n/r)^k.
inline Rational asymptotic_leading(long long n, long long r, long long k) {
    if (k < 3 || r < k) throw domain_error("asymptotic term needs r >= k >= 3");
    if (n < 0) throw domain_error("negative n");
    Rational base{BigInt(n), BigInt(r)};
    Rational acc(binomial(r, k));
    for (long long i = 0; i < k; ++i) acc *= base;
    return acc;
}

/// Window bounds for |n_i - n/r| <= window, clipped to [0, n].
struct SearchWindow {
    long long lo = 0;
    long long hi = 0;
    bool lo_is_window = false;  // lo comes from the window rather than from n_i >= 0
    bool hi_is_window = false;  // hi comes from the window rather than from n_i <= n
};

inline SearchWindow search_window(long long n, long long r, long long window) {
    // n_i * r in [n - window*r, n + window*r]
    auto floor_div = [](long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    auto ceil_div = [&](long long a, long long b) { return -floor_div(-a, b); };
    SearchWindow w;
    const long long lo = ceil_div(n - window * r, r);
    const long long hi = floor_div(n + window * r, r);
    w.lo = std::max(0LL, lo);
    w.lo_is_window = lo > 0;
    w.hi = std::min(n, hi);
    w.hi_is_window = hi < n;
    return w;
}

namespace detail {

template <class Visit>
void enumerate_nondecreasing(std::vector<long long>& prefix, long long remaining, long long slots, long long lo,
                             long long hi, Visit&& visit) {
    if (slots == 0) {
        if (remaining == 0) visit(prefix);
        return;
    }
    for (long long x = lo; x <= hi; ++x) {
        if (x * slots > remaining) break;          // nondecreasing: the rest is at least x each
        if (hi * (slots - 1) + x < remaining) continue;  // cannot reach the sum
        prefix.push_back(x);
        enumerate_nondecreasing(prefix, remaining - x, slots - 1, x, hi, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Exhaustive maximization of f_k over nondecreasing vectors with |n_i - n/r| <= window and
/// sum n. Returns the maximum, the full tie set, and whether any maximizer sits on a bound
/// imposed by the window (in which case a wider window might find more).
inline FormulaResult maximize_f_k(long long n, long long r, long long k, long long window, unsigned workers = 1) {
    if (k < 3 || r < k) throw domain_error("maximization needs r >= k >= 3");
    if (n < 0 || window < 0) throw domain_error("negative n or window");
    const SearchWindow w = search_window(n, r, window);

    struct Best {
        std::optional<BigInt> value;
        std::vector<PartitionVector> argmax;
    };
    const long long firsts = w.hi >= w.lo ? w.hi - w.lo + 1 : 0;
    auto parts = detail::parallel_map<Best>(static_cast<std::size_t>(firsts), workers, [&](std::size_t t) {
        Best best;
        const long long first = w.lo + static_cast<long long>(t);
        std::vector<long long> prefix{first};
        if (first * r > n) return best;
        detail::enumerate_nondecreasing(prefix, n - first, r - 1, first, w.hi, [&](const std::vector<long long>& v) {
            PartitionVector pv{v};
            const auto terms = detail::f_k_terms(pv, k);
            BigInt val = terms.delta1 + terms.delta2 + terms.delta3;
            if (!best.value || val > *best.value) {
                best.value = val;
                best.argmax = {pv};
            } else if (val == *best.value) {
                best.argmax.push_back(pv);
            }
        });
        return best;
    });

    FormulaResult res;
    res.window = window;
    std::optional<BigInt> top;
    for (auto& b : parts) {
        if (!b.value) continue;
        if (!top || *b.value > *top) {
            top = b.value;
            res.argmax = std::move(b.argmax);
        } else if (*b.value == *top) {
            res.argmax.insert(res.argmax.end(), b.argmax.begin(), b.argmax.end());
        }
    }
    if (!top) throw domain_error("empty search space");
    res.value = *top;
    std::sort(res.argmax.begin(), res.argmax.end());
    res.terms = detail::f_k_terms(res.argmax.front(), k);
    for (const auto& v : res.argmax) {
        for (long long x : v.entries) {
            if ((w.lo_is_window && x == w.lo) || (w.hi_is_window && x == w.hi)) res.touches_boundary = true;
        }
    }
    return res;
}

/// maximize_f_k, widening the window until no maximizer touches it.
inline FormulaResult maximize_f_k_auto(long long n, long long r, long long k, long long window = 6, unsigned workers = 1) {
    while (true) {
        auto res = maximize_f_k(n, r, k, window, workers);
        if (!res.touches_boundary) return res;
        window *= 2;
    }
}

/// Structural facts about maximizers of f_3 proved for large n: pairwise gaps at most 2,
/// gaps of exactly 2 only between even entries, at most one odd entry.
struct StructureCheck {
    bool gap_at_most_two = true;
    bool gap_two_even = true;
    bool at_most_one_odd = true;
    bool all() const { return gap_at_most_two && gap_two_even && at_most_one_odd; }
};

inline StructureCheck check_maximizer_structure(const PartitionVector& v) {
    StructureCheck c;
    const auto& e = v.entries;
    int odd = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] % 2 != 0) ++odd;
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const long long gap = e[i] > e[j] ? e[i] - e[j] : e[j] - e[i];
            if (gap > 2) c.gap_at_most_two = false;
            if (gap == 2 && (e[i] % 2 != 0 || e[j] % 2 != 0)) c.gap_two_even = false;
        }
    }
    c.at_most_one_odd = odd <= 1;
    return c;
}

}  // namespace lenz
