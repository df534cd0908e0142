#pragma once

// Regular simplex census. Three independent routes:
//   * count_brute_force      exact coordinates, pairwise squared distances in Q(sqrt3)
//   * brute_force_structured every k-subset of a CircleConfig, judged by tick arithmetic
//   * count_structured       closed-form type counts from per-circle good pairs and triangles
//
// Parallel variants split the enumeration by the smallest selected index and reduce the
// per-index counts in index order, so results are identical for every worker count.

#include "lenz/construction.hpp"
#include "lenz/detail/combinatorics.hpp"
#include "lenz/detail/parallel.hpp"
#include "lenz/exactnum.hpp"
#include "lenz/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lenz {

/// Raised when a structured counter is handed a configuration it cannot count exactly
/// (components with different radii). Use count_brute_force on the embedding instead.
class unsupported_configuration : public domain_error {
public:
    unsupported_configuration() : domain_error("unsupported configuration: components do not share one radius") {}
};

/// Simplex census by type: Δ1 at most one vertex per circle, Δ2 some circle holding exactly
/// two and none holding three, Δ3 three vertices on one circle.
struct CountReport {
    BigInt delta1 = 0;
    BigInt delta2 = 0;
    BigInt delta3 = 0;
    BigInt total = 0;
    std::optional<Rational> side_length_sq;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// ---------------------------------------------------------------------------------------------
// Coordinates

namespace detail {

/// Pairwise squared distances replaced by dense class ids, so the search compares ints.
struct DistanceClasses {
    std::vector<std::vector<int>> id;
    std::vector<Quad3> values;
};

inline DistanceClasses classify_distances(const PointSet& P) {
    DistanceClasses dc;
    std::map<Quad3, int> lookup;
    const std::size_t n = P.size();
    dc.id.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Quad3 d = sq_dist(P[i], P[j]);
            auto [it, inserted] = lookup.try_emplace(d, static_cast<int>(dc.values.size()));
            if (inserted) dc.values.push_back(d);
            dc.id[i][j] = dc.id[j][i] = it->second;
        }
    }
    return dc;
}

template <class Fn>
void visit_equidistant(const std::vector<std::vector<int>>& D, int side, std::vector<std::size_t>& chosen,
                       std::size_t k, Fn& fn) {
    if (chosen.size() == k) {
        fn(std::span<const std::size_t>(chosen));
        return;
    }
    for (std::size_t cand = chosen.back() + 1; cand < D.size(); ++cand) {
        bool ok = true;
        for (std::size_t c : chosen) {
            if (D[c][cand] != side) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        visit_equidistant(D, side, chosen, k, fn);
        chosen.pop_back();
    }
}

/// Regular simplices whose smallest vertex is `head`; subsets are grown vertex by vertex and
/// abandoned at the first unequal distance. `wanted` < 0 means any side length.
template <class Fn>
void visit_with_head(const DistanceClasses& dc, std::size_t head, std::size_t k, int wanted, Fn& fn) {
    std::vector<std::size_t> chosen;
    for (std::size_t second = head + 1; second < dc.id.size(); ++second) {
        const int side = dc.id[head][second];
        if (wanted >= 0 && side != wanted) continue;
        chosen.assign({head, second});
        visit_equidistant(dc.id, side, chosen, k, fn);
    }
}

/// Class id of `side_sq`, -1 for "no filter", -2 when the distance never occurs.
inline int wanted_class(const DistanceClasses& dc, const std::optional<Quad3>& side_sq) {
    if (!side_sq) return -1;
    for (std::size_t v = 0; v < dc.values.size(); ++v) {
        if (dc.values[v] == *side_sq) return static_cast<int>(v);
    }
    return -2;
}

}  // namespace detail

/// Number of k-subsets of P that are regular simplices, optionally only those whose squared
/// side equals `side_sq`.
inline BigInt count_brute_force(const PointSet& P, std::size_t k, const std::optional<Quad3>& side_sq = std::nullopt,
                                unsigned workers = 1) {
    if (k < 2) throw domain_error("k must be at least 2");
    if (P.size() < k) return 0;
    const auto dc = detail::classify_distances(P);
    const int wanted = detail::wanted_class(dc, side_sq);
    if (wanted == -2) return 0;
    auto per_head = detail::parallel_map<std::uint64_t>(P.size(), workers, [&](std::size_t head) {
        std::uint64_t count = 0;
        auto tally = [&](std::span<const std::size_t>) { ++count; };
        detail::visit_with_head(dc, head, k, wanted, tally);
        return count;
    });
    BigInt total = 0;
    for (auto c : per_head) total += c;
    return total;
}

// ---------------------------------------------------------------------------------------------
// Tick arithmetic

enum class ChordClass { zero, quarter, third, other };

/// Chord class of two ticks dt apart on a circle of modulus N: a quarter turn gives squared
/// chord 2*gamma^2 (the cross-circle distance), a third of a turn gives 3*gamma^2.
inline ChordClass tick_chord_class(long long N, long long dt) {
    if (N <= 0 || N % 12 != 0) throw domain_error("modulus must be a positive multiple of 12");
    dt = ((dt % N) + N) % N;
    if (dt == 0) return ChordClass::zero;
    if (dt == N / 4 || dt == N - N / 4) return ChordClass::quarter;
    if (dt == N / 3 || dt == N - N / 3) return ChordClass::third;
    return ChordClass::other;
}

/// Unordered tick pairs a quarter turn apart.
inline BigInt count_good_pairs(std::span<const long long> ticks, long long N) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        for (std::size_t j = i + 1; j < ticks.size(); ++j) {
            if (tick_chord_class(N, ticks[j] - ticks[i]) == ChordClass::quarter) ++count;
        }
    }
    return count;
}

/// Tick triples pairwise a third of a turn apart (inscribed equilateral triangles).
inline BigInt count_inscribed_triangles(std::span<const long long> ticks, long long N) {
    std::uint64_t count = 0;
    const std::size_t n = ticks.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (tick_chord_class(N, ticks[j] - ticks[i]) != ChordClass::third) continue;
            for (std::size_t l = j + 1; l < n; ++l) {
                if (tick_chord_class(N, ticks[l] - ticks[i]) == ChordClass::third &&
                    tick_chord_class(N, ticks[l] - ticks[j]) == ChordClass::third) {
                    ++count;
                }
            }
        }
    }
    return count;
}

/// Whether the selected points are pairwise equidistant. Points on different components are
/// always sqrt(2)*gamma apart, so a selection spread over several components needs every
/// same-component pair a quarter turn apart; a selection inside one component (k = 3 only)
/// needs all three pairs a third of a turn apart.
inline bool is_structured_simplex(const CircleConfig& cfg, std::span<const TickPoint> sel) {
    if (!cfg.has_common_radius()) throw unsupported_configuration();
    if (sel.size() < 2) throw domain_error("a simplex needs at least 2 vertices");
    bool single_component = true;
    for (const auto& p : sel) single_component = single_component && p.component == sel[0].component;

    for (std::size_t i = 0; i < sel.size(); ++i) {
        for (std::size_t j = i + 1; j < sel.size(); ++j) {
            if (sel[i].component != sel[j].component) continue;
            const long long N = cfg.components[sel[i].component].modulus;
            const ChordClass cls = tick_chord_class(N, sel[j].tick - sel[i].tick);
            if (cls == ChordClass::zero) throw domain_error("selection contains a repeated point");
            if (single_component && sel.size() > 2) {
                if (cls != ChordClass::third) return false;
            } else if (!single_component && cls != ChordClass::quarter) {
                return false;
            }
        }
    }
    // a lone same-circle pair is a (degenerate) regular 1-simplex
    return true;
}

namespace detail {

inline Rational side_sq_of_type(const CircleConfig& cfg, int type) {
    return (type == 3 ? Rational(3) : Rational(2)) * cfg.radius_sq;
}

inline bool side_matches(const CircleConfig& cfg, int type, const std::optional<Rational>& side_sq) {
    return !side_sq || *side_sq == side_sq_of_type(cfg, type);
}

inline void finish(CountReport& rep) { rep.total = rep.delta1 + rep.delta2 + rep.delta3; }

}  // namespace detail

/// Exhaustive enumeration of all k-subsets of the configuration, judged by
/// is_structured_simplex and typed by the largest per-component multiplicity.
inline CountReport brute_force_structured(const CircleConfig& cfg, std::size_t k,
                                          const std::optional<Rational>& side_sq = std::nullopt,
                                          unsigned workers = 1) {
    if (k < 3) throw domain_error("k must be at least 3");
    cfg.validate();
    if (!cfg.has_common_radius()) throw unsupported_configuration();
    const auto pts = enumerate_points(cfg);
    const std::size_t n = pts.size();

    struct Partial {
        std::uint64_t d[3] = {0, 0, 0};
    };
    auto per_head = detail::parallel_map<Partial>(n, workers, [&](std::size_t head) {
        Partial part;
        std::vector<TickPoint> sel(k);
        std::vector<int> mult(cfg.r());
        detail::for_each_combination_with_head(n, k, head, [&](std::span<const std::size_t> idx) {
            for (std::size_t i = 0; i < k; ++i) sel[i] = pts[idx[i]];
            if (!is_structured_simplex(cfg, sel)) return;
            std::fill(mult.begin(), mult.end(), 0);
            int top = 0;
            for (const auto& p : sel) top = std::max(top, ++mult[p.component]);
            const int type = top <= 1 ? 1 : (top == 2 ? 2 : 3);
            if (detail::side_matches(cfg, type, side_sq)) ++part.d[type - 1];
        });
        return part;
    });

    CountReport rep;
    rep.side_length_sq = side_sq;
    for (const auto& part : per_head) {
        rep.delta1 += part.d[0];
        rep.delta2 += part.d[1];
        rep.delta3 += part.d[2];
    }
    detail::finish(rep);
    return rep;
}

/// Closed-form census from the actual per-component sizes n_i, good-pair counts gp_i and
/// inscribed-triangle counts tri_i:
///   Δ1 = e_k(n)
///   Δ2 = sum over l >= 1, J of size l: prod_{j in J} gp_j * e_{k-2l}(n restricted to [r] \ J)
///   Δ3 = sum_i tri_i when k = 3, else 0
/// An empty product (k = 2l) contributes 1.
inline CountReport count_structured(const CircleConfig& cfg, std::size_t k,
                                    const std::optional<Rational>& side_sq = std::nullopt) {
    if (k < 3) throw domain_error("k must be at least 3");
    cfg.validate();
    if (!cfg.has_common_radius()) throw unsupported_configuration();
    const std::size_t r = cfg.r();
    std::vector<BigInt> sizes, good, tri;
    for (const auto& c : cfg.components) {
        sizes.emplace_back(static_cast<long long>(c.size()));
        good.push_back(count_good_pairs(c.ticks, c.modulus));
        tri.push_back(count_inscribed_triangles(c.ticks, c.modulus));
    }

    CountReport rep;
    rep.side_length_sq = side_sq;
    if (detail::side_matches(cfg, 1, side_sq)) {
        rep.delta1 = detail::elementary_symmetric(sizes, static_cast<long long>(k));
    }
    if (detail::side_matches(cfg, 2, side_sq)) {
        for (std::size_t l = 1; l <= k / 2 && l <= r; ++l) {
            detail::for_each_combination(r, l, [&](std::span<const std::size_t> J) {
                BigInt pairs = 1;
                std::vector<bool> in_j(r, false);
                for (std::size_t j : J) {
                    pairs *= good[j];
                    in_j[j] = true;
                }
                if (pairs == 0) return;
                std::vector<BigInt> rest;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!in_j[i]) rest.push_back(sizes[i]);
                }
                rep.delta2 += pairs * detail::elementary_symmetric(rest, static_cast<long long>(k - 2 * l));
            });
        }
    }
    if (k == 3 && detail::side_matches(cfg, 3, side_sq)) {
        for (const auto& t : tri) rep.delta3 += t;
    }
    detail::finish(rep);
    return rep;
}

/// Coordinate census of a configuration: simplices are found from exact coordinates of the
/// embedding, then typed by how many vertices share a component.
inline CountReport census_coords(const CircleConfig& cfg, std::size_t k, const std::optional<Rational>& side_sq = std::nullopt,
                                 unsigned workers = 1) {
    if (k < 3) throw domain_error("k must be at least 3");
    const PointSet P = embed(cfg);
    const auto labels = enumerate_points(cfg);
    const auto dc = detail::classify_distances(P);
    std::optional<Quad3> qside;
    if (side_sq) qside = Quad3(*side_sq);
    const int wanted = detail::wanted_class(dc, qside);

    struct Partial {
        std::uint64_t d[3] = {0, 0, 0};
    };
    auto per_head = detail::parallel_map<Partial>(P.size(), wanted == -2 ? 0 : workers, [&](std::size_t head) {
        Partial part;
        if (wanted == -2) return part;
        std::vector<int> mult(cfg.r());
        auto tally = [&](std::span<const std::size_t> idx) {
            std::fill(mult.begin(), mult.end(), 0);
            int top = 0;
            for (auto i : idx) top = std::max(top, ++mult[labels[i].component]);
            ++part.d[top <= 1 ? 0 : (top == 2 ? 1 : 2)];
        };
        detail::visit_with_head(dc, head, k, wanted, tally);
        return part;
    });
    CountReport rep;
    rep.side_length_sq = side_sq;
    for (const auto& part : per_head) {
        rep.delta1 += part.d[0];
        rep.delta2 += part.d[1];
        rep.delta3 += part.d[2];
    }
    detail::finish(rep);
    return rep;
}

// ---------------------------------------------------------------------------------------------
// Visitors (sequential; used to materialize the simplex hypergraph)


/// Calls fn(sorted vertex indices) for every regular simplex of P, in lexicographic order.
template <class Fn>
void for_each_regular_simplex(const PointSet& P, std::size_t k, Fn fn) {
    if (k < 2) throw domain_error("k must be at least 2");
    const auto dc = detail::classify_distances(P);
    for (std::size_t head = 0; head < P.size(); ++head) detail::visit_with_head(dc, head, k, -1, fn);
}

/// Calls fn(sorted indices into enumerate_points(cfg)) for every structured simplex.
template <class Fn>
void for_each_structured_simplex(const CircleConfig& cfg, std::size_t k, Fn fn) {
    const auto pts = enumerate_points(cfg);
    std::vector<TickPoint> sel(k);
    detail::for_each_combination(pts.size(), k, [&](std::span<const std::size_t> idx) {
        for (std::size_t i = 0; i < k; ++i) sel[i] = pts[idx[i]];
        if (is_structured_simplex(cfg, sel)) fn(idx);
    });
}

}  // namespace lenz
