#pragma once

// Lenz configurations: points on pairwise orthogonal circles (optionally one 2-sphere) that
// share a center at the origin and a common radius. Circle positions are integer ticks, the
// angle of tick t on a circle of modulus N being 2*pi*t/N.

#include "lenz/exactnum.hpp"
#include "lenz/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lenz {

enum class ComponentKind { circle, sphere2 };

inline std::string to_string(ComponentKind k) { return k == ComponentKind::circle ? "circle" : "sphere2"; }

struct CircleComponent {
    ComponentKind kind = ComponentKind::circle;
    long long modulus = 12;
    std::vector<long long> ticks;  // strictly increasing residues mod `modulus`
    /// Set only when this component deviates from the configuration's common radius.
    std::optional<Rational> radius_sq;

    std::size_t size() const { return ticks.size(); }
    std::size_t coord_span() const { return kind == ComponentKind::circle ? 2 : 3; }
    friend bool operator==(const CircleComponent&, const CircleComponent&) = default;
};

struct CircleConfig {
    std::size_t ambient_dim = 0;
    Rational radius_sq = Rational(1);
    std::vector<CircleComponent> components;

    std::size_t r() const { return components.size(); }

    std::size_t total_points() const {
        std::size_t n = 0;
        for (const auto& c : components) n += c.size();
        return n;
    }

    std::vector<long long> sizes() const {
        std::vector<long long> out;
        for (const auto& c : components) out.push_back(static_cast<long long>(c.size()));
        return out;
    }

    /// First ambient coordinate (0-based) of component i; components are laid out consecutively.
    std::size_t coord_offset(std::size_t i) const {
        std::size_t off = 0;
        for (std::size_t j = 0; j < i; ++j) off += components[j].coord_span();
        return off;
    }

    Rational component_radius_sq(std::size_t i) const {
        return components[i].radius_sq.value_or(radius_sq);
    }

    bool has_common_radius() const {
        for (const auto& c : components) {
            if (c.radius_sq && *c.radius_sq != radius_sq) return false;
        }
        return true;
    }

    /// Throws domain_error on any broken invariant.
    void validate() const {
        if (radius_sq.sign() <= 0) throw domain_error("radius_sq must be positive");
        std::size_t used = 0;
        for (const auto& c : components) {
            if (c.modulus <= 0 || c.modulus % 12 != 0) throw domain_error("component modulus must be a positive multiple of 12");
            for (std::size_t j = 0; j < c.ticks.size(); ++j) {
                if (c.ticks[j] < 0 || c.ticks[j] >= c.modulus) throw domain_error("tick outside [0, modulus)");
                if (j > 0 && c.ticks[j] <= c.ticks[j - 1]) throw domain_error("ticks must be strictly increasing");
            }
            if (c.radius_sq && c.radius_sq->sign() <= 0) throw domain_error("radius_sq must be positive");
            used += c.coord_span();
        }
        if (used > ambient_dim) throw domain_error("components occupy more coordinates than the ambient dimension");
    }

    friend bool operator==(const CircleConfig&, const CircleConfig&) = default;
};

/// (n_1, ..., n_r) with n = sum of entries.
struct PartitionVector {
    std::vector<long long> entries;

    long long n() const { return std::accumulate(entries.begin(), entries.end(), 0LL); }
    std::size_t r() const { return entries.size(); }

    PartitionVector sorted() const {
        PartitionVector out = *this;
        std::sort(out.entries.begin(), out.entries.end());
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        return s + ")";
    }

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
    friend auto operator<=>(const PartitionVector&, const PartitionVector&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PartitionVector& v) { return os << v.to_string(); }
};

/// The case-selected maximizer of the triangle count for r circles: with q = floor(n/r) and
/// p = n mod 2r the entries are drawn from {q, q+1, q+2} when p < r and from {q-1, q, q+1}
/// otherwise, with at most one odd-offset entry. Entries come out nondecreasing.
inline PartitionVector theorem12_partition(long long n, long long r) {
    if (r < 3) throw domain_error("theorem12_partition needs r >= 3");
    if (n < r) throw domain_error("theorem12_partition needs n >= r");
    const long long q = n / r;
    const long long p = n % (2 * r);
    PartitionVector v;
    auto push = [&](long long count, long long value) { v.entries.insert(v.entries.end(), count, value); };
    if (p < r && p % 2 == 0) {
        push(r - p / 2, q);
        push(p / 2, q + 2);
    } else if (p < r) {
        push(r - (p + 1) / 2, q);
        push(1, q + 1);
        push((p - 1) / 2, q + 2);
    } else if (p % 2 == 0) {
        push(r - p / 2, q - 1);
        push(p / 2, q + 1);
    } else {
        push(r - (p + 1) / 2, q - 1);
        push(1, q);
        push((p - 1) / 2, q + 1);
    }
    return v;
}

/// floor(n/r) or ceil(n/r) per component, larger classes on the lowest indices.
inline PartitionVector balanced_partition(long long n, long long r) {
    if (r < 1) throw domain_error("balanced_partition needs r >= 1");
    if (n < 0) throw domain_error("balanced_partition needs n >= 0");
    PartitionVector v;
    for (long long i = 0; i < r; ++i) v.entries.push_back(n / r + (i < n % r ? 1 : 0));
    return v;
}

struct CirclePlacement {
    long long modulus = 12;
    std::vector<long long> ticks;  // sorted
};

/// Positions c of one dodecagon copy in placement order v1,v4,v7,v10,v2,v5,v8,v11,v3,v6,v9,v12,
/// with v_{c+1} at angle c*30deg relative to v1.
inline constexpr int kDodecagonOrder[12] = {0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8, 11};

/// Places n_i points on one circle: m = max(1, ceil(n_i/12)) copies of the dodecagon, copy j on
/// ticks {j + c*m} of modulus 12m. Full copies first, the remainder in dodecagon placement order.
inline CirclePlacement place_on_circle(long long n_i) {
    if (n_i < 0) throw domain_error("negative point count");
    const long long m = std::max(1LL, (n_i + 11) / 12);
    CirclePlacement out;
    out.modulus = 12 * m;
    const long long full = n_i / 12;
    const long long rem = n_i % 12;
    for (long long j = 0; j < full; ++j) {
        for (long long c = 0; c < 12; ++c) out.ticks.push_back(j + c * m);
    }
    for (long long i = 0; i < rem; ++i) out.ticks.push_back(full + kDodecagonOrder[i] * m);
    std::sort(out.ticks.begin(), out.ticks.end());
    return out;
}

/// r unit circles, circle i on coordinates (2i-1, 2i) of R^{2r}.
inline CircleConfig build_even_config(long long n, long long r, const PartitionVector& partition) {
    if (r < 3) throw domain_error("even configuration needs r >= 3");
    if (static_cast<long long>(partition.r()) != r) throw domain_error("partition length must equal r");
    if (partition.n() != n) throw domain_error("partition must sum to n");
    CircleConfig cfg;
    cfg.ambient_dim = static_cast<std::size_t>(2 * r);
    for (long long n_i : partition.entries) {
        auto placed = place_on_circle(n_i);
        cfg.components.push_back(CircleComponent{ComponentKind::circle, placed.modulus, std::move(placed.ticks), {}});
    }
    return cfg;
}

/// r-1 circles and a final 2-sphere in R^{2r+1} with the balanced split. Points of the sphere
/// component sit on the great circle spanned by its first two coordinates.
inline CircleConfig build_odd_config(long long n, long long r) {
    if (r < 3) throw domain_error("odd configuration needs r >= 3");
    if (n < 0) throw domain_error("negative point count");
    CircleConfig cfg;
    cfg.ambient_dim = static_cast<std::size_t>(2 * r + 1);
    const auto split = balanced_partition(n, r);
    for (long long i = 0; i < r; ++i) {
        auto placed = place_on_circle(split.entries[static_cast<std::size_t>(i)]);
        ComponentKind kind = (i + 1 == r) ? ComponentKind::sphere2 : ComponentKind::circle;
        cfg.components.push_back(CircleComponent{kind, placed.modulus, std::move(placed.ticks), {}});
    }
    return cfg;
}

/// Location of a configuration point: component index and tick.
struct TickPoint {
    std::size_t component;
    long long tick;
    friend bool operator==(const TickPoint&, const TickPoint&) = default;
};

/// All configuration points in canonical order (component by component, ticks ascending).
/// The coordinate embedding uses the same order.
inline std::vector<TickPoint> enumerate_points(const CircleConfig& cfg) {
    std::vector<TickPoint> out;
    out.reserve(cfg.total_points());
    for (std::size_t i = 0; i < cfg.r(); ++i) {
        for (long long t : cfg.components[i].ticks) out.push_back({i, t});
    }
    return out;
}

namespace detail {

/// gamma in Q(sqrt3) with gamma^2 = radius_sq, when one exists.
inline std::optional<Quad3> radius_in_field(const Rational& radius_sq) {
    Rational root;
    if (radius_sq.exact_sqrt(root)) return Quad3(root);
    if ((radius_sq / Rational(3)).exact_sqrt(root)) return Quad3(Rational(0), root);
    return std::nullopt;
}

}  // namespace detail

/// True when every tick is a multiple of 30 degrees and every radius lies in Q(sqrt3).
inline bool is_embeddable(const CircleConfig& cfg) {
    for (std::size_t i = 0; i < cfg.r(); ++i) {
        const auto& c = cfg.components[i];
        for (long long t : c.ticks) {
            if ((12 * t) % c.modulus != 0) return false;
        }
        if (!detail::radius_in_field(cfg.component_radius_sq(i))) return false;
    }
    return true;
}

/// Exact coordinates in Q(sqrt3)^d, in enumerate_points() order.
inline PointSet embed(const CircleConfig& cfg) {
    cfg.validate();
    PointSet out(cfg.ambient_dim);
    for (std::size_t i = 0; i < cfg.r(); ++i) {
        const auto& c = cfg.components[i];
        auto gamma = detail::radius_in_field(cfg.component_radius_sq(i));
        if (!gamma) throw domain_error("radius is not representable in Q(sqrt3)");
        const std::size_t off = cfg.coord_offset(i);
        for (long long t : c.ticks) {
            if ((12 * t) % c.modulus != 0) {
                throw domain_error("tick " + std::to_string(t) + " of modulus " + std::to_string(c.modulus) +
                                   " is not a multiple of 30 degrees");
            }
            const int step = static_cast<int>(12 * t / c.modulus);
            Point p = origin(cfg.ambient_dim);
            p.coords[off] = *gamma * cos30(step);
            p.coords[off + 1] = *gamma * sin30(step);
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Points of one component as a point set (helper for the orthogonality lemmas).
inline PointSet embed_component(const CircleConfig& cfg, std::size_t component) {
    PointSet all = embed(cfg);
    std::vector<std::size_t> idx;
    std::size_t start = 0;
    for (std::size_t i = 0; i < component; ++i) start += cfg.components[i].size();
    for (std::size_t j = 0; j < cfg.components[component].size(); ++j) idx.push_back(start + j);
    return all.subset(idx);
}

}  // namespace lenz
