#pragma once

#include "lenz/census.hpp"
#include "lenz/construction.hpp"
#include "lenz/detail/combinatorics.hpp"
#include "lenz/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace lenz {

using Edge = std::vector<std::uint32_t>;

/// k-uniform hypergraph on vertices [0, n); edges stored sorted and duplicate-free.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t n, std::size_t k) : n_(n), k_(k) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t uniformity() const { return k_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::set<Edge>& edges() const { return edges_; }

    /// Returns false when the edge was already present.
    bool add_edge(Edge e) {
        if (e.size() != k_) throw domain_error("edge size differs from uniformity");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= n_) throw domain_error("edge vertex out of range");
            if (i > 0 && e[i] == e[i - 1]) throw domain_error("edge with repeated vertex");
        }
        return edges_.insert(std::move(e)).second;
    }

    bool has_edge(const Edge& sorted_edge) const { return edges_.count(sorted_edge) != 0; }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_, 0);
        for (const auto& e : edges_) {
            for (auto v : e) ++d[v];
        }
        return d;
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::set<Edge> edges_;
};

namespace detail {

inline Edge to_edge(std::span<const std::size_t> idx) {
    Edge e;
    e.reserve(idx.size());
    for (auto i : idx) e.push_back(static_cast<std::uint32_t>(i));
    return e;
}

}  // namespace detail

/// One vertex per point, one edge per regular (k-1)-simplex found from exact coordinates.
inline Hypergraph build_simplex_hypergraph(const PointSet& P, std::size_t k) {
    Hypergraph g(P.size(), k);
    for_each_regular_simplex(P, k, [&](std::span<const std::size_t> idx) { g.add_edge(detail::to_edge(idx)); });
    return g;
}

/// Same, from tick arithmetic; vertices follow enumerate_points(cfg).
inline Hypergraph build_simplex_hypergraph(const CircleConfig& cfg, std::size_t k) {
    Hypergraph g(cfg.total_points(), k);
    for_each_structured_simplex(cfg, k, [&](std::span<const std::size_t> idx) { g.add_edge(detail::to_edge(idx)); });
    return g;
}

/// K_{r+1} with every edge padded by k-2 private vertices. Core vertices are 0..r; padding
/// vertices follow in lexicographic order of the core pairs. Defined for any r >= 2; the
/// geometric setting only uses r >= k.
inline Hypergraph make_pattern_H(std::size_t r, std::size_t k) {
    if (k < 3 || r < 2) throw domain_error("pattern needs k >= 3 and r >= 2");
    const std::size_t core = r + 1;
    const std::size_t pairs = core * (core - 1) / 2;
    Hypergraph h(core + pairs * (k - 2), k);
    std::uint32_t next = static_cast<std::uint32_t>(core);
    for (std::uint32_t i = 0; i < core; ++i) {
        for (std::uint32_t j = i + 1; j < core; ++j) {
            Edge e{i, j};
            for (std::size_t p = 0; p < k - 2; ++p) e.push_back(next++);
            h.add_edge(std::move(e));
        }
    }
    return h;
}

/// t-blowup: vertex v becomes {v*t, ..., v*t + t-1}; every edge becomes its t^k transversals.
inline Hypergraph blowup(const Hypergraph& H, std::size_t t) {
    if (t < 1) throw domain_error("blowup factor must be at least 1");
    const std::size_t k = H.uniformity();
    Hypergraph out(H.vertex_count() * t, k);
    std::vector<std::size_t> digit(k);
    for (const auto& e : H.edges()) {
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            Edge img(k);
            for (std::size_t i = 0; i < k; ++i) img[i] = static_cast<std::uint32_t>(e[i] * t + digit[i]);
            out.add_edge(std::move(img));
            std::size_t pos = 0;
            while (pos < k && ++digit[pos] == t) digit[pos++] = 0;
            if (pos == k) break;
        }
    }
    return out;
}

namespace detail {

/// Vertex-by-vertex backtracking for an injective map H -> G sending edges to edges.
class CopySearch {
public:
    CopySearch(const Hypergraph& G, const Hypergraph& H) : G_(G), H_(H) {
        const std::size_t ng = G.vertex_count();
        const std::size_t nh = H.vertex_count();
        deg_g_ = G.degrees();
        deg_h_ = H.degrees();
        shadow_g_.assign(ng, std::vector<bool>(ng, false));
        for (const auto& e : G.edges()) {
            for (auto a : e) {
                for (auto b : e) {
                    if (a != b) shadow_g_[a][b] = true;
                }
            }
        }
        shadow_h_.assign(nh, std::vector<std::uint32_t>{});
        for (const auto& e : H.edges()) {
            for (auto a : e) {
                for (auto b : e) {
                    if (a != b) shadow_h_[a].push_back(b);
                }
            }
        }
        plan_order();
    }

    bool run() {
        image_.assign(H_.vertex_count(), kUnset);
        used_.assign(G_.vertex_count(), false);
        return extend(0);
    }

private:
    static constexpr std::uint32_t kUnset = UINT32_MAX;

    // Greedy order: next vertex has the most H-neighbours already placed, then highest degree.
    void plan_order() {
        const std::size_t nh = H_.vertex_count();
        std::vector<bool> placed(nh, false);
        std::vector<std::size_t> links(nh, 0);
        std::vector<std::size_t> position(nh, 0);
        for (std::size_t step = 0; step < nh; ++step) {
            std::size_t best = nh;
            for (std::size_t v = 0; v < nh; ++v) {
                if (placed[v]) continue;
                if (best == nh || links[v] > links[best] || (links[v] == links[best] && deg_h_[v] > deg_h_[best])) best = v;
            }
            placed[best] = true;
            position[best] = step;
            order_.push_back(static_cast<std::uint32_t>(best));
            for (auto u : shadow_h_[best]) ++links[u];
        }
        closing_.assign(nh, {});
        for (const auto& e : H_.edges()) {
            std::size_t last = 0;
            for (auto v : e) last = std::max(last, position[v]);
            closing_[last].push_back(&e);
        }
    }

    bool extend(std::size_t step) {
        if (step == order_.size()) return true;
        const std::uint32_t hv = order_[step];
        for (std::uint32_t gv = 0; gv < G_.vertex_count(); ++gv) {
            if (used_[gv] || deg_g_[gv] < deg_h_[hv]) continue;
            bool ok = true;
            for (auto hu : shadow_h_[hv]) {
                if (image_[hu] != kUnset && !shadow_g_[gv][image_[hu]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[hv] = gv;
            used_[gv] = true;
            for (const Edge* e : closing_[step]) {
                Edge img;
                img.reserve(e->size());
                for (auto v : *e) img.push_back(image_[v]);
                std::sort(img.begin(), img.end());
                if (!G_.has_edge(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(step + 1)) return true;
            image_[hv] = kUnset;
            used_[gv] = false;
        }
        return false;
    }

    const Hypergraph& G_;
    const Hypergraph& H_;
    std::vector<std::size_t> deg_g_, deg_h_;
    std::vector<std::vector<bool>> shadow_g_;
    std::vector<std::vector<std::uint32_t>> shadow_h_;
    std::vector<std::uint32_t> order_;
    std::vector<std::vector<const Edge*>> closing_;
    std::vector<std::uint32_t> image_;
    std::vector<bool> used_;
};

}  // namespace detail

/// Whether G contains a (not necessarily induced) copy of H. Exponential in v(H); meant for
/// desk-scale instances.
inline bool contains_copy(const Hypergraph& G, const Hypergraph& H) {
    if (G.uniformity() != H.uniformity()) throw domain_error("uniformities differ");
    if (H.vertex_count() > G.vertex_count() || H.edge_count() > G.edge_count()) return false;
    return detail::CopySearch(G, H).run();
}

}  // namespace lenz
