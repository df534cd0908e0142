#pragma once

#include "lenz/exactnum.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lenz {

/// Raised by circumcenter() when no point of Aff(P) is equidistant from all of P.
class not_cospherical : public domain_error {
public:
    not_cospherical() : domain_error("not cospherical") {}
};

struct Point {
    std::vector<Quad3> coords;

    std::size_t dim() const { return coords.size(); }
    friend bool operator==(const Point&, const Point&) = default;
};

/// Points of a common ambient space R^dim, pairwise distinct.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<Point> points) : dim_(dim) {
        points_.reserve(points.size());
        for (auto& p : points) push_back(std::move(p));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    void push_back(Point p) {
        if (p.dim() != dim_) throw domain_error("point dimension does not match point set");
        for (const auto& q : points_) {
            if (q == p) throw domain_error("duplicate point in point set");
        }
        points_.push_back(std::move(p));
    }

    /// Subset by index list, order preserved.
    PointSet subset(std::span<const std::size_t> idx) const {
        PointSet out(dim_);
        out.points_.reserve(idx.size());
        for (std::size_t i : idx) out.points_.push_back(points_.at(i));
        return out;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Point> points_;
};

inline Quad3 dot(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw domain_error("dimension mismatch");
    Quad3 acc;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p.coords[i].is_zero() || q.coords[i].is_zero()) continue;
        acc += p.coords[i] * q.coords[i];
    }
    return acc;
}

inline Point operator-(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw domain_error("dimension mismatch");
    Point out;
    out.coords.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) out.coords.push_back(p.coords[i] - q.coords[i]);
    return out;
}

inline Point operator+(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw domain_error("dimension mismatch");
    Point out;
    out.coords.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) out.coords.push_back(p.coords[i] + q.coords[i]);
    return out;
}

inline Point operator*(const Quad3& s, const Point& p) {
    Point out;
    out.coords.reserve(p.dim());
    for (const auto& c : p.coords) out.coords.push_back(s * c);
    return out;
}

inline Point origin(std::size_t dim) { return Point{std::vector<Quad3>(dim)}; }

/// Squared Euclidean distance; square roots are never taken anywhere in this library.
inline Quad3 sq_dist(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw domain_error("dimension mismatch");
    Quad3 acc;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p.coords[i] == q.coords[i]) continue;
        Quad3 d = p.coords[i] - q.coords[i];
        acc += d * d;
    }
    return acc;
}

/// True iff all C(k,2) squared distances agree and are nonzero.
inline bool is_regular_simplex(std::span<const Point> pts) {
    if (pts.size() < 2) throw domain_error("a simplex needs at least 2 vertices");
    const Quad3 side = sq_dist(pts[0], pts[1]);
    if (side.is_zero()) return false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (i == 0 && j == 1) continue;
            if (sq_dist(pts[i], pts[j]) != side) return false;
        }
    }
    return true;
}

/// P -> Q: every p in P is equidistant from all points of Q.
inline bool arrow_relation(const PointSet& P, const PointSet& Q) {
    if (P.dim() != Q.dim()) throw domain_error("dimension mismatch");
    if (Q.empty()) return true;
    for (const auto& p : P) {
        const Quad3 ref = sq_dist(p, Q[0]);
        for (std::size_t j = 1; j < Q.size(); ++j) {
            if (sq_dist(p, Q[j]) != ref) return false;
        }
    }
    return true;
}

namespace detail {

/// Incremental row echelon basis over Q(sqrt3).
class EchelonBasis {
public:
    /// Reduces `v` against the basis; keeps it and returns true when independent.
    bool insert(std::vector<Quad3> v) {
        for (const auto& [row, pivot] : rows_) {
            if (v[pivot].is_zero()) continue;
            Quad3 factor = v[pivot];  // row[pivot] == 1
            for (std::size_t c = pivot; c < v.size(); ++c) {
                if (!row[c].is_zero()) v[c] -= factor * row[c];
            }
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
        if (pivot == v.size()) return false;
        Quad3 inv = v[pivot].inverse();
        for (std::size_t c = pivot; c < v.size(); ++c) v[c] *= inv;
        // keep earlier rows reduced in the new pivot column
        for (auto& [row, p] : rows_) {
            if (row[pivot].is_zero()) continue;
            Quad3 factor = row[pivot];
            for (std::size_t c = pivot; c < row.size(); ++c) row[c] -= factor * v[c];
        }
        rows_.emplace_back(std::move(v), pivot);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::vector<Quad3>, std::size_t>> rows_;
};

/// Solves A x = b exactly. Returns nullopt when inconsistent; A must have full column rank
/// on the consistent case (free variables are set to zero otherwise).
inline std::optional<std::vector<Quad3>> solve_linear(std::vector<std::vector<Quad3>> A, std::vector<Quad3> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && A[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        Quad3 inv = A[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) A[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Quad3 f = A[i][c];
            for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!b[i].is_zero()) return std::nullopt;
    }
    std::vector<Quad3> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

/// Indices i >= 1 whose difference vectors p_i - p_0 form a basis of the direction space.
inline std::vector<std::size_t> affine_basis_indices(const PointSet& P) {
    EchelonBasis basis;
    std::vector<std::size_t> picked;
    for (std::size_t i = 1; i < P.size(); ++i) {
        if (basis.insert((P[i] - P[0]).coords)) picked.push_back(i);
    }
    return picked;
}

}  // namespace detail

/// Dimension of Aff(P): rank of {p_i - p_1} by exact elimination.
inline std::size_t affine_span_dim(const PointSet& P) {
    if (P.empty()) throw domain_error("affine span of an empty set");
    return detail::affine_basis_indices(P).size();
}

/// <p_i - p_1, q_j - q_1> = 0 for all i, j.
inline bool spans_orthogonal(const PointSet& P, const PointSet& Q) {
    if (P.size() < 2 || Q.size() < 2) throw domain_error("orthogonality needs at least two points per set");
    if (P.dim() != Q.dim()) throw domain_error("dimension mismatch");
    for (std::size_t i = 1; i < P.size(); ++i) {
        Point u = P[i] - P[0];
        for (std::size_t j = 1; j < Q.size(); ++j) {
            if (!dot(u, Q[j] - Q[0]).is_zero()) return false;
        }
    }
    return true;
}

/// The unique point of Aff(P) equidistant from every point of P.
///
/// Writes c = p_1 + sum_j lambda_j u_j over a basis u_j of the direction space and solves
/// 2 <c - p_1, w_i> = |w_i|^2 for every w_i = p_i - p_1. Throws not_cospherical when the
/// system is inconsistent.
inline Point circumcenter(const PointSet& P) {
    if (P.empty()) throw domain_error("circumcenter of an empty set");
    const Point& base = P[0];
    if (P.size() == 1) return base;

    std::vector<Point> w;
    for (std::size_t i = 1; i < P.size(); ++i) w.push_back(P[i] - base);
    std::vector<Point> u;
    for (std::size_t i : detail::affine_basis_indices(P)) u.push_back(w[i - 1]);

    std::vector<std::vector<Quad3>> A;
    std::vector<Quad3> b;
    for (const auto& wi : w) {
        std::vector<Quad3> row;
        for (const auto& uj : u) row.push_back(Quad3(2) * dot(uj, wi));
        A.push_back(std::move(row));
        b.push_back(dot(wi, wi));
    }
    auto lambda = detail::solve_linear(std::move(A), std::move(b));
    if (!lambda) throw not_cospherical();

    Point c = base;
    for (std::size_t j = 0; j < u.size(); ++j) c = c + (*lambda)[j] * u[j];
    return c;
}

/// Decimal approximations for human inspection only. Nothing in the library decides
/// anything from these values.
inline std::vector<std::vector<double>> float_view(const PointSet& P, int precision) {
    const long double scale = std::pow(10.0L, precision);
    std::vector<std::vector<double>> out;
    out.reserve(P.size());
    for (const auto& p : P) {
        std::vector<double> row;
        row.reserve(p.dim());
        for (const auto& c : p.coords) {
            row.push_back(static_cast<double>(std::round(c.to_long_double() * scale) / scale));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace lenz
