/*
   Copyright 2026 The cremona-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cremona/projective.hpp"

#include <sstream>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorCode::ZeroInput, "point without coordinates");
    std::size_t lead = 0;
    while (lead < coords_.size() && coords_[lead] == 0) ++lead;
    if (lead == coords_.size()) throw Error(ErrorCode::ZeroInput, "the zero vector is not a projective point");
    const Rational inv = 1 / coords_[lead];
    for (std::size_t i = lead; i < coords_.size(); ++i) coords_[i] *= inv;
}

ProjectivePoint ProjectivePoint::coordinate(std::size_t dim, std::size_t i) {
    Vector v(dim + 1);
    v.at(i) = 1;
    return ProjectivePoint(std::move(v));
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
    os << "]";
    return os.str();
}

std::optional<ProjectivePoint> to_point(Vector v) {
    for (const auto& c : v) {
        if (c != 0) return ProjectivePoint(std::move(v));
    }
    return std::nullopt;
}

namespace {

Matrix rows_of(std::span<const ProjectivePoint> points) {
    std::vector<Vector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) rows.push_back(p.coords());
    return Matrix::from_rows(rows);
}

void check_same_dim(std::span<const ProjectivePoint> points) {
    for (const auto& p : points) {
        if (p.dim() != points.front().dim()) throw Error(ErrorCode::DimensionMismatch, "points of different ambient spaces");
    }
}

}  // namespace

LinearSubspace::LinearSubspace(std::vector<ProjectivePoint> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw Error(ErrorCode::ZeroInput, "empty subspace basis");
    check_same_dim(basis_);
    if (rank(rows_of(basis_)) != basis_.size()) throw Error(ErrorCode::DegenerateFrame, "dependent subspace basis");
}

bool LinearSubspace::contains(const ProjectivePoint& p) const {
    if (p.dim() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point of a different ambient space");
    std::vector<ProjectivePoint> all = basis_;
    all.push_back(p);
    return rank(rows_of(all)) == basis_.size();
}

std::vector<Vector> LinearSubspace::equations() const {
    return nullspace(rows_of(basis_));
}

LinearAutomorphism::LinearAutomorphism(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "automorphism matrix must be square and nonempty");
    }
    if (determinant(matrix_) == 0) throw Error(ErrorCode::DegenerateFrame, "singular automorphism matrix");
}

LinearAutomorphism LinearAutomorphism::identity(std::size_t dim) {
    return LinearAutomorphism(Matrix::identity(dim + 1));
}

LinearAutomorphism LinearAutomorphism::inverse() const {
    return LinearAutomorphism(*cremona::inverse(matrix_));
}

ProjectivePoint LinearAutomorphism::apply(const ProjectivePoint& p) const {
    return ProjectivePoint(matrix_.apply(p.coords()));
}

FormTuple LinearAutomorphism::as_tuple() const {
    return linear_tuple(matrix_.to_rows());
}

LinearSubspace span(std::span<const ProjectivePoint> points) {
    if (points.empty()) throw Error(ErrorCode::ZeroInput, "span of no points");
    check_same_dim(points);
    const Echelon e = row_echelon(rows_of(points));
    std::vector<ProjectivePoint> basis;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis.emplace_back(e.rref.row(i));
    return LinearSubspace(std::move(basis));
}

bool are_aligned(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
    if (a == b || a == c || b == c) throw Error(ErrorCode::NonDistinctPoints, "alignment test needs distinct points");
    const ProjectivePoint pts[] = {a, b, c};
    check_same_dim(pts);
    return rank(rows_of(pts)) <= 2;
}

FormTuple projection_from(const LinearSubspace& sub, const std::optional<LinearAutomorphism>& target_frame) {
    auto eqs = sub.equations();
    if (eqs.empty()) throw Error(ErrorCode::DimensionMismatch, "projection from the whole space");
    if (target_frame) {
        if (target_frame->matrix().rows() != eqs.size()) {
            throw Error(ErrorCode::DimensionMismatch, "target frame does not match the projection target");
        }
        eqs = (target_frame->matrix() * Matrix::from_rows(eqs)).to_rows();
    }
    return linear_tuple(eqs);
}

namespace {

// Matrix sending e_i -> lambda_i pts[i] and e_0+...+e_r -> pts[r+1].
Matrix standard_frame_to(std::span<const ProjectivePoint> pts) {
    const std::size_t n = pts.size() - 1;
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(pts[i].coords());
    const Matrix base = Matrix::from_columns(cols);
    const auto inv = inverse(base);
    if (!inv) throw Error(ErrorCode::DegenerateFrame, "frame points are not independent");
    const Vector lambda = inv->apply(pts[n].coords());
    Matrix out = base;
    for (std::size_t j = 0; j < n; ++j) {
        if (lambda[j] == 0) throw Error(ErrorCode::DegenerateFrame, "frame points are not in general position");
        for (std::size_t i = 0; i < n; ++i) out(i, j) *= lambda[j];
    }
    return out;
}

}  // namespace

LinearAutomorphism frame_map(std::span<const ProjectivePoint> src, std::span<const ProjectivePoint> dst) {
    if (src.size() != dst.size() || src.empty() || src.size() != src.front().dim() + 2) {
        throw Error(ErrorCode::DimensionMismatch, "frame_map needs r+2 points on each side");
    }
    check_same_dim(src);
    check_same_dim(dst);
    if (src.front().dim() != dst.front().dim()) throw Error(ErrorCode::DimensionMismatch, "frames in different spaces");
    const Matrix a = standard_frame_to(src);
    const Matrix b = standard_frame_to(dst);
    return LinearAutomorphism(b * *inverse(a));
}

LinearAutomorphism vertex_frame(const ProjectivePoint& vertex) {
    const std::size_t n = vertex.dim() + 1;
    std::size_t j = 0;
    while (vertex[j] == 0) ++j;
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = vertex[i];
    if (j != 0) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = (i == 0) ? 1 : 0;
    }
    return LinearAutomorphism(std::move(m));
}

std::int64_t Sampler::next_int(std::int64_t bound) {
    ++draws_;
    if (bound <= 0) return 0;
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<std::int64_t>(engine_() % width) - bound;
}

std::int64_t Sampler::next_nonzero(std::int64_t bound) {
    if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "nonzero draw needs a positive bound");
    ++draws_;
    const auto width = static_cast<std::uint64_t>(2 * bound);
    const auto v = static_cast<std::int64_t>(engine_() % width) - bound;
    return v >= 0 ? v + 1 : v;
}

Vector Sampler::next_vector(std::size_t n, std::int64_t bound) {
    Vector v(n);
    for (auto& x : v) x = next_int(bound);
    return v;
}

ProjectivePoint sample_point(Sampler& s, std::size_t r, std::span<const PointPredicate> avoid,
                             const SampleOptions& opts) {
    std::int64_t box = opts.box;
    for (unsigned level = 0; level <= opts.escalations; ++level, box *= 2) {
        for (unsigned attempt = 0; attempt < opts.budget; ++attempt) {
            auto p = to_point(s.next_vector(r + 1, box));
            if (!p) continue;
            bool rejected = false;
            for (const auto& bad : avoid) {
                if (bad(*p)) {
                    rejected = true;
                    break;
                }
            }
            if (!rejected) return *std::move(p);
        }
    }
    throw Error(ErrorCode::RejectionExhausted, "no admissible point in P^" + std::to_string(r));
}

LinearAutomorphism sample_automorphism(Sampler& s, std::size_t r, std::int64_t box) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix m(r + 1, r + 1);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j <= r; ++j) m(i, j) = s.next_int(box);
        if (determinant(m) != 0) return LinearAutomorphism(std::move(m));
    }
    throw Error(ErrorCode::RejectionExhausted, "no invertible matrix drawn");
}

}  // namespace cremona
