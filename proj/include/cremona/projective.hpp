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

#ifndef CREMONA_PROJECTIVE_HPP
#define CREMONA_PROJECTIVE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cremona/form.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

// Point of P^r stored with its first nonzero coordinate equal to 1, so two
// points are equal iff their coordinate vectors are.
class ProjectivePoint {
public:
    // Throws ZeroInput for the zero vector.
    explicit ProjectivePoint(Vector coords);
    ProjectivePoint(std::initializer_list<Rational> coords) : ProjectivePoint(Vector(coords)) {}

    // Coordinate point e_i of P^dim.
    static ProjectivePoint coordinate(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept { return coords_.size() - 1; }
    const Vector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) noexcept {
        return a.coords_ == b.coords_;
    }

private:
    Vector coords_;
};

// Nonzero vector -> point; nullopt for the zero vector.
std::optional<ProjectivePoint> to_point(Vector v);

class LinearSubspace {
public:
    // Basis must be linearly independent; throws DegenerateFrame otherwise.
    explicit LinearSubspace(std::vector<ProjectivePoint> basis);

    std::size_t ambient_dim() const noexcept { return basis_.front().dim(); }
    // Projective dimension.
    int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
    const std::vector<ProjectivePoint>& basis() const noexcept { return basis_; }

    bool contains(const ProjectivePoint& p) const;

    // Linear forms cutting out the subspace (canonical annihilator basis).
    std::vector<Vector> equations() const;

private:
    std::vector<ProjectivePoint> basis_;
};

class LinearAutomorphism {
public:
    // Throws DegenerateFrame if the matrix is singular.
    explicit LinearAutomorphism(Matrix m);
    static LinearAutomorphism identity(std::size_t dim);

    std::size_t dim() const noexcept { return matrix_.rows() - 1; }
    const Matrix& matrix() const noexcept { return matrix_; }
    LinearAutomorphism inverse() const;

    ProjectivePoint apply(const ProjectivePoint& p) const;
    // The tuple of linear forms x -> M x, as a map P^dim -> P^dim.
    FormTuple as_tuple() const;

    friend LinearAutomorphism operator*(const LinearAutomorphism& a, const LinearAutomorphism& b) {
        return LinearAutomorphism(a.matrix_ * b.matrix_);
    }
    friend bool operator==(const LinearAutomorphism& a, const LinearAutomorphism& b) noexcept {
        return a.matrix_ == b.matrix_;
    }

private:
    Matrix matrix_;
};

// Smallest subspace containing the points; dim = rank - 1.
LinearSubspace span(std::span<const ProjectivePoint> points);

// Rank of the 3 x (r+1) coordinate matrix <= 2. Throws NonDistinctPoints
// if two inputs coincide.
bool are_aligned(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c);

// r - dim(sub) linear forms vanishing on sub, i.e. the linear projection
// P^r -> P^{r-dim-1} from sub. An optional frame is applied to the target.
FormTuple projection_from(const LinearSubspace& sub, const std::optional<LinearAutomorphism>& target_frame = {});

// The automorphism sending src[i] to dst[i] projectively; each list holds
// r+2 points in general position. Throws DegenerateFrame otherwise.
LinearAutomorphism frame_map(std::span<const ProjectivePoint> src, std::span<const ProjectivePoint> dst);

// Automorphism whose column 0 is `vertex` (so e_0 -> vertex) and which is a
// transposition of e_0 with e_j otherwise, j = first nonzero coordinate.
LinearAutomorphism vertex_frame(const ProjectivePoint& vertex);

// Seeded source of integers; identical seeds give identical draw sequences.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t draws() const noexcept { return draws_; }

    // Uniform-ish integer in [-bound, bound].
    std::int64_t next_int(std::int64_t bound);
    // Same, but never zero.
    std::int64_t next_nonzero(std::int64_t bound);

    Vector next_vector(std::size_t n, std::int64_t bound);

private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

// Returns true when the candidate must be rejected.
using PointPredicate = std::function<bool(const ProjectivePoint&)>;

struct SampleOptions {
    std::int64_t box = 8;          // coordinates drawn from {-box..box}
    unsigned budget = 64;          // rejected draws before escalation
    unsigned escalations = 6;      // box doublings before giving up
};

// A point of P^r avoiding every predicate. Tries `budget` draws per box
// size, doubling the box up to `escalations` times, then throws
// RejectionExhausted.
ProjectivePoint sample_point(Sampler& s, std::size_t r, std::span<const PointPredicate> avoid,
                             const SampleOptions& opts = {});

// Random invertible matrix with entries in {-box..box}.
LinearAutomorphism sample_automorphism(Sampler& s, std::size_t r, std::int64_t box = 4);

}  // namespace cremona

#endif
