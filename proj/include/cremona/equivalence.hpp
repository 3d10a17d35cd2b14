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

#ifndef CREMONA_EQUIVALENCE_HPP
#define CREMONA_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cremona/projective.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

enum class StepKind { Linear, DeJonquieres, DoubleProjection, QuadroQuadric };

std::string step_kind_name(StepKind k);
StepKind parse_step_kind(const std::string& name);

struct ChainStep {
    StepKind kind;
    CertifiedPair map;
    // Components this step collapses; their samples are only checked in the
    // forward direction.
    std::vector<std::size_t> contracts;
};

// A sequence of certified Cremona maps of P^r together with the claims it
// is meant to satisfy. stages[i] is the tracked scheme after i steps, with
// the parameters shared across all stages; samples[j] are parameter values
// of component j at which the chain is checked point by point.
struct CremonaChain {
    std::size_t ambient_dim = 0;
    std::vector<ChainStep> steps;
    std::vector<ParamScheme> stages;
    std::vector<std::vector<Vector>> samples;
    ParamScheme source;
    std::optional<ParamScheme> target;  // last stage must match it componentwise
    bool contracted = false;             // last stage must be distinct points
};

// Images through the forward (or inverse, last step first) maps; nullopt if
// some step is undefined at the running point.
std::optional<ProjectivePoint> chain_forward(const CremonaChain& c, const ProjectivePoint& p);
std::optional<ProjectivePoint> chain_backward(const CremonaChain& c, const ProjectivePoint& p);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Search-free audit: every certificate is recomputed, every step sends each
// stage to the next (exact identity of tuples up to a factor), every sample
// travels through the chain and back, and the source/target/contraction
// claims hold.
VerifyReport verify_chain(const CremonaChain& c);

struct SearchOptions {
    unsigned max_degree = 10;  // monoid / de Jonquieres degree cap
    unsigned samples = 25;     // parameter samples per component
    unsigned resamples = 16;   // retries per genericity screen
};

// Scheme of points, each as the constant component c * u.
ParamScheme point_scheme(std::span<const ProjectivePoint> points);

// A chain sending z[i] to z_prime[i]. Needs r >= 2 and pairwise distinct
// points in each list.
CremonaChain points_equivalence(std::span<const ProjectivePoint> z, std::span<const ProjectivePoint> z_prime,
                                Sampler& sampler, const SearchOptions& opts = {});

// A chain sending each component of phi onto the matching component of psi,
// parameter by parameter. Needs r >= 3 and matching arities.
CremonaChain pipeline_equivalence(const ParamScheme& phi, const ParamScheme& psi, Sampler& sampler,
                                  const SearchOptions& opts = {});

// A chain contracting every component of z to a point, the points pairwise
// distinct.
CremonaChain contract_union(const ParamScheme& z, Sampler& sampler, const SearchOptions& opts = {});

}  // namespace cremona

#endif
