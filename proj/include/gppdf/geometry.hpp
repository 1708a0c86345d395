/*
 * Copyright 2026 the gppdf developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "gppdf/density.hpp"

namespace gppdf {

/// Angles below this are treated as zero in exp/log maps (removable 0/0).
inline constexpr double kZeroAngleTol = 1e-14;

/// Unit-norm square-root representative of a density: phi = sqrt(p) on the
/// grid, with phi >= 0 and <phi,phi> = 1 under trapezoid quadrature. The
/// point lives on the upper hemisphere of the unit Hilbert sphere.
class SpherePoint {
public:
    /// Validates hemisphere membership (entries >= -1e-10, clamped to 0) and
    /// unit norm within 1e-8.
    explicit SpherePoint(Eigen::VectorXd phi);

    const Eigen::VectorXd& phi() const noexcept { return phi_; }
    int grid_size() const noexcept { return static_cast<int>(phi_.size()); }

private:
    Eigen::VectorXd phi_;
};

/// A vector tangent to the sphere at a base point: <vec, base.phi> = 0.
class TangentVector {
public:
    /// Validates tangency within 1e-8.
    TangentVector(SpherePoint base, Eigen::VectorXd vec);

    const SpherePoint& base() const noexcept { return base_; }
    const Eigen::VectorXd& vec() const noexcept { return vec_; }
    double norm() const { return trapezoid_norm(vec_); }

private:
    SpherePoint base_;
    Eigen::VectorXd vec_;
};

/// Element of the tangent space at the unity pole 1_H; the fixed embedding
/// target used to feed covariance functions. Satisfies <vec, 1> = 0.
struct EmbeddedFeature {
    Eigen::VectorXd vec;
};

/// The unity pole 1_H = sqrt of the uniform density (all ones).
SpherePoint unity_pole(int grid_size);

/// Square-root map p -> phi = sqrt(p); unit norm is inherited from the unit
/// integral of p.
SpherePoint to_sphere(const Density& p);

/// Inverse map phi -> p = phi^2.
Density to_density(const SpherePoint& phi);

/// Arc length between two hemisphere points: arccos of the inner product,
/// clamped to [-1,1] to absorb quadrature round-off. Range [0, pi].
double geodesic_distance(const SpherePoint& phi1, const SpherePoint& phi2);

/// Exp_phi(w) = cos(|w|) phi + sin(|w|) w/|w|; returns the base point when
/// |w| < kZeroAngleTol. Throws LeavesHemisphere when the result has an entry
/// strictly below -1e-10.
SpherePoint exp_map(const SpherePoint& base, const TangentVector& w);

/// Log_phi1(phi2) = (beta/sin beta)(phi2 - cos(beta) phi1); the zero vector
/// when beta < kZeroAngleTol. Norm equals the geodesic distance.
TangentVector log_map(const SpherePoint& phi1, const SpherePoint& phi2);

/// Feature map used by the covariance construction: Log at the unity pole of
/// the square-root representative.
EmbeddedFeature embed(const Density& p);

/// Parallel transport of w from its base to phi2 along the connecting
/// geodesic. Throws AntipodalPair when |phi1 + phi2| < 1e-10.
TangentVector parallel_transport(const TangentVector& w, const SpherePoint& phi2);

/// Intrinsic (Karcher) mean: iterates mu <- Exp_mu(mean of Log_mu(phi_i))
/// from the normalized extrinsic average until the update norm drops below
/// tol. Throws NoConvergence when max_iter is reached with an update norm
/// still above 100 * tol.
Density frechet_mean(std::span<const Density> densities, int max_iter = 100,
                     double tol = 1e-9);

} // namespace gppdf
