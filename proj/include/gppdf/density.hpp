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
#include <optional>

#include "gppdf/errors.hpp"

namespace gppdf {

/// Default number of grid points on [0,1], endpoints included.
inline constexpr int kDefaultGridSize = 512;

/// Values are floored at this constant after normalization-time clamping, so
/// sqrt(p) and 1/p style quantities stay finite.
inline constexpr double kFloorEpsilon = 1e-12;

/// Inputs with entries below -kNegativeTol are rejected; entries in
/// [-kNegativeTol, 0) are treated as round-off and clamped.
inline constexpr double kNegativeTol = 1e-12;

/// Grid locations t_k = k/(m-1) for k = 0..m-1.
Eigen::VectorXd grid_points(int m);

/// Trapezoid quadrature weights for the uniform grid on [0,1].
Eigen::VectorXd trapezoid_weights(int m);

/// Trapezoid integral of f over [0,1]. Requires f.size() >= 3.
double trapezoid_integrate(const Eigen::VectorXd& f);

/// Integral inner product <f,g> = ∫ f g dt by trapezoid quadrature.
/// Throws LengthMismatch when the lengths differ, InvalidInput when m < 3.
double trapezoid_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g);

/// sqrt(<f,f>).
double trapezoid_norm(const Eigen::VectorXd& f);

/// A probability density function on [0,1] sampled on the uniform grid:
/// nonnegative values with unit trapezoid integral. Immutable once built.
class Density {
public:
    /// Build a density from raw nonnegative values: clamps round-off
    /// negatives, applies the positivity floor and rescales to unit
    /// integral (within 1e-12).
    ///
    /// Throws NegativeInput if any entry is below -kNegativeTol, AllZero if
    /// the input carries no mass, InvalidInput if fewer than 3 values.
    static Density normalize(Eigen::VectorXd values);

    const Eigen::VectorXd& values() const noexcept { return values_; }
    int grid_size() const noexcept { return static_cast<int>(values_.size()); }

    /// The uniform density 1 on [0,1].
    static Density uniform(int grid_size);

private:
    explicit Density(Eigen::VectorXd values) : values_(std::move(values)) {}
    Eigen::VectorXd values_;
};

/// i.i.d. draws in [0,1] from an unknown density.
struct SampleBatch {
    Eigen::VectorXd draws;
};

/// Silverman's rule of thumb h = 0.9 min(std, IQR/1.34) s^(-1/5); falls back
/// to the non-zero spread measure when one of the two vanishes.
/// Throws DegenerateSamples when all draws are identical.
double silverman_bandwidth(const Eigen::VectorXd& draws);

/// Gaussian kernel density estimate on the grid with boundary reflection at
/// 0 and 1, normalized afterwards. Uses silverman_bandwidth when bandwidth
/// is not given.
Density kde_estimate(const SampleBatch& batch, int grid_size,
                     std::optional<double> bandwidth = std::nullopt);

} // namespace gppdf
