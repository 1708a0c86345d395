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

#include "gppdf/density.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gppdf {

namespace {

void check_grid_size(Eigen::Index m)
{
    if (m < 3)
        throw InvalidInput("grid needs at least 3 points, got " + std::to_string(m));
}

// Linear-interpolation quantile of a sorted vector, q in [0,1].
double sorted_quantile(const std::vector<double>& sorted, double q)
{
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

} // namespace

Eigen::VectorXd grid_points(int m)
{
    check_grid_size(m);
    return Eigen::VectorXd::LinSpaced(m, 0.0, 1.0);
}

Eigen::VectorXd trapezoid_weights(int m)
{
    check_grid_size(m);
    const double h = 1.0 / (m - 1);
    Eigen::VectorXd w = Eigen::VectorXd::Constant(m, h);
    w(0) = 0.5 * h;
    w(m - 1) = 0.5 * h;
    return w;
}

double trapezoid_integrate(const Eigen::VectorXd& f)
{
    const Eigen::Index m = f.size();
    check_grid_size(m);
    const double h = 1.0 / static_cast<double>(m - 1);
    return h * (f.sum() - 0.5 * (f(0) + f(m - 1)));
}

double trapezoid_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g)
{
    if (f.size() != g.size())
        throw LengthMismatch("inner product of vectors with lengths "
                             + std::to_string(f.size()) + " and " + std::to_string(g.size()));
    const Eigen::Index m = f.size();
    check_grid_size(m);
    const double h = 1.0 / static_cast<double>(m - 1);
    const double full = f.dot(g);
    return h * (full - 0.5 * (f(0) * g(0) + f(m - 1) * g(m - 1)));
}

double trapezoid_norm(const Eigen::VectorXd& f)
{
    return std::sqrt(std::max(0.0, trapezoid_inner(f, f)));
}

Density Density::normalize(Eigen::VectorXd values)
{
    check_grid_size(values.size());

    const double min_value = values.minCoeff();
    if (min_value < -kNegativeTol)
        throw NegativeInput("density value " + std::to_string(min_value)
                            + " below -" + std::to_string(kNegativeTol));

    values = values.cwiseMax(0.0);
    if (trapezoid_integrate(values) <= 0.0)
        throw AllZero("density has no mass to normalize");

    values = values.cwiseMax(kFloorEpsilon);
    values /= trapezoid_integrate(values);
    return Density(std::move(values));
}

Density Density::uniform(int grid_size)
{
    check_grid_size(grid_size);
    return Density(Eigen::VectorXd::Ones(grid_size));
}

double silverman_bandwidth(const Eigen::VectorXd& draws)
{
    const auto s = static_cast<double>(draws.size());
    if (draws.size() < 2)
        throw InvalidInput("need at least 2 samples");

    const double mean = draws.mean();
    const double var = (draws.array() - mean).square().sum() / (s - 1.0);
    const double sd = std::sqrt(var);

    std::vector<double> sorted(draws.data(), draws.data() + draws.size());
    std::sort(sorted.begin(), sorted.end());
    const double iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);

    double spread = std::min(sd, iqr / 1.34);
    if (spread <= 0.0)
        spread = std::max(sd, iqr / 1.34);
    if (spread <= 0.0)
        throw DegenerateSamples("all samples identical, bandwidth undefined");

    return 0.9 * spread * std::pow(s, -0.2);
}

Density kde_estimate(const SampleBatch& batch, int grid_size,
                     std::optional<double> bandwidth)
{
    const Eigen::Index s = batch.draws.size();
    if (s < 2)
        throw InvalidInput("need at least 2 samples for a KDE");
    if ((batch.draws.array() < 0.0).any() || (batch.draws.array() > 1.0).any())
        throw InvalidInput("samples must lie in [0,1]");
    if (bandwidth && *bandwidth <= 0.0)
        throw InvalidInput("bandwidth must be positive");

    const double h = bandwidth ? *bandwidth : silverman_bandwidth(batch.draws);
    const Eigen::VectorXd t = grid_points(grid_size);

    const double inv_h = 1.0 / h;
    const double scale = 1.0 / (std::sqrt(2.0 * M_PI) * h * static_cast<double>(s));

    Eigen::VectorXd estimate = Eigen::VectorXd::Zero(grid_size);
    for (Eigen::Index i = 0; i < s; ++i) {
        const double d = batch.draws(i);
        // mirror images at both boundaries keep the mass inside [0,1]
        const double images[3] = { d, -d, 2.0 - d };
        for (double c : images) {
            estimate.array() += (-0.5 * ((t.array() - c) * inv_h).square()).exp();
        }
    }
    estimate *= scale;

    return Density::normalize(std::move(estimate));
}

} // namespace gppdf
