/* Copyright 2026 The renormkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Degrees of maps S^3 -> S^3 and normalized volumes of ball extensions B^3 -> S^3 by
 // deterministic product quadrature, and the Mercator family (sin(l/2), cos(l/2) u).

#ifndef RENORMKIT_SPHEREMAPS_HPP
#define RENORMKIT_SPHEREMAPS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace renormkit {

    using Vec3 = std::array<double, 3>;
    using Vec4 = std::array<double, 4>;

    Vec4 quaternion_product(const Vec4& a, const Vec4& b);
    double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);

    /* A map S^3 -> S^3 given on R^4. The differential, if present, returns df_x(v) for a
     * tangent vector v at x; otherwise central differences along coordinate curves are used. */
    struct SphereMap {
        std::string name;
        std::function<Vec4(const Vec4&)> eval;
        std::function<Vec4(const Vec4& x, const Vec4& v)> differential;
    };

    SphereMap identity_map();
    SphereMap antipodal_map();
    SphereMap quaternion_square_map();

    // A map B^3 -> S^3 in polar form (r, u), r in [0, 1], u in S^2.
    struct BallMap {
        std::string name;
        std::function<Vec4(double r, const Vec3& u)> eval;
    };

    using SurfaceMap = std::function<Vec4(const Vec3& u)>;

    // The restriction u -> phi(1, u).
    SurfaceMap boundary_of(const BallMap& phi);

    BallMap constant_ball(const Vec4& point);
    // u -> (0, u) and its extensions (+-cos(pi r / 2), sin(pi r / 2) u) onto x_0 >= 0 and x_0 <= 0.
    SurfaceMap equatorial_map();
    BallMap upper_cap();
    BallMap lower_cap();
    // Pointwise quaternion product with g(r u) = (cos(pi rho), sin(pi rho) u), rho = cos^2(pi r / 2),
    // a degree-one map that is identically 1 on the boundary sphere.
    BallMap twisted(const BallMap& phi);

    struct QuadratureRule {
        std::vector<double> nodes;
        std::vector<double> weights;
    };

    // n-point Gauss-Legendre rule on [a, b]; nodes by Newton iteration on P_n.
    QuadratureRule gauss_legendre(int n, double a, double b);
    // n equally spaced nodes on the periodic interval [a, b).
    QuadratureRule uniform_periodic(int n, double a, double b);

    /* Product grid: n Gauss-Legendre nodes in each polar or radial coordinate, 2n uniform
     * nodes in longitude. Derivatives of maps without an analytic differential use central
     * differences with step fd_step. */
    struct QuadratureGrid {
        int n = 24;
        double fd_step = 1e-5;

        QuadratureGrid refined() const { return {2 * n, fd_step}; }
        QuadratureRule polar() const;
        QuadratureRule azimuth() const;
        QuadratureRule radial(double a = 0, double b = 1) const;
    };

    // Area of S^2 summed from the grid's own weights.
    double sphere2_area(const QuadratureGrid& grid);
    // Volume of S^3 by the same quadrature used for degrees.
    double sphere3_volume(const QuadratureGrid& grid);

    /* (1 / vol S^3) * integral of f^*(dvol), in hyperspherical coordinates with the
     * orientation of the identity. Throws NumericError on non-finite values. */
    double degree(const SphereMap& f, const QuadratureGrid& grid = {});

    // (1 / vol S^3) * integral over B^3 of phi^*(dvol), without reduction mod 1.
    double ball_volume(const BallMap& phi, const QuadratureGrid& grid = {});

    struct AlphaResult {
        double alpha = 0;         // alpha_plus reduced to [0, 1)
        double alpha_plus = 0;    // normalized volume of phi_plus
        double alpha_minus = 0;   // normalized volume of phi_minus
        double glued_degree = 0;  // alpha_plus - alpha_minus
        double residual = 0;      // distance of glued_degree from the nearest integer
    };

    /* The Nambu-Goto value of the common boundary map. Throws PreconditionError if the two
     * extensions differ by more than 1e-8 on the boundary sphere. */
    AlphaResult nambu_goto_alpha(const BallMap& phi_plus, const BallMap& phi_minus, const QuadratureGrid& grid = {});

    Vec4 mercator_point(double lambda, const Vec3& u);
    // 1 + (lambda + sin lambda) / pi
    double mercator_closed_form(double lambda);

    struct MercatorResult {
        double lambda = 0;
        double normalized_volume = 0;  // vol(B_lambda) / pi^2 by quadrature
        double closed_form = 0;
        SurfaceMap boundary;           // u -> mu(lambda, u)
        BallMap south_cap;             // B_lambda, swept from the point mu(-pi, u)
        BallMap north_cap;             // the complementary cap, swept from mu(pi, u)
    };

    // Throws DegenerateCapError unless -pi < lambda < pi.
    MercatorResult mercator(double lambda, const QuadratureGrid& grid = {});

    // Distance between a and b in R/Z, in [0, 1/2].
    double distance_mod_one(double a, double b);

}  // namespace renormkit

#endif  // RENORMKIT_SPHEREMAPS_HPP
