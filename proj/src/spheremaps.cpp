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

#include "renormkit/spheremaps.hpp"

#include <cmath>
#include <numbers>

#include "renormkit/errors.hpp"

namespace renormkit {

    namespace {
        constexpr double kPi = std::numbers::pi;
        constexpr double kVolS3 = 2 * kPi * kPi;

        Vec4 axpy(double a, const Vec4& x, const Vec4& y) {
            return {a * x[0] + y[0], a * x[1] + y[1], a * x[2] + y[2], a * x[3] + y[3]};
        }

        Vec4 scale(const Vec4& v, double s) {
            return {v[0] * s, v[1] * s, v[2] * s, v[3] * s};
        }

        Vec4 central_difference(const Vec4& plus, const Vec4& minus, double h) {
            return scale(axpy(-1, minus, plus), 0.5 / h);
        }

        Vec3 unit_vector(double theta, double phi) {
            return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
        }

        Vec4 embed_equator(double w, double s, const Vec3& u) {
            return {w, s * u[0], s * u[1], s * u[2]};
        }

        // Pairwise summation, so the result does not depend on accumulation drift.
        double pairwise_sum(const double* v, std::size_t n) {
            if (n <= 8) {
                double s = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    s += v[i];
                }
                return s;
            }
            const std::size_t half = n / 2;
            return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
        }

        double checked(double value, const std::string& where) {
            if (!std::isfinite(value)) {
                throw NumericError(where + ": non-finite integrand");
            }
            return value;
        }

        struct Hyperspherical {
            Vec4 x, dchi, dtheta, dphi;
        };

        Hyperspherical hyperspherical(double chi, double theta, double phi) {
            const double sc = std::sin(chi), cc = std::cos(chi);
            const double st = std::sin(theta), ct = std::cos(theta);
            const double sp = std::sin(phi), cp = std::cos(phi);
            return {
                {cc, sc * ct, sc * st * cp, sc * st * sp},
                {-sc, cc * ct, cc * st * cp, cc * st * sp},
                {0, -sc * st, sc * ct * cp, sc * ct * sp},
                {0, 0, -sc * st * sp, sc * st * cp},
            };
        }
    }  // namespace

    Vec4 quaternion_product(const Vec4& a, const Vec4& b) {
        return {
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        };
    }

    double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
        // Laplace expansion along the columns a, b, with 2x2 minors of (a, b) and (c, d).
        auto m = [](const Vec4& x, const Vec4& y, int i, int j) { return x[i] * y[j] - x[j] * y[i]; };
        return m(a, b, 0, 1) * m(c, d, 2, 3) - m(a, b, 0, 2) * m(c, d, 1, 3) + m(a, b, 0, 3) * m(c, d, 1, 2) +
               m(a, b, 1, 2) * m(c, d, 0, 3) - m(a, b, 1, 3) * m(c, d, 0, 2) + m(a, b, 2, 3) * m(c, d, 0, 1);
    }

    // ---------------------------------------------------------------- example maps

    SphereMap identity_map() {
        return {"identity", [](const Vec4& x) { return x; }, [](const Vec4&, const Vec4& v) { return v; }};
    }

    SphereMap antipodal_map() {
        return {"antipodal", [](const Vec4& x) { return scale(x, -1); }, [](const Vec4&, const Vec4& v) { return scale(v, -1); }};
    }

    SphereMap quaternion_square_map() {
        return {"qsquare", [](const Vec4& q) { return quaternion_product(q, q); },
                [](const Vec4& q, const Vec4& v) {
                    return axpy(1, quaternion_product(q, v), quaternion_product(v, q));
                }};
    }

    SurfaceMap boundary_of(const BallMap& phi) {
        return [eval = phi.eval](const Vec3& u) { return eval(1.0, u); };
    }

    BallMap constant_ball(const Vec4& point) {
        return {"constant", [point](double, const Vec3&) { return point; }};
    }

    SurfaceMap equatorial_map() {
        return [](const Vec3& u) { return embed_equator(0, 1, u); };
    }

    BallMap upper_cap() {
        return {"upper_cap",
                [](double r, const Vec3& u) { return embed_equator(std::cos(kPi * r / 2), std::sin(kPi * r / 2), u); }};
    }

    BallMap lower_cap() {
        return {"lower_cap",
                [](double r, const Vec3& u) { return embed_equator(-std::cos(kPi * r / 2), std::sin(kPi * r / 2), u); }};
    }

    BallMap twisted(const BallMap& phi) {
        return {phi.name + "_twisted", [eval = phi.eval](double r, const Vec3& u) {
                    const double c = std::cos(kPi * r / 2);
                    const double rho = c * c;
                    const Vec4 g = embed_equator(std::cos(kPi * rho), std::sin(kPi * rho), u);
                    return quaternion_product(g, eval(r, u));
                }};
    }

    // ------------------------------------------------------------------ quadrature

    QuadratureRule gauss_legendre(int n, double a, double b) {
        if (n < 1) {
            throw PreconditionError("gauss_legendre: need at least one node");
        }
        QuadratureRule rule;
        rule.nodes.resize(static_cast<std::size_t>(n));
        rule.weights.resize(static_cast<std::size_t>(n));
        const double mid = (a + b) / 2;
        const double half = (b - a) / 2;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 1;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1;
                double p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1) {
                    p0 = 1;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                const double step = p1 / dp;
                x -= step;
                if (std::fabs(step) < 1e-16) {
                    break;
                }
            }
            // recompute the derivative at the converged node
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n == 1 ? 1 : n * (x * p1 - p0) / (x * x - 1);
            const auto idx = static_cast<std::size_t>(i);
            rule.nodes[idx] = mid - half * x;
            rule.weights[idx] = half * 2 / ((1 - x * x) * dp * dp);
        }
        return rule;
    }

    QuadratureRule uniform_periodic(int n, double a, double b) {
        if (n < 1) {
            throw PreconditionError("uniform_periodic: need at least one node");
        }
        QuadratureRule rule;
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i) {
            rule.nodes.push_back(a + h * i);
            rule.weights.push_back(h);
        }
        return rule;
    }

    QuadratureRule QuadratureGrid::polar() const {
        return gauss_legendre(n, 0, kPi);
    }

    QuadratureRule QuadratureGrid::azimuth() const {
        return uniform_periodic(2 * n, 0, 2 * kPi);
    }

    QuadratureRule QuadratureGrid::radial(double a, double b) const {
        return gauss_legendre(n, a, b);
    }

    double sphere2_area(const QuadratureGrid& grid) {
        const QuadratureRule th = grid.polar();
        const QuadratureRule ph = grid.azimuth();
        std::vector<double> terms;
        for (std::size_t i = 0; i < th.nodes.size(); ++i) {
            for (std::size_t j = 0; j < ph.nodes.size(); ++j) {
                terms.push_back(th.weights[i] * ph.weights[j] * std::sin(th.nodes[i]));
            }
        }
        return pairwise_sum(terms.data(), terms.size());
    }

    namespace {
        template <typename Integrand>
        double integrate3(const QuadratureRule& a, const QuadratureRule& b, const QuadratureRule& c, Integrand&& f) {
            std::vector<double> terms;
            terms.reserve(a.nodes.size() * b.nodes.size() * c.nodes.size());
            for (std::size_t i = 0; i < a.nodes.size(); ++i) {
                for (std::size_t j = 0; j < b.nodes.size(); ++j) {
                    for (std::size_t k = 0; k < c.nodes.size(); ++k) {
                        terms.push_back(a.weights[i] * b.weights[j] * c.weights[k] *
                                        f(a.nodes[i], b.nodes[j], c.nodes[k]));
                    }
                }
            }
            return pairwise_sum(terms.data(), terms.size());
        }
    }  // namespace

    double sphere3_volume(const QuadratureGrid& grid) {
        return integrate3(grid.polar(), grid.polar(), grid.azimuth(), [](double chi, double theta, double phi) {
            const Hyperspherical h = hyperspherical(chi, theta, phi);
            return std::fabs(det4(h.x, h.dchi, h.dtheta, h.dphi));
        });
    }

    double degree(const SphereMap& f, const QuadratureGrid& grid) {
        const Hyperspherical ref = hyperspherical(kPi / 2, kPi / 2, 0.3);
        const double orientation = det4(ref.x, ref.dchi, ref.dtheta, ref.dphi) > 0 ? 1 : -1;
        const double hstep = grid.fd_step;
        const double total = integrate3(grid.polar(), grid.polar(), grid.azimuth(), [&](double chi, double theta, double phi) {
            const Hyperspherical h = hyperspherical(chi, theta, phi);
            const Vec4 fx = f.eval(h.x);
            Vec4 dchi, dtheta, dphi;
            if (f.differential) {
                dchi = f.differential(h.x, h.dchi);
                dtheta = f.differential(h.x, h.dtheta);
                dphi = f.differential(h.x, h.dphi);
            } else {
                dchi = central_difference(f.eval(hyperspherical(chi + hstep, theta, phi).x),
                                          f.eval(hyperspherical(chi - hstep, theta, phi).x), hstep);
                dtheta = central_difference(f.eval(hyperspherical(chi, theta + hstep, phi).x),
                                            f.eval(hyperspherical(chi, theta - hstep, phi).x), hstep);
                dphi = central_difference(f.eval(hyperspherical(chi, theta, phi + hstep).x),
                                          f.eval(hyperspherical(chi, theta, phi - hstep).x), hstep);
            }
            return checked(orientation * det4(fx, dchi, dtheta, dphi), "degree(" + f.name + ")");
        });
        return total / kVolS3;
    }

    double ball_volume(const BallMap& phi, const QuadratureGrid& grid) {
        const double hstep = grid.fd_step;
        const double total = integrate3(grid.radial(), grid.polar(), grid.azimuth(), [&](double r, double theta, double ph) {
            const Vec4 x = phi.eval(r, unit_vector(theta, ph));
            const Vec4 dr = central_difference(phi.eval(r + hstep, unit_vector(theta, ph)),
                                               phi.eval(r - hstep, unit_vector(theta, ph)), hstep);
            const Vec4 dtheta = central_difference(phi.eval(r, unit_vector(theta + hstep, ph)),
                                                   phi.eval(r, unit_vector(theta - hstep, ph)), hstep);
            const Vec4 dphi = central_difference(phi.eval(r, unit_vector(theta, ph + hstep)),
                                                 phi.eval(r, unit_vector(theta, ph - hstep)), hstep);
            return checked(det4(x, dr, dtheta, dphi), "ball_volume(" + phi.name + ")");
        });
        return total / kVolS3;
    }

    double distance_mod_one(double a, double b) {
        const double d = a - b;
        return std::fabs(d - std::round(d));
    }

    AlphaResult nambu_goto_alpha(const BallMap& phi_plus, const BallMap& phi_minus, const QuadratureGrid& grid) {
        const QuadratureGrid probe{8, grid.fd_step};
        std::vector<Vec3> samples{{0, 0, 1}, {0, 0, -1}};
        for (double theta : probe.polar().nodes) {
            for (double ph : probe.azimuth().nodes) {
                samples.push_back(unit_vector(theta, ph));
            }
        }
        for (const auto& u : samples) {
            const Vec4 a = phi_plus.eval(1.0, u);
            const Vec4 b = phi_minus.eval(1.0, u);
            for (std::size_t i = 0; i < 4; ++i) {
                if (!(std::fabs(a[i] - b[i]) <= 1e-8)) {
                    throw PreconditionError("nambu_goto_alpha: " + phi_plus.name + " and " + phi_minus.name +
                                            " disagree on the boundary sphere");
                }
            }
        }
        AlphaResult out;
        out.alpha_plus = ball_volume(phi_plus, grid);
        out.alpha_minus = ball_volume(phi_minus, grid);
        out.alpha = out.alpha_plus - std::floor(out.alpha_plus);
        if (out.alpha >= 1) {
            out.alpha = 0;
        }
        out.glued_degree = out.alpha_plus - out.alpha_minus;
        out.residual = distance_mod_one(out.glued_degree, 0);
        return out;
    }

    // -------------------------------------------------------------------- Mercator

    Vec4 mercator_point(double lambda, const Vec3& u) {
        return embed_equator(std::sin(lambda / 2), std::cos(lambda / 2), u);
    }

    double mercator_closed_form(double lambda) {
        return 1 + (lambda + std::sin(lambda)) / kPi;
    }

    MercatorResult mercator(double lambda, const QuadratureGrid& grid) {
        if (!(lambda > -kPi && lambda < kPi)) {
            throw DegenerateCapError("mercator: lambda must lie strictly inside (-pi, pi)");
        }
        MercatorResult out;
        out.lambda = lambda;
        out.boundary = [lambda](const Vec3& u) { return mercator_point(lambda, u); };
        out.south_cap = {"mercator_south", [lambda](double r, const Vec3& u) {
                             return mercator_point(-kPi + (lambda + kPi) * r, u);
                         }};
        out.north_cap = {"mercator_north", [lambda](double r, const Vec3& u) {
                             return mercator_point(kPi - (kPi - lambda) * r, u);
                         }};
        out.normalized_volume = 2 * std::fabs(ball_volume(out.south_cap, grid));
        out.closed_form = mercator_closed_form(lambda);
        return out;
    }

}  // namespace renormkit
