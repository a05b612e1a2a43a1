#pragma once

/**
 * @file maps.hpp
 * @brief Closed-form map families and their explicit Faber polynomials.
 *
 * Families:
 *   ShiftMap      Psi(w) = w + a0
 *   GapMap        Psi(w) = w + z0 + sum_{j>=n} a_j w^{-j},            a_n != 0
 *   TwoGapMap     Psi(w) = w + z0 + a_m w^{-m} + sum_{j>=n} a_j w^{-j}, m < n-1, a_m a_n != 0
 *   Hypocycloid   Psi(w) = w + 1 / (m w^m)
 *   ExpMap        Psi(w) = eta + w exp(lambda / w), univalent iff |lambda| <= 1
 */

#include <span>
#include <variant>
#include <vector>

#include "faber/faber.hpp"
#include "faber/poly.hpp"

namespace faber {

struct ShiftMap {
    Complex alpha0{};
};

class GapMap {
public:
    /// tail holds a_n ... a_M; throws std::invalid_argument unless n >= 1 and a_n != 0.
    GapMap(Complex z0, int n, std::vector<Complex> tail);

    [[nodiscard]] Complex z0() const { return z0_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::span<const Complex> tail() const { return tail_; }
    /// Laurent coefficient a_k, k >= 1.
    [[nodiscard]] Complex alpha(int k) const;
    [[nodiscard]] int max_index() const { return n_ + static_cast<int>(tail_.size()) - 1; }

private:
    Complex z0_;
    int n_;
    std::vector<Complex> tail_;
};

class TwoGapMap {
public:
    /// Throws std::invalid_argument unless 1 <= m < n-1, a_m != 0 and a_n != 0.
    TwoGapMap(Complex z0, int m, Complex alpha_m, int n, std::vector<Complex> tail);

    [[nodiscard]] Complex z0() const { return z0_; }
    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] Complex alpha_m() const { return alpha_m_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::span<const Complex> tail() const { return tail_; }
    [[nodiscard]] Complex alpha(int k) const;
    [[nodiscard]] int max_index() const { return n_ + static_cast<int>(tail_.size()) - 1; }

private:
    Complex z0_;
    int m_;
    Complex alpha_m_;
    int n_;
    std::vector<Complex> tail_;
};

class Hypocycloid {
public:
    explicit Hypocycloid(int m);
    [[nodiscard]] int m() const { return m_; }

private:
    int m_;
};

struct ExpMap {
    ExpMap(Complex eta, Complex lambda) : eta(eta), lambda(lambda) {}
    Complex eta;
    Complex lambda;

    [[nodiscard]] bool univalent() const;
};

using MapFamily = std::variant<ShiftMap, GapMap, TwoGapMap, Hypocycloid, ExpMap>;

/// Smallest truncation that carries every structurally nonzero coefficient (0 for ExpMap).
int min_truncation(const MapFamily& f);

/// Laurent data a_0, a_1..a_M of a family member. Throws std::invalid_argument when M is too small.
ExteriorMap to_exterior_map(const MapFamily& f, int M);

/// Psi(w) in closed form (no truncation). Throws std::domain_error for w = 0.
Complex psi_eval(const MapFamily& f, Complex w);

/// (z - z0)^j for j <= n, (z - z0)^{n+1} - (n+1) a_n for j = n+1; std::out_of_range beyond.
ComplexPolynomial gap_faber_closed(const GapMap& f, int j);

/// Four-branch piecewise recurrence for two-gap maps, F_0 ... F_N.
FaberSystem twogap_faber(const TwoGapMap& f, int N);

/// He's explicit formula for the hypocycloid map, j >= 1.
ComplexPolynomial hypocycloid_faber_closed(int m, int j);

/// 1 for j = 0, 2 T_j(z/2) otherwise.
ComplexPolynomial chebyshev_scaled(int j);

/// Explicit Faber polynomials of eta + w exp(lambda / w). j = 0 gives 1.
ComplexPolynomial expmap_faber_closed(Complex eta, Complex lambda, int j);

/// Same polynomials as expmap_faber_closed, read off the principal part of
/// (-lambda)^j W0(-lambda / (z - eta))^{-j} using the W0 power series.
ComplexPolynomial expmap_faber_from_w0_series(Complex eta, Complex lambda, int j);

/// inf Re(w Psi'(w) / Psi(w)) over |w| > 1 for Psi(w) = w exp(lambda / w): 1 - |lambda|.
double b_functional(Complex eta, Complex lambda);

struct BGrid {
    double r_min = 1.0 + 1e-6;
    double r_max = 1e3;
    int radial_points = 400;   // geometric spacing
    int angular_points = 720;  // uniform in [0, 2 pi)
};

/// Grid infimum of Re(w Psi'(w) / Psi(w)) with Psi normalised to eta = 0.
double b_functional_grid(Complex eta, Complex lambda, const BGrid& grid = {});

/// max over R in r_grid of (R^2 - 1) |lambda|^2 / (R |R - |lambda||); points with R == |lambda| are skipped.
double a_functional_lower_bound(Complex eta, Complex lambda, std::span<const double> r_grid);

/// Uniform grid 1 + step, 1 + 2 step, ... up to r_max.
std::vector<double> a_functional_default_grid(double r_max = 10.0, double step = 1e-3);

/// e^{i theta} exp(lambda e^{-i theta}): the boundary of the interior domain of w exp(lambda / w).
Complex gamma_boundary(Complex lambda, double theta);

}  // namespace faber
