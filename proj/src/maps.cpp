#include "faber/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "faber/lambert.hpp"

namespace faber {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Complex ipow(Complex base, int e) {
    Complex r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// sum_{k} c_k w^{-k} for k in [first, first + size)
Complex laurent_tail(std::span<const Complex> coeffs, int first, Complex w) {
    const Complex t = 1.0 / w;
    Complex acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc * ipow(t, first);
}

}  // namespace

GapMap::GapMap(Complex z0, int n, std::vector<Complex> tail) : z0_(z0), n_(n), tail_(std::move(tail)) {
    if (n_ < 1) throw std::invalid_argument("GapMap: n must be >= 1");
    if (tail_.empty() || !(std::abs(tail_.front()) > 0.0)) throw std::invalid_argument("GapMap: alpha_n must be nonzero");
}

Complex GapMap::alpha(int k) const {
    if (k < n_ || k > max_index()) return {};
    return tail_[static_cast<std::size_t>(k - n_)];
}

TwoGapMap::TwoGapMap(Complex z0, int m, Complex alpha_m, int n, std::vector<Complex> tail)
    : z0_(z0), m_(m), alpha_m_(alpha_m), n_(n), tail_(std::move(tail)) {
    if (m_ < 1) throw std::invalid_argument("TwoGapMap: m must be >= 1");
    if (!(m_ < n_ - 1)) throw std::invalid_argument("TwoGapMap: requires m < n - 1");
    if (!(std::abs(alpha_m_) > 0.0)) throw std::invalid_argument("TwoGapMap: alpha_m must be nonzero");
    if (tail_.empty() || !(std::abs(tail_.front()) > 0.0)) throw std::invalid_argument("TwoGapMap: alpha_n must be nonzero");
}

Complex TwoGapMap::alpha(int k) const {
    if (k == m_) return alpha_m_;
    if (k < n_ || k > max_index()) return {};
    return tail_[static_cast<std::size_t>(k - n_)];
}

Hypocycloid::Hypocycloid(int m) : m_(m) {
    if (m_ < 1) throw std::invalid_argument("Hypocycloid: m must be >= 1");
}

bool ExpMap::univalent() const { return std::abs(lambda) <= 1.0; }

int min_truncation(const MapFamily& f) {
    return std::visit(overloaded{
                          [](const ShiftMap&) { return 0; },
                          [](const GapMap& g) { return g.max_index(); },
                          [](const TwoGapMap& g) { return g.max_index(); },
                          [](const Hypocycloid& h) { return h.m(); },
                          [](const ExpMap&) { return 0; },
                      },
                      f);
}

ExteriorMap to_exterior_map(const MapFamily& f, int M) {
    if (M < min_truncation(f)) throw std::invalid_argument("to_exterior_map: truncation too small for this map");
    ExteriorMap map;
    map.tail.assign(static_cast<std::size_t>(M), Complex{});
    std::visit(overloaded{
                   [&](const ShiftMap& s) { map.alpha0 = s.alpha0; },
                   [&](const GapMap& g) {
                       map.alpha0 = g.z0();
                       for (int k = g.n(); k <= g.max_index(); ++k) map.tail[static_cast<std::size_t>(k) - 1] = g.alpha(k);
                   },
                   [&](const TwoGapMap& g) {
                       map.alpha0 = g.z0();
                       map.tail[static_cast<std::size_t>(g.m()) - 1] = g.alpha_m();
                       for (int k = g.n(); k <= g.max_index(); ++k) map.tail[static_cast<std::size_t>(k) - 1] = g.alpha(k);
                   },
                   [&](const Hypocycloid& h) { map.tail[static_cast<std::size_t>(h.m()) - 1] = 1.0 / h.m(); },
                   [&](const ExpMap& e) {
                       map.alpha0 = e.eta + e.lambda;
                       // a_j = lambda^{j+1} / (j+1)!
                       Complex c = e.lambda;
                       for (int j = 1; j <= M; ++j) {
                           c *= e.lambda / static_cast<double>(j + 1);
                           map.tail[static_cast<std::size_t>(j) - 1] = c;
                       }
                   },
               },
               f);
    return map;
}

Complex psi_eval(const MapFamily& f, Complex w) {
    if (w == Complex{}) throw std::domain_error("psi_eval: w = 0");
    return std::visit(overloaded{
                          [&](const ShiftMap& s) { return w + s.alpha0; },
                          [&](const GapMap& g) { return w + g.z0() + laurent_tail(g.tail(), g.n(), w); },
                          [&](const TwoGapMap& g) {
                              return w + g.z0() + g.alpha_m() * ipow(1.0 / w, g.m()) + laurent_tail(g.tail(), g.n(), w);
                          },
                          [&](const Hypocycloid& h) { return w + 1.0 / (static_cast<double>(h.m()) * ipow(w, h.m())); },
                          [&](const ExpMap& e) { return e.eta + w * std::exp(e.lambda / w); },
                      },
                      f);
}

ComplexPolynomial gap_faber_closed(const GapMap& f, int j) {
    if (j < 0) throw std::invalid_argument("gap_faber_closed: j must be non-negative");
    if (j > f.n() + 1) throw std::out_of_range("gap_faber_closed: only j <= n + 1 has a closed form; use the recurrence");
    ComplexPolynomial p = ComplexPolynomial::shifted_power(f.z0(), j);
    if (j == f.n() + 1) p -= ComplexPolynomial::constant(static_cast<double>(f.n() + 1) * f.alpha(f.n()));
    return p;
}

FaberSystem twogap_faber(const TwoGapMap& f, int N) {
    if (N < 0) throw std::invalid_argument("twogap_faber: N must be non-negative");
    FaberSystem system{to_exterior_map(f, f.max_index()), {}, FaberMethod::ClosedForm};
    auto& F = system.polys;
    F.push_back(ComplexPolynomial::constant(1.0));
    const int m = f.m();
    const int n = f.n();
    const ComplexPolynomial linear({-f.z0(), 1.0});
    auto at = [&F](int i) -> const ComplexPolynomial& { return F[static_cast<std::size_t>(i)]; };
    for (int j = 0; j < N; ++j) {
        ComplexPolynomial next;
        if (j <= m - 1) {
            next = ComplexPolynomial::shifted_power(f.z0(), j + 1);
        } else if (j == m) {
            next = ComplexPolynomial::shifted_power(f.z0(), m + 1) -
                   ComplexPolynomial::constant(static_cast<double>(m + 1) * f.alpha_m());
        } else if (j <= n - 1) {
            next = linear * at(j) - f.alpha_m() * at(j - m);
        } else {
            next = linear * at(j) - f.alpha_m() * at(j - m);
            for (int k = n; k <= j; ++k) next -= f.alpha(k) * at(j - k);
            next -= ComplexPolynomial::constant(static_cast<double>(j) * f.alpha(j));
        }
        F.push_back(std::move(next));
    }
    return system;
}

ComplexPolynomial hypocycloid_faber_closed(int m, int j) {
    if (m < 1 || j < 1) throw std::invalid_argument("hypocycloid_faber_closed: requires m >= 1 and j >= 1");
    std::vector<Complex> c(static_cast<std::size_t>(j) + 1);
    const int kmax = j / (m + 1);
    for (int k = 0; k <= kmax; ++k) {
        // j (-1)^k (j-mk-1)! / ((j-(m+1)k)! m^k k!); the factorial ratio is the
        // product of the k-1 integers j-(m+1)k+1 ... j-mk-1.
        const int low = j - (m + 1) * k;
        double coeff = static_cast<double>(j);
        for (int i = 1; i <= k; ++i) {
            if (i <= k - 1) coeff *= static_cast<double>(low + i);
            coeff /= static_cast<double>(m) * static_cast<double>(i);
        }
        if (k == 0) coeff = 1.0;  // j (j-1)! / j!
        if (k % 2 == 1) coeff = -coeff;
        c[static_cast<std::size_t>(low)] = coeff;
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial chebyshev_scaled(int j) {
    if (j < 0) throw std::invalid_argument("chebyshev_scaled: j must be non-negative");
    if (j == 0) return ComplexPolynomial::constant(1.0);
    const ComplexPolynomial x({0.0, 1.0});
    ComplexPolynomial prev = ComplexPolynomial::constant(1.0);
    ComplexPolynomial cur = x;
    for (int k = 1; k < j; ++k) {
        ComplexPolynomial next = 2.0 * (x * cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return 2.0 * compose_affine(cur, 0.5, 0.0);
}

ComplexPolynomial expmap_faber_closed(Complex eta, Complex lambda, int j) {
    if (j < 0) throw std::invalid_argument("expmap_faber_closed: j must be non-negative");
    if (j == 0) return ComplexPolynomial::constant(1.0);
    if (j == 1) return ComplexPolynomial({-eta - lambda, 1.0});
    // Polynomial in u = z - eta, then shifted back.
    std::vector<Complex> u(static_cast<std::size_t>(j) + 1);
    double factorial = 1.0;  // (j-k)!
    for (int k = j; k >= 1; --k) {
        const int e = j - k;
        if (e > 0) factorial *= e;
        const double kpow = std::pow(static_cast<double>(k), e - 1);
        u[static_cast<std::size_t>(k)] = static_cast<double>(j) * ipow(-lambda, e) * kpow / factorial;
    }
    return compose_affine(ComplexPolynomial(std::move(u)), 1.0, -eta);
}

ComplexPolynomial expmap_faber_from_w0_series(Complex eta, Complex lambda, int j) {
    if (j < 0) throw std::invalid_argument("expmap_faber_from_w0_series: j must be non-negative");
    if (j == 0) return ComplexPolynomial::constant(1.0);
    const PowerSeries c = w0_normalized_power_series(-j, j);
    std::vector<Complex> u(static_cast<std::size_t>(j) + 1);
    for (int m = 0; m <= j; ++m) u[static_cast<std::size_t>(j - m)] = c[m] * ipow(-lambda, m);
    return compose_affine(ComplexPolynomial(std::move(u)), 1.0, -eta);
}

double b_functional(Complex /*eta*/, Complex lambda) { return 1.0 - std::abs(lambda); }

double b_functional_grid(Complex /*eta*/, Complex lambda, const BGrid& grid) {
    if (grid.radial_points < 2 || grid.angular_points < 1) throw std::invalid_argument("b_functional_grid: grid too small");
    const double ratio = std::log(grid.r_max / grid.r_min);
    double inf = HUGE_VAL;
    for (int i = 0; i < grid.radial_points; ++i) {
        const double r = grid.r_min * std::exp(ratio * i / (grid.radial_points - 1));
        for (int a = 0; a < grid.angular_points; ++a) {
            const Complex w = std::polar(r, 2.0 * std::numbers::pi * a / grid.angular_points);
            const Complex e = std::exp(lambda / w);
            const Complex psi = w * e;
            const Complex dpsi = e * (1.0 - lambda / w);
            inf = std::min(inf, (w * dpsi / psi).real());
        }
    }
    return inf;
}

double a_functional_lower_bound(Complex /*eta*/, Complex lambda, std::span<const double> r_grid) {
    const double l = std::abs(lambda);
    double best = 0.0;
    for (const double R : r_grid) {
        if (!(R > 1.0) || R == l) continue;
        best = std::max(best, (R * R - 1.0) * l * l / (R * std::abs(R - l)));
    }
    return best;
}

std::vector<double> a_functional_default_grid(double r_max, double step) {
    std::vector<double> grid;
    for (int i = 1;; ++i) {
        const double R = 1.0 + i * step;
        if (R > r_max) break;
        grid.push_back(R);
    }
    return grid;
}

Complex gamma_boundary(Complex lambda, double theta) {
    return std::polar(1.0, theta) * std::exp(lambda * std::polar(1.0, -theta));
}

}  // namespace faber
