#include "faber/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace faber {

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    trim();
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) { return ComplexPolynomial({c}); }

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return ComplexPolynomial(std::move(v));
}

ComplexPolynomial ComplexPolynomial::shifted_power(Complex root, int degree) {
    if (degree < 0) throw std::invalid_argument("shifted_power degree must be non-negative");
    ComplexPolynomial result = constant(1.0);
    const ComplexPolynomial factor({-root, 1.0});
    for (int i = 0; i < degree; ++i) result = result * factor;
    return result;
}

Complex ComplexPolynomial::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

double ComplexPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double ComplexPolynomial::sum_abs_coeffs() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::abs(c);
    return s;
}

Complex ComplexPolynomial::operator()(Complex z) const { return eval(*this, z); }

void ComplexPolynomial::trim() {
    const double cutoff = kTrimTolerance * max_abs_coeff();
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

ComplexPolynomial operator+(ComplexPolynomial p, const ComplexPolynomial& q) { return p += q; }
ComplexPolynomial operator-(ComplexPolynomial p, const ComplexPolynomial& q) { return p -= q; }
ComplexPolynomial operator-(const ComplexPolynomial& p) { return p * Complex{-1.0}; }
ComplexPolynomial operator*(ComplexPolynomial p, Complex s) { return p *= s; }
ComplexPolynomial operator*(Complex s, ComplexPolynomial p) { return p *= s; }

ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Complex> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return ComplexPolynomial(std::move(out));
}

Complex eval(const ComplexPolynomial& p, Complex z) {
    const auto c = p.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
    const auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Complex> out(c.size() - 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) out[k] = static_cast<double>(k + 1) * c[k + 1];
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial compose_affine(const ComplexPolynomial& p, Complex a, Complex b) {
    // Horner over polynomials: (...(c_n (az+b) + c_{n-1})(az+b) + ...).
    const ComplexPolynomial inner({b, a});
    ComplexPolynomial acc;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + ComplexPolynomial::constant(*it);
    return acc;
}

double max_coeff_deviation(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const int n = std::max(p.degree(), q.degree());
    double d = 0.0;
    for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(p[k] - q[k]));
    return d;
}

bool equal_within(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol) {
    const double scale = 1.0 + std::max(p.max_abs_coeff(), q.max_abs_coeff());
    return max_coeff_deviation(p, q) <= tol * scale;
}

namespace {

constexpr double kNoiseFactor = 4.0 * std::numeric_limits<double>::epsilon();

// sum_k |c_k| r^k times the degree: a bound on the Horner evaluation error up to a factor eps.
double horner_error_scale(std::span<const Complex> c, double r) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc * static_cast<double>(c.size());
}

}  // namespace

RootResult roots(const ComplexPolynomial& p, const RootOptions& options) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("roots: polynomial degree must be >= 1");

    const auto c = p.coeffs();
    const Complex lead = c.back();
    double cauchy = 0.0;
    for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(c[static_cast<std::size_t>(k)] / lead));
    const double radius = 1.0 + cauchy;

    const ComplexPolynomial dp = derivative(p);

    // Off-axis phase so that symmetric root sets do not coincide with the start points.
    constexpr double kPhase = 0.4;
    RootResult result;
    result.roots.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n + kPhase;
        result.roots[static_cast<std::size_t>(i)] = std::polar(radius, theta);
    }

    auto& z = result.roots;
    for (int it = 1; it <= options.max_iterations; ++it) {
        result.iterations = it;
        bool small = true;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            const Complex pv = eval(p, zi);
            if (pv == Complex{}) continue;
            // Below the Horner rounding floor the correction is noise: treat the root as settled.
            if (std::abs(pv) <= kNoiseFactor * horner_error_scale(c, std::abs(zi))) continue;
            const Complex dv = eval(dp, zi);
            Complex repulsion{};
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                const Complex diff = zi - z[static_cast<std::size_t>(k)];
                if (diff != Complex{}) repulsion += 1.0 / diff;
            }
            const Complex denom = dv / pv - repulsion;
            if (denom == Complex{}) continue;
            const Complex step = 1.0 / denom;
            zi -= step;
            if (std::abs(step) >= options.step_tolerance * std::max(1.0, std::abs(zi))) small = false;
        }
        if (small) {
            result.converged = true;
            break;
        }
    }

    const double scale = 1.0 + p.sum_abs_coeffs();
    for (const auto& r : z) result.max_residual = std::max(result.max_residual, std::abs(eval(p, r)) / scale);
    return result;
}

}  // namespace faber
