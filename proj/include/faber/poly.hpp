#pragma once

/**
 * @file poly.hpp
 * @brief Dense complex polynomials in ascending coefficient order.
 *
 * coeffs()[k] is the coefficient of z^k. Every value is kept in a trimmed
 * canonical form: leading coefficients whose magnitude is at most
 * kTrimTolerance times the largest coefficient magnitude are dropped, so
 * recurrence round-off never inflates the degree. The zero polynomial has
 * no coefficients and degree kZeroDegree.
 */

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace faber {

using Complex = std::complex<double>;

class ComplexPolynomial {
public:
    static constexpr double kTrimTolerance = 1e-13;
    static constexpr int kZeroDegree = -1;

    ComplexPolynomial() = default;
    ComplexPolynomial(std::initializer_list<Complex> coeffs);
    explicit ComplexPolynomial(std::vector<Complex> coeffs);

    static ComplexPolynomial constant(Complex c);
    static ComplexPolynomial monomial(int degree, Complex c = 1.0);
    /// (z - root)^degree, expanded by repeated multiplication.
    static ComplexPolynomial shifted_power(Complex root, int degree);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero beyond the degree.
    [[nodiscard]] Complex operator[](int k) const;
    [[nodiscard]] Complex leading() const { return is_zero() ? Complex{} : coeffs_.back(); }
    [[nodiscard]] double max_abs_coeff() const;
    [[nodiscard]] double sum_abs_coeffs() const;

    [[nodiscard]] Complex operator()(Complex z) const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(Complex s);

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

ComplexPolynomial operator+(ComplexPolynomial p, const ComplexPolynomial& q);
ComplexPolynomial operator-(ComplexPolynomial p, const ComplexPolynomial& q);
ComplexPolynomial operator-(const ComplexPolynomial& p);
ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator*(ComplexPolynomial p, Complex s);
ComplexPolynomial operator*(Complex s, ComplexPolynomial p);

/// Horner evaluation.
Complex eval(const ComplexPolynomial& p, Complex z);

ComplexPolynomial derivative(const ComplexPolynomial& p);

/// p(a z + b).
ComplexPolynomial compose_affine(const ComplexPolynomial& p, Complex a, Complex b);

/// max_k |p_k - q_k| <= tol * (1 + max coefficient magnitude of p and q).
bool equal_within(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol);

/// max_k |p_k - q_k| without any normalisation.
double max_coeff_deviation(const ComplexPolynomial& p, const ComplexPolynomial& q);

struct RootOptions {
    int max_iterations = 500;
    /// Stop once every Aberth correction is below step_tolerance * max(1, |z_i|).
    double step_tolerance = 1e-13;
};

struct RootResult {
    std::vector<Complex> roots;  // best iterate when !converged
    bool converged = false;
    int iterations = 0;
    /// max_i |p(r_i)| / (1 + sum |coeffs|)
    double max_residual = 0.0;
};

/**
 * All deg(p) roots by Aberth-Ehrlich simultaneous iteration.
 *
 * Starting points sit on a circle of the Cauchy radius 1 + max |c_k / c_n|.
 * No polishing or cluster post-pass is applied. Throws std::invalid_argument
 * for polynomials of degree < 1.
 */
RootResult roots(const ComplexPolynomial& p, const RootOptions& options = {});

}  // namespace faber
