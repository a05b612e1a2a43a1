#pragma once

// Truncated formal power series in one variable t with complex coefficients.
// A series of order N carries the coefficients of t^0 ... t^N; binary
// operations truncate to the smaller of the two orders.

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace faber {

using Complex = std::complex<double>;

/// Raised when an operation needs an invertible series or a fixed constant term.
class SeriesDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PowerSeries {
public:
    static constexpr double kConstantTermTolerance = 1e-12;

    /// Zero series of the given order.
    explicit PowerSeries(int order);
    /// Coefficients padded with zeros (or cut) to length order + 1.
    PowerSeries(std::vector<Complex> coeffs, int order);

    static PowerSeries one(int order);
    /// sum_k (r t)^k
    static PowerSeries geometric(Complex ratio, int order);

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
    [[nodiscard]] Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Complex& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    [[nodiscard]] PowerSeries truncated(int order) const;
    /// Partial sum of the stored coefficients at t.
    [[nodiscard]] Complex sum_at(Complex t) const;

private:
    std::vector<Complex> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, Complex s);
PowerSeries operator*(Complex s, const PowerSeries& a);

/// Cauchy product truncated to min(order(a), order(b)).
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse by the triangular recursion; requires a[0] != 0.
PowerSeries reciprocal(const PowerSeries& a);

/// Formal derivative; the result has order N - 1 (order 0 stays order 0 with value 0).
PowerSeries differentiate(const PowerSeries& a);

/// Formal antiderivative with zero constant term; the result has order N + 1.
PowerSeries integrate(const PowerSeries& a);

/// Multiply by t^k, keeping the order.
PowerSeries shift_up(const PowerSeries& a, int k);

/// log a for a[0] == 1, through (log a)' = a'/a.
PowerSeries log1(const PowerSeries& a);

/// exp a for a[0] == 0, through (exp a)' = a' exp a.
PowerSeries exp(const PowerSeries& a);

/// a^j by repeated squaring; negative j goes through reciprocal.
PowerSeries pow_int(const PowerSeries& a, int j);

}  // namespace faber
