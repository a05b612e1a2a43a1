#include "faber/series.hpp"

#include <algorithm>
#include <cmath>

namespace faber {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, int order) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s[0] = 1.0;
    return s;
}

PowerSeries PowerSeries::geometric(Complex ratio, int order) {
    PowerSeries s(order);
    Complex p = 1.0;
    for (int k = 0; k <= order; ++k, p *= ratio) s[k] = p;
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    return PowerSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                                 static_cast<std::ptrdiff_t>(coeffs_.size()), order + 1)),
                       order);
}

Complex PowerSeries::sum_at(Complex t) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
    return out;
}

PowerSeries operator*(const PowerSeries& a, Complex s) {
    PowerSeries out(a.order());
    for (int k = 0; k <= a.order(); ++k) out[k] = a[k] * s;
    return out;
}

PowerSeries operator*(Complex s, const PowerSeries& a) { return a * s; }

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == Complex{}) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

PowerSeries reciprocal(const PowerSeries& a) {
    if (!(std::abs(a[0]) > 0.0)) throw SeriesDomainError("reciprocal: constant term is zero");
    const int n = a.order();
    PowerSeries b(n);
    const Complex inv0 = 1.0 / a[0];
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return b;
}

PowerSeries differentiate(const PowerSeries& a) {
    const int n = std::max(a.order() - 1, 0);
    PowerSeries out(n);
    for (int k = 1; k <= a.order(); ++k) out[k - 1] = static_cast<double>(k) * a[k];
    return out;
}

PowerSeries integrate(const PowerSeries& a) {
    PowerSeries out(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) out[k + 1] = a[k] / static_cast<double>(k + 1);
    return out;
}

PowerSeries shift_up(const PowerSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: k must be non-negative");
    PowerSeries out(a.order());
    for (int i = 0; i + k <= a.order(); ++i) out[i + k] = a[i];
    return out;
}

PowerSeries log1(const PowerSeries& a) {
    if (std::abs(a[0] - 1.0) > PowerSeries::kConstantTermTolerance)
        throw SeriesDomainError("log1: constant term must be 1");
    const int n = a.order();
    if (n == 0) return PowerSeries(0);
    // a'/a has order n-1; integrating brings it back to order n.
    const PowerSeries q = mul(differentiate(a), reciprocal(a.truncated(n - 1)));
    return integrate(q);
}

PowerSeries exp(const PowerSeries& a) {
    if (std::abs(a[0]) > PowerSeries::kConstantTermTolerance)
        throw SeriesDomainError("exp: constant term must be 0");
    const int n = a.order();
    PowerSeries e(n);
    e[0] = 1.0;
    // k e_k = sum_{i=1}^k i a_i e_{k-i}
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int i = 1; i <= k; ++i) acc += static_cast<double>(i) * a[i] * e[k - i];
        e[k] = acc / static_cast<double>(k);
    }
    return e;
}

PowerSeries pow_int(const PowerSeries& a, int j) {
    if (j < 0) {
        if (!(std::abs(a[0]) > 0.0)) throw SeriesDomainError("pow_int: negative power of a non-invertible series");
        return pow_int(reciprocal(a), -j);
    }
    PowerSeries result = PowerSeries::one(a.order());
    PowerSeries base = a;
    for (unsigned e = static_cast<unsigned>(j); e != 0; e >>= 1) {
        if (e & 1u) result = mul(result, base);
        if (e > 1) base = mul(base, base);
    }
    return result;
}

}  // namespace faber
