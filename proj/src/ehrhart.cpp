#include "margincount/ehrhart.hpp"

#include <stdexcept>

namespace margincount {

BigCount h_value(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument("h_value: need n >= 1 and r >= 0");
    MarginSpec spec{std::vector<int>(n, r), std::vector<int>(n, r)};
    return count(spec, Mode::Natural).count;
}

std::vector<BigCount> stanley_vector(int n) {
    if (n < 2) throw std::invalid_argument("stanley_vector: need n >= 2");
    const int k = (n - 1) * (n - 2) / 2;
    const int d = (n - 1) * (n - 1);

    std::vector<BigCount> h(k + 1);
    for (int r = 0; r <= k; ++r) h[r] = h_value(n, r);

    const bool odd_degree = d % 2 == 1;
    std::vector<BigCount> v;
    v.reserve(d + 1);
    // Arguments -n-k+1 .. -n reflect computed values, -n+1 .. -1 are zeros.
    for (int r = k - 1; r >= 0; --r) v.push_back(odd_degree ? BigCount(-h[r]) : h[r]);
    for (int r = 0; r < n - 1; ++r) v.push_back(BigCount(0));
    for (int r = 0; r <= k; ++r) v.push_back(h[r]);
    return v;
}

RationalPoly solve_coefficients(int n, const std::vector<BigCount>& v) {
    const int k = (n - 1) * (n - 2) / 2;
    const int d = (n - 1) * (n - 1);
    const int size = d + 1;
    if (static_cast<int>(v.size()) != size)
        throw std::invalid_argument("solve_coefficients: wrong vector length");

    // Augmented Vandermonde system on the nodes i - n - k, i = 1..d+1.
    std::vector<std::vector<BigCount>> a(size, std::vector<BigCount>(size + 1));
    for (int i = 0; i < size; ++i) {
        const long node = i + 1 - n - k;
        BigCount power = 1;
        for (int j = 0; j < size; ++j) {
            a[i][j] = power;
            power *= node;
        }
        a[i][size] = v[i];
    }

    // Bareiss fraction-free elimination; every division below is exact.
    BigCount prev_pivot = 1;
    for (int col = 0; col < size - 1; ++col) {
        int pivot = col;
        for (int i = col + 1; i < size; ++i)
            if (cmp(abs(a[i][col]), abs(a[pivot][col])) > 0) pivot = i;
        if (a[pivot][col] == 0)
            throw std::logic_error("solve_coefficients: singular interpolation matrix");
        if (pivot != col) std::swap(a[pivot], a[col]);
        for (int i = col + 1; i < size; ++i) {
            for (int j = col + 1; j <= size; ++j) {
                BigCount num = a[col][col] * a[i][j] - a[i][col] * a[col][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev_pivot = a[col][col];
    }
    if (a[size - 1][size - 1] == 0)
        throw std::logic_error("solve_coefficients: singular interpolation matrix");

    // Back substitution over exact rationals.
    RationalPoly poly;
    poly.coeffs.assign(size, Rational(0));
    for (int i = size - 1; i >= 0; --i) {
        Rational acc(a[i][size]);
        for (int j = i + 1; j < size; ++j) acc -= Rational(a[i][j]) * poly.coeffs[j];
        acc /= Rational(a[i][i]);
        acc.canonicalize();
        poly.coeffs[i] = acc;
    }
    return poly;
}

Rational evaluate(const RationalPoly& poly, long r) {
    Rational acc(0);
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * r + *it;
    acc.canonicalize();
    return acc;
}

RationalPoly birkhoff_polynomial(int n) { return solve_coefficients(n, stanley_vector(n)); }

}  // namespace margincount
