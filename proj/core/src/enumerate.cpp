#include "qtoric/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace qtoric {

namespace {

using i128 = __int128;

std::int64_t isqrt(i128 x)
{
    if (x < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && static_cast<i128>(r) * r > x)
        --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

}  // namespace

void enumerate_short_vectors(
    const IntMatrix& gram, const Integer& bound,
    const std::function<void(const std::vector<std::int64_t>&, const Integer&)>& visit)
{
    const std::size_t d = gram.rows();
    if (d == 0 || gram.cols() != d)
        throw InvalidInput("enumerate_short_vectors: gram must be square");
    if (bound < 0)
        return;

    // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    std::vector<std::vector<long double>> q(d, std::vector<long double>(d, 0.0L));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            q[i][j] = static_cast<long double>(gram(i, j).get_d());
    for (std::size_t i = 0; i < d; ++i) {
        if (q[i][i] <= 0)
            throw InvalidInput("enumerate_short_vectors: gram is not positive definite");
        for (std::size_t j = i + 1; j < d; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < d; ++k)
            for (std::size_t l = k; l < d; ++l)
                q[k][l] -= q[k][i] * q[i][l];
    }
    for (std::size_t i = 0; i < d; ++i)
        if (!(q[i][i] > 0))
            throw InvalidInput("enumerate_short_vectors: gram is not positive definite");

    const long double B = static_cast<long double>(bound.get_d());
    const long double slack = 1e-9L * (B + 1.0L) + 1e-9L;

    std::vector<std::int64_t> x(d, 0);
    std::vector<long double> remaining(d + 1, 0.0L), center(d, 0.0L);
    std::vector<std::int64_t> hi(d, 0);

    auto exact_value = [&]() {
        Integer v = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] == 0)
                continue;
            Integer xi(static_cast<long>(x[i]));
            v += gram(i, i) * xi * xi;
            for (std::size_t j = i + 1; j < d; ++j)
                if (x[j] != 0)
                    v += 2 * gram(i, j) * xi * Integer(static_cast<long>(x[j]));
        }
        return v;
    };

    // set up level i with the partial sums from levels > i
    auto setup = [&](std::size_t i) {
        long double c = 0;
        for (std::size_t j = i + 1; j < d; ++j)
            c -= q[i][j] * static_cast<long double>(x[j]);
        center[i] = c;
        long double r = (remaining[i + 1] + slack) / q[i][i];
        long double w = std::sqrt(std::max(r, 0.0L));
        x[i] = static_cast<std::int64_t>(std::ceil(c - w));
        hi[i] = static_cast<std::int64_t>(std::floor(c + w));
    };

    remaining[d] = B;
    std::size_t i = d - 1;
    setup(i);
    for (;;) {
        if (x[i] > hi[i]) {
            if (i == d - 1)
                return;
            ++i;
            ++x[i];
            continue;
        }
        long double t = static_cast<long double>(x[i]) - center[i];
        remaining[i] = remaining[i + 1] - q[i][i] * t * t;
        if (remaining[i] < -slack) {
            ++x[i];
            continue;
        }
        if (i == 0) {
            Integer v = exact_value();
            if (v <= bound)
                visit(x, v);
            ++x[i];
            continue;
        }
        --i;
        setup(i);
    }
}

std::int64_t ternary_value(const Gram3& g, const Vec3& v)
{
    i128 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s += static_cast<i128>(g[i][j]) * v[i] * v[j];
    return static_cast<std::int64_t>(s);
}

Gram3 to_gram3(const IntMatrix& m)
{
    if (m.rows() != 3 || m.cols() != 3)
        throw InvalidInput("expected a 3x3 Gram matrix");
    Gram3 g{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!m(i, j).fits_slong_p())
                throw InvalidInput("Gram entry too large");
            g[i][j] = m(i, j).get_si();
        }
    return g;
}

std::vector<Vec3> ternary_represent(const Gram3& g, std::int64_t n)
{
    std::vector<Vec3> out;
    if (n < 0)
        return out;
    const i128 g00 = g[0][0], g11 = g[1][1], g22 = g[2][2];
    const i128 g01 = g[0][1], g02 = g[0][2], g12 = g[1][2];
    const i128 adj00 = g11 * g22 - g12 * g12;
    const i128 det = g00 * adj00 - g01 * (g01 * g22 - g12 * g02) + g02 * (g01 * g12 - g11 * g02);
    if (g00 <= 0 || adj00 <= 0 || det <= 0)
        throw InvalidInput("ternary_represent: gram is not positive definite");

    // v0^2 det <= n adj00
    std::int64_t b0 = isqrt(static_cast<i128>(n) * adj00 / det);
    while (static_cast<i128>(b0 + 1) * (b0 + 1) * det <= static_cast<i128>(n) * adj00)
        ++b0;
    for (std::int64_t v0 = -b0; v0 <= b0; ++v0) {
        // A v1^2 + 2 Bc v1 + E <= 0 is the projection condition
        const i128 A = adj00;
        const i128 Bc = (g01 * g22 - g02 * g12) * v0;
        const i128 E = (g00 * g22 - g02 * g02) * v0 * v0 - g22 * n;
        const i128 disc = Bc * Bc - A * E;
        if (disc < 0)
            continue;
        const std::int64_t s = isqrt(disc);
        std::int64_t lo = static_cast<std::int64_t>((-Bc - s) / A) - 2;
        std::int64_t hi = static_cast<std::int64_t>((-Bc + s) / A) + 2;
        for (std::int64_t v1 = lo; v1 <= hi; ++v1) {
            const i128 L = g02 * v0 + g12 * v1;
            const i128 C = g00 * v0 * v0 + 2 * g01 * v0 * v1 + g11 * v1 * v1;
            const i128 D = L * L - g22 * (C - n);
            if (D < 0)
                continue;
            const std::int64_t r = isqrt(D);
            if (static_cast<i128>(r) * r != D)
                continue;
            for (int sign : {-1, 1}) {
                if (sign == 1 && r == 0)
                    break;
                i128 num = -L + sign * static_cast<i128>(r);
                if (num % g22 != 0)
                    continue;
                out.push_back({v0, v1, static_cast<std::int64_t>(num / g22)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qtoric
