#include "posdiag/linalg.hpp"

#include <algorithm>

namespace posdiag::linalg {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Rational det(Mat m) {
    const std::size_t n = m.size();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat work(n, Vec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = m[i][j];
        work[i][n + i] = 1;
    }
    auto pivots = rref(work);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

std::vector<Vec> nullspace(const Mat& m) {
    if (m.empty()) return {};
    Mat work = m;
    auto pivots = rref(work);
    const std::size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (m.empty()) return Vec{};
    const std::size_t rows = m.size(), cols = m[0].size();
    Mat work(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) work[i][j] = m[i][j];
        work[i][cols] = b[i];
    }
    auto pivots = rref(work);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt; // 0 = 1 row
    Vec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = work[r][cols];
    return x;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec primitive(const Vec& v) {
    Int lcm_den(1);
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, den(x));
    Int content(0);
    for (const auto& x : v) content = boost::multiprecision::gcd(content, Int(num(x) * (lcm_den / den(x))));
    Vec out(v.size());
    if (content == 0) return v; // zero vector
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(num(v[i]) * (lcm_den / den(v[i])) / content);
    return out;
}

} // namespace posdiag::linalg
