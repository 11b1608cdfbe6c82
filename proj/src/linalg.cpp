#include <ncsym/linalg.hpp>

#include <stdexcept>
#include <utility>

#include <ncsym/errors.hpp>

namespace ncsym {

Matrix identity_matrix(int n)
{
    Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i][i] = 1;
    }
    return m;
}

int rank(Matrix m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

Rational determinant(Matrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) {
            throw std::invalid_argument("determinant of a non-square matrix");
        }
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    const std::size_t n = m.size();
    Matrix a = m;
    Matrix inv = identity_matrix(static_cast<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw internal_error("transition matrix is singular");
        }
        std::swap(a[pivot], a[c]);
        std::swap(inv[pivot], inv[c]);
        const Rational p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) {
                continue;
            }
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

bool is_upper_triangular(const Matrix& m)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < i && j < m[i].size(); ++j) {
            if (m[i][j] != 0) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ncsym
