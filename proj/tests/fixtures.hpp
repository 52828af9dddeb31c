#pragma once

// Hand-transcribed expected matrices for the canonical and Bell basis vectors,
// and the Gram matrix of the x_p family. Kept separate from the library so the
// chart code is checked against an independent copy of the values.

#include <cmath>
#include <stdexcept>

#include "qsphere/linalg.hpp"

namespace fixtures {

using qsphere::cplx;
using qsphere::CMat4;

inline CMat4 canonical_display(int k, cplx u) {
    cplx u2 = u * u;
    cplx ui2 = cplx(1.0, 0.0) / u2;
    cplx o(1.0, 0.0), z(0.0, 0.0);
    CMat4 m;
    switch (k) {
        case 0: {
            cplx rows[4][4] = {{o, z, z, z}, {z, ui2, z, z}, {z, z, u2, z}, {z, z, z, o}};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(std::size_t(i), std::size_t(j)) = rows[i][j];
            return m;
        }
        case 1: {
            cplx rows[4][4] = {{z, -ui2, z, z}, {o, z, z, z}, {z, z, z, -o}, {z, z, u2, z}};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(std::size_t(i), std::size_t(j)) = rows[i][j];
            return m;
        }
        case 2: {
            cplx rows[4][4] = {{z, z, -u2, z}, {z, z, z, -o}, {o, z, z, z}, {z, ui2, z, z}};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(std::size_t(i), std::size_t(j)) = rows[i][j];
            return m;
        }
        case 3: {
            cplx rows[4][4] = {{z, z, z, o}, {z, z, -u2, z}, {z, -ui2, z, z}, {o, z, z, z}};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m(std::size_t(i), std::size_t(j)) = rows[i][j];
            return m;
        }
        default:
            throw std::invalid_argument("canonical_display: k out of range");
    }
}

// Charts holding the i-th Bell vector; the displayed matrix is the same in both.
inline std::pair<int, int> bell_charts(int i) {
    if (i == 0 || i == 1) return {0, 3};
    if (i == 2 || i == 3) return {1, 2};
    throw std::invalid_argument("bell_charts: index out of range");
}

inline CMat4 bell_display(int i, cplx u) {
    cplx u2 = u * u;
    cplx ui2 = cplx(1.0, 0.0) / u2;
    cplx o(1.0, 0.0), z(0.0, 0.0);
    double s = 1.0 / std::sqrt(2.0);
    CMat4 m;
    auto fill = [&](const cplx (&rows)[4][4]) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(std::size_t(r), std::size_t(c)) = s * rows[r][c];
    };
    switch (i) {
        case 0: {
            cplx rows[4][4] = {{o, z, z, o}, {z, ui2, -u2, z}, {z, -ui2, u2, z}, {o, z, z, o}};
            fill(rows);
            return m;
        }
        case 1: {
            cplx rows[4][4] = {{o, z, z, -o}, {z, ui2, u2, z}, {z, ui2, u2, z}, {-o, z, z, o}};
            fill(rows);
            return m;
        }
        case 2: {
            cplx rows[4][4] = {{z, -ui2, -u2, z}, {o, z, z, -o}, {o, z, z, -o}, {z, ui2, u2, z}};
            fill(rows);
            return m;
        }
        case 3: {
            cplx rows[4][4] = {{z, -ui2, u2, z}, {o, z, z, o}, {-o, z, z, -o}, {z, -ui2, u2, z}};
            fill(rows);
            return m;
        }
        default:
            throw std::invalid_argument("bell_display: index out of range");
    }
}

// Gram matrix Phi^H Phi of the interpolating family, same in charts 0 and 3.
inline CMat4 xp_gram(double p) {
    double g = 2.0 * std::sqrt((1.0 - p) * p);
    CMat4 m;
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = cplx(1, 0);
    m(0, 3) = m(3, 0) = cplx(g, 0);
    m(1, 2) = m(2, 1) = cplx(-g, 0);
    return m;
}

}  // namespace fixtures
