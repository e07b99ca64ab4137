#include "qmlab/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

namespace qm {

IgusaSet<std::complex<double>> root_oracle(const std::array<std::complex<double>, 7>& a)
{
    using C = std::complex<double>;
    if (a[0] == 0.0) throw std::domain_error("root_oracle needs a0 != 0");
    // Roots of sum a_k x^(6-k) via companion matrix, then Newton polish.
    Eigen::Matrix<C, 6, 6> comp = Eigen::Matrix<C, 6, 6>::Zero();
    for (int i = 1; i < 6; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < 6; ++i) comp(i, 5) = -a[6 - i] / a[0];
    Eigen::ComplexEigenSolver<Eigen::Matrix<C, 6, 6>> es(comp);
    std::array<C, 6> r;
    for (int i = 0; i < 6; ++i) {
        C z = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            C p = a[0], dp = 0.0;
            for (int k = 1; k < 7; ++k) {
                dp = dp * z + p;
                p = p * z + a[k];
            }
            if (dp == 0.0) break;
            z -= p / dp;
        }
        r[i] = z;
    }
    auto d = [&](int i, int j) { return (r[i] - r[j]) * (r[i] - r[j]); };

    C i2 = 0.0;
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int k = 1; k < 6; ++k)
            if (k != b) rest.push_back(k);
        // pairings of the remaining four
        const int pr[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (auto& p : pr)
            i2 += d(0, b) * d(rest[p[0]], rest[p[1]]) * d(rest[p[2]], rest[p[3]]);
    }
    C i4 = 0.0, i6 = 0.0;
    for (int u = 1; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            int T[3] = {0, u, v};
            std::vector<int> U;
            for (int k = 1; k < 6; ++k)
                if (k != u && k != v) U.push_back(k);
            C tri = d(T[0], T[1]) * d(T[1], T[2]) * d(T[2], T[0]) * d(U[0], U[1]) * d(U[1], U[2]) * d(U[2], U[0]);
            i4 += tri;
            std::sort(U.begin(), U.end());
            do i6 += tri * d(T[0], U[0]) * d(T[1], U[1]) * d(T[2], U[2]);
            while (std::next_permutation(U.begin(), U.end()));
        }
    C i10 = 1.0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) i10 *= d(i, j);
    C a2 = a[0] * a[0], a4 = a2 * a2, a6 = a4 * a2, a10 = a6 * a4;
    return {a2 * i2, a4 * i4, a6 * i6, a10 * i10};
}

} // namespace qm
