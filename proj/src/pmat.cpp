#include "linroots/pmat.hpp"

namespace linroots::pmat {

uint64_t inv_mod(uint64_t a, uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)p, nr = (int64_t)(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

std::vector<size_t> rref(Mat& m, uint64_t p) {
    std::vector<size_t> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        uint64_t iv = inv_mod(m[r][c], p);
        for (size_t j = c; j < cols; ++j)
            m[r][j] = (uint32_t)((uint64_t)m[r][j] * iv % p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint64_t f = p - m[i][c];  // subtract f * pivot row
            for (size_t j = c; j < cols; ++j) {
                uint64_t v = (uint64_t)m[i][j] + f * m[r][j] % p;
                m[i][j] = (uint32_t)(v % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Mat m, uint64_t p) { return rref(m, p).size(); }

Mat nullspace(const Mat& m, size_t cols, uint64_t p) {
    Mat a = m;
    for (auto& row : a) row.resize(cols, 0);
    std::vector<size_t> piv = rref(a, p);
    std::vector<int> pivot_row(cols, -1);
    for (size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = (int)i;
    Mat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] >= 0) continue;
        Row v(cols, 0);
        v[c] = 1;
        for (size_t pc = 0; pc < cols; ++pc) {
            int pr = pivot_row[pc];
            if (pr < 0) continue;
            uint64_t coef = a[(size_t)pr][c];
            v[pc] = (uint32_t)((p - coef) % p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace linroots::pmat
