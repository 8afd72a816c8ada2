#include "hallq/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallq {

RMatrix zero_matrix(const Ring& R, int rows, int cols) {
    return RMatrix(rows, cols, R.zero());
}

RMatrix identity_matrix(const Ring& R, int rank) {
    RMatrix m(rank, rank, R.zero());
    for (int i = 0; i < rank; ++i) m.at(i, i) = R.one();
    return m;
}

static void check_shape(const RMatrix& a, const RMatrix& b, bool same) {
    if (same ? (a.rows != b.rows || a.cols != b.cols) : (a.cols != b.rows))
        throw std::invalid_argument("matrix shape mismatch");
}

RMatrix mat_add(const Ring& R, const RMatrix& a, const RMatrix& b) {
    check_shape(a, b, true);
    RMatrix out = a;
    for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = R.add(a.e[i], b.e[i]);
    return out;
}

RMatrix mat_sub(const Ring& R, const RMatrix& a, const RMatrix& b) {
    check_shape(a, b, true);
    RMatrix out = a;
    for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = R.sub(a.e[i], b.e[i]);
    return out;
}

RMatrix mat_mul(const Ring& R, const RMatrix& a, const RMatrix& b) {
    check_shape(a, b, false);
    RMatrix out(a.rows, b.cols, R.zero());
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            RingElem aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = R.add(out.at(i, j), R.mul(aik, b.at(k, j)));
        }
    return out;
}

RMatrix mat_col(const RMatrix& a, int j) {
    RMatrix out;
    out.rows = a.rows;
    out.cols = 1;
    out.e.reserve(a.rows);
    for (int i = 0; i < a.rows; ++i) out.e.push_back(a.at(i, j));
    return out;
}

std::vector<int> mod_t(const Ring& R, const RMatrix& a) {
    std::vector<int> out(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) out[i] = R.residue(a.e[i]);
    return out;
}

int rank_mod_t(const Ring& R, const RMatrix& a) {
    int q = R.q();
    std::vector<int> m = mod_t(R, a);
    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < a.rows; ++r)
            if (m[static_cast<size_t>(r) * a.cols + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j)
            std::swap(m[static_cast<size_t>(piv) * a.cols + j],
                      m[static_cast<size_t>(rank) * a.cols + j]);
        int inv = R.inv_mod_q(m[static_cast<size_t>(rank) * a.cols + col]);
        for (int j = 0; j < a.cols; ++j)
            m[static_cast<size_t>(rank) * a.cols + j] =
                m[static_cast<size_t>(rank) * a.cols + j] * inv % q;
        for (int r = 0; r < a.rows; ++r) {
            if (r == rank) continue;
            int f = m[static_cast<size_t>(r) * a.cols + col];
            if (f == 0) continue;
            for (int j = 0; j < a.cols; ++j) {
                int v = m[static_cast<size_t>(r) * a.cols + j] -
                        f * m[static_cast<size_t>(rank) * a.cols + j] % q;
                m[static_cast<size_t>(r) * a.cols + j] = (v % q + q) % q;
            }
        }
        ++rank;
    }
    return rank;
}

bool is_invertible(const Ring& R, const RMatrix& m) {
    return m.rows == m.cols && rank_mod_t(R, m) == m.rows;
}

RMatrix mat_inverse(const Ring& R, const RMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("mat_inverse: not square");
    int r = m.rows;
    RMatrix a = m;
    RMatrix inv = identity_matrix(R, r);
    // Gauss-Jordan; a pivot column of an invertible matrix always holds a
    // unit in some remaining row, since the reduction mod t stays invertible.
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int row = col; row < r; ++row)
            if (R.is_unit(a.at(row, col))) { piv = row; break; }
        if (piv < 0) throw std::domain_error("matrix not invertible");
        if (piv != col) {
            for (int j = 0; j < r; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        RingElem s = R.inverse(a.at(col, col));
        for (int j = 0; j < r; ++j) {
            a.at(col, j) = R.mul(s, a.at(col, j));
            inv.at(col, j) = R.mul(s, inv.at(col, j));
        }
        for (int row = 0; row < r; ++row) {
            if (row == col) continue;
            RingElem f = a.at(row, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < r; ++j) {
                a.at(row, j) = R.sub(a.at(row, j), R.mul(f, a.at(col, j)));
                inv.at(row, j) = R.sub(inv.at(row, j), R.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

// Pivot rows of the reduced column echelon of the mod-t column span;
// empty optional when the rank mod t is below the column count.
static std::optional<std::vector<int>> span_pivot_rows(const Ring& R, const RMatrix& m) {
    int q = R.q();
    int rows = m.rows, cols = m.cols;
    std::vector<int> a = mod_t(R, m);
    std::vector<int> pivots;
    int done = 0;  // columns already reduced
    for (int row = 0; row < rows && done < cols; ++row) {
        int piv = -1;
        for (int c = done; c < cols; ++c)
            if (a[static_cast<size_t>(row) * cols + c] != 0) { piv = c; break; }
        if (piv < 0) continue;
        // swap into position, scale to 1, clear the row in other columns
        for (int i = 0; i < rows; ++i)
            std::swap(a[static_cast<size_t>(i) * cols + piv],
                      a[static_cast<size_t>(i) * cols + done]);
        int inv = R.inv_mod_q(a[static_cast<size_t>(row) * cols + done]);
        for (int i = 0; i < rows; ++i)
            a[static_cast<size_t>(i) * cols + done] =
                a[static_cast<size_t>(i) * cols + done] * inv % q;
        for (int c = 0; c < cols; ++c) {
            if (c == done) continue;
            int f = a[static_cast<size_t>(row) * cols + c];
            if (f == 0) continue;
            for (int i = 0; i < rows; ++i) {
                int v = a[static_cast<size_t>(i) * cols + c] -
                        f * a[static_cast<size_t>(i) * cols + done] % q;
                a[static_cast<size_t>(i) * cols + c] = (v % q + q) % q;
            }
        }
        pivots.push_back(row);
        ++done;
    }
    if (done < cols) return std::nullopt;
    return pivots;
}

std::optional<RMatrix> echelon_summand_form(const Ring& R, const RMatrix& m) {
    if (m.cols > m.rows) throw std::invalid_argument("echelon_summand_form: cols > rows");
    if (m.cols == 0) return zero_matrix(R, m.rows, 0);
    auto pivots = span_pivot_rows(R, m);
    if (!pivots) return std::nullopt;
    RMatrix p(m.cols, m.cols, R.zero());
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j) p.at(i, j) = m.at((*pivots)[i], j);
    return mat_mul(R, m, mat_inverse(R, p));
}

std::vector<int> echelon_pivot_rows(const Ring& R, const RMatrix& form) {
    auto pivots = span_pivot_rows(R, form);
    if (!pivots) throw std::invalid_argument("not an echelon summand form");
    return *pivots;
}

std::optional<RMatrix> echelon_solve(const Ring& R, const RMatrix& form, const RMatrix& y) {
    if (y.rows != form.rows || y.cols != 1) throw std::invalid_argument("echelon_solve shape");
    if (form.cols == 0) {
        for (const auto& v : y.e)
            if (!v.is_zero()) return std::nullopt;
        return zero_matrix(R, 0, 1);
    }
    auto pivots = echelon_pivot_rows(R, form);
    RMatrix x(form.cols, 1, R.zero());
    for (int j = 0; j < form.cols; ++j) x.at(j, 0) = y.at(pivots[j], 0);
    if (mat_mul(R, form, x) != y) return std::nullopt;
    return x;
}

std::vector<RMatrix> enumerate_summand_forms(const Ring& R, int s, int r, std::uint64_t budget) {
    if (s < 0 || r < 0 || s > r) throw std::invalid_argument("enumerate_summand_forms ranks");
    std::vector<RMatrix> out;
    if (s == 0) {
        out.push_back(zero_matrix(R, r, 0));
        return out;
    }
    // Iterate pivot row sets p_1 < ... < p_s; per column, entries above the
    // pivot lie in tR, entries below are free, other pivot rows are 0.
    std::vector<int> pivots(s);
    for (int i = 0; i < s; ++i) pivots[i] = i;
    std::uint64_t produced = 0;
    while (true) {
        std::vector<bool> is_pivot(r, false);
        for (int p : pivots) is_pivot[p] = true;
        // free slots: (row, col, restricted-to-tR?)
        std::vector<std::tuple<int, int, bool>> slots;
        for (int j = 0; j < s; ++j)
            for (int row = 0; row < r; ++row) {
                if (is_pivot[row]) continue;
                slots.emplace_back(row, j, row < pivots[j]);
            }
        std::uint64_t count = 1;
        for (auto& [row, col, in_t] : slots)
            count = checked_mul(count, in_t ? R.size() / R.q() : R.size(), budget,
                                "enumerate_summand_forms");
        if (count > budget - produced)
            throw budget_error("enumerate_summand_forms: enumeration exceeds budget cap");
        produced += count;
        std::vector<std::uint64_t> idx(slots.size(), 0);
        while (true) {
            RMatrix m = zero_matrix(R, r, s);
            for (int j = 0; j < s; ++j) m.at(pivots[j], j) = R.one();
            for (size_t k = 0; k < slots.size(); ++k) {
                auto [row, col, in_t] = slots[k];
                // tR = codes divisible by q in the packed encoding
                std::uint64_t code = in_t ? idx[k] * R.q() : idx[k];
                m.at(row, col) = R.from_code(code);
            }
            out.push_back(std::move(m));
            size_t k = 0;
            for (; k < slots.size(); ++k) {
                std::uint64_t lim = std::get<2>(slots[k]) ? R.size() / R.q() : R.size();
                if (++idx[k] < lim) break;
                idx[k] = 0;
            }
            if (k == slots.size()) break;
        }
        // next pivot combination
        int i = s - 1;
        while (i >= 0 && pivots[i] == r - s + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < s; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::uint64_t gl_order(const Ring& R, int rank, std::uint64_t cap) {
    std::uint64_t out = 1;
    // q^{(n-1) r^2}
    out = checked_pow(static_cast<std::uint64_t>(R.q()),
                      static_cast<unsigned>((R.n() - 1) * rank * rank), cap, "gl_order");
    std::uint64_t qr = checked_pow(static_cast<std::uint64_t>(R.q()),
                                   static_cast<unsigned>(rank), cap, "gl_order");
    std::uint64_t qi = 1;
    for (int i = 0; i < rank; ++i) {
        out = checked_mul(out, qr - qi, cap, "gl_order");
        qi *= static_cast<std::uint64_t>(R.q());
    }
    return out;
}

std::vector<RMatrix> enumerate_GL(const Ring& R, int rank, std::uint64_t budget) {
    if (rank < 0) throw std::invalid_argument("enumerate_GL: negative rank");
    std::uint64_t total =
        checked_pow(R.size(), static_cast<unsigned>(rank) * static_cast<unsigned>(rank), budget,
                    "enumerate_GL");
    std::vector<RMatrix> out;
    if (rank == 0) {
        out.push_back(RMatrix(0, 0, R.zero()));
        return out;
    }
    std::vector<std::uint64_t> codes(static_cast<size_t>(rank) * rank, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        RMatrix m(rank, rank, R.zero());
        for (size_t k = 0; k < codes.size(); ++k) m.e[k] = R.from_code(codes[k]);
        if (is_invertible(R, m)) out.push_back(std::move(m));
        // increment flattened codes, last entry fastest
        for (size_t k = codes.size(); k-- > 0;) {
            if (++codes[k] < R.size()) break;
            codes[k] = 0;
        }
    }
    return out;
}

std::vector<std::pair<RMatrix, RMatrix>> gl_generators(const Ring& R, int rank) {
    std::vector<std::pair<RMatrix, RMatrix>> out;
    if (rank == 0) return out;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            for (int a = 0; a < R.n(); ++a) {
                RMatrix g = identity_matrix(R, rank);
                g.at(i, j) = R.t_pow(a);
                RMatrix ginv = identity_matrix(R, rank);
                ginv.at(i, j) = R.neg(R.t_pow(a));
                out.emplace_back(std::move(g), std::move(ginv));
            }
        }
    for (int i = 0; i < rank; ++i)
        for (RingElem u : R.units()) {
            if (u == R.one()) continue;
            RMatrix g = identity_matrix(R, rank);
            g.at(i, i) = u;
            RMatrix ginv = identity_matrix(R, rank);
            ginv.at(i, i) = R.inverse(u);
            out.emplace_back(std::move(g), std::move(ginv));
        }
    return out;
}

}  // namespace hallq
