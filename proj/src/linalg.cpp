#include "latpoly/linalg.hpp"

#include <algorithm>

namespace latpoly {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) throw PreconditionError("from_rows: empty");
    IntMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < M.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != M.cols)
            throw PreconditionError("from_rows: ragged rows");
        for (int c = 0; c < M.cols; ++c) M.at(r, c) = rows[r][c];
    }
    return M;
}

IntVector IntMatrix::row(int r) const {
    IntVector v(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

IntVector IntMatrix::col(int c) const {
    IntVector v(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw PreconditionError("mat_mul: shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IntVector mat_vec(const IntMatrix& A, const IntVector& v) {
    if (A.cols != static_cast<int>(v.size()))
        throw PreconditionError("mat_vec: shape mismatch");
    IntVector r(static_cast<size_t>(A.rows), Int(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r[i] += A.at(i, j) * v[j];
    return r;
}

IntMatrix transpose(const IntMatrix& A) {
    IntMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Int determinant(const IntMatrix& A) {
    if (A.rows != A.cols) throw PreconditionError("determinant: not square");
    int n = A.rows;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                M.at(i, j) = v / prev;  // exact by Bareiss
            }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

namespace {

// Rational Gaussian elimination, returns rank; optionally records the reduced
// matrix for kernel extraction.
int rational_eliminate(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Rat>> to_rat(const std::vector<IntVector>& rows) {
    std::vector<std::vector<Rat>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> rr(r.size());
        for (size_t j = 0; j < r.size(); ++j) rr[j] = Rat(r[j]);
        m.push_back(std::move(rr));
    }
    return m;
}

}  // namespace

int rank_of_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return 0;
    auto m = to_rat(rows);
    return rational_eliminate(m);
}

int rank_of(const IntMatrix& A) {
    std::vector<IntVector> rows;
    for (int i = 0; i < A.rows; ++i) rows.push_back(A.row(i));
    return rank_of_rows(rows);
}

std::optional<IntVector> kernel_primitive(const std::vector<IntVector>& rows, int cols) {
    auto m = to_rat(rows);
    if (m.empty()) m.push_back(std::vector<Rat>(static_cast<size_t>(cols), Rat(0)));
    int r = rational_eliminate(m);
    if (r != cols - 1) return std::nullopt;
    // Identify pivot columns; the single free column parametrizes the kernel.
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    int pr = 0;
    for (int c = 0; c < cols && pr < static_cast<int>(m.size()); ++c) {
        if (m[pr][c] != 0) {
            pivot_col.push_back(c);
            is_pivot[c] = true;
            ++pr;
            if (pr == r) break;
        }
    }
    int free_c = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) { free_c = c; break; }
    std::vector<Rat> k(static_cast<size_t>(cols), Rat(0));
    k[free_c] = 1;
    for (int i = 0; i < r; ++i) k[pivot_col[i]] = -m[i][free_c];
    // Clear denominators and make primitive.
    Int lcm = 1;
    for (const auto& x : k)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    IntVector v(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        Rat scaled = k[c] * Rat(lcm);
        v[c] = boost::multiprecision::numerator(scaled);
    }
    return primitive(v);
}

namespace {

void add_row_multiple(IntMatrix& M, int dst, int src, const Int& q) {
    for (int j = 0; j < M.cols; ++j) M.at(dst, j) += q * M.at(src, j);
}

void swap_rows(IntMatrix& M, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}

void negate_row(IntMatrix& M, int i) {
    for (int c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& A) {
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    int r = 0;
    for (int c = 0; c < H.cols && r < H.rows; ++c) {
        // Reduce column c below row r to a single nonzero entry via gcd steps.
        while (true) {
            int p = -1;
            for (int i = r; i < H.rows; ++i) {
                if (H.at(i, c) != 0 &&
                    (p < 0 || boost::multiprecision::abs(H.at(i, c)) <
                                  boost::multiprecision::abs(H.at(p, c))))
                    p = i;
            }
            if (p < 0) break;
            if (p != r) { swap_rows(H, r, p); swap_rows(U, r, p); }
            bool done = true;
            for (int i = r + 1; i < H.rows; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q = floor_div(H.at(i, c), H.at(r, c));
                add_row_multiple(H, i, r, -q);
                add_row_multiple(U, i, r, -q);
                if (H.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) { negate_row(H, r); negate_row(U, r); }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(H.at(i, c), H.at(r, c));
            if (q != 0) { add_row_multiple(H, i, r, -q); add_row_multiple(U, i, r, -q); }
        }
        ++r;
    }
    return {H, U};
}

SnfResult smith_normal_form(const IntMatrix& A) {
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    IntMatrix V = IntMatrix::identity(A.cols);

    auto add_col_multiple = [](IntMatrix& M, int dst, int src, const Int& q) {
        for (int i = 0; i < M.rows; ++i) M.at(i, dst) += q * M.at(i, src);
    };
    auto swap_cols = [](IntMatrix& M, int i, int j) {
        for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
    };

    int t = 0;
    int nmin = std::min(D.rows, D.cols);
    while (t < nmin) {
        // Find a nonzero pivot in the trailing block.
        int pr = -1, pc = -1;
        for (int i = t; i < D.rows && pr < 0; ++i)
            for (int j = t; j < D.cols; ++j)
                if (D.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        if (pr != t) { swap_rows(D, t, pr); swap_rows(U, t, pr); }
        if (pc != t) { swap_cols(D, t, pc); swap_cols(V, t, pc); }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = floor_div(D.at(i, t), D.at(t, t));
                add_row_multiple(D, i, t, -q);
                add_row_multiple(U, i, t, -q);
                if (D.at(i, t) != 0) {
                    swap_rows(D, t, i);
                    swap_rows(U, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = floor_div(D.at(t, j), D.at(t, t));
                add_col_multiple(D, j, t, -q);
                add_col_multiple(V, j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(V, t, j);
                    clean = false;
                }
            }
        }
        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(U, t); }
        // Enforce divisibility of the rest of the block by the pivot.
        bool divides_all = true;
        for (int i = t + 1; i < D.rows && divides_all; ++i)
            for (int j = t + 1; j < D.cols; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    add_row_multiple(D, t, i, 1);
                    add_row_multiple(U, t, i, 1);
                    divides_all = false;
                    break;
                }
        if (divides_all) ++t;
    }
    return {D, U, V};
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& A, const IntVector& b) {
    if (A.rows != static_cast<int>(b.size()))
        throw PreconditionError("solve_integer: shape mismatch");
    // Column HNF via the row HNF of the transpose: H = Uh * A^T, so
    // A * Uh^T = H^T and x = Uh^T * y for a triangular solve H^T y = b.
    auto [H, Uh] = hermite_normal_form(transpose(A));
    IntMatrix Ut = transpose(Uh);
    // Pivot row (in H^T) of each pivot column.
    std::vector<std::pair<int, int>> pivots;  // (row in H^T, column index = row of H)
    for (int i = 0; i < H.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < H.cols; ++j)
            if (H.at(i, j) != 0) { pc = j; break; }
        if (pc >= 0) pivots.emplace_back(pc, i);
    }
    IntVector y(static_cast<size_t>(A.cols), Int(0));
    IntVector res = b;
    size_t pi = 0;
    std::sort(pivots.begin(), pivots.end());
    for (int row = 0; row < A.rows; ++row) {
        if (pi < pivots.size() && pivots[pi].first == row) {
            int col = pivots[pi].second;
            const Int& piv = H.at(col, row);
            if (res[row] % piv != 0) return std::nullopt;
            y[col] = res[row] / piv;
            // Subtract this column's contribution (column col of H^T = row col of H).
            for (int r2 = row; r2 < A.rows; ++r2) res[r2] -= y[col] * H.at(col, r2);
            ++pi;
        } else if (res[row] != 0) {
            return std::nullopt;
        }
    }
    IntegerSolution sol;
    sol.x = mat_vec(Ut, y);
    sol.unique = static_cast<int>(pivots.size()) == A.cols;
    return sol;
}

std::optional<IntegerSolution> solve_all_ones_system(const std::vector<IntVector>& normals) {
    if (normals.empty()) throw PreconditionError("solve_all_ones_system: empty");
    IntMatrix A = IntMatrix::from_rows(normals);
    IntVector ones(static_cast<size_t>(A.rows), Int(1));
    return solve_integer(A, ones);
}

IntVector primitive(const IntVector& v) {
    Int g = gcd_all(v);
    if (g == 0) throw PreconditionError("primitive: zero vector");
    IntVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

AffineUnimodularMap make_affine_map(IntMatrix linear, IntVector translation) {
    if (linear.rows != linear.cols || linear.rows != static_cast<int>(translation.size()))
        throw PreconditionError("make_affine_map: shape mismatch");
    Int d = determinant(linear);
    if (d != 1 && d != -1) throw PreconditionError("make_affine_map: |det| != 1");
    return {std::move(linear), std::move(translation)};
}

IntVector apply_map(const AffineUnimodularMap& f, const IntVector& p) {
    return add(mat_vec(f.linear, p), f.translation);
}

AffineUnimodularMap compose(const AffineUnimodularMap& f, const AffineUnimodularMap& g) {
    // x -> f(g(x)) = f.linear*g.linear*x + f.linear*g.translation + f.translation
    return {mat_mul(f.linear, g.linear),
            add(mat_vec(f.linear, g.translation), f.translation)};
}

AffineUnimodularMap inverse(const AffineUnimodularMap& f) {
    int n = f.linear.rows;
    Int d = determinant(f.linear);
    // Adjugate over the integers; |d| = 1 so adj/d stays integral.
    IntMatrix inv(n, n);
    if (n == 1) {
        inv.at(0, 0) = d;  // d = +-1
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                IntMatrix minor(n - 1, n - 1);
                for (int r = 0, mr = 0; r < n; ++r) {
                    if (r == j) continue;
                    for (int c = 0, mc = 0; c < n; ++c) {
                        if (c == i) continue;
                        minor.at(mr, mc++) = f.linear.at(r, c);
                    }
                    ++mr;
                }
                Int cof = determinant(minor);
                if ((i + j) % 2 == 1) cof = -cof;
                inv.at(i, j) = (d == 1) ? cof : -cof;
            }
    }
    return {inv, negate(mat_vec(inv, f.translation))};
}

}  // namespace latpoly
