#pragma once

#include "latpoly/ints.hpp"

#include <optional>
#include <utility>

namespace latpoly {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {
        if (r <= 0 || c <= 0) throw PreconditionError("IntMatrix: nonpositive size");
    }

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    IntVector row(int r) const;
    IntVector col(int c) const;

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntVector mat_vec(const IntMatrix& A, const IntVector& v);
IntMatrix transpose(const IntMatrix& A);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& A);

// Rank over the rationals.
int rank_of(const IntMatrix& A);
int rank_of_rows(const std::vector<IntVector>& rows);

// Primitive integer generator of the 1-dimensional kernel of a matrix whose
// rank is cols-1; nullopt when the kernel is not 1-dimensional.
std::optional<IntVector> kernel_primitive(const std::vector<IntVector>& rows, int cols);

// Row-style Hermite normal form: H = U*A, U unimodular, H upper echelon with
// positive pivots and entries above each pivot reduced into [0, pivot).
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};
HnfResult hermite_normal_form(const IntMatrix& A);

// Smith normal form: D = U*A*V diagonal with d1 | d2 | ..., U and V unimodular.
struct SnfResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
};
SnfResult smith_normal_form(const IntMatrix& A);

// Integer solutions of A*x = b.
struct IntegerSolution {
    IntVector x;
    bool unique = false;  // true iff A has full column rank
};
std::optional<IntegerSolution> solve_integer(const IntMatrix& A, const IntVector& b);

// Solves <u_i, m> = 1 for every row u_i of `normals`. Absence is a value.
std::optional<IntegerSolution> solve_all_ones_system(const std::vector<IntVector>& normals);

// v / gcd(v), direction preserved; rejects the zero vector.
IntVector primitive(const IntVector& v);

struct AffineUnimodularMap {
    IntMatrix linear;       // n x n, |det| = 1
    IntVector translation;  // length n

    static AffineUnimodularMap identity(int n) {
        return {IntMatrix::identity(n), zero_vector(n)};
    }
};

AffineUnimodularMap make_affine_map(IntMatrix linear, IntVector translation);
IntVector apply_map(const AffineUnimodularMap& f, const IntVector& p);
AffineUnimodularMap compose(const AffineUnimodularMap& f, const AffineUnimodularMap& g);  // f after g
AffineUnimodularMap inverse(const AffineUnimodularMap& f);

}  // namespace latpoly
