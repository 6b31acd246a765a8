#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsalg/scalar.hpp"

namespace hsalg {

/// Dense matrix over Q or a fixed Q(sqrt(d)); the field is whatever the
/// entries jointly live in, and mixing distinct discriminants throws.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    /// Common discriminant of the entries (0 for all-rational).
    long disc() const;

    ExactMatrix transposed() const;
    bool is_zero() const;
    bool is_antisymmetric() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix operator*(const Scalar& c) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

struct SolveResult {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel;  // exact basis of the null space
    std::vector<std::vector<Scalar>> image;   // original columns spanning the column space
};

/// Reduced row echelon form with deterministic pivoting: columns are scanned
/// left to right and the first row with a nonzero entry is chosen, so bases
/// derived from it are reproducible.
ExactMatrix rref(const ExactMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank_of(const ExactMatrix& m);

SolveResult solve_linear(const ExactMatrix& m);

/// A particular solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_affine(const ExactMatrix& m,
                                                const std::vector<Scalar>& b);

Scalar det(const ExactMatrix& m);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

ExactMatrix from_columns(int rows, const std::vector<std::vector<Scalar>>& cols);

/// Reduces v against the row span of a matrix in rref form (pivot entries of
/// v are eliminated); the result is the canonical representative of v modulo
/// that row space.
std::vector<Scalar> reduce_mod_rows(const ExactMatrix& rref_rows,
                                    const std::vector<int>& pivot_cols,
                                    std::vector<Scalar> v);

/// Kronecker product a (x) b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace hsalg
