#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices, elementary transformation words, determinants.
 *
 * An ElementaryWord is a product of transvections E_ij(r) (optionally
 * DiagPair letters diag(u, u^{-1}) for the SL/E defect, which this library
 * never needs to emit on the supported backends). Letters multiply left to
 * right; acting on a row vector or matrix from the right applies them in
 * order as column operations.
 */

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

class Matrix {
public:
    Matrix(RingPtr ring, int rows, int cols);  // zero-filled
    static Matrix identity(const RingPtr& ring, int n);
    static Matrix from_rows(const RingPtr& ring, const std::vector<std::vector<Element>>& rows);
    /// Convenience: entries given as integers, mapped canonically.
    static Matrix from_integers(const RingPtr& ring, const std::vector<std::vector<long>>& rows);

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Element& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
    void set(int i, int j, Element e);

    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_square() const { return rows_ == cols_; }

    /// Exact determinant: fraction-free (Bareiss) elimination over the
    /// integral-domain backends, cofactor expansion over residue rings,
    /// componentwise over products.
    Element determinant() const;

    // in-place row/column operations (used by the reduction engines)
    void row_add(int dst, int src, const Element& r);  // row_dst += r * row_src
    void col_add(int dst, int src, const Element& r);  // col_dst += r * col_src
    void row_swap(int i, int j);
    void col_swap(int i, int j);
    void row_scale(int i, const Element& u);
    void col_scale(int j, const Element& u);

    std::string str() const;

private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<Element> entries_;  // row-major
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Element& s);

std::vector<Matrix> split_matrix(const Matrix& m);  // product backends
Matrix join_matrices(const RingPtr& product_ring, const std::vector<Matrix>& parts);

/// Transvection E_ij(r): identity plus r at (i, j). Indices are 0-based.
struct AddMultiple {
    int i, j;
    Element r;
};
/// diag(u at i, u^{-1} at j); only ever consumed, never produced, by the
/// factorization routines here.
struct DiagPair {
    int i, j;
    Element u;
};
using WordLetter = std::variant<AddMultiple, DiagPair>;

struct ElementaryWord {
    int size = 0;
    std::vector<WordLetter> letters;

    bool diag_pair_free() const;
    bool empty() const { return letters.empty(); }
};

enum class Side { Left, Right };

Matrix evaluate_word(const RingPtr& ring, const ElementaryWord& w);
/// side == Right: A * evaluate(w); side == Left: evaluate(w) * A.
Matrix apply_word(const Matrix& a, const ElementaryWord& w, Side side);
ElementaryWord inverse_word(const ElementaryWord& w);
ElementaryWord concat_words(const ElementaryWord& a, const ElementaryWord& b);

/// Factor a determinant-1 matrix over a non-Product backend into a product
/// of transvections (no DiagPair letters). Euclidean row reduction to a
/// unit diagonal, then Whitehead-style clearing of the diagonal.
ElementaryWord factor_into_word(const Matrix& s);

/// Combine one DiagPair-free word per product factor into a single word over
/// the product ring evaluating componentwise to the inputs.
ElementaryWord zip_product_words(const RingPtr& product_ring, int size,
                                 const std::vector<ElementaryWord>& component_words);

}  // namespace edr
