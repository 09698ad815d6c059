#include "edr/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace edr {

Matrix::Matrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    const size_t n = size_t(rows) * cols;
    entries_.reserve(n);
    for (size_t i = 0; i < n; ++i) entries_.push_back(ring_->zero());
}

Matrix Matrix::identity(const RingPtr& ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

Matrix Matrix::from_rows(const RingPtr& ring, const std::vector<std::vector<Element>>& rows) {
    const int r = int(rows.size());
    const int c = r == 0 ? 0 : int(rows[0].size());
    Matrix m(ring, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw DomainError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_integers(const RingPtr& ring, const std::vector<std::vector<long>>& rows) {
    const int r = int(rows.size());
    const int c = r == 0 ? 0 : int(rows[0].size());
    Matrix m(ring, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw DomainError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, ring->from_integer(rows[i][j]));
    }
    return m;
}

void Matrix::set(int i, int j, Element e) {
    if (!e.owner()->same_as(*ring_)) throw OwnerMismatch("matrix entry from a different ring");
    entries_[size_t(i) * cols_ + j] = std::move(e);
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (!ring_->same_as(*o.ring_)) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!a.ring()->same_as(*b.ring())) throw OwnerMismatch("matrix product across rings");
    if (a.cols() != b.rows()) throw DomainError("inner matrix dimensions disagree");
    Matrix r(a.ring(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Element s = a.ring()->zero();
            for (int k = 0; k < a.cols(); ++k) s = s + a.at(i, k) * b.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

Matrix operator*(const Matrix& a, const Element& s) {
    Matrix r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) * s);
    return r;
}

void Matrix::row_add(int dst, int src, const Element& r) {
    for (int j = 0; j < cols_; ++j) set(dst, j, at(dst, j) + r * at(src, j));
}

void Matrix::col_add(int dst, int src, const Element& r) {
    for (int i = 0; i < rows_; ++i) set(i, dst, at(i, dst) + at(i, src) * r);
}

void Matrix::row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(entries_[size_t(i) * cols_ + c], entries_[size_t(j) * cols_ + c]);
}

void Matrix::col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(entries_[size_t(r) * cols_ + i], entries_[size_t(r) * cols_ + j]);
}

void Matrix::row_scale(int i, const Element& u) {
    for (int j = 0; j < cols_; ++j) set(i, j, u * at(i, j));
}

void Matrix::col_scale(int j, const Element& u) {
    for (int i = 0; i < rows_; ++i) set(i, j, at(i, j) * u);
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---- determinant ----

namespace {

// Bareiss fraction-free elimination; valid over integral domains.
Element det_bareiss(const Matrix& a) {
    const int n = a.rows();
    const auto& R = a.ring();
    Matrix w = a;
    Element prev = R->one();
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return R->zero();
            w.row_swap(k, piv);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Element t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.set(i, j, exact_div(t, prev));
            }
        for (int i = k + 1; i < n; ++i) w.set(i, k, R->zero());
        prev = w.at(k, k);
    }
    Element d = n == 0 ? R->one() : w.at(n - 1, n - 1);
    return neg ? -d : d;
}

Element det_cofactor(const Matrix& a, std::vector<int>& cols, int row) {
    const auto& R = a.ring();
    const int n = int(cols.size());
    if (n == 0) return R->one();
    if (n == 1) return a.at(row, cols[0]);
    Element acc = R->zero();
    for (int t = 0; t < n; ++t) {
        if (a.at(row, cols[t]).is_zero()) continue;
        int c = cols[t];
        cols.erase(cols.begin() + t);
        Element minor = det_cofactor(a, cols, row + 1);
        cols.insert(cols.begin() + t, c);
        Element term = a.at(row, cols[t]) * minor;
        acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Element Matrix::determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::PolyOverPrimeField:
            return det_bareiss(*this);
        case RingKind::Residue: {
            std::vector<int> cols(cols_);
            for (int j = 0; j < cols_; ++j) cols[j] = j;
            return det_cofactor(*this, cols, 0);
        }
        case RingKind::Product: {
            auto parts = split_matrix(*this);
            std::vector<Element> dets;
            dets.reserve(parts.size());
            for (const auto& p : parts) dets.push_back(p.determinant());
            return ring_->from_components(std::move(dets));
        }
    }
    throw DomainError("unreachable");
}

// ---- product splitting ----

std::vector<Matrix> split_matrix(const Matrix& m) {
    if (!m.ring()->is_product()) throw DomainError("split_matrix requires a product backend");
    const auto& factors = m.ring()->factors();
    std::vector<Matrix> parts;
    parts.reserve(factors.size());
    for (const auto& f : factors) parts.emplace_back(f, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const auto& t = m.at(i, j).as_tuple();
            for (size_t x = 0; x < factors.size(); ++x) parts[x].set(i, j, t[x]);
        }
    return parts;
}

Matrix join_matrices(const RingPtr& product_ring, const std::vector<Matrix>& parts) {
    if (parts.empty()) throw DomainError("join_matrices needs at least one part");
    Matrix out(product_ring, parts[0].rows(), parts[0].cols());
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            Element::Tuple t;
            t.reserve(parts.size());
            for (const auto& p : parts) t.push_back(p.at(i, j));
            out.set(i, j, product_ring->from_components(std::move(t)));
        }
    return out;
}

// ---- elementary words ----

bool ElementaryWord::diag_pair_free() const {
    for (const auto& l : letters)
        if (std::holds_alternative<DiagPair>(l)) return false;
    return true;
}

namespace {

void check_letter(const WordLetter& l, int size) {
    int i, j;
    if (const auto* a = std::get_if<AddMultiple>(&l)) {
        i = a->i;
        j = a->j;
    } else {
        const auto& d = std::get<DiagPair>(l);
        i = d.i;
        j = d.j;
    }
    if (i == j || i < 0 || j < 0 || i >= size || j >= size)
        throw DomainError("elementary letter index out of range");
}

void apply_letter_right(Matrix& a, const WordLetter& l) {
    if (const auto* t = std::get_if<AddMultiple>(&l)) {
        a.col_add(t->j, t->i, t->r);  // A * E_ij(r): col_j += col_i * r
    } else {
        const auto& d = std::get<DiagPair>(l);
        a.col_scale(d.i, d.u);
        a.col_scale(d.j, invert_unit(d.u));
    }
}

void apply_letter_left(Matrix& a, const WordLetter& l) {
    if (const auto* t = std::get_if<AddMultiple>(&l)) {
        a.row_add(t->i, t->j, t->r);  // E_ij(r) * A: row_i += r * row_j
    } else {
        const auto& d = std::get<DiagPair>(l);
        a.row_scale(d.i, d.u);
        a.row_scale(d.j, invert_unit(d.u));
    }
}

}  // namespace

Matrix evaluate_word(const RingPtr& ring, const ElementaryWord& w) {
    Matrix m = Matrix::identity(ring, w.size);
    for (const auto& l : w.letters) {
        check_letter(l, w.size);
        apply_letter_right(m, l);
    }
    return m;
}

Matrix apply_word(const Matrix& a, const ElementaryWord& w, Side side) {
    if (side == Side::Right && a.cols() != w.size)
        throw DomainError("word size does not match column count");
    if (side == Side::Left && a.rows() != w.size)
        throw DomainError("word size does not match row count");
    Matrix m = a;
    if (side == Side::Right) {
        for (const auto& l : w.letters) {
            check_letter(l, w.size);
            apply_letter_right(m, l);
        }
    } else {
        // evaluate(w) * A = L_1 (L_2 (... (L_k A))), rightmost letter first
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            check_letter(*it, w.size);
            apply_letter_left(m, *it);
        }
    }
    return m;
}

ElementaryWord inverse_word(const ElementaryWord& w) {
    ElementaryWord out;
    out.size = w.size;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (const auto* t = std::get_if<AddMultiple>(&*it))
            out.letters.push_back(AddMultiple{t->i, t->j, -t->r});
        else {
            const auto& d = std::get<DiagPair>(*it);
            out.letters.push_back(DiagPair{d.i, d.j, invert_unit(d.u)});
        }
    }
    return out;
}

ElementaryWord concat_words(const ElementaryWord& a, const ElementaryWord& b) {
    if (a.size != b.size) throw DomainError("cannot concatenate words of different sizes");
    ElementaryWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// ---- factorization of SL matrices into transvections ----

namespace {

// Reduction recorder: applies row operations to W and accumulates the
// inverse letters, so that evaluate(letters) * (final W) = original W read
// backwards; see factor_into_word for the assembly.
struct RowReducer {
    Matrix& w;
    std::vector<WordLetter>& inv_letters;

    void row_add(int dst, int src, const Element& r) {
        w.row_add(dst, src, r);
        inv_letters.push_back(AddMultiple{dst, src, -r});
    }
};

}  // namespace

ElementaryWord factor_into_word(const Matrix& s) {
    if (!s.is_square()) throw DomainError("factor_into_word needs a square matrix");
    if (s.ring()->is_product())
        throw DomainError("factor_into_word over a product ring: factor componentwise and zip");
    const auto& R = s.ring();
    const int n = s.rows();
    if (!s.determinant().is_one()) throw DomainError("factor_into_word needs determinant 1");

    ElementaryWord word;
    word.size = n;
    if (n <= 1) return word;  // [1] factors as the empty word

    Matrix w = s;
    RowReducer red{w, word.letters};

    // Phase A: Euclidean reduction of each column to a single (unit) pivot.
    for (int k = 0; k < n; ++k) {
        while (true) {
            // smallest nonzero entry in column k at rows >= k
            int best = -1;
            mpz_class best_size;
            for (int i = k; i < n; ++i) {
                if (w.at(i, k).is_zero()) continue;
                mpz_class sz = rep_size(w.at(i, k));
                if (best < 0 || sz < best_size) {
                    best = i;
                    best_size = sz;
                }
            }
            if (best < 0) throw DomainError("determinant-1 matrix with a zero column block");
            // reduce every other nonzero entry in the column by the pivot
            bool other = false;
            for (int i = k; i < n; ++i) {
                if (i == best || w.at(i, k).is_zero()) continue;
                other = true;
                auto d = divmod(w.at(i, k), w.at(best, k));
                red.row_add(i, best, -d.q);
            }
            if (other) continue;  // sizes shrank; repeat
            if (best != k) {
                // move the pivot to row k with two transvections
                red.row_add(k, best, R->one());
                red.row_add(best, k, -R->one());
            } else {
                break;
            }
        }
    }

    // W is now upper triangular with unit diagonal entries.
    // Phase B: clear above the diagonal, bottom-up.
    for (int j = n - 1; j >= 1; --j) {
        const Element inv = invert_unit(w.at(j, j));
        for (int i = 0; i < j; ++i) {
            if (w.at(i, j).is_zero()) continue;
            red.row_add(i, j, -(w.at(i, j) * inv));
        }
    }

    // Phase C: diag(d_0, ..., d_{n-1}) with product 1; clear with Whitehead
    // identities diag(u, u^{-1}) = E12(u) E21(-u^{-1}) E12(u) w(1)^{-1}.
    for (int k = 0; k + 1 < n; ++k) {
        const Element d = w.at(k, k);
        if (d.is_one()) continue;
        const Element u = invert_unit(d);  // factor diag(u, u^{-1}) onto rows k, k+1
        const Element ui = d;
        const WordLetter seq[6] = {
            AddMultiple{k, k + 1, u},   AddMultiple{k + 1, k, -ui}, AddMultiple{k, k + 1, u},
            AddMultiple{k, k + 1, -R->one()}, AddMultiple{k + 1, k, R->one()}, AddMultiple{k, k + 1, -R->one()}};
        // left-multiply by seq[0]*...*seq[5]: apply right-to-left
        for (int t = 5; t >= 0; --t) {
            const auto& a = std::get<AddMultiple>(seq[t]);
            red.row_add(a.i, a.j, a.r);
        }
    }
    if (!(w == Matrix::identity(R, n)))
        throw DomainError("internal error: SL factorization did not reach the identity");

    // Applied ops M_1 ... M_T satisfy M_T ... M_1 S = 1, so
    // S = inv(M_1) ... inv(M_T); inv_letters already holds them in order.
    return word;
}

ElementaryWord zip_product_words(const RingPtr& product_ring, int size,
                                 const std::vector<ElementaryWord>& component_words) {
    const auto& factors = product_ring->factors();
    if (component_words.size() != factors.size())
        throw DomainError("one component word per product factor required");
    size_t rounds = 0;
    for (const auto& w : component_words) {
        if (!w.diag_pair_free())
            throw DomainError("zip_product_words requires DiagPair-free component words");
        rounds = std::max(rounds, w.letters.size());
    }
    ElementaryWord out;
    out.size = size;
    for (size_t k = 0; k < rounds; ++k) {
        // one sweep over all (i, j) slots per round, lexicographic order
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                if (i == j) continue;
                bool any = false;
                Element::Tuple rs;
                rs.reserve(factors.size());
                for (size_t x = 0; x < factors.size(); ++x) {
                    const auto& w = component_words[x];
                    if (k < w.letters.size()) {
                        const auto& a = std::get<AddMultiple>(w.letters[k]);
                        if (a.i == i && a.j == j && !a.r.is_zero()) {
                            rs.push_back(a.r);
                            any = true;
                            continue;
                        }
                    }
                    rs.push_back(factors[x]->zero());
                }
                if (!any) continue;
                out.letters.push_back(AddMultiple{i, j, product_ring->from_components(std::move(rs))});
            }
    }
    return out;
}

}  // namespace edr
