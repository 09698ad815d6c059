#include "edr/smith.hpp"

#include <algorithm>

namespace edr {

namespace {

// Tracks W together with B, B_inv, C, C_inv so that B * A * C = W holds
// throughout the reduction.
struct SnfState {
    Matrix w, b, b_inv, c, c_inv;

    explicit SnfState(const Matrix& a)
        : w(a),
          b(Matrix::identity(a.ring(), a.rows())),
          b_inv(Matrix::identity(a.ring(), a.rows())),
          c(Matrix::identity(a.ring(), a.cols())),
          c_inv(Matrix::identity(a.ring(), a.cols())) {}

    void row_add(int dst, int src, const Element& r) {
        w.row_add(dst, src, r);
        b.row_add(dst, src, r);
        b_inv.col_add(src, dst, -r);
    }
    void col_add(int dst, int src, const Element& r) {
        w.col_add(dst, src, r);
        c.col_add(dst, src, r);
        c_inv.row_add(src, dst, -r);
    }
    void row_swap(int i, int j) {
        w.row_swap(i, j);
        b.row_swap(i, j);
        b_inv.col_swap(i, j);
    }
    void col_swap(int i, int j) {
        w.col_swap(i, j);
        c.col_swap(i, j);
        c_inv.row_swap(i, j);
    }
    void row_scale(int i, const Element& u) {
        w.row_scale(i, u);
        b.row_scale(i, u);
        b_inv.col_scale(i, invert_unit(u));
    }
};

// smallest nonzero entry of the submatrix [t.., t..]; ties resolved by scan
// order (lowest row, then column)
bool find_pivot(const Matrix& w, int t, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < w.rows(); ++i)
        for (int j = t; j < w.cols(); ++j) {
            if (w.at(i, j).is_zero()) continue;
            mpz_class sz = rep_size(w.at(i, j));
            if (!found || sz < best) {
                found = true;
                best = sz;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void reduce_non_product(SnfState& st) {
    Matrix& w = st.w;
    const int r = std::min(w.rows(), w.cols());
    for (int t = 0; t < r; ++t) {
        while (true) {
            int pi, pj;
            if (!find_pivot(w, t, pi, pj)) return;  // remaining block is zero
            st.row_swap(t, pi);
            st.col_swap(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < w.rows(); ++i) {
                if (w.at(i, t).is_zero()) continue;
                auto d = divmod(w.at(i, t), w.at(t, t));
                st.row_add(i, t, -d.q);
                if (!w.at(i, t).is_zero()) dirty = true;
            }
            if (dirty) continue;  // strictly smaller entries appeared in the column

            for (int j = t + 1; j < w.cols(); ++j) {
                if (w.at(t, j).is_zero()) continue;
                auto d = divmod(w.at(t, j), w.at(t, t));
                st.col_add(j, t, -d.q);
                if (!w.at(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the remaining block (representative level)
            int oi = -1, oj = -1;
            for (int i = t + 1; i < w.rows() && oi < 0; ++i)
                for (int j = t + 1; j < w.cols(); ++j)
                    if (!rep_divides(w.at(t, t), w.at(i, j))) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi >= 0) {
                st.row_add(t, oi, w.ring()->one());
                continue;
            }
            break;
        }
    }
}

// reverse the first len diagonal positions on both sides
Matrix reverse_rows(const Matrix& m, int len) {
    Matrix out = m;
    for (int i = 0; i < len / 2; ++i) out.row_swap(i, len - 1 - i);
    return out;
}

Matrix reverse_cols(const Matrix& m, int len) {
    Matrix out = m;
    for (int j = 0; j < len / 2; ++j) out.col_swap(j, len - 1 - j);
    return out;
}

bool palindromic(const std::vector<Element>& chain) {
    for (size_t i = 0; 2 * i < chain.size(); ++i)
        if (chain[i] != chain[chain.size() - 1 - i]) return false;
    return true;
}

// Present the decomposition with the paper-order diagonal. When the diagonal
// reads the same in both orders (zero matrix, identity, ...) the witnesses
// are kept untouched, so the zero matrix gets identity witnesses.
SmithDecomposition assemble(Matrix b, Matrix b_inv, Matrix w, Matrix c, Matrix c_inv,
                            std::vector<Element> chain) {
    const int r = int(chain.size());
    std::vector<Element> paper(chain.rbegin(), chain.rend());
    if (palindromic(chain))
        return {std::move(b), std::move(w), std::move(c), std::move(b_inv), std::move(c_inv),
                std::move(paper), std::move(chain)};
    return {reverse_rows(b, r),
            reverse_rows(reverse_cols(w, r), r),
            reverse_cols(c, r),
            reverse_cols(b_inv, r),
            reverse_rows(c_inv, r),
            std::move(paper),
            std::move(chain)};
}

SmithDecomposition finish_from_chain_state(SnfState&& st) {
    Matrix& w = st.w;
    const int r = std::min(w.rows(), w.cols());

    // canonical associate normalization of the diagonal
    for (int t = 0; t < r; ++t) {
        auto d = associate_decompose(w.at(t, t));
        if (!d.unit.is_one()) st.row_scale(t, invert_unit(d.unit));
    }

    std::vector<Element> chain;
    chain.reserve(r);
    for (int t = 0; t < r; ++t) chain.push_back(w.at(t, t));

    return assemble(std::move(st.b), std::move(st.b_inv), std::move(st.w), std::move(st.c),
                    std::move(st.c_inv), std::move(chain));
}

}  // namespace

Matrix SmithDecomposition::chain_B() const { return reverse_rows(B, diag_len()); }
Matrix SmithDecomposition::chain_B_inv() const { return reverse_cols(B_inv, diag_len()); }
Matrix SmithDecomposition::chain_C() const { return reverse_cols(C, diag_len()); }
Matrix SmithDecomposition::chain_C_inv() const { return reverse_rows(C_inv, diag_len()); }
Matrix SmithDecomposition::chain_S() const { return reverse_rows(reverse_cols(S, diag_len()), diag_len()); }

SmithDecomposition smith_normal_form(const Matrix& a) {
    if (a.ring()->is_product()) {
        auto parts = split_matrix(a);
        std::vector<Matrix> bs, ss, cs, bis, cis;
        std::vector<std::vector<Element>> chains;
        for (const auto& p : parts) {
            auto d = smith_normal_form(p);
            bs.push_back(d.chain_B());
            ss.push_back(d.chain_S());
            cs.push_back(d.chain_C());
            bis.push_back(d.chain_B_inv());
            cis.push_back(d.chain_C_inv());
            chains.push_back(d.diag_chain_order);
        }
        // positional recombination; componentwise ascending chains stay
        // jointly ascending
        const auto& R = a.ring();
        const int r = std::min(a.rows(), a.cols());
        std::vector<Element> chain;
        for (int t = 0; t < r; ++t) {
            Element::Tuple tup;
            for (const auto& ch : chains) tup.push_back(ch[t]);
            chain.push_back(R->from_components(std::move(tup)));
        }
        return assemble(join_matrices(R, bs), join_matrices(R, bis), join_matrices(R, ss),
                        join_matrices(R, cs), join_matrices(R, cis), std::move(chain));
    }
    SnfState st(a);
    reduce_non_product(st);
    return finish_from_chain_state(std::move(st));
}

// ---- minor gcd machinery ----

namespace {

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Matrix submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix s(a.ring(), int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.set(int(i), int(j), a.at(rows[i], cols[j]));
    return s;
}

// gcd of all k x k minors over an integral-domain backend (canonical
// associate); zero when there are no minors or all vanish
Element minors_gcd_domain(const Matrix& a, int k) {
    const auto& R = a.ring();
    if (k == 0) return R->one();
    Element g = R->zero();
    bool unit_hit = false;
    for_each_subset(a.rows(), k, [&](const std::vector<int>& rows) {
        if (unit_hit) return;
        for_each_subset(a.cols(), k, [&](const std::vector<int>& cols) {
            if (unit_hit) return;
            Element d = submatrix(a, rows, cols).determinant();
            if (d.is_zero()) return;
            g = gcd_bezout(g, d).g;
            if (g.is_one()) unit_hit = true;
        });
    });
    return g;
}

}  // namespace

PrincipalIdeal minors_ideal(const Matrix& a, int size) {
    const auto& R = a.ring();
    if (size <= 0) return PrincipalIdeal(R->one());  // I_0 = R by convention
    if (size > std::min(a.rows(), a.cols())) return PrincipalIdeal(R->zero());
    if (R->is_product()) {
        auto parts = split_matrix(a);
        Element::Tuple t;
        for (const auto& p : parts) t.push_back(minors_ideal(p, size).generator());
        return PrincipalIdeal(R->from_components(std::move(t)));
    }
    if (R->kind() == RingKind::Residue) {
        // ideal of minors in Z/N: gcd of representative minors and N
        auto Z = Ring::integers();
        Matrix lift(Z, a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) lift.set(i, j, Z->make(a.at(i, j).as_integer()));
        Element g = minors_gcd_domain(lift, size);
        return PrincipalIdeal(R->make(gcd(g.as_integer(), R->residue_modulus())));
    }
    return PrincipalIdeal(minors_gcd_domain(a, size));
}

std::vector<PrincipalIdeal> minor_gcd_invariants(const Matrix& a) {
    const auto& R = a.ring();
    if (R->is_product()) throw DomainError("minor_gcd_invariants: non-Product backends only");
    const int r = std::min(a.rows(), a.cols());
    if (r > 8) throw DomainError("minor_gcd_invariants: size guard min(m, n) <= 8 exceeded");

    if (R->kind() == RingKind::Residue) {
        // lift to Z and append the modulus relations N * identity
        auto Z = Ring::integers();
        const mpz_class& N = R->residue_modulus();
        Matrix lift(Z, a.rows(), a.cols() + a.rows());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) lift.set(i, j, Z->make(a.at(i, j).as_integer()));
            lift.set(i, a.cols() + i, Z->make(N));
        }
        std::vector<Element> dz;  // integer D_i up to size r
        dz.push_back(Z->one());
        for (int i = 1; i <= r; ++i) dz.push_back(minors_gcd_domain(lift, i));
        std::vector<PrincipalIdeal> out;
        for (int i = 1; i <= r; ++i) {
            Element f = dz[i].is_zero() ? Z->zero() : exact_div(dz[i], dz[i - 1]);
            out.emplace_back(R->make(f.as_integer()));
        }
        return out;
    }

    std::vector<PrincipalIdeal> out;
    Element prev = R->one();
    bool hit_zero = false;
    for (int i = 1; i <= r; ++i) {
        Element di = hit_zero ? R->zero() : minors_gcd_domain(a, i);
        if (di.is_zero()) {
            hit_zero = true;
            out.emplace_back(R->zero());
            continue;
        }
        out.emplace_back(canonical_associate(exact_div(di, prev)));
        prev = di;
    }
    return out;
}

// ---- linear solving ----

std::optional<std::vector<Element>> solve_linear(const Matrix& a, const std::vector<Element>& t) {
    if (int(t.size()) != a.rows()) throw DomainError("solve_linear: target length mismatch");
    const auto& R = a.ring();
    if (R->is_product()) {
        auto parts = split_matrix(a);
        const size_t nf = R->factors().size();
        std::vector<std::vector<Element>> targets(nf);
        for (const auto& e : t) {
            const auto& tup = e.as_tuple();
            for (size_t x = 0; x < nf; ++x) targets[x].push_back(tup[x]);
        }
        std::vector<std::vector<Element>> sols;
        for (size_t x = 0; x < nf; ++x) {
            auto s = solve_linear(parts[x], targets[x]);
            if (!s) return std::nullopt;
            sols.push_back(std::move(*s));
        }
        std::vector<Element> out;
        for (int j = 0; j < a.cols(); ++j) {
            Element::Tuple tup;
            for (size_t x = 0; x < nf; ++x) tup.push_back(sols[x][j]);
            out.push_back(R->from_components(std::move(tup)));
        }
        return out;
    }

    auto d = smith_normal_form(a);
    // S z = B t, then x = C z
    std::vector<Element> bt;
    bt.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Element s = R->zero();
        for (int j = 0; j < a.rows(); ++j) s = s + d.B.at(i, j) * t[j];
        bt.push_back(std::move(s));
    }
    std::vector<Element> z(a.cols(), R->zero());
    const int r = d.diag_len();
    for (int i = 0; i < a.rows(); ++i) {
        if (i < r) {
            const Element& s = d.S.at(i, i);
            if (!divides(s, bt[i])) return std::nullopt;
            z[i] = exact_div(bt[i], s);
        } else if (!bt[i].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Element> x;
    x.reserve(a.cols());
    for (int i = 0; i < a.cols(); ++i) {
        Element s = R->zero();
        for (int j = 0; j < a.cols(); ++j) s = s + d.C.at(i, j) * z[j];
        x.push_back(std::move(s));
    }
    return x;
}

std::optional<std::vector<Element>> solve_linear_mod(const Matrix& a,
                                                     const std::vector<Element>& t,
                                                     const std::vector<Element>& moduli) {
    if (int(moduli.size()) != a.rows()) throw DomainError("solve_linear_mod: moduli length mismatch");
    Matrix aug(a.ring(), a.rows(), a.cols() + a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols() + i, moduli[i]);
    }
    auto sol = solve_linear(aug, t);
    if (!sol) return std::nullopt;
    sol->resize(a.cols(), a.ring()->zero());
    return sol;
}

}  // namespace edr
