#include "atlas/fierz.hpp"

#include <stdexcept>

#include "atlas/linalg.hpp"

namespace atlas {

namespace {

/// σ_a·σ_b = i^phase · σ_c over labels {0:1, 1:X, 2:Y, 3:Z}.
struct PauliProd {
    std::uint8_t label;
    std::uint8_t phase;
};

constexpr PauliProd kPauliMul[4][4] = {
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
    {{1, 0}, {0, 0}, {3, 1}, {2, 3}},
    {{2, 0}, {3, 3}, {0, 0}, {1, 1}},
    {{3, 0}, {2, 1}, {1, 3}, {0, 0}},
};

/// σ_label entry (r, c) for r, c ∈ {0, 1}: {present?, i-exponent}.
struct PauliEntry {
    bool nonzero;
    std::uint8_t phase;
};

constexpr PauliEntry kPauliEntry[4][2][2] = {
    // 1: [[1,0],[0,1]]
    {{{true, 0}, {false, 0}}, {{false, 0}, {true, 0}}},
    // X: [[0,1],[1,0]]
    {{{false, 0}, {true, 0}}, {{true, 0}, {false, 0}}},
    // Y: [[0,−i],[i,0]] — −i = i³
    {{{false, 0}, {true, 3}}, {{true, 1}, {false, 0}}},
    // Z: [[1,0],[0,−1]]
    {{{true, 0}, {false, 0}}, {{false, 0}, {true, 2}}},
};

int half_dim(int dim) {
    if (dim != 8 && dim != 10 && dim != 16) throw std::invalid_argument("dim must be 8, 10 or 16");
    return dim / 2;
}

Spinor random_chiral(Rng& rng, int n, int sign) {
    for (;;) {
        Spinor s(n);
        for (std::size_t c = 0; c < s.size(); ++c)
            if (index_chirality(c) == sign) s[c] = rng.next_scalar();
        if (!s.is_zero()) return s;
    }
}


struct SectorShape {
    std::vector<int> rows;
    std::vector<int> cols;
    std::array<int, 4> chi;
};

SectorShape sector_shape(int dim, FierzSector sector) {
    if (dim == 16) {
        if (sector != FierzSector::A_even)
            throw std::invalid_argument("D=16 has only the A_even sector");
        return {{0, 2, 4, 6, 8}, {0, 2, 4, 6, 8}, {+1, +1, +1, +1}};
    }
    if (dim == 8) {
        switch (sector) {
            case FierzSector::A_even: return {{0, 2, 4}, {0, 2, 4}, {+1, +1, +1, +1}};
            case FierzSector::A_odd: return {{1, 3}, {1, 3}, {-1, +1, -1, +1}};
            case FierzSector::B_even: return {{0, 2}, {1, 3}, {+1, +1, -1, -1}};
            case FierzSector::B_odd: return {{1, 3}, {0, 2}, {+1, -1, -1, +1}};
        }
    }
    if (dim == 10) {
        switch (sector) {
            case FierzSector::A_even: return {{0, 2, 4}, {0, 2, 4}, {-1, +1, -1, +1}};
            case FierzSector::A_odd: return {{1, 3}, {1, 3}, {+1, +1, +1, +1}};
            case FierzSector::B_even: return {{0, 2, 4}, {1, 3, 5}, {-1, +1, +1, -1}};
            case FierzSector::B_odd: return {{1, 3, 5}, {0, 2, 4}, {+1, +1, -1, -1}};
        }
    }
    throw std::invalid_argument("invalid dim/sector");
}

}  // namespace

std::string sector_name(FierzSector s) {
    switch (s) {
        case FierzSector::A_even: return "A_even";
        case FierzSector::A_odd: return "A_odd";
        case FierzSector::B_even: return "B_even";
        case FierzSector::B_odd: return "B_odd";
    }
    return "?";
}

std::vector<FierzSector> fierz_sectors(int dim) {
    half_dim(dim);
    if (dim == 16) return {FierzSector::A_even};
    return {FierzSector::A_even, FierzSector::A_odd, FierzSector::B_even, FierzSector::B_odd};
}

std::array<int, 4> FierzTable::chirality_pattern() const { return sector_shape(dim, sector).chi; }

FierzContext::FierzContext(int dim) : rep_(half_dim(dim)) {
    const int n = rep_.n();
    c_transpose_ = rep_.charge_conj().transpose();
    const std::size_t mask_count = std::size_t(1) << (2 * n);
    label_index_.resize(mask_count);
    phase_.resize(mask_count);
    by_grade_.assign(static_cast<std::size_t>(2 * n + 1), {});
    for (int k = 0; k <= 2 * n; ++k) by_grade_[static_cast<std::size_t>(k)] = grade_masks(2 * n, k);
    for (Mask mask = 0; mask < mask_count; ++mask) {
        std::uint32_t index = 0;
        unsigned t = 0;
        for (int j = 1; j <= n; ++j) {
            std::uint8_t label = 0;
            unsigned ph = 0;
            const bool has_x = (mask >> (2 * j - 2)) & 1u;  // e_{2j−1}
            const bool has_y = (mask >> (2 * j - 1)) & 1u;  // e_{2j}
            if (has_x) {
                PauliProd p = kPauliMul[label][1];
                ph += p.phase;
                label = p.label;
            }
            if (has_y) {
                PauliProd p = kPauliMul[label][2];
                ph += p.phase;
                label = p.label;
            }
            const unsigned m = static_cast<unsigned>(__builtin_popcount(mask >> (2 * j)));
            if (m & 1u) {
                PauliProd p = kPauliMul[label][3];
                ph += p.phase;
                label = p.label;
            }
            index = index * 4 + label;
            t += ph;
        }
        label_index_[mask] = index;
        phase_[mask] = static_cast<std::uint8_t>(t & 3u);
    }
}

std::vector<ExtScalar> FierzContext::pauli_transform(const Spinor& psi1, const Spinor& psi2) const {
    const int n = rep_.n();
    const std::size_t dim = rep_.spinor_size();
    if (psi1.size() != dim || psi2.size() != dim)
        throw std::invalid_argument("spinor dimension mismatch");
    Spinor w = apply(c_transpose_, psi1);
    // Interleaved outer product: index digit j (base 4) = 2·c_j + d_j.
    std::vector<ExtScalar> a(dim * dim);
    for (std::size_t c = 0; c < dim; ++c) {
        if (w[c].is_zero()) continue;
        for (std::size_t d = 0; d < dim; ++d) {
            if (psi2[d].is_zero()) continue;
            std::size_t idx = 0;
            for (int j = 1; j <= n; ++j) {
                std::size_t cj = (c >> (n - j)) & 1u;
                std::size_t dj = (d >> (n - j)) & 1u;
                idx = idx * 4 + (2 * cj + dj);
            }
            a[idx] = w[c] * psi2[d];
        }
    }
    // Radix-4 folds: digit (c_j, d_j) ↦ label l_j, one factor at a time.
    std::size_t stride = a.size() / 4;
    while (stride >= 1) {
        for (std::size_t base = 0; base < a.size(); base += 4 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                ExtScalar v00 = a[base + off];
                ExtScalar v01 = a[base + stride + off];
                ExtScalar v10 = a[base + 2 * stride + off];
                ExtScalar v11 = a[base + 3 * stride + off];
                a[base + off] = v00 + v11;                                        // 1
                a[base + stride + off] = v01 + v10;                               // X
                a[base + 2 * stride + off] = times_i_pow(v10 - v01, 1);           // Y
                a[base + 3 * stride + off] = v00 - v11;                           // Z
            }
        }
        stride /= 4;
    }
    return a;
}

ExtScalar FierzContext::pairing_from_transform(const std::vector<ExtScalar>& f, Mask mask) const {
    return times_i_pow(f[label_index_[mask]], phase_[mask]);
}

ExtScalar FierzContext::grade_sum(const std::vector<ExtScalar>& f, const std::vector<ExtScalar>& g,
                                  int grade) const {
    ExtScalar sum = ExtScalar::zero();
    for (Mask mask : by_grade_[static_cast<std::size_t>(grade)]) {
        const std::size_t idx = label_index_[mask];
        if (f[idx].is_zero() || g[idx].is_zero()) continue;
        ExtScalar term = f[idx] * g[idx];
        if (phase_[mask] & 1u) term = -term;  // i^(2t) = (−1)^t
        sum += term;
    }
    return sum;
}

ExtScalar FierzContext::basis_pairing(std::size_t index1, Mask mask, std::size_t index2) const {
    const int n = rep_.n();
    // w = Cᵀ b₁ is again a basis vector with a phase.
    const std::size_t c = c_transpose_.row_of(index1);
    unsigned phase = c_transpose_.phase_of(index1) + phase_[mask];
    const std::uint32_t labels = label_index_[mask];
    for (int j = 1; j <= n; ++j) {
        const unsigned label = (labels >> (2 * (n - j))) & 3u;
        const std::size_t cj = (c >> (n - j)) & 1u;
        const std::size_t dj = (index2 >> (n - j)) & 1u;
        const PauliEntry e = kPauliEntry[label][cj][dj];
        if (!e.nonzero) return ExtScalar::zero();
        phase += e.phase;
    }
    return times_i_pow(ExtScalar::one(), phase);
}

ExtScalar FierzContext::basis_grade_sum(std::size_t i1, std::size_t i2, std::size_t i3,
                                        std::size_t i4, int grade) const {
    ExtScalar sum = ExtScalar::zero();
    for (Mask mask : by_grade_[static_cast<std::size_t>(grade)]) {
        ExtScalar left = basis_pairing(i1, mask, i2);
        if (left.is_zero()) continue;
        ExtScalar right = basis_pairing(i3, mask, i4);
        if (right.is_zero()) continue;
        sum += left * right;
    }
    return sum;
}

FierzTable derive_table(const FierzContext& ctx, FierzSector sector) {
    const int dim = ctx.dim();
    const SectorShape shape = sector_shape(dim, sector);
    const int n = ctx.rep().n();

    FierzTable table;
    table.dim = dim;
    table.sector = sector;
    table.row_grades = shape.rows;
    table.col_grades = shape.cols;

    // Directed basis quadruples give tiny exact equations
    //     A_k(b₁,b₂,b₃,b₄) = Σ_{k'} c_{k'} · A_{k'}(b₁,b₄,b₃,b₂).
    // C and every Pauli string act on basis indices by XOR with a flip
    // pattern (spinor bit n−j flips iff exactly one of mask bits 2j−2, 2j−1
    // is set), so choosing the left pattern p_L (row-grade parity) and the
    // right pattern p_R (from a column-grade mask) and solving
    // b₂ = b₁⊕q_C⊕p_L, b₃ = b₂⊕q_C⊕p_R, b₄ = b₁⊕b₂⊕b₃ lights up the
    // targeted column; uniform sampling almost never hits the sparse
    // low-grade pairings once the spinor space is large.  The column
    // evaluations are shared by every row grade, so one full-rank batch of
    // quadruples determines the whole table.
    std::vector<std::size_t> pool;  // basis indices with the first chirality
    for (std::size_t c = 0; c < ctx.rep().spinor_size(); ++c)
        if (index_chirality(c) == shape.chi[0]) pool.push_back(c);
    const std::size_t q_c = ctx.rep().charge_conj().row_of(0);
    auto flip_of = [n](Mask mask) {
        std::size_t p = 0;
        for (int j = 0; j < n; ++j) {
            const unsigned two = (mask >> (2 * j)) & 3u;
            if (two == 1u || two == 2u) p |= std::size_t(1) << (n - 1 - j);
        }
        return p;
    };
    const std::size_t m = shape.cols.size();
    std::vector<std::vector<Mask>> col_masks;
    for (int kc : shape.cols) col_masks.push_back(grade_masks(2 * n, kc));
    const unsigned row_parity = static_cast<unsigned>(shape.rows[0]) & 1u;

    Rng rng(0x90ABCDEFu + static_cast<std::uint64_t>(dim) * 131u +
            static_cast<std::uint64_t>(sector) * 7u);
    std::vector<std::vector<ExtScalar>> col_eval;  // per quadruple: m column values
    std::vector<std::vector<ExtScalar>> lhs_eval;  // per quadruple: per-row LHS values
    for (int attempt = 0; attempt < 600; ++attempt) {
        const auto& cm = col_masks[static_cast<std::size_t>(attempt) % m];
        std::size_t p_left = rng.next_below(std::size_t(1) << n);
        if ((static_cast<unsigned>(__builtin_popcountll(p_left)) & 1u) != row_parity)
            p_left ^= 1u;
        const std::size_t p_right = flip_of(cm[rng.next_below(cm.size())]);
        const std::size_t b1 = pool[rng.next_below(pool.size())];
        const std::size_t b2 = b1 ^ q_c ^ p_left;
        const std::size_t b3 = b2 ^ q_c ^ p_right;
        const std::size_t b4 = b1 ^ b2 ^ b3;
        if (index_chirality(b2) != shape.chi[1] || index_chirality(b3) != shape.chi[2] ||
            index_chirality(b4) != shape.chi[3])
            throw std::logic_error("sector chirality pattern is inconsistent");
        std::vector<ExtScalar> cols(m);
        bool all_zero = true;
        for (std::size_t c = 0; c < m; ++c) {
            cols[c] = ctx.basis_grade_sum(b1, b4, b3, b2, shape.cols[c]);
            if (!cols[c].is_zero()) all_zero = false;
        }
        std::vector<ExtScalar> lhs(shape.rows.size());
        for (std::size_t r = 0; r < shape.rows.size(); ++r) {
            lhs[r] = ctx.basis_grade_sum(b1, b2, b3, b4, shape.rows[r]);
            if (!lhs[r].is_zero()) all_zero = false;
        }
        if (all_zero) continue;
        col_eval.push_back(std::move(cols));
        lhs_eval.push_back(std::move(lhs));
        if (col_eval.size() < m) continue;
        ExactMatrix a(col_eval.size(), m);
        for (std::size_t r = 0; r < col_eval.size(); ++r)
            for (std::size_t c = 0; c < m; ++c) a.at(r, c) = col_eval[r][c];
        if (a.rank() < m) continue;
        for (std::size_t r = 0; r < shape.rows.size(); ++r) {
            std::vector<ExtScalar> rhs(col_eval.size());
            for (std::size_t e = 0; e < col_eval.size(); ++e) rhs[e] = lhs_eval[e][r];
            auto sol = a.solve(rhs);
            if (!sol) throw std::logic_error("inconsistent Fierz system — conventions broken");
            std::vector<Rational> out;
            out.reserve(m);
            for (const ExtScalar& x : *sol) out.push_back(x.as_rational());
            table.matrix.push_back(std::move(out));
        }
        return table;
    }
    throw std::logic_error("Fierz column system did not reach full rank");
}

FierzTable reference_table(int dim, FierzSector sector) {
    const SectorShape shape = sector_shape(dim, sector);
    FierzTable t;
    t.dim = dim;
    t.sector = sector;
    t.row_grades = shape.rows;
    t.col_grades = shape.cols;
    auto q = [](std::int64_t num, std::int64_t den) { return Rational(num, den); };
    if (dim == 8) {
        switch (sector) {
            case FierzSector::A_even:
                t.matrix = {{q(1, 8), q(-1, 8), q(1, 16)},
                            {q(-7, 2), q(1, 2), q(1, 4)},
                            {q(35, 4), q(5, 4), q(3, 8)}};
                break;
            case FierzSector::A_odd:
                t.matrix = {{q(-3, 4), q(1, 4)}, {q(7, 4), q(3, 4)}};
                break;
            case FierzSector::B_even:
                t.matrix = {{q(1, 8), q(-1, 8)}, {q(-7, 4), q(-1, 4)}};
                break;
            case FierzSector::B_odd:
                t.matrix = {{q(1, 1), q(-1, 2)}, {q(-7, 1), q(-1, 2)}};
                break;
        }
    } else if (dim == 10) {
        switch (sector) {
            case FierzSector::A_even:
                t.matrix = {{q(1, 16), q(-1, 16), q(1, 16)},
                            {q(-45, 16), q(13, 16), q(3, 16)},
                            {q(105, 8), q(7, 8), q(1, 8)}};
                break;
            case FierzSector::A_odd:
                t.matrix = {{q(-1, 2), q(1, 4)}, {q(3, 1), q(1, 2)}};
                break;
            case FierzSector::B_even:
                t.matrix = {{q(1, 16), q(-1, 16), q(1, 32)},
                            {q(-27, 16), q(3, 16), q(5, 32)},
                            {q(21, 8), q(7, 8), q(5, 16)}};
                break;
            case FierzSector::B_odd:
                t.matrix = {{q(5, 8), q(-3, 8), q(1, 8)},
                            {q(-15, 2), q(1, 2), q(1, 2)},
                            {q(63, 4), q(7, 4), q(3, 4)}};
                break;
        }
    } else {
        t.matrix = {{q(1, 128), q(-1, 128), q(1, 128), q(-1, 128), q(1, 256)},
                    {q(-15, 16), q(1, 2), q(-3, 16), q(0, 1), q(1, 32)},
                    {q(455, 32), q(-91, 32), q(-9, 32), q(5, 32), q(7, 64)},
                    {q(-1001, 16), q(0, 1), q(11, 16), q(1, 2), q(7, 32)},
                    {q(6435, 64), q(429, 64), q(99, 64), q(45, 64), q(35, 128)}};
    }
    return t;
}

namespace {

/// matrix · matrix == identity over rationals.
bool product_is_identity(const std::vector<std::vector<Rational>>& a,
                         const std::vector<std::vector<Rational>>& b) {
    const std::size_t m = a.size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            Rational sum(0);
            for (std::size_t k = 0; k < m; ++k) sum += a[r][k] * b[k][c];
            if (!(sum == Rational(r == c ? 1 : 0))) return false;
        }
    return true;
}

}  // namespace

bool verify_table(const FierzContext& ctx, const FierzTable& table, int trials, Rng& rng) {
    // Matrix property: A sectors are involutions; B sectors pair up to the
    // inverse of the opposite parity's table.
    if (table.sector == FierzSector::A_even || table.sector == FierzSector::A_odd) {
        if (!product_is_identity(table.matrix, table.matrix)) return false;
    } else {
        FierzSector other = table.sector == FierzSector::B_even ? FierzSector::B_odd
                                                                : FierzSector::B_even;
        if (!product_is_identity(table.matrix, derive_table(ctx, other).matrix)) return false;
    }

    const int n = ctx.rep().n();
    const auto chi = table.chirality_pattern();
    for (int trial = 0; trial < trials; ++trial) {
        Spinor p1 = random_chiral(rng, n, chi[0]);
        Spinor p2 = random_chiral(rng, n, chi[1]);
        Spinor p3 = random_chiral(rng, n, chi[2]);
        Spinor p4 = random_chiral(rng, n, chi[3]);
        auto f12 = ctx.pauli_transform(p1, p2);
        auto f34 = ctx.pauli_transform(p3, p4);
        auto f14 = ctx.pauli_transform(p1, p4);
        auto f32 = ctx.pauli_transform(p3, p2);
        for (std::size_t r = 0; r < table.row_grades.size(); ++r) {
            ExtScalar lhs = ctx.grade_sum(f12, f34, table.row_grades[r]);
            ExtScalar rhs = ExtScalar::zero();
            for (std::size_t c = 0; c < table.col_grades.size(); ++c)
                rhs += ExtScalar(table.matrix[r][c]) * ctx.grade_sum(f14, f32, table.col_grades[c]);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

namespace {

/// Σ over ordered pairs i≠j of (e^i e^j χ)·(φ e^{ij} ψ) — equals twice the
/// ascending-pair sum because each factor is antisymmetric in (i, j).
Spinor e2_weighted_sum(const FierzContext& ctx, const Spinor& chi, const Spinor& phi,
                       const Spinor& psi) {
    const GammaRep& rep = ctx.rep();
    Spinor acc(rep.n());
    for (Mask m : grade_masks(rep.vector_dim(), 2)) {
        ExtScalar w = pair_bilinear(rep, phi, Blade{m, ExtScalar::one()}, psi);
        if (w.is_zero()) continue;
        acc = acc + w * mask_act(rep, m, chi);
    }
    return ExtScalar(2) * acc;
}

/// Σ_i (e^i χ)·(φ e^i ψ).
Spinor e1_weighted_sum(const FierzContext& ctx, const Spinor& chi, const Spinor& phi,
                       const Spinor& psi) {
    const GammaRep& rep = ctx.rep();
    Spinor acc(rep.n());
    for (int i = 1; i <= rep.vector_dim(); ++i) {
        ExtScalar w = pair_bilinear(rep, phi, Blade{Mask(1) << (i - 1), ExtScalar::one()}, psi);
        if (w.is_zero()) continue;
        acc = acc + w * apply(rep.generator(i), chi);
    }
    return acc;
}

}  // namespace

bool verify_derived(const FierzContext& ctx, int trials, Rng& rng) {
    const GammaRep& rep = ctx.rep();
    const int n = rep.n();
    const int dim = ctx.dim();
    for (int trial = 0; trial < trials; ++trial) {
        if (dim == 8) {
            Spinor xi = random_chiral(rng, n, +1);
            Spinor phi = random_chiral(rng, n, +1);
            Spinor psi = random_chiral(rng, n, +1);
            Spinor eta = random_chiral(rng, n, -1);
            // ½ e^{ij} ξ (φ e^{ij} ψ) = 4φ(ψξ) − 4ψ(φξ).
            Spinor lhs = ExtScalar::half() * e2_weighted_sum(ctx, xi, phi, psi);
            Spinor rhs = ExtScalar(4) * (pair_bilinear(rep, psi, xi) * phi) -
                         ExtScalar(4) * (pair_bilinear(rep, phi, xi) * psi);
            if (!(lhs == rhs)) return false;
            // 2η(φψ) = eⁱψ(φeⁱη) + eⁱφ(ψeⁱη).
            Spinor lhs2 = ExtScalar(2) * (pair_bilinear(rep, phi, psi) * eta);
            Spinor rhs2 = e1_weighted_sum(ctx, psi, phi, eta) + e1_weighted_sum(ctx, phi, psi, eta);
            if (!(lhs2 == rhs2)) return false;
        } else if (dim == 10) {
            for (int flip = 0; flip <= 1; ++flip) {
                const int plus = flip ? -1 : +1;
                Spinor psi1 = random_chiral(rng, n, plus);
                Spinor psi2 = random_chiral(rng, n, plus);
                Spinor eta = random_chiral(rng, n, -plus);
                // ψ₁(ηψ₂) + ½e^{ij}ψ₁(ηe^{ij}ψ₂) − 2eⁱη(ψ₁eⁱψ₂) = −4ψ₂(ψ₁η).
                Spinor lhs = pair_bilinear(rep, eta, psi2) * psi1 +
                             ExtScalar::half() * e2_weighted_sum(ctx, psi1, eta, psi2) -
                             ExtScalar(2) * e1_weighted_sum(ctx, eta, psi1, psi2);
                Spinor rhs = ExtScalar(-4) * (pair_bilinear(rep, psi1, eta) * psi2);
                if (!(lhs == rhs)) return false;
            }
            // eⁱψ₁(ψ₂eⁱψ₃) + cyc(1,2,3) = 0.
            Spinor a = random_chiral(rng, n, +1);
            Spinor b = random_chiral(rng, n, +1);
            Spinor c = random_chiral(rng, n, +1);
            Spinor cyc = e1_weighted_sum(ctx, a, b, c) + e1_weighted_sum(ctx, b, c, a) +
                         e1_weighted_sum(ctx, c, a, b);
            if (!cyc.is_zero()) return false;
        } else {
            // D=16: ½e^{ij}ψ₁(ψ₂e^{ij}ψ₃) + cyc(1,2,3) = 0.
            Spinor a = random_chiral(rng, n, +1);
            Spinor b = random_chiral(rng, n, +1);
            Spinor c = random_chiral(rng, n, +1);
            Spinor cyc = e2_weighted_sum(ctx, a, b, c) + e2_weighted_sum(ctx, b, c, a) +
                         e2_weighted_sum(ctx, c, a, b);
            if (!cyc.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace atlas
