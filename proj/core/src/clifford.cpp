#include "atlas/clifford.hpp"

namespace atlas {

Spinor apply(const SignedPermMatrix& m, const Spinor& psi) {
    if (m.size() != psi.size()) throw std::invalid_argument("matrix/spinor size mismatch");
    Spinor out(psi.n());
    for (std::size_t c = 0; c < psi.size(); ++c) {
        if (psi[c].is_zero()) continue;
        out[m.row_of(c)] = times_i_pow(psi[c], m.phase_of(c));
    }
    return out;
}

Spinor apply(const ScaledMatrix& m, const Spinor& psi) {
    Spinor out = apply(m.mat, psi);
    if (!m.coeff.is_one()) out = m.coeff * out;
    return out;
}

GammaRep::GammaRep(int n) : n_(n) {
    if (n < 1 || n > 8) throw std::invalid_argument("half-dimension must be in 1..8");
    const std::size_t size = std::size_t(1) << n;
    generators_.reserve(2 * static_cast<std::size_t>(n));
    // e_{2k−1} = σ₃^{⊗(k−1)} ⊗ σ₁ ⊗ 1^{⊗(n−k)} and
    // e_{2k}   = σ₃^{⊗(k−1)} ⊗ σ₂ ⊗ 1^{⊗(n−k)}, with basis index bit (n−j)
    // holding tensor factor j.  σ₁|b⟩ = |1−b⟩; σ₂|0⟩ = i|1⟩, σ₂|1⟩ = −i|0⟩;
    // σ₃|b⟩ = (−1)^b|b⟩.
    for (int k = 1; k <= n; ++k) {
        const unsigned flip_bit = 1u << (n - k);
        const int prefix_shift = n - k + 1;  // bits of the σ₃ factors 1..k−1
        SignedPermMatrix odd = SignedPermMatrix::identity(size);   // e_{2k−1}
        SignedPermMatrix even = SignedPermMatrix::identity(size);  // e_{2k}
        for (std::size_t c = 0; c < size; ++c) {
            const unsigned prefix =
                static_cast<unsigned>(__builtin_popcountll(static_cast<unsigned long long>(c) >> prefix_shift));
            const std::uint32_t row = static_cast<std::uint32_t>(c ^ flip_bit);
            odd.set(c, row, static_cast<std::uint8_t>(2 * prefix));
            const unsigned sigma2_phase = (c & flip_bit) == 0 ? 1u : 3u;
            even.set(c, row, static_cast<std::uint8_t>(2 * prefix + sigma2_phase));
        }
        generators_.push_back(odd);
        generators_.push_back(even);
    }

    // γ = (−i)ⁿ e₁e₂⋯e₂ₙ; the global (−i)ⁿ = i^{3n} shifts every phase.
    Mask all = (n < 16) ? ((Mask(1) << (2 * n)) - 1) : ~Mask(0);
    SignedPermMatrix gamma = mask_matrix(all);
    SignedPermMatrix shifted = SignedPermMatrix::identity(size);
    for (std::size_t c = 0; c < size; ++c)
        shifted.set(c, gamma.row_of(c), static_cast<std::uint8_t>(gamma.phase_of(c) + 3u * static_cast<unsigned>(n)));
    chirality_ = shifted;

    // C = e₂e₄⋯e₂ₙ (n even), C = (−1)^((n−1)/2) e₁e₃⋯e₂ₙ₋₁ (n odd).
    Mask cmask = 0;
    for (int k = 1; k <= n; ++k) cmask |= Mask(1) << ((n % 2 == 0) ? (2 * k - 1) : (2 * k - 2));
    SignedPermMatrix cc = mask_matrix(cmask);
    if (n % 2 == 1 && ((n - 1) / 2) % 2 == 1) {
        SignedPermMatrix flipped = SignedPermMatrix::identity(size);
        for (std::size_t c = 0; c < size; ++c)
            flipped.set(c, cc.row_of(c), static_cast<std::uint8_t>(cc.phase_of(c) + 2u));
        cc = flipped;
    }
    charge_conj_ = cc;
}

SignedPermMatrix GammaRep::mask_matrix(Mask mask) const {
    SignedPermMatrix r = SignedPermMatrix::identity(spinor_size());
    for (int p = 1; p <= 2 * n_; ++p)
        if (mask & (Mask(1) << (p - 1))) r = r * generators_[static_cast<std::size_t>(p - 1)];
    return r;
}

ScaledMatrix blade_matrix(const GammaRep& rep, const Blade& b) {
    return ScaledMatrix{b.coeff, rep.mask_matrix(b.mask)};
}

Spinor mask_act(const GammaRep& rep, Mask mask, const Spinor& psi) {
    if (psi.size() != rep.spinor_size()) throw std::invalid_argument("spinor/rep dimension mismatch");
    // Apply generators right-to-left: e^{i₁}⋯e^{i_k} ψ.
    Spinor out = psi;
    for (int p = 2 * rep.n(); p >= 1; --p)
        if (mask & (Mask(1) << (p - 1))) out = apply(rep.generator(p), out);
    return out;
}

Spinor blade_act(const GammaRep& rep, const Blade& b, const Spinor& psi) {
    Spinor out = mask_act(rep, b.mask, psi);
    if (!b.coeff.is_one()) out = b.coeff * out;
    return out;
}

Spinor element_act(const GammaRep& rep, const CliffordElement& x, const Spinor& psi) {
    Spinor out(psi.n());
    for (const auto& [mask, coeff] : x.terms()) out = out + coeff * mask_act(rep, mask, psi);
    return out;
}

Spinor vector_act(const GammaRep& rep, const std::vector<ExtScalar>& v, const Spinor& psi) {
    if (v.size() != static_cast<std::size_t>(rep.vector_dim()))
        throw std::invalid_argument("vector length must be 2n");
    Spinor out(psi.n());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        out = out + v[i] * apply(rep.generator(static_cast<int>(i) + 1), psi);
    }
    return out;
}

Spinor spin_act(const GammaRep& rep, int p, int q, const Spinor& psi) {
    if (p == q) throw std::invalid_argument("spin generator x^{pq} requires p != q");
    Spinor out = apply(rep.generator(p), apply(rep.generator(q), psi));
    return ExtScalar::half() * out;
}

namespace {

void check_selection_rule(int n, const Spinor& phi, Mask mask, const Spinor& psi) {
    int cphi = phi.chirality_sign();
    int cpsi = psi.chirality_sign();
    if (cphi == 0 || cpsi == 0) return;  // mixed or zero: caller's business
    int grade = __builtin_popcount(mask);
    int need = ((n + grade) % 2 == 0) ? +1 : -1;
    if (cphi != need * cpsi)
        throw std::invalid_argument(
            "chirality selection rule violated: (phi e^I psi) needs chir(phi) = "
            "(-1)^(n+|I|) chir(psi), n=" +
            std::to_string(n) + ", |I|=" + std::to_string(grade));
}

}  // namespace

ExtScalar pair_bilinear(const GammaRep& rep, const Spinor& phi, const Blade& b, const Spinor& psi) {
    if (phi.size() != rep.spinor_size() || psi.size() != rep.spinor_size())
        throw std::invalid_argument("spinor/rep dimension mismatch");
    check_selection_rule(rep.n(), phi, b.mask, psi);
    Spinor y = mask_act(rep, b.mask, psi);
    y = apply(rep.charge_conj(), y);
    ExtScalar sum = ExtScalar::zero();
    for (std::size_t c = 0; c < phi.size(); ++c) {
        if (phi[c].is_zero() || y[c].is_zero()) continue;
        sum += phi[c] * y[c];
    }
    return b.coeff * sum;
}

ExtScalar pair_bilinear(const GammaRep& rep, const Spinor& phi, const Spinor& psi) {
    return pair_bilinear(rep, phi, Blade{}, psi);
}

ExtScalar pair_hermitian(const Spinor& phi, const Spinor& psi) {
    if (phi.n() != psi.n()) throw std::invalid_argument("spinor dimension mismatch");
    int cphi = phi.chirality_sign();
    int cpsi = psi.chirality_sign();
    if (cphi != 0 && cpsi != 0 && cphi != cpsi)
        throw std::invalid_argument("hermitian pairing requires equal chirality");
    ExtScalar sum = ExtScalar::zero();
    for (std::size_t c = 0; c < phi.size(); ++c) {
        if (phi[c].is_zero() || psi[c].is_zero()) continue;
        sum += phi[c].conj() * psi[c];
    }
    return sum;
}

Spinor charge_conjugate(const GammaRep& rep, const Spinor& psi) {
    if (psi.size() != rep.spinor_size()) throw std::invalid_argument("spinor/rep dimension mismatch");
    return apply(rep.charge_conj(), psi.conj());
}

std::vector<Mask> grade_masks(int two_n, int k) {
    if (k < 0 || k > two_n) throw std::invalid_argument("grade out of range");
    std::vector<Mask> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
    for (;;) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << (i - 1);
        out.push_back(m);
        int j = k - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == two_n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
    return out;
}

}  // namespace atlas
