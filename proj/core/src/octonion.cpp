#include "atlas/octonion.hpp"

#include <stdexcept>

namespace atlas {

ExtScalar dot(const Octonion& u, const Octonion& v) {
    ExtScalar sum = ExtScalar::zero();
    for (std::size_t a = 0; a < 8; ++a) sum += u.c[a] * v.c[a];
    return sum;
}

TrialityData::TrialityData() : rep_(4), s_(4), t_(4) {
    // s = (|++++⟩ + |−−−−⟩)/√2: indices 0 and 15.
    s_[0] = ExtScalar::inv_sqrt2();
    s_[15] = ExtScalar::inv_sqrt2();
    t_ = apply(rep_.generator(1), s_);  // t = e⁰s (octonion label 0)
}

namespace {

std::vector<ExtScalar> coords(const Octonion& u) {
    return std::vector<ExtScalar>(u.c.begin(), u.c.end());
}

}  // namespace

Spinor TrialityData::map_s(const Octonion& u) const { return vector_act(rep_, coords(u), s_); }

Spinor TrialityData::map_t(const Octonion& u) const { return vector_act(rep_, coords(u), t_); }

Octonion TrialityData::inv_s(const Spinor& eta) const {
    Octonion u;
    for (int i = 0; i < 8; ++i)
        u[i] = pair_bilinear(rep_, s_, Blade{Mask(1) << i, ExtScalar::one()}, eta);
    return u;
}

Octonion TrialityData::inv_t(const Spinor& xi) const {
    Octonion u;
    for (int i = 0; i < 8; ++i)
        u[i] = pair_bilinear(rep_, t_, Blade{Mask(1) << i, ExtScalar::one()}, xi);
    return u;
}

Spinor TrialityData::bar_plus(const Spinor& xi) const {
    return ExtScalar(2) * (pair_bilinear(rep_, s_, xi) * s_) - xi;
}

Spinor TrialityData::bar_minus(const Spinor& eta) const {
    return ExtScalar(2) * (pair_bilinear(rep_, t_, eta) * t_) - eta;
}

const TrialityData& triality() {
    static const TrialityData data;
    return data;
}

Octonion star(const Octonion& u, const Octonion& v) {
    const TrialityData& tr = triality();
    const Spinor tu = tr.map_t(u);
    const Spinor sv = tr.map_s(v);
    Octonion w;
    for (int i = 0; i < 8; ++i)
        w[i] = pair_bilinear(tr.rep(), tu, Blade{Mask(1) << i, ExtScalar::one()}, sv);
    return w;
}

Octonion associator(const Octonion& u, const Octonion& v, const Octonion& w) {
    return star(u, star(v, w)) - star(star(u, v), w);
}

Octonion bar_inverse(const Octonion& u) {
    const ExtScalar norm = dot(u, u);
    if (norm.is_zero()) throw std::domain_error("octonion is isotropic (u·u = 0): not invertible");
    return norm.inverse() * u.bar();
}

SignedBasisProduct reference_octonion_product(int a, int b) {
    if (a < 0 || a > 7 || b < 0 || b > 7) throw std::invalid_argument("octonion label must be 0…7");
    // Published table: entry [a][b] is e_a ⋆ e_b (row e_a, column e_b).
    static constexpr int label[8][8] = {
        {0, 1, 2, 3, 4, 5, 6, 7},  // e0 ⋆ e_b = e_b
        {1, 0, 3, 2, 5, 4, 7, 6},  //
        {2, 3, 0, 1, 6, 7, 4, 5},  //
        {3, 2, 1, 0, 7, 6, 5, 4},  //
        {4, 5, 6, 7, 0, 1, 2, 3},  //
        {5, 4, 7, 6, 1, 0, 3, 2},  //
        {6, 7, 4, 5, 2, 3, 0, 1},  //
        {7, 6, 5, 4, 3, 2, 1, 0},  //
    };
    static constexpr int sign[8][8] = {
        {+1, +1, +1, +1, +1, +1, +1, +1},  //
        {+1, -1, +1, -1, +1, -1, +1, -1},  //
        {+1, -1, -1, +1, -1, +1, +1, -1},  //
        {+1, +1, -1, -1, +1, +1, -1, -1},  //
        {+1, -1, +1, -1, -1, +1, -1, +1},  //
        {+1, +1, -1, -1, -1, -1, +1, +1},  //
        {+1, -1, -1, +1, +1, -1, -1, +1},  //
        {+1, +1, +1, +1, -1, -1, -1, -1},  //
    };
    return {label[a][b], sign[a][b]};
}

namespace {

Octonion random_octonion(Rng& rng) {
    Octonion u;
    for (int a = 0; a < 8; ++a) u[a] = rng.next_scalar();
    return u;
}

Spinor random_chiral(Rng& rng, int sign) {
    for (;;) {
        Spinor s(4);
        for (std::size_t c = 0; c < s.size(); ++c)
            if (index_chirality(c) == sign) s[c] = rng.next_scalar();
        if (!s.is_zero()) return s;
    }
}

/// (φ eⁱ ψ) eⁱ as an octonion (Clifford index i = label + 1).
Octonion vector_pairing(const TrialityData& tr, const Spinor& phi, const Spinor& psi) {
    Octonion u;
    for (int i = 0; i < 8; ++i)
        u[i] = pair_bilinear(tr.rep(), phi, Blade{Mask(1) << i, ExtScalar::one()}, psi);
    return u;
}

}  // namespace

bool dictionary_check(int trials, Rng& rng) {
    const TrialityData& tr = triality();
    const GammaRep& rep = tr.rep();
    for (int trial = 0; trial < trials; ++trial) {
        Octonion x = random_octonion(rng);
        Spinor xi = random_chiral(rng, +1);
        Spinor eta = random_chiral(rng, -1);
        const Spinor xi_bar = tr.bar_plus(xi);
        const Spinor eta_bar = tr.bar_minus(eta);

        // t(x ⋆ s⁻¹(η)) = x η̄.
        if (!(tr.map_t(star(x, tr.inv_s(eta))) == vector_act(rep, coords(x), eta_bar)))
            return false;
        // t(s⁻¹(η) ⋆ x) = bar(x̄ η).
        if (!(tr.map_t(star(tr.inv_s(eta), x)) ==
              tr.bar_plus(vector_act(rep, coords(x.bar()), eta))))
            return false;
        // s(t⁻¹(ξ) ⋆ x) = x ξ̄.
        if (!(tr.map_s(star(tr.inv_t(xi), x)) == vector_act(rep, coords(x), xi_bar)))
            return false;
        // s(x ⋆ t⁻¹(ξ)) = bar(x̄ ξ).
        if (!(tr.map_s(star(x, tr.inv_t(xi))) ==
              tr.bar_minus(vector_act(rep, coords(x.bar()), xi))))
            return false;
        // t⁻¹(ξ) ⋆ s⁻¹(η) = (ξ eⁱ η) eⁱ.
        if (!(star(tr.inv_t(xi), tr.inv_s(eta)) == vector_pairing(tr, xi, eta))) return false;
        // s⁻¹(η) ⋆ t⁻¹(ξ) = bar((η̄ eⁱ ξ̄) eⁱ).
        if (!(star(tr.inv_s(eta), tr.inv_t(xi)) == vector_pairing(tr, eta_bar, xi_bar).bar()))
            return false;

        Spinor xi2 = random_chiral(rng, +1);
        Spinor eta2 = random_chiral(rng, -1);
        // t⁻¹(ξ̄₁) ⋆ t⁻¹(ξ₂) + (1↔2) = 2(ξ₁ξ₂) e⁰.
        Octonion sym_t = star(tr.inv_t(tr.bar_plus(xi)), tr.inv_t(xi2)) +
                         star(tr.inv_t(tr.bar_plus(xi2)), tr.inv_t(xi));
        if (!(sym_t == (ExtScalar(2) * pair_bilinear(rep, xi, xi2)) * Octonion::unit(0)))
            return false;
        // s⁻¹(η̄₁) ⋆ s⁻¹(η₂) + (1↔2) = 2(η₁η₂) e⁰.
        Octonion sym_s = star(tr.inv_s(tr.bar_minus(eta)), tr.inv_s(eta2)) +
                         star(tr.inv_s(tr.bar_minus(eta2)), tr.inv_s(eta));
        if (!(sym_s == (ExtScalar(2) * pair_bilinear(rep, eta, eta2)) * Octonion::unit(0)))
            return false;
    }
    return true;
}

namespace {

/// e^(label+1) as a Clifford element (octonion label 0…7).
CliffordElement vec(int label) {
    return CliffordElement::from_blade(Blade{Mask(1) << label, ExtScalar::one()});
}

/// v ∧ w = ¼(vw − wv) for vector elements.
CliffordElement wedge(const CliffordElement& v, const CliffordElement& w) {
    return ExtScalar(Rational(1, 4)) * (v * w - w * v);
}

CliffordElement conj_coeffs(const CliffordElement& x) {
    CliffordElement r;
    for (const auto& [mask, coeff] : x.terms()) r.add_term(mask, coeff.conj());
    return r;
}

}  // namespace

std::vector<CliffordElement> g2_basis() {
    const ExtScalar i = ExtScalar::i();
    std::vector<CliffordElement> basis;

    // su(3) part: off-diagonal g_ab = (e^a + ie^(a+1)) ∧ (e^b − ie^(b+1)),
    // a ≠ b ∈ {2,4,6}, plus traceless differences of the diagonal
    // g_aa = −2i e^a ∧ e^(a+1).
    auto plus = [&](int a) { return vec(a) + i * vec(a + 1); };
    auto minus = [&](int a) { return vec(a) - i * vec(a + 1); };
    for (int a : {2, 4, 6})
        for (int b : {2, 4, 6})
            if (a != b) basis.push_back(wedge(plus(a), minus(b)));
    auto diag = [&](int a) { return ExtScalar(-2) * i * wedge(vec(a), vec(a + 1)); };
    basis.push_back(diag(2) - diag(4));
    basis.push_back(diag(4) - diag(6));

    // The three displayed combinations W = ¼(e^α+ie^(α+1))(e^β+ie^(β+1))
    // − (i/2)e^1(e^γ−ie^(γ+1)) for the cyclic assignments of (2,3)→(4,5)→(6,7),
    // plus their coefficient conjugates.
    const int cyc[3][3] = {{2, 4, 6}, {4, 6, 2}, {6, 2, 4}};
    for (const auto& [alpha, beta, gamma] : cyc) {
        CliffordElement w = ExtScalar(Rational(1, 4)) * (plus(alpha) * plus(beta)) -
                            ExtScalar::half() * i * (vec(1) * minus(gamma));
        basis.push_back(w);
        basis.push_back(conj_coeffs(w));
    }
    return basis;
}

Octonion so8_vector_action(const CliffordElement& x, const Octonion& u) {
    Octonion out;
    for (const auto& [mask, coeff] : x.terms()) {
        if (__builtin_popcount(mask) != 2)
            throw std::invalid_argument("so(8) element must be pure grade 2");
        const int p = __builtin_ctz(mask);               // lower octonion label
        const int q = __builtin_ctz(mask & (mask - 1));  // higher octonion label
        const ExtScalar two_c = ExtScalar(2) * coeff;
        out[p] += two_c * u[q];
        out[q] -= two_c * u[p];
    }
    return out;
}

}  // namespace atlas
