#pragma once
/// @file octonion.hpp
/// Octonions realized through D=8 triality: a Majorana spinor s turns the
/// 8-dimensional vector space into the (complexified) octonion algebra via
///     u ⋆ v = (t(u) eⁱ s(v)) eⁱ,    t = e⁰s,
/// with the two chiral spinor spaces Δ⁺/Δ⁻ acting as the companion triality
/// pictures.  The module fixes the published 8×8 multiplication table as
/// ground truth (it deliberately differs from Cayley–Dickson conventions),
/// provides conjugation/inverse/associator, the eight Clifford–octonion
/// dictionary identities, and the 14-dimensional g2 basis inside so(8).
///
/// Index conventions: octonion labels 0…7 (e⁰ = unit) are the D=8 Clifford
/// generators shifted down by one, so label a acts as the generator e^(a+1).

#include <array>
#include <string>
#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/rng.hpp"
#include "atlas/scalar.hpp"

namespace atlas {

/// ℚ(i,√2)-combination of the octonion basis e⁰…e⁷ (complexified octonions).
struct Octonion {
    std::array<ExtScalar, 8> c{};

    static Octonion zero() { return {}; }
    static Octonion unit(int a) {
        Octonion u;
        u[a] = ExtScalar::one();
        return u;
    }

    ExtScalar& operator[](int a) { return c.at(static_cast<std::size_t>(a)); }
    const ExtScalar& operator[](int a) const { return c.at(static_cast<std::size_t>(a)); }

    /// Real part = coefficient of the unit e⁰.
    const ExtScalar& real() const noexcept { return c[0]; }

    /// Conjugation bar(x) = 2(x·e⁰)e⁰ − x (negates the imaginary part).
    Octonion bar() const {
        Octonion r;
        r.c[0] = c[0];
        for (std::size_t a = 1; a < 8; ++a) r.c[a] = -c[a];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        Octonion r;
        for (std::size_t a = 0; a < 8; ++a) r.c[a] = x.c[a] + y.c[a];
        return r;
    }
    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        Octonion r;
        for (std::size_t a = 0; a < 8; ++a) r.c[a] = x.c[a] - y.c[a];
        return r;
    }
    friend Octonion operator*(const ExtScalar& s, const Octonion& x) {
        Octonion r;
        for (std::size_t a = 0; a < 8; ++a) r.c[a] = s * x.c[a];
        return r;
    }
    Octonion operator-() const { return ExtScalar(-1) * *this; }

    friend bool operator==(const Octonion&, const Octonion&) = default;
};

/// ℂ-bilinear dot product u·v = Σ_a u_a v_a (no conjugation: complexified
/// octonions have isotropic vectors, e.g. e⁰ + i e¹).
ExtScalar dot(const Octonion& u, const Octonion& v);

/// The fixed triality data: the D=8 representation, the Majorana spinor
///     s = (|++++⟩ + |−−−−⟩)/√2 ∈ Δ⁺,  C s* = s,  (s s) = 1,
/// its partner t = e⁰s ∈ Δ⁻, and the four maps identifying the vector
/// representation with either chiral spinor space:
///     map_s : V → Δ⁻, u ↦ u·s        inv_s : η ↦ (s eⁱ η) eⁱ
///     map_t : V → Δ⁺, u ↦ u·t        inv_t : ξ ↦ (t eⁱ ξ) eⁱ
/// map_s/inv_s and map_t/inv_t are mutually inverse.
class TrialityData {
public:
    TrialityData();

    const GammaRep& rep() const noexcept { return rep_; }
    const Spinor& s() const noexcept { return s_; }
    const Spinor& t() const noexcept { return t_; }

    Spinor map_s(const Octonion& u) const;
    Spinor map_t(const Octonion& u) const;
    Octonion inv_s(const Spinor& eta) const;
    Octonion inv_t(const Spinor& xi) const;

    /// Spinor conjugations transported through s and t:
    /// bar(ξ) = 2(sξ)s − ξ on Δ⁺ and bar(η) = 2(tη)t − η on Δ⁻; both are
    /// ℂ-linear involutions.
    Spinor bar_plus(const Spinor& xi) const;
    Spinor bar_minus(const Spinor& eta) const;

private:
    GammaRep rep_;
    Spinor s_;
    Spinor t_;
};

/// Shared read-only instance (built once; all products are pure functions).
const TrialityData& triality();

/// u ⋆ v = (t(u) eⁱ s(v)) eⁱ — the octonion product.
Octonion star(const Octonion& u, const Octonion& v);

/// [u, v, w] = u⋆(v⋆w) − (u⋆v)⋆w; totally antisymmetric, zero when any
/// argument is real.
Octonion associator(const Octonion& u, const Octonion& v, const Octonion& w);

/// bar(u)/(u·u); throws std::domain_error when u·u = 0 (isotropic u — over
/// the complexification this is weaker than u ≠ 0).
Octonion bar_inverse(const Octonion& u);

/// The published 8×8 multiplication table entry e_a ⋆ e_b = sign · e_label.
struct SignedBasisProduct {
    int label;
    int sign;
};
SignedBasisProduct reference_octonion_product(int a, int b);

/// Verify the eight Clifford–octonion dictionary identities
///     t(x⋆s⁻¹(η)) = x η̄              t(s⁻¹(η)⋆x) = bar(x̄ η)
///     s(t⁻¹(ξ)⋆x) = x ξ̄              s(x⋆t⁻¹(ξ)) = bar(x̄ ξ)
///     t⁻¹(ξ)⋆s⁻¹(η) = (ξ eⁱ η) eⁱ    s⁻¹(η)⋆t⁻¹(ξ) = bar((η̄ eⁱ ξ̄) eⁱ)
///     t⁻¹(ξ̄₁)⋆t⁻¹(ξ₂) + (1↔2) = 2(ξ₁ξ₂) e⁰
///     s⁻¹(η̄₁)⋆s⁻¹(η₂) + (1↔2) = 2(η₁η₂) e⁰
/// on `trials` random octonions x and chiral spinors ξ, η (exact equality).
bool dictionary_check(int trials, Rng& rng);

/// The 14 g2 generators inside so(8), as grade-2 Clifford elements whose
/// spinor action annihilates s: the su(3) part (six off-diagonal
/// (e^a+ie^(a+1))∧(e^b−ie^(b+1)) for a ≠ b ∈ {2,4,6} plus the two traceless
/// differences of g_aa = −2i e^a∧e^(a+1)) and the three displayed complex
/// combinations together with their coefficient conjugates.  Indices in the
/// formulas are octonion labels.
std::vector<CliffordElement> g2_basis();

/// so(8) action on the vector representation: each grade-2 term γ·e^p e^q
/// (p < q) maps u_p ↦ 2γ u_q, u_q ↦ −2γ u_p (octonion labels p−1, q−1).
/// Throws std::invalid_argument if X has a term of grade ≠ 2.
Octonion so8_vector_action(const CliffordElement& x, const Octonion& u);

}  // namespace atlas
