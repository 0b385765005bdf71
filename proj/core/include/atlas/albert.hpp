#pragma once
/// @file albert.hpp
/// The exceptional Jordan algebra layer over the 27-dimensional space: the
/// compact-subalgebra-invariant pairing and the σ-isomorphism between the 27
/// and its dual, the ⋄-product on the 26⊕1 split, two Hermitian 3×3 octonion
/// arrangements of a 27-vector, the master identity linking the Jordan
/// product to ⋄, exact determinants, Veronese vectors, octonion projective
/// charts with cocycle checks, and the idempotent projection on the cone.
///
/// Coordinates.  A Vector27 Ψ = (v, ψ, s) is re-read through the 9+1 and 8+2
/// splits of its vector slot:
///     v = (u, (i/√2)·t)         u ∈ ℂ⁹ (slots 1…9),   t = −i√2·v₁₀
///     v = (𝚞, r/√2, (i/√2)·t)   𝚞 ∈ ℂ⁸ (slots 1…8),   r = √2·v₉
/// and ψ = [ξ; η] with ξ ∈ Δ⁺₈, η ∈ Δ⁻₈ (split_spinor).  The combinations
/// t± = √2(v₉ ± i v₁₀) of the cone charts obey t⁺ = r − t and t⁻ = r + t.
/// 𝚞, ξ, η are identified with octonions through the triality maps: 𝚞 by its
/// components, ξ via inv_t, η via inv_s.
///
/// Reality.  Ψ is real when u, t, s are all real and ψ = i e¹⁰ C ψ*
/// (equivalently ξ = C₈ ξ*, η = C₈ η* in the 8+2 split).  The real points
/// form the compact 26⊕1 and every construction below is ℂ-linear, so
/// identities verified on real points extend to all complex ones.
///
/// Distinguished vectors.  W = (√2 i e¹⁰; 0; 1) spans the invariant singlet
/// line; the unit-normalized singlet is W/√3, which lives in the √3-graded
/// extension (Sqrt3Scalar/Sqrt3Vector27 track coefficients of 1 and √3
/// separately; √3² folds back to 3).  The base point B = (−√2 i e¹⁰; 0; 0)
/// satisfies ⟨B,B⟩ = 2, B⋄B = −2B − 2W, and j_map(B) = diag(0,1,0).
///
/// Two arrangements.  j_map(Ψ) has diagonal ((r−s)/2, (s−t)/2, −(r+s)/2)
/// (trace −(s+t)/2) and satisfies the master identity
///     j_map(Ψ₁) ⋆ j_map(Ψ₂) = −½ j_map(Ψ₁⋄Ψ₂) + ¼⟨Ψ₁,Ψ₂⟩·1₃
/// for ALL complex Ψ; on the cone (Ψ⋄Ψ = 0) its square is the scalar matrix
/// ¼⟨Ψ,Ψ⟩·1₃.  j_map_cone(Ψ) has diagonal ((r+t)/2, s, −(r−t)/2) (trace
/// s+t); on the cone it satisfies J⋆J = (s+t)·J and det J = −(1/6)d(Ψ,Ψ,Ψ),
/// and J/(s+t) is the trace-1 idempotent of f4_orbit_project.  Both share
/// the off-diagonal entries (ξ/√2, η/√2, 𝚞/√2).
///
/// JSON: JordanMatrix ⇄ {"diag": [3 scalars], "oct": [3 arrays of 8]} with
/// the octonion entries ordered x12, x23, x13.

#include <array>
#include <cstdint>

#include "atlas/clifford.hpp"
#include "atlas/eiii.hpp"
#include "atlas/octonion.hpp"
#include "atlas/rep27.hpp"
#include "atlas/scalar.hpp"
#include "atlas/serialize.hpp"

namespace atlas {

// ───────────────────────── split coordinates ─────────────────────────

/// r = √2·v₉ (the e⁹ coordinate rescaled to the real-form convention).
ExtScalar coord_r(const Vector27& p);

/// t = −i√2·v₁₀, so that v₁₀ = (i/√2)·t; real t means a real point.
ExtScalar coord_t(const Vector27& p);

/// The first eight vector slots bundled as an octonion.
Octonion vector_octonion(const Vector27& p);

// ─────────────────── √3-graded extension (local) ───────────────────

/// Formal a + b·√3 over the base field; √3 is not in ℚ(i,√2), so the pair is
/// faithful.  Only the unit singlet needs it — every verified identity is
/// required to land in the √3-free slot.
struct Sqrt3Scalar {
    ExtScalar plain = ExtScalar::zero();  ///< coefficient of 1
    ExtScalar rt3 = ExtScalar::zero();    ///< coefficient of √3

    Sqrt3Scalar() = default;
    Sqrt3Scalar(const ExtScalar& a) : plain(a) {}  // NOLINT(google-explicit-constructor)
    Sqrt3Scalar(const ExtScalar& a, const ExtScalar& b) : plain(a), rt3(b) {}

    /// True when the √3 slot vanishes.
    bool is_plain() const { return rt3.is_zero(); }

    friend Sqrt3Scalar operator+(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
        return {x.plain + y.plain, x.rt3 + y.rt3};
    }
    friend Sqrt3Scalar operator-(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
        return {x.plain - y.plain, x.rt3 - y.rt3};
    }
    friend Sqrt3Scalar operator*(const Sqrt3Scalar& x, const Sqrt3Scalar& y) {
        return {x.plain * y.plain + ExtScalar(3) * x.rt3 * y.rt3,
                x.plain * y.rt3 + x.rt3 * y.plain};
    }
    Sqrt3Scalar operator-() const { return {-plain, -rt3}; }
    friend bool operator==(const Sqrt3Scalar&, const Sqrt3Scalar&) = default;
};

/// 27-vector with a formal √3 grading: p + q·√3.
struct Sqrt3Vector27 {
    Vector27 plain;
    Vector27 rt3;

    Sqrt3Vector27() = default;
    Sqrt3Vector27(const Vector27& p) : plain(p) {}  // NOLINT(google-explicit-constructor)
    Sqrt3Vector27(const Vector27& p, const Vector27& q) : plain(p), rt3(q) {}

    bool is_plain() const { return rt3.is_zero(); }

    friend Sqrt3Vector27 operator+(const Sqrt3Vector27& x, const Sqrt3Vector27& y) {
        return {x.plain + y.plain, x.rt3 + y.rt3};
    }
    friend Sqrt3Vector27 operator-(const Sqrt3Vector27& x, const Sqrt3Vector27& y) {
        return {x.plain - y.plain, x.rt3 - y.rt3};
    }
    friend Sqrt3Vector27 operator*(const Sqrt3Scalar& c, const Sqrt3Vector27& x) {
        return {c.plain * x.plain + (ExtScalar(3) * c.rt3) * x.rt3,
                c.plain * x.rt3 + c.rt3 * x.plain};
    }
    Sqrt3Vector27 operator-() const { return {-plain, -rt3}; }
    friend bool operator==(const Sqrt3Vector27&, const Sqrt3Vector27&) = default;
};

/// W = (√2 i e¹⁰; 0; 1): the rational representative of the singlet line,
/// normalized so that ⟨Ψ,W⟩ = s + t and ⟨W,W⟩ = 3.
Vector27 f4_singlet_raw();

/// The unit singlet W/√3 = (1/√3)·W as a √3-graded vector (plain slot zero,
/// √3 slot W/3); ⟨·,·⟩ of it with itself is 1.
Sqrt3Vector27 f4_singlet();

/// B = (−√2 i e¹⁰; 0; 0): the distinguished real point with ⟨B,B⟩ = 2 whose
/// Jordan image j_map(B) is the projector diag(0,1,0); its compact orbit is
/// the real projective-plane locus.
Vector27 f4_base_point();

// ───────────────── σ-isomorphism and invariant pairing ─────────────────

/// The intertwiner 27* → 27 of the compact subalgebra that fixes the singlet:
/// (u, φ, t) ↦ (u with the 10th slot negated, i e¹⁰ φ, t).  It sends the
/// dual singlet to the singlet and commutes with the 52-dimensional
/// subalgebra's action (act27_dual on the left, act27 on the right).
Vector27 sigma_iso(const Covector27& f);

/// Inverse of sigma_iso: (v, ψ, s) ↦ (v with the 10th slot negated,
/// −i e¹⁰ ψ, s).
Covector27 sigma_iso_inverse(const Vector27& p);

/// Symmetric invariant pairing ⟨Ψ₁,Ψ₂⟩ = pairing27(σ⁻¹Ψ₂, Ψ₁).  In split
/// coordinates: 𝚞₁·𝚞₂ + ½(r₁r₂ + t₁t₂) + (ξ₁ξ₂) + (η₁η₂) + s₁s₂.
ExtScalar f4_pairing(const Vector27& p1, const Vector27& p2);

/// Bilinear extension of f4_pairing to the √3-graded vectors.
Sqrt3Scalar f4_pairing(const Sqrt3Vector27& p1, const Sqrt3Vector27& p2);

/// The symmetric product Ψ₁⋄Ψ₂ = σ(diamond27(Ψ₁,Ψ₂)) on the 27, normalized
/// so that ⟨Ψ₁⋄Ψ₂, Ψ₃⟩ = d(Ψ₁,Ψ₂,Ψ₃).  The cone is exactly {Ψ⋄Ψ = 0}.
Vector27 diamond_f4(const Vector27& p1, const Vector27& p2);

// ───────────────────── Hermitian octonion matrices ─────────────────────

/// 3×3 Hermitian matrix over the (complexified) octonions: three scalar
/// diagonal entries and three independent upper-triangle octonions; the
/// lower triangle is their ℂ-linear bar.
struct JordanMatrix {
    ExtScalar d1 = ExtScalar::zero();
    ExtScalar d2 = ExtScalar::zero();
    ExtScalar d3 = ExtScalar::zero();
    Octonion x12;
    Octonion x23;
    Octonion x13;

    static JordanMatrix zero() { return {}; }
    static JordanMatrix diagonal(const ExtScalar& a, const ExtScalar& b, const ExtScalar& c) {
        JordanMatrix m;
        m.d1 = a;
        m.d2 = b;
        m.d3 = c;
        return m;
    }
    static JordanMatrix identity() {
        return diagonal(ExtScalar::one(), ExtScalar::one(), ExtScalar::one());
    }

    ExtScalar trace() const { return d1 + d2 + d3; }
    bool is_zero() const;

    friend JordanMatrix operator+(const JordanMatrix& a, const JordanMatrix& b);
    friend JordanMatrix operator-(const JordanMatrix& a, const JordanMatrix& b);
    friend JordanMatrix operator*(const ExtScalar& c, const JordanMatrix& a);
    JordanMatrix operator-() const { return ExtScalar(-1) * (*this); }
    friend bool operator==(const JordanMatrix&, const JordanMatrix&) = default;
};

/// Jordan product A ⋆ B = ½(AB + BA) with octonion entry products; the
/// anticommutator of Hermitian matrices is Hermitian, so the result is
/// returned in the same upper-triangle storage.
JordanMatrix jordan_star(const JordanMatrix& a, const JordanMatrix& b);

/// Closed-form determinant of a 3×3 Hermitian octonion matrix:
///     d₁d₂d₃ − d₁(x₂₃·x₂₃) − d₂(x₁₃·x₁₃) − d₃(x₁₂·x₁₂)
///     + 2·x̄₁₂·(x₂₃ ⋆ x̄₁₃),
/// where · is the ℂ-bilinear octonion dot product.
ExtScalar jordan_matrix_det(const JordanMatrix& m);

void to_json(Json& j, const JordanMatrix& m);
void from_json(const Json& j, JordanMatrix& m);

// ───────────────────── the two Jordan arrangements ─────────────────────

/// Arrangement with diagonal ((r−s)/2, (s−t)/2, −(r+s)/2) and off-diagonal
/// (ξ/√2, η/√2, 𝚞/√2); a linear bijection of the 27 onto the Hermitian
/// matrices.  Its trace −(s+t)/2 is invariant under the 52-dimensional
/// subalgebra, and the master identity holds:
///     j_map(Ψ₁) ⋆ j_map(Ψ₂) = −½ j_map(Ψ₁⋄Ψ₂) + ¼⟨Ψ₁,Ψ₂⟩·1₃.
JordanMatrix j_map(const Vector27& p);

/// Arrangement with diagonal ((r+t)/2, s, −(r−t)/2), the same off-diagonals,
/// and trace s+t.  On the cone: J⋆J = (s+t)·J and det J = jordan_det(Ψ).
JordanMatrix j_map_cone(const Vector27& p);

/// The invariant determinant −(1/6)·d(Ψ,Ψ,Ψ); equals
/// jordan_matrix_det(j_map_cone(Ψ)) identically, and in octonion terms
///     −½ s(v·v) + (√2/2)(η 𝚞 ξ) + ¼(ξξ)t⁺ − ¼(ηη)t⁻.
ExtScalar jordan_det(const Vector27& p);

/// Trace-1 idempotent attached to a cone point: j_map_cone(Ψ)/(s+t).
/// Throws std::invalid_argument when Ψ is off the cone and std::domain_error
/// when s + t = 0 (the codimension-1 stratum at infinity, where Ψ pairs to
/// zero against the singlet and no idempotent projection exists).
JordanMatrix f4_orbit_project(const Vector27& p);

// ───────────────────────── the real form ─────────────────────────

/// True iff u ∈ ℝ⁹, s and t are real, and ψ = i e¹⁰ C ψ*.
bool reality_check(const Vector27& p);

/// The antilinear involution ψ ↦ i e¹⁰ C ψ* on 32-component spinors whose
/// fixed points are the real ones; ψ + reality_involution(ψ) is always real.
Spinor reality_involution(const Spinor& psi);

/// A 27-vector certified real at construction.
struct RealForm26 {
    Vector27 p;

    /// Throws std::invalid_argument unless reality_check(p) holds.
    static RealForm26 from(const Vector27& p);
};

// ─────────────────── Veronese vectors and charts ───────────────────

/// (x⃗; λ⃗) ∈ 𝕆³ × ℂ³.  Veronese when xᵢ⋆xᵢ₊₁ = λᵢ₊₂·x̄ᵢ₊₂ and
/// xᵢ·xᵢ = λᵢ₊₁λᵢ₊₂ cyclically (ℂ-linear bar and dot).
struct VeroneseVector {
    std::array<Octonion, 3> x{};
    std::array<ExtScalar, 3> lam{};

    friend bool operator==(const VeroneseVector&, const VeroneseVector&) = default;
};

/// Exact check of the six Veronese conditions.
bool veronese_check(const VeroneseVector& vv);

/// The cone dictionary: x⃗ = (𝚞/√2, ξ̄-free…) — concretely
/// (𝚞/√2, bar(η)/√2, bar(ξ)/√2) and λ⃗ = (s, (t+r)/2, (t−r)/2).  A point
/// satisfies the quadric relations iff its image is Veronese; Σλ = s + t.
VeroneseVector veronese_from_cone(const Vector27& p);

/// Inverse of veronese_from_cone (a linear bijection of coordinates).
Vector27 point_from_veronese(const VeroneseVector& vv);

/// The projective-plane dictionary: the same x⃗ with
/// λ⃗ = (s+1, (r−s)/2, −(r+s)/2); Σλ = 1 identically.  Real points of the
/// idempotent locus (j_map(Ψ)⋆j_map(Ψ) = j_map(Ψ), trace 1) map to real
/// Veronese vectors.
VeroneseVector veronese_from_op2(const Vector27& p);

/// Inverse of veronese_from_op2 on its slice: s = λ₁ − 1, r = λ₂ − λ₃,
/// t = −2 − s.  Throws std::invalid_argument unless Σλ = 1.
Vector27 point_from_veronese_op2(const VeroneseVector& vv);

/// Generator: ζ⃗ ∈ 𝕆³ ↦ (xᵢ = ζᵢ₊₁ ⋆ bar(ζᵢ₊₂); λᵢ = ζᵢ·ζᵢ), always
/// Veronese by the Moufang identities and norm multiplicativity.
VeroneseVector veronese_from_octonion_triple(const std::array<Octonion, 3>& z);

/// Local octonion coordinates on one chart.
struct OctonionChart {
    Octonion a;
    Octonion b;

    friend bool operator==(const OctonionChart&, const OctonionChart&) = default;
};

/// Chart Uᵢ = {λᵢ ≠ 0}, i ∈ {1,2,3}: (aᵢ, bᵢ) = (xᵢ₊₁/λᵢ, xᵢ₊₂/λᵢ).
/// Throws std::domain_error when λᵢ = 0 (not in the chart) and
/// std::invalid_argument for i outside 1…3.
OctonionChart projective_chart(int i, const VeroneseVector& vv);

/// One cyclic transition Uᵢ → Uᵢ₊₁: (a, b) ↦ (bar(b)⁻¹, b⁻¹ ⋆ bar(a)).
/// The same map for every i; composing it three times is the identity on
/// triple overlaps (the cocycle condition).  Octonion inversion throws
/// std::domain_error on isotropic entries (the complexified charts do not
/// cover everything).
OctonionChart projective_transition(const OctonionChart& c);

}  // namespace atlas
