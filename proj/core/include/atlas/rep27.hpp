#pragma once
/// @file rep27.hpp
/// The 27-dimensional representation of e6 and its dual: block actions of the
/// Lie algebra, the invariant pairing, the cubic invariant d, the quadratic
/// "diamond" maps 27⊗27 → 27* and 27*⊗27* → 27, the stabilizer of the highest
/// weight vector, and exact exponentials of nilpotent actions.
///
/// Conventions.
///   • A Vector27 Ψ = (v, ψ, s) has v ∈ ℂ¹⁰ (vector of so(10)), ψ ∈ Δ⁺₁₀
///     (positive-chirality spinor of Cl(10), 16 components), s ∈ ℂ.
///     A Covector27 Φ = (u, φ, t) mirrors it with φ ∈ Δ⁻₁₀.
///   • The e6 element x + ξ + η + rϱ (x ∈ so(10), ξ ∈ Δ⁺, η ∈ Δ⁻, r ∈ ℂ)
///     acts on Ψ = (v, ψ, s) block-wise:
///         x∘Ψ = (xv,                      ½x_{ij}e^{ij}ψ,      0)
///         ϱ∘Ψ = (2iv,                     −iψ,                 −4is)
///         ξ∘Ψ = ((1/√2)(ξe^iψ)e_i,        sξ,                  0)
///         η∘Ψ = (0,                       −(1/√2)(v·e)η,       −(ηψ))
///     where (αMβ) ≐ αᵀC₁₀Mβ is the charge-conjugation bilinear.  The dual
///     action on Φ = (u, φ, t) is the contragredient, ⟨X∘Φ,Ψ⟩ = −⟨Φ,X∘Ψ⟩;
///     in blocks it mirrors the above with the roles of ξ and η exchanged:
///         x∘Φ = (xu,                      ½x_{ij}e^{ij}φ,      0)
///         ϱ∘Φ = (−2iu,                    iφ,                  4it)
///         ξ∘Φ = (0,                       −(1/√2)(u·e)ξ,       −(φξ))
///         η∘Φ = ((1/√2)(φe^iη)e_i,        tη,                  0)
///   • Invariant pairing: ⟨Φ,Ψ⟩ = u·v + (φψ) + t·s (plain dot product on the
///     vector slots, no conjugation anywhere).
///   • Cubic invariant:  d(Ψ₁,Ψ₂,Ψ₃) = (v₁·v₃)s₂ − (1/√2)(ψ₁ v₃·e ψ₂)
///     + cyclic(1,2,3); it is totally symmetric.  The dual cubic d* is the
///     same formula on (u, φ, t) triples.
///   • Diamond:  Ψ₁⋄Ψ₂ = ( v₁s₂ + v₂s₁ − (1/√2)(ψ₁e^iψ₂)e_i ;
///                          −(1/√2)(v₁·e ψ₂ + v₂·e ψ₁) ;  v₁·v₂ ),
///     a Covector27, normalized so that ⟨Ψ₁⋄Ψ₂, Ψ₃⟩ = d(Ψ₁,Ψ₂,Ψ₃).  The dual
///     diamond Φ₁⋄Φ₂ is the mirrored formula, a Vector27, and satisfies
///     d*(Φ₁,Φ₂,Φ₃) = ⟨Φ₁⋄Φ₂ paired with Φ₃⟩ in the same sense.
///   • Highest weight vectors: Ψ₀ = (0, 0, 1) and Φ₀ = (0, 0, 1); both are
///     annihilated by their own diamond square.
///   • Coordinate order (frozen, used by matrices and JSON): v₁…v₁₀, then the
///     16 spinor components by ascending spinor index within the chiral
///     subspace, then s — 27 in total.  The dual order is (u, φ, t) likewise.
///
/// JSON: Vector27 ⇄ {"v": [10 scalars], "psi": [16 scalars], "s": scalar};
/// Covector27 uses keys "u", "phi", "t".  Scalars use the ExtScalar encoding.

#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/liealg.hpp"
#include "atlas/linalg.hpp"
#include "atlas/scalar.hpp"
#include "atlas/serialize.hpp"

namespace atlas {

/// Element of the fundamental 27 of e6: (v, ψ, s) with ψ ∈ Δ⁺₁₀.
struct Vector27 {
    std::vector<ExtScalar> v = std::vector<ExtScalar>(10, ExtScalar::zero());
    Spinor psi{5};
    ExtScalar s = ExtScalar::zero();

    static Vector27 zero() { return Vector27{}; }
    /// Highest weight vector Ψ₀ = (0, 0, 1).
    static Vector27 psi0() {
        Vector27 p;
        p.s = ExtScalar::one();
        return p;
    }

    bool is_zero() const;
    friend Vector27 operator+(const Vector27& a, const Vector27& b);
    friend Vector27 operator-(const Vector27& a, const Vector27& b);
    friend Vector27 operator*(const ExtScalar& c, const Vector27& a);
    Vector27 operator-() const { return ExtScalar(-1) * (*this); }
    friend bool operator==(const Vector27& a, const Vector27& b);
};

/// Element of the dual 27* of e6: (u, φ, t) with φ ∈ Δ⁻₁₀.
struct Covector27 {
    std::vector<ExtScalar> u = std::vector<ExtScalar>(10, ExtScalar::zero());
    Spinor phi{5};
    ExtScalar t = ExtScalar::zero();

    static Covector27 zero() { return Covector27{}; }
    /// Highest weight covector Φ₀ = (0, 0, 1).
    static Covector27 phi0() {
        Covector27 p;
        p.t = ExtScalar::one();
        return p;
    }

    bool is_zero() const;
    friend Covector27 operator+(const Covector27& a, const Covector27& b);
    friend Covector27 operator-(const Covector27& a, const Covector27& b);
    friend Covector27 operator*(const ExtScalar& c, const Covector27& a);
    Covector27 operator-() const { return ExtScalar(-1) * (*this); }
    friend bool operator==(const Covector27& a, const Covector27& b);
};

/// Action of an e6 element on the 27 (throws std::invalid_argument unless
/// x.algebra == Algebra::e6; embed f4 elements with as_e6 first).
Vector27 act27(const LieElement& x, const Vector27& p);

/// Contragredient action on the 27*, satisfying ⟨x∘Φ,Ψ⟩ = −⟨Φ,x∘Ψ⟩.
Covector27 act27_dual(const LieElement& x, const Covector27& f);

/// Invariant pairing ⟨Φ,Ψ⟩ = u·v + (φψ) + t·s.
ExtScalar pairing27(const Covector27& f, const Vector27& p);

/// Totally symmetric cubic invariant on the 27.
ExtScalar d_cubic(const Vector27& p1, const Vector27& p2, const Vector27& p3);

/// Totally symmetric cubic invariant on the 27*.
ExtScalar d_cubic_dual(const Covector27& f1, const Covector27& f2, const Covector27& f3);

/// Symmetric quadratic map 27 ⊗ 27 → 27*, ⟨Ψ₁⋄Ψ₂,Ψ₃⟩ = d(Ψ₁,Ψ₂,Ψ₃).
Covector27 diamond27(const Vector27& p1, const Vector27& p2);

/// Symmetric quadratic map 27* ⊗ 27* → 27, the mirror of diamond27.
Vector27 diamond27_dual(const Covector27& f1, const Covector27& f2);

/// Exact basis of the annihilator {X : X∘Ψ₀ = 0} within the compact real
/// form of e6 (real-rational kernel over the compact basis); spans the
/// so(10) subalgebra, dimension 45.  Over the complexified algebra the
/// annihilator is larger (so(10) ⊕ Δ⁻, dimension 61): the compact reality
/// condition ties Δ⁻ to Δ⁺ and cuts it back down to so(10).
std::vector<LieElement> stabilizer_psi0();

/// Exact exponential of the action of a nilpotent e6 element on the 27,
/// as a 27×27 matrix in the frozen coordinate order.  z must be purely in
/// the Δ⁺ or purely in the Δ⁻ sector (throws std::invalid_argument
/// otherwise); its action N then satisfies N³ = 0 (verified, logic_error
/// if violated) and the result is Id + N + N²/2.
ExactMatrix exp_nilpotent(const LieElement& z);

/// Coordinates of a Vector27 in the frozen order (27 entries).
std::vector<ExtScalar> vector27_coords(const Vector27& p);

/// Inverse of vector27_coords (throws on size ≠ 27).
Vector27 vector27_from_coords(const std::vector<ExtScalar>& c);

/// Apply a 27×27 matrix (e.g. an exp_nilpotent result) to a Vector27.
Vector27 apply27(const ExactMatrix& m, const Vector27& p);

void to_json(Json& j, const Vector27& p);
void from_json(const Json& j, Vector27& p);
void to_json(Json& j, const Covector27& f);
void from_json(const Json& j, Covector27& f);

}  // namespace atlas
