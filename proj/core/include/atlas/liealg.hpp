#pragma once
/// @file liealg.hpp
/// The exceptional Lie algebras built from spinor data:
///
///   e8 = so(16) ⊕ Δ⁺₁₆                      dim 120 + 128 = 248
///   e6 = so(10) ⊕ u(1)ϱ ⊕ Δ⁺₁₀ ⊕ Δ⁻₁₀       dim 45 + 1 + 16 + 16 = 78
///   f4 ⊂ e6:  x ∈ so(9), η = −i e¹⁰ ξ, no ϱ  dim 36 + 16 = 52
///   g2 ⊂ so(8) ⊂ so(16) ⊂ e8                 dim 14 (octonion derivations)
///
/// plus structure constants over canonical bases, Jacobi sweeps (exhaustive
/// or sampled), centralizer computation by exact kernel refinement, and the
/// Hermitian Killing form of e6.
///
/// Conventions.
///   • x^{pq} (p < q, 1-based) is the so generator rotating the (p,q) plane:
///     on vectors (x^{pq}u)_p = u_q, (x^{pq}u)_q = −u_p; on spinors
///     x^{pq}∘ψ = ½ eᵖe^qψ.  An so element is stored as the full
///     antisymmetric matrix M with M[p][q] = coefficient of x^{pq}.
///   • e8 brackets: [x,ψ] = x∘ψ and [ψ,φ] = −¼(ψ e^{μν} φ) x^{μν} (sum over
///     ordered pairs, i.e. the x^{pq} coefficient for p<q is −½(ψ e^{pq} φ)).
///   • e6 brackets: the same so/spinor pattern on so(10) together with
///     [ξ,η] = −¼(ξ e^{ij} η)x^{ij} + (i/4)(ξη)ϱ,  [ϱ,ξ] = 3iξ,
///     [ϱ,η] = −3iη, [ϱ,x] = 0, [ξ,ξ'] = [η,η'] = 0.
///   • e6 ⊂ e8 by v-coordinates 1..10, ϱ = 2x^{11,12}+2x^{13,14}+2x^{15,16},
///     ξ ↦ ξ⊗|+++⟩, η ↦ η⊗|−−−⟩ (the Cl(6) factor occupies the three least
///     significant index bits).
///   • g2 ⊂ e8 with octonion label o acting on vector coordinate 9+o.
///
/// Canonical basis order (frozen; structure-constant files depend on it):
/// so generators x^{pq} in lexicographic (p,q) order, then Δ⁺ coordinate
/// spinors by ascending index, then Δ⁻ ditto (e6), then ϱ last (e6).
/// f4 spinor basis pairs are (ξ = b_c, η = −i e¹⁰ b_c) by ascending c;
/// g2 uses the 14 octonion-derivation generators in their published order.

#include <array>
#include <cstdint>
#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/rng.hpp"
#include "atlas/scalar.hpp"
#include "atlas/serialize.hpp"

namespace atlas {

enum class Algebra { g2, f4, e6, e8 };

/// 14, 52, 78, 248.
int algebra_dim(Algebra a);

/// "g2", "f4", "e6", "e8".
const char* algebra_name(Algebra a);

/// Parse "g2"/"f4"/"e6"/"e8"; throws std::invalid_argument otherwise.
Algebra algebra_from_name(const std::string& name);

/// One element of g2/f4/e6/e8 in the layout of its ambient construction.
/// e8 and g2 use the so(16) ⊕ Δ⁺₁₆ layout (g2 elements have zero spinor);
/// e6 and f4 use the so(10) ⊕ ϱ ⊕ Δ⁺₁₀ ⊕ Δ⁻₁₀ layout.
struct LieElement {
    Algebra algebra = Algebra::e8;
    std::vector<ExtScalar> so;  ///< row-major so_n×so_n antisymmetric matrix
    Spinor plus{0};             ///< Δ⁺ part (e8: Cl(16); e6/f4: Cl(10))
    Spinor minus{0};            ///< Δ⁻ part (e6/f4 only)
    ExtScalar u1;               ///< coefficient of ϱ (e6 only)

    static LieElement zero(Algebra a);

    /// 16 for e8/g2, 10 for e6/f4.
    int so_n() const;

    /// Coefficient of x^{pq}; 1-based, any order (so_at(q,p) = −so_at(p,q)).
    ExtScalar so_at(int p, int q) const;

    /// Adds c·x^{pq} (writes both triangle entries); p ≠ q, 1-based.
    void add_so(int p, int q, const ExtScalar& c);

    bool is_zero() const;

    friend LieElement operator+(const LieElement& x, const LieElement& y);
    friend LieElement operator-(const LieElement& x, const LieElement& y);
    friend LieElement operator*(const ExtScalar& c, const LieElement& x);
    LieElement operator-() const { return ExtScalar(-1) * *this; }
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// x^{pq} as an element of a (a ∈ {e6, e8}; f4 wanted? build via e6 and
/// retag — see as_f4).  Throws when indices exceed the algebra's so range.
LieElement so_generator(Algebra a, int p, int q);

/// The u(1) generator ϱ of e6 (u1 coefficient 1).
LieElement rho_element();

/// Element of a with Δ⁺ part ξ and everything else zero.
LieElement spinor_plus_element(Algebra a, const Spinor& xi);

/// e6 element with Δ⁻ part η and everything else zero.
LieElement spinor_minus_element(const Spinor& eta);

/// Retag an f4 element as e6 (identity on the data; the f4 invariants are
/// just forgotten).
LieElement as_e6(const LieElement& x);

/// Verify the f4 membership constraints (x ∈ so(9), u1 = 0, η = −i e¹⁰ ξ)
/// and retag; throws std::invalid_argument when they fail.
LieElement as_f4(const LieElement& x);

/// Canonical ordered basis of a (cached; see ordering note above).
const std::vector<LieElement>& algebra_basis(Algebra a);

/// Coordinates in the canonical basis, length algebra_dim.  For g2 this
/// solves against the 14-dim span; throws std::invalid_argument when the
/// element lies outside the algebra (e.g. wrong spinor chirality support,
/// f4 constraint violation, non-g2 so(8) content).
std::vector<ExtScalar> coordinates_of(const LieElement& x);

/// Inverse of coordinates_of.
LieElement element_from_coordinates(Algebra a, const std::vector<ExtScalar>& coords);

/// The Lie bracket.  Throws std::invalid_argument on algebra mismatch and
/// std::logic_error if a constrained algebra (f4/g2) fails to close (that
/// would be an implementation bug, not a user error).
LieElement bracket(const LieElement& x, const LieElement& y);

/// Action of the so part on a vector, (Mv)_p = Σ_q M[p][q] v_q (0-based v).
std::vector<ExtScalar> so_vector_act(const LieElement& x, const std::vector<ExtScalar>& v);

/// Action of the so part on a spinor: Σ_{p<q} M[p][q]·½eᵖe^q ψ.
Spinor so_spin_act(const GammaRep& rep, const LieElement& x, const Spinor& psi);

/// Sparse structure constants over the canonical basis.
struct StructureConstants {
    Algebra algebra;
    int dim;
    /// entry(i,j) = [b_i, b_j] as sparse (k, coefficient) pairs, k ascending.
    const std::vector<std::pair<int, ExtScalar>>& entry(int i, int j) const {
        return table[static_cast<std::size_t>(i) * dim + j];
    }
    std::vector<std::vector<std::pair<int, ExtScalar>>> table;
};

/// Build the table from scratch (basis-pair brackets, exact).
StructureConstants build_structure_constants(Algebra a);

/// Cached per-algebra table (built on first use, read-only afterwards).
const StructureConstants& structure_constants(Algebra a);

/// JSON per the interface contract:
/// {"algebra":…, "dim":N, "brackets":[{"i":…,"j":…,"coeffs":[[k, scalar]]}]}
/// (i < j only; zero brackets omitted).
Json structure_constants_json(const StructureConstants& sc);

struct JacobiReport {
    Algebra algebra;
    bool exhaustive = true;
    long long checked = 0;        ///< triples actually verified
    bool ok = false;
    std::array<int, 3> witness{-1, -1, -1};  ///< first failing basis triple
};

/// Verify [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
///
/// Exhaustive mode sweeps all C(dim,3) unordered basis triples through the
/// structure-constant table (exact integer arithmetic on a common-denominator
/// scaling; falls back to ExtScalar if the table resists scaling).  Sampled
/// mode checks `budget` seeded random triples of dense elements.  `threads`
/// caps the worker count for the exhaustive sweep (≤ 0 ⇒ single worker).
JacobiReport jacobi_check(Algebra a, bool exhaustive, long long budget = 0,
                          std::uint64_t seed = 0, int threads = 1);

/// Exact centralizer of `sub` inside the ambient algebra: iterated kernel of
/// the stacked adjoint maps.  Returns a basis (elements of the ambient).
std::vector<LieElement> centralizer(const std::vector<LieElement>& sub, Algebra ambient);

/// The su(3) ⊂ so(6) ⊂ so(16) generators (eᵃ+ieᵃ⁺¹)∧(e^b−ie^{b+1}),
/// a,b ∈ {11,13,15}: the six off-diagonal ones plus the two traceless
/// diagonal differences.  (The full diagonal sums to −iϱ.)
std::vector<LieElement> su3_basis_e8();

/// The 14 octonion-derivation generators embedded in e8 (= algebra_basis(g2)
/// as e8-tagged elements).
std::vector<LieElement> g2_basis_e8();

/// The e6 ↪ e8 embedding (conventions in the file header).
LieElement embed_e6(const LieElement& x);

/// Hermitian Killing form of e6:
/// ⟨x+ξ+η+rϱ, y+ξ'+η'+sϱ⟩ = −⅛Tr[x̄y] + ξ†ξ' + η†η' + 12 r̄ s,
/// where the trace is over the 32-dim spinor representation (x acting as
/// ½x_{ij}e^{ij}); on the stored 10×10 vector matrices that is
/// −½ Σ_{pq} conj(x_pq) y_qp.  The so normalization is forced by invariance:
/// ⟨x^{pq},x^{pq}⟩ = 1, ⟨ϱ,ϱ⟩ = 12.  Defined for e6 elements only.
ExtScalar killing_e6(const LieElement& x, const LieElement& y);

/// Real basis of the compact form of e6: the 45 x^{pq}, ϱ, and for each Δ⁺
/// coordinate spinor b_c the two combinations (ξ = b_c, η = C b_c*) and
/// (ξ = i b_c, η = C (i b_c)*).  killing_e6 is positive definite on real
/// spans of these 78 elements.
std::vector<LieElement> compact_e6_basis();

/// True iff x is real u + v√2 with u + v√2 > 0 (exact; used for Killing
/// positivity checks).
bool is_positive_real(const ExtScalar& x);

}  // namespace atlas
