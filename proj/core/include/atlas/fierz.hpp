#pragma once
/// @file fierz.hpp
/// Fierz rearrangement tables for D = 8, 10, 16 — derived exactly from the
/// Clifford representation, validated against the published coefficient
/// tables, plus the handier spinor identities that follow from them.
///
/// Notation.  For a grade k define the quartic functional
///     A_k(ψ₁,ψ₂,ψ₃,ψ₄) = Σ_I (ψ₁ e^I ψ₂)(ψ₃ e^I ψ₄),
/// the sum running over STRICTLY ASCENDING index sets I of size k (this is
/// the 1/k! normalization of the usual all-ordered-tuples sum).  The
/// transposed functional A_kᵀ swaps ψ₂ ↔ ψ₄.  A Fierz table for a sector
/// with row grades {k} and column grades {k'} states
///     A_k = Σ_{k'} M[k][k'] · A_{k'}ᵀ
/// for all spinors with that sector's chirality pattern.  B sectors are the
/// mixed-chirality version of the same statement.
///
/// Chirality patterns (ψ₁, ψ₂, ψ₃, ψ₄), fixed by the selection rule
/// chir(φ) = (−1)^(n+|I|) chir(ψ) for every factor:
///   D=8 : A_even (+,+,+,+)   A_odd (−,+,−,+)
///         B_even (+,+,−,−) rows {0,2} ↦ cols {1,3}
///         B_odd  (+,−,−,+) rows {1,3} ↦ cols {0,2}   (B₄ ≡ 0 in D=8)
///   D=10: A_even (−,+,−,+)   A_odd (+,+,+,+)
///         B_even (−,+,+,−) rows {0,2,4} ↦ cols {1,3,5}
///         B_odd  (+,+,−,−) rows {1,3,5} ↦ cols {0,2,4}
///   D=16: A_even (+,+,+,+) rows {0,2,4,6,8}
///
/// A-sector matrices are involutions; the two B-sector matrices of a
/// dimension are mutually inverse.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/rng.hpp"
#include "atlas/scalar.hpp"

namespace atlas {

enum class FierzSector { A_even, A_odd, B_even, B_odd };

std::string sector_name(FierzSector s);

/// Valid sectors for a dimension (D=16 has only A_even).
std::vector<FierzSector> fierz_sectors(int dim);

struct FierzTable {
    int dim = 8;
    FierzSector sector = FierzSector::A_even;
    std::vector<int> row_grades;
    std::vector<int> col_grades;
    /// matrix[r][c] = coefficient of A^T_{col_grades[c]} in A_{row_grades[r]}.
    std::vector<std::vector<Rational>> matrix;

    /// Chirality signs (+1/−1) of (ψ₁, ψ₂, ψ₃, ψ₄) for this sector.
    std::array<int, 4> chirality_pattern() const;

    friend bool operator==(const FierzTable&, const FierzTable&) = default;
};

/// Shared per-dimension machinery: the Clifford representation plus, for
/// every mask, its Pauli-string factorization
///     M_I = i^t(I) · σ_{l₁} ⊗ … ⊗ σ_{l_n},
/// which turns bilinear sweeps over all 2^(2n) blades into one radix-4
/// "Pauli transform" of cost O(n·4ⁿ).
class FierzContext {
public:
    explicit FierzContext(int dim);  // dim ∈ {8, 10, 16}

    int dim() const noexcept { return 2 * rep_.n(); }
    const GammaRep& rep() const noexcept { return rep_; }

    /// F[l₁…l_n] = (Cᵀψ₁)ᵀ (σ_{l₁} ⊗ … ⊗ σ_{l_n}) ψ₂ for all 4ⁿ label
    /// strings (index = Σ l_j·4^(n−j)).
    std::vector<ExtScalar> pauli_transform(const Spinor& psi1, const Spinor& psi2) const;

    /// (ψ₁ e^I ψ₂) = i^t(I) · F[labels(I)] given F = pauli_transform(ψ₁, ψ₂).
    ExtScalar pairing_from_transform(const std::vector<ExtScalar>& f, Mask mask) const;

    /// Σ over ascending |I| = grade of (ψ₁e^Iψ₂)(ψ₃e^Iψ₄)
    /// = Σ (−1)^t(I) f[I]·g[I] with f, g the two Pauli transforms.
    ExtScalar grade_sum(const std::vector<ExtScalar>& f, const std::vector<ExtScalar>& g,
                        int grade) const;

    /// (b₁ e^I b₂) for two basis spinors — O(n) single-entry evaluation.
    ExtScalar basis_pairing(std::size_t index1, Mask mask, std::size_t index2) const;

    /// A_k over basis quadruples, via single-entry walks.
    ExtScalar basis_grade_sum(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4,
                              int grade) const;

    std::size_t label_index_of(Mask mask) const { return label_index_[mask]; }
    unsigned phase_of(Mask mask) const { return phase_[mask]; }

private:
    GammaRep rep_;
    SignedPermMatrix c_transpose_;
    std::vector<std::uint32_t> label_index_;  // per mask
    std::vector<std::uint8_t> phase_;         // per mask: t(I) mod 4
    std::vector<std::vector<Mask>> by_grade_;
};

/// Derive one sector's table exactly by plugging basis quadruples into the
/// row identity and solving the resulting small linear system.
FierzTable derive_table(const FierzContext& ctx, FierzSector sector);

/// The published coefficient tables, transcribed as frozen ground truth.
FierzTable reference_table(int dim, FierzSector sector);

/// Check every row identity on `trials` random chirality-respecting spinor
/// quadruples (exact equality), plus the involution / mutual-inverse matrix
/// property.  Returns true iff everything holds.
bool verify_table(const FierzContext& ctx, const FierzTable& table, int trials, Rng& rng);

/// Exact verification of the derived identities on random spinors:
///   D=8 : ½e^{ij}ξ(φe^{ij}ψ) = 4φ(ψξ) − 4ψ(φξ)   [ξ,φ,ψ ∈ Δ⁺]
///         2η(φψ) = eⁱψ(φeⁱη) + eⁱφ(ψeⁱη)          [η ∈ Δ⁻; φ,ψ ∈ Δ⁺]
///   D=10: ψ₁(ηψ₂) + ½e^{ij}ψ₁(ηe^{ij}ψ₂) − 2eⁱη(ψ₁eⁱψ₂) = −4ψ₂(ψ₁η)
///         (and the all-chiralities-flipped variant)
///         eⁱψ₁(ψ₂eⁱψ₃) + cyc(1,2,3) = 0            [ψ ∈ Δ⁺]
///   D=16: ½e^{ij}ψ₁(ψ₂e^{ij}ψ₃) + cyc(1,2,3) = 0   [ψ ∈ Δ⁺]
/// e^{ij} sums run over ALL ordered pairs i ≠ j (twice the ascending sum).
bool verify_derived(const FierzContext& ctx, int trials, Rng& rng);

}  // namespace atlas
