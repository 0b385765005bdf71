#pragma once
/// @file eiii.hpp
/// The Plücker relations cutting the 26-dimensional projective cone out of
/// the 27-dimensional representation, their exact solutions in four
/// coordinate charts, pure-spinor machinery, orbit sampling, chart
/// transitions, and the Gr(2,4) warm-up quadric.
///
/// ## The relations
/// A point Ψ = (v, ψ, s) (module rep27) lies on the cone X iff Ψ ⋄ Ψ = 0,
/// which unpacks into 27 scalar equations:
///
///   (1)  2 v_i s − (1/√2)(ψ eⁱ ψ) = 0          (i = 1..10)
///   (2)  (v·e ψ)_c = 0                          (16 Δ⁻ components)
///   (3)  v·v = 0
///
/// `plucker_residual` returns exactly these 27 values in the order
/// (1)×10, (2)×16 (Δ⁻ components by ascending spinor index), (3).
/// Note diamond27(Ψ,Ψ) = (residual₁; −√2·residual₂; residual₃), so the two
/// zero loci coincide.
///
/// ## 8+2 split
/// The Cl(10) representation factors through Cl(8) ⊗ (2×2 block): spinor
/// basis index c ∈ 0..31 splits as c = (c₈ << 1) | b where c₈ is a Cl(8)
/// spinor index and b selects the block.  In that factorization
///
///   e^a    = 𝚎^a ⊗ 1          (a = 1..8)
///   e⁹     = γ₈ ⊗ σ₁,   e¹⁰ = γ₈ ⊗ σ₂,
///   e⁹+ie¹⁰ = [[0, 2γ₈],[0, 0]],   e⁹−ie¹⁰ = [[0, 0],[2γ₈, 0]],
///   C₁₀    = C₈ ⊗ σ₁,   γ₁₀ = γ₈ ⊗ σ₃,
///
/// so a positive-chirality ψ splits as ψ = [ξ; η] with ξ ∈ Δ⁺₈ (b = 0) and
/// η ∈ Δ⁻₈ (b = 1).  With t± = √2(v₉ ± i v₁₀) and 𝚞 = (v₁..v₈) the 27
/// relations become
///
///   2s𝚞 − √2(ξ 𝚎^a η)𝚎^a = 0,    s t₊ + (ηη) = 0,    s t₋ − (ξξ) = 0,
///   𝚞ξ + (1/√2) t₋ γ₈ η = 0,     (1/√2) t₊ γ₈ ξ + 𝚞η = 0,
///   𝚞·𝚞 + ½ t₊ t₋ = 0.
///
/// ## Charts
///   chart_s       {s ≠ 0}:   free (ψ, s);   v = (1/(2√2 s))(ψ eⁱ ψ)eⁱ.
///   chart_tpm +   {t₊ ≠ 0}:  free (t₊, η, 𝚞);
///                 ξ = −√2 t₊⁻¹ 𝚞η,  s = −t₊⁻¹(ηη),  t₋ = −2 t₊⁻¹ 𝚞·𝚞.
///   chart_tpm −   {t₋ ≠ 0}:  free (t₋, ξ, 𝚞);
///                 η = √2 t₋⁻¹ 𝚞ξ,   s = t₋⁻¹(ξξ),   t₊ = −2 t₋⁻¹ 𝚞·𝚞.
///   chart_xinfty  {f ≠ 0}:   free (f, K, ū, s) w.r.t. a pure-spinor frame;
///                 v = ū − ½ f⁻¹ K ū,
///                 ψ = ψ₀ f − (1/8) K ψ₀
///                     + (1/√2) f⁻¹ (s ū + (1/32) Ω̄^{ipqrs}K^{pq}K^{rs} eⁱ) Cψ₀*.
/// When t₊ = t₋ = 0 but some v_a ≠ 0 (a ≤ 9), the Spin(10) rotation
/// Ω = (1/√2)(1 + e^a e¹⁰) with Ω e^a Ω⁻¹ = −e¹⁰, Ω e¹⁰ Ω⁻¹ = e^a moves the
/// point into a t-chart (`rotate_frame`); the residual is equivariant.
///
/// ## Pure spinors
/// ψ ∈ Δ⁺ is pure iff (ψ eⁱ ψ) = 0 for all i.  A pure normalized
/// (⟨ψ₀,ψ₀⟩ = 1) spinor yields a frame:
///
///   J_{ij} = (i/2)⟨ψ₀, [eⁱ, e^j] ψ₀⟩ = i⟨ψ₀, e^{ij} ψ₀⟩   (i ≠ j),
///   Ω^I  = (1/(4√2)) ⟨ψ₀, e^I Cψ₀*⟩,   Ω̄^I = (1/(4√2)) (ψ₀ e^I ψ₀)
///
/// for every 5-index blade I, with J² = −Id, JᵀJ = Id,
/// Σ_{I ascending} Ω^I Ω̄^I = 1, and the rank-4 identity (−½ J∧J in form
/// language, i.e. per ascending quadruple i<j<k<l)
/// ⟨ψ₀ e^{ijkl} ψ₀⟩ = −(J_{ij}J_{kl} − J_{ik}J_{jl} + J_{il}J_{jk}).
///
/// Type conventions (raised indices, complexified Euclidean contraction):
/// a vector u is (0,1) iff J u = −i u iff u ψ₀ = 0; the antisymmetric K is
/// (2,0) iff it annihilates (1,0) vectors, K·P₁₀ = 0, where
/// P₁₀ = ½(Id − iJ) and P₀₁ = ½(Id + iJ) are the eigen-projectors.  The
/// canonical projections are K ↦ P₁₀ K P₀₁ and u ↦ P₀₁ u.
///
/// `pure_decompose` writes any ψ over a frame as
///   ψ = ψ₀ f − (1/8) K ψ₀ + ½ x·e·Cψ₀*,
///   f = ⟨ψ₀ ψ⟩,  x_i = (ψ₀ eⁱ ψ),  K = K̃ + i f J,  K̃_{ij} = ⟨ψ₀ e^{ij} ψ⟩,
/// where "K ψ₀" means Σ_{i,j} K^{ij} e^i e^j ψ₀ summed over all ordered
/// pairs (`apply_two_form`).  The standard frame uses ψ₀ = the index-0
/// basis spinor: with this library's σ₂ sign convention it is the Δ⁺ basis
/// spinor annihilated by the five combinations e^{2k−1} + i e^{2k}
/// (the adapted-representation "ψ = 1"); its J maps e_{2k−1} ↦ e_{2k}, so
/// (1,0) = span{e_{2k−1} − i e_{2k}} and (0,1) = span{e_{2k−1} + i e_{2k}}.
///
/// ## ChartPoint files
/// JSON shape {"chart": name, "params": {…}} with chart-specific params:
///   s:      {"psi": [16 scalars], "s": scalar}
///   tplus:  {"t": scalar, "spin8": [8 scalars], "u8": [8 scalars]}
///   tminus: same as tplus (spin8 holds ξ instead of η)
///   xinfty: {"frame": "standard", "f": scalar, "K": [10 scalars],
///            "ubar": [5 scalars], "s": scalar}
///   gr24:   {"g": [16 scalars, row-major 4×4]}
/// Spinor components are listed by ascending index over the relevant
/// chirality (Δ⁺₁₀ for "psi"; Δ⁻₈ on the plus side / Δ⁺₈ on the minus side
/// for "spin8").  The xinfty "K" entries are the (2,0) coefficients c_{kl}
/// (k < l lexicographic) over w_k ∧ w_l with w_k = e_{2k−1} − i e_{2k}, and
/// "ubar" the coefficients over w̄_k = e_{2k−1} + i e_{2k}; only the
/// standard frame is serialized.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/linalg.hpp"
#include "atlas/rep27.hpp"
#include "atlas/scalar.hpp"
#include "atlas/serialize.hpp"

namespace atlas {

/// (ξ, η) halves of a Cl(10) spinor under the 8+2 split: ξ_{c₈} = ψ_{2c₈},
/// η_{c₈} = ψ_{2c₈+1}.  Throws unless ψ is a 32-component spinor.
std::pair<Spinor, Spinor> split_spinor(const Spinor& psi);

/// Inverse of split_spinor; ξ and η must be 16-component spinors.
Spinor join_spinor(const Spinor& xi, const Spinor& eta);

/// t± = √2 (v₉ ± i v₁₀).
ExtScalar tplus_of(const Vector27& p);
ExtScalar tminus_of(const Vector27& p);

/// The 27 Plücker residuals in the frozen order (see file comment).
std::vector<ExtScalar> plucker_residual(const Vector27& p);

/// True iff every Plücker residual vanishes.
bool on_cone(const Vector27& p);

/// {s ≠ 0} chart: v = (1/(2√2 s))(ψ eⁱ ψ)eⁱ.  Throws std::invalid_argument
/// when s = 0 or ψ is not a 32-component spinor.
Vector27 chart_s(const Spinor& psi, const ExtScalar& s);

enum class Side { plus, minus };

/// {t₊ ≠ 0} / {t₋ ≠ 0} charts over the free data (t, spin8, 𝚞) where spin8
/// is η ∈ Δ⁻₈ on the plus side and ξ ∈ Δ⁺₈ on the minus side.  Throws
/// std::invalid_argument when tcoord = 0, when u8 is not 8 scalars, or when
/// spin8 is not a 16-component spinor supported on the required chirality.
Vector27 chart_tpm(Side side, const ExtScalar& tcoord, const Spinor& spin8,
                   const std::vector<ExtScalar>& u8);

/// Ω ψ = (1/√2)(ψ + e^a e¹⁰ ψ), a ∈ 1..9.  Throws when a is out of range.
Spinor rotate_spinor(int a, const Spinor& psi);

/// The Spin(10) frame rotation in the (a,10)-plane applied to a 27-vector:
/// v̂_a = v₁₀, v̂₁₀ = −v_a (others fixed), ψ̂ = Ω ψ, ŝ = s.
Vector27 rotate_frame(int a, const Vector27& p);

/// Chart-atlas tie-break when t₊ = t₋ = 0: the smallest a ∈ 1..9 for which
/// rotate_frame(a, p) has t̂₊ ≠ 0 or t̂₋ ≠ 0; returns 0 when no single
/// rotation works.
int rotation_index(const Vector27& p);

/// True iff (ψ eⁱ ψ) = 0 for all i = 1..10 (vacuously true for ψ = 0).
bool is_pure(const Spinor& psi);

/// A pure normalized spinor with its complex structure, the rank-5 forms,
/// and the J-eigenprojectors.  omega/omega_bar are indexed by 10-bit blade
/// mask (only popcount-5 masks are populated).
struct PureSpinorFrame {
    Spinor psi0{5};
    ExactMatrix J{10, 10};
    std::vector<ExtScalar> omega;      ///< Ω^I by mask, size 1024
    std::vector<ExtScalar> omega_bar;  ///< Ω̄^I by mask, size 1024
    ExactMatrix p10{10, 10};           ///< ½(Id − iJ), projector onto Jw = +iw
    ExactMatrix p01{10, 10};           ///< ½(Id + iJ), projector onto Jw = −iw
};

/// Builds the frame of a pure spinor; throws std::invalid_argument when ψ₀
/// is not pure or ⟨ψ₀,ψ₀⟩ ≠ 1.
PureSpinorFrame pure_frame(const Spinor& psi0);

/// The frame of the standard pure spinor (basis index 0), built once.
const PureSpinorFrame& standard_frame();

/// Σ_{i≠j} K_{ij} eⁱ e^j ψ = 2 Σ_{i<j} K_{ij} e^{ij} ψ — the all-ordered-
/// pairs contraction "K ψ" used by the reconstruction formulas.
Spinor apply_two_form(const ExactMatrix& k, const Spinor& psi);

/// (f, x, K) of ψ over a frame (see file comment).
struct PureDecomposition {
    ExtScalar f;
    std::vector<ExtScalar> x;  ///< 10 components, x_i = (ψ₀ eⁱ ψ)
    ExactMatrix K{10, 10};     ///< K̃ + i f J, antisymmetric, type (2,0)
};

PureDecomposition pure_decompose(const Spinor& psi, const PureSpinorFrame& frame);

/// ψ₀ f − (1/8)·apply_two_form(K, ψ₀) + ½ Σᵢ xᵢ eⁱ (Cψ₀*) — the exact
/// reconstruction ψ of pure_decompose(ψ) when f, x, K came from ψ.
Spinor reconstruct_spinor(const PureSpinorFrame& frame, const ExtScalar& f,
                          const std::vector<ExtScalar>& x, const ExactMatrix& k);

/// (2,0) projection P₁₀ K P₀₁ of an antisymmetric 10×10 matrix.
ExactMatrix project_20(const PureSpinorFrame& frame, const ExactMatrix& k);

/// (0,1) projection P₀₁ u of a 10-vector.
std::vector<ExtScalar> project_01(const PureSpinorFrame& frame, const std::vector<ExtScalar>& u);

/// Exact type tests: K·P₁₀ = 0, respectively P₁₀·u = 0.
bool is_type_20(const PureSpinorFrame& frame, const ExactMatrix& k);
bool is_type_01(const PureSpinorFrame& frame, const std::vector<ExtScalar>& u);

/// The contraction C_i = Σ_{p,q,r,s} Ω̄^{ipqrs} K^{pq} K^{rs} over all
/// ordered index tuples, as a 10-vector.
std::vector<ExtScalar> omega_bar_kk(const PureSpinorFrame& frame, const ExactMatrix& k);

/// {f ≠ 0} chart near X∞ (see file comment for the formulas).  Throws
/// std::invalid_argument when f = 0 or on malformed sizes.  When K or ubar
/// violate their type constraints: with `projected` null the call throws;
/// otherwise the inputs are replaced by their canonical projections and
/// *projected is set to true (false when no projection was needed).
Vector27 chart_xinfty(const PureSpinorFrame& frame, const ExtScalar& f, const ExactMatrix& k,
                      const std::vector<ExtScalar>& ubar, const ExtScalar& s,
                      bool* projected = nullptr);

enum class Chart { s, tplus, tminus, xinfty, gr24 };

const char* chart_name(Chart c);
Chart chart_from_name(const std::string& name);

/// A point presented in one chart's free parameters.  Only the fields of
/// the active chart are meaningful; the others stay at their defaults.
struct ChartPoint {
    Chart chart = Chart::s;
    // s-chart (psi, s); the xinfty chart reuses s.
    Spinor psi{5};
    ExtScalar s;
    // t±-charts.
    ExtScalar tcoord;
    Spinor spin8{4};
    std::vector<ExtScalar> u8 = std::vector<ExtScalar>(8);
    // xinfty chart over the standard frame, holomorphic-basis scalars.
    ExtScalar f;
    std::vector<ExtScalar> kscal = std::vector<ExtScalar>(10);
    std::vector<ExtScalar> ubar5 = std::vector<ExtScalar>(5);
    // gr24 demo.
    ExactMatrix g{4, 4};
};

/// Standard-frame packing of the xinfty parameters: w_k = e_{2k−1} − i e_{2k},
/// w̄_k = e_{2k−1} + i e_{2k} (1 ≤ k ≤ 5, 0-based vector components).
ExactMatrix k_matrix_from_scalars(const std::vector<ExtScalar>& kscal);
std::vector<ExtScalar> k_scalars_from_matrix(const ExactMatrix& k);
std::vector<ExtScalar> ubar_from_scalars(const std::vector<ExtScalar>& d);
std::vector<ExtScalar> ubar_scalars_from_vector(const std::vector<ExtScalar>& u);

/// The Vector27 a chart point presents.  Throws std::invalid_argument for
/// gr24 points (they live on the Grassmannian, not the 27).
Vector27 assemble(const ChartPoint& p);

/// True iff the chart's nonvanishing coordinate is nonzero at p
/// (s / t₊ / t₋ / f over the standard frame); false for gr24.
bool point_in_chart(const Vector27& p, Chart c);

/// Reads the target chart's free parameters off an assembled point.  For a
/// point on the cone, assemble(chart_point_from(p, c)) reproduces p
/// exactly.  Throws std::domain_error when the target coordinate vanishes
/// ("not in chart") and std::invalid_argument for gr24.
ChartPoint chart_point_from(const Vector27& p, Chart target);

/// chart_point_from ∘ assemble: re-present p in another chart.
ChartPoint chart_transition(const ChartPoint& p, Chart target);

/// Seeded word of exp(ξ), exp(η) and frame rotations applied to Ψ₀; lies on
/// the cone by construction.  Throws std::invalid_argument when
/// word_length < 1.
Vector27 orbit_sample(std::uint64_t seed, int word_length);

/// Equality up to overall scale: all 2×2 minors of the 2×27 coordinate
/// stack vanish.  (Two zero vectors compare equal.)
bool projective_equal(const Vector27& a, const Vector27& b);

/// The six 2×2 minors z_{ij} (i < j, order z₁₂ z₁₃ z₁₄ z₂₃ z₂₄ z₃₄) of the
/// first two columns of a 4×4 matrix.
std::vector<ExtScalar> gr24_plucker(const ExactMatrix& g);

/// The Gr(2,4) quadric z₁₂z₃₄ − z₁₃z₂₄ + z₁₄z₂₃ (zero on every minor
/// six-tuple).
ExtScalar gr24_relation(const std::vector<ExtScalar>& z);

void to_json(Json& j, const ChartPoint& p);
void from_json(const Json& j, ChartPoint& p);

}  // namespace atlas
