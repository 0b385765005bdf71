#pragma once
/// @file clifford.hpp
/// The Clifford algebra Cl(2n) for the Euclidean metric {eⁱ, eʲ} = 2δⁱʲ, in
/// two cross-validated forms:
///
///   • abstract basis blades e^{i₁}⋯e^{i_k} (ascending indices) with exact
///     sign bookkeeping — used for structure constants;
///   • the explicit tensor-of-Pauli matrix representation — used for spinor
///     sweeps.  Every generator image is a signed permutation matrix (one
///     nonzero entry per row/column, value in {±1, ±i}), so products and
///     applications cost O(2ⁿ), never O(4ⁿ).
///
/// Conventions fixed here and relied on everywhere else:
///   • generators are 1-based: eⁱ for i ∈ {1, …, 2n}; blade masks store eⁱ at
///     bit i−1;
///   • a basis index of the 2ⁿ-dimensional spinor space is read as n bits with
///     the MOST significant bit = FIRST tensor factor;
///   • e_{2k−1} = σ₃^{⊗(k−1)} ⊗ σ₁ ⊗ 1^{⊗(n−k)},
///     e_{2k}   = σ₃^{⊗(k−1)} ⊗ σ₂ ⊗ 1^{⊗(n−k)};
///   • chirality γ = (−i)ⁿ e₁e₂⋯e₂ₙ = σ₃^{⊗n}, so Δ⁺ is spanned by the basis
///     spinors with EVEN-popcount index;
///   • charge conjugation C = e₂e₄⋯e₂ₙ (n even) and
///     C = (−1)^((n−1)/2) e₁e₃⋯e₂ₙ₋₁ (n odd).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "atlas/scalar.hpp"

namespace atlas {

/// Set of generator indices: bit i−1 ⇔ eⁱ present.  Dimensions up to 2n = 16.
using Mask = std::uint32_t;

/// x · iᵏ without a general multiplication.
inline ExtScalar times_i_pow(const ExtScalar& x, unsigned k) {
    switch (k & 3u) {
        case 0: return x;
        case 1: return ExtScalar(-x.a_im, x.a_re, -x.b_im, x.b_re);
        case 2: return -x;
        default: return ExtScalar(x.a_im, -x.a_re, x.b_im, -x.b_re);
    }
}

/// Square matrix with exactly one nonzero entry per row and column, the entry
/// a power of i.  Stored as (permutation, phase): column c carries the entry
/// i^phase[c] in row perm[c].
class SignedPermMatrix {
public:
    SignedPermMatrix() = default;
    static SignedPermMatrix identity(std::size_t size) {
        SignedPermMatrix m;
        m.perm_.resize(size);
        m.phase_.assign(size, 0);
        for (std::size_t c = 0; c < size; ++c) m.perm_[c] = static_cast<std::uint32_t>(c);
        return m;
    }

    std::size_t size() const noexcept { return perm_.size(); }
    std::uint32_t row_of(std::size_t col) const { return perm_[col]; }
    std::uint8_t phase_of(std::size_t col) const { return phase_[col]; }
    void set(std::size_t col, std::uint32_t row, std::uint8_t phase_exp) {
        perm_[col] = row;
        phase_[col] = static_cast<std::uint8_t>(phase_exp & 3u);
    }

    /// Matrix entry (r, c): i^phase[c] when r = perm[c], else 0.
    ExtScalar entry(std::size_t r, std::size_t c) const {
        if (perm_[c] != r) return ExtScalar::zero();
        return times_i_pow(ExtScalar::one(), phase_[c]);
    }

    /// Standard matrix product: (a·b)v = a(bv).
    friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
        if (a.size() != b.size()) throw std::invalid_argument("signed-perm size mismatch");
        SignedPermMatrix r = identity(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) {
            std::uint32_t mid = b.perm_[c];
            r.perm_[c] = a.perm_[mid];
            r.phase_[c] = static_cast<std::uint8_t>((a.phase_[mid] + b.phase_[c]) & 3u);
        }
        return r;
    }

    SignedPermMatrix transpose() const {
        SignedPermMatrix r = identity(size());
        for (std::size_t c = 0; c < size(); ++c) {
            r.perm_[perm_[c]] = static_cast<std::uint32_t>(c);
            r.phase_[perm_[c]] = phase_[c];
        }
        return r;
    }

    /// Entrywise complex conjugation (i ↦ −i on every phase).
    SignedPermMatrix conjugate() const {
        SignedPermMatrix r = *this;
        for (auto& p : r.phase_) p = static_cast<std::uint8_t>((4u - p) & 3u);
        return r;
    }

    /// Exact inverse (= conjugate transpose; these matrices are unitary).
    SignedPermMatrix inverse() const {
        SignedPermMatrix r = identity(size());
        for (std::size_t c = 0; c < size(); ++c) {
            r.perm_[perm_[c]] = static_cast<std::uint32_t>(c);
            r.phase_[perm_[c]] = static_cast<std::uint8_t>((4u - phase_[c]) & 3u);
        }
        return r;
    }

    bool is_identity() const {
        for (std::size_t c = 0; c < size(); ++c)
            if (perm_[c] != c || phase_[c] != 0) return false;
        return true;
    }

    friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

private:
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint8_t> phase_;
};

/// Basis blade e^{i₁}⋯e^{i_k} (indices ascending as written) scaled by coeff.
/// The empty mask with coeff 1 is the unit of the algebra.
struct Blade {
    Mask mask = 0;
    ExtScalar coeff = ExtScalar::one();

    friend bool operator==(const Blade&, const Blade&) = default;
};

namespace detail {

/// Parity (0/1) of the sign picked up when concatenating two ascending words
/// x·y and re-sorting to ascending order, counting anticommutations only;
/// index-square relations eⁱeⁱ = +1 contribute no sign for the +δ metric.
inline unsigned reorder_parity(Mask x, Mask y) {
    unsigned count = 0;
    Mask a = x >> 1;
    while (a != 0) {
        count += static_cast<unsigned>(__builtin_popcount(a & y));
        a >>= 1;
    }
    return count & 1u;
}

}  // namespace detail

/// Product of two blades: mask = symmetric difference, sign from re-sorting.
inline Blade blade_mul(const Blade& x, const Blade& y) {
    Blade r;
    r.mask = x.mask ^ y.mask;
    r.coeff = x.coeff * y.coeff;
    if (detail::reorder_parity(x.mask, y.mask) != 0) r.coeff = -r.coeff;
    return r;
}

/// Finite ℚ(i,√2)-linear combination of blades; only nonzero terms stored,
/// keyed by mask (deterministic iteration order).
class CliffordElement {
public:
    CliffordElement() = default;
    static CliffordElement unit() { return from_blade(Blade{}); }
    static CliffordElement from_blade(const Blade& b) {
        CliffordElement e;
        e.add_term(b.mask, b.coeff);
        return e;
    }

    const std::map<Mask, ExtScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    ExtScalar coeff_of(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ExtScalar::zero() : it->second;
    }

    void add_term(Mask m, const ExtScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }
    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                ExtScalar c = cx * cy;
                if (detail::reorder_parity(mx, my) != 0) c = -c;
                r.add_term(mx ^ my, c);
            }
        return r;
    }
    friend CliffordElement operator*(const ExtScalar& s, const CliffordElement& x) {
        CliffordElement r;
        for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
        return r;
    }
    CliffordElement operator-() const { return ExtScalar(-1) * *this; }

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

private:
    std::map<Mask, ExtScalar> terms_;
};

/// Matrix image of a blade: a general ExtScalar coefficient times a signed
/// permutation matrix (the unit-coefficient part stays O(2ⁿ)-composable).
struct ScaledMatrix {
    ExtScalar coeff = ExtScalar::one();
    SignedPermMatrix mat;
};

enum class Chirality { plus, minus, mixed };

/// Chirality sign of one spinor basis index: γ ψ_c = (−1)^popcount(c) ψ_c.
inline int index_chirality(std::size_t index) {
    return (__builtin_popcountll(static_cast<unsigned long long>(index)) & 1) ? -1 : +1;
}

/// Dense spinor of Cl(2n): 2ⁿ exact coefficients.  The chirality tag is
/// recomputed from the support on demand; a zero spinor reports `mixed` and is
/// treated as compatible with every selection rule.
class Spinor {
public:
    explicit Spinor(int n) : n_(n), coeffs_(std::size_t(1) << n) {}

    static Spinor basis(int n, std::size_t index, const ExtScalar& coeff = ExtScalar::one()) {
        Spinor s(n);
        s.coeffs_.at(index) = coeff;
        return s;
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const ExtScalar& operator[](std::size_t i) const { return coeffs_[i]; }
    ExtScalar& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<ExtScalar>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    Chirality chirality() const {
        bool has_plus = false, has_minus = false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) (index_chirality(i) > 0 ? has_plus : has_minus) = true;
        if (has_plus && !has_minus) return Chirality::plus;
        if (has_minus && !has_plus) return Chirality::minus;
        return Chirality::mixed;
    }

    /// +1 / −1 for definite chirality, 0 for mixed (or zero).
    int chirality_sign() const {
        switch (chirality()) {
            case Chirality::plus: return +1;
            case Chirality::minus: return -1;
            default: return 0;
        }
    }

    /// Component-wise complex conjugation.
    Spinor conj() const {
        Spinor r(n_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].conj();
        return r;
    }

    friend Spinor operator+(const Spinor& x, const Spinor& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("spinor dimension mismatch");
        Spinor r(x.n_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = x.coeffs_[i] + y.coeffs_[i];
        return r;
    }
    friend Spinor operator-(const Spinor& x, const Spinor& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("spinor dimension mismatch");
        Spinor r(x.n_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = x.coeffs_[i] - y.coeffs_[i];
        return r;
    }
    friend Spinor operator*(const ExtScalar& s, const Spinor& x) {
        Spinor r(x.n_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = s * x.coeffs_[i];
        return r;
    }
    Spinor operator-() const { return ExtScalar(-1) * *this; }

    friend bool operator==(const Spinor&, const Spinor&) = default;

private:
    int n_;
    std::vector<ExtScalar> coeffs_;
};

/// ψ ↦ M ψ for a signed permutation matrix.
Spinor apply(const SignedPermMatrix& m, const Spinor& psi);
/// ψ ↦ c·(M ψ) for a scaled signed permutation matrix.
Spinor apply(const ScaledMatrix& m, const Spinor& psi);

/// The explicit Cl(2n) matrix representation on 2ⁿ-dimensional spinors,
/// built once per dimension and shared read-only.
class GammaRep {
public:
    /// Builds generators, chirality γ and charge conjugation C for
    /// n ∈ {1, …, 8}; throws std::invalid_argument outside that range.
    explicit GammaRep(int n);

    int n() const noexcept { return n_; }
    int vector_dim() const noexcept { return 2 * n_; }
    std::size_t spinor_size() const noexcept { return std::size_t(1) << n_; }

    /// Generator eᵖ, p ∈ {1, …, 2n}.
    const SignedPermMatrix& generator(int p) const {
        if (p < 1 || p > 2 * n_) throw std::invalid_argument("generator index out of range");
        return generators_[static_cast<std::size_t>(p - 1)];
    }
    const SignedPermMatrix& chirality() const noexcept { return chirality_; }
    const SignedPermMatrix& charge_conj() const noexcept { return charge_conj_; }

    /// Product of generator matrices of a unit blade, ascending index order.
    SignedPermMatrix mask_matrix(Mask mask) const;

private:
    int n_;
    std::vector<SignedPermMatrix> generators_;
    SignedPermMatrix chirality_;
    SignedPermMatrix charge_conj_;
};

/// Factory following the spec name; equivalent to GammaRep(n).
inline GammaRep build_gamma(int n) { return GammaRep(n); }

/// Matrix image of a blade (coefficient folded out front).
ScaledMatrix blade_matrix(const GammaRep& rep, const Blade& b);

/// ψ ↦ (unit blade given by mask)·ψ.
Spinor mask_act(const GammaRep& rep, Mask mask, const Spinor& psi);

/// ψ ↦ b·ψ for a general blade.
Spinor blade_act(const GammaRep& rep, const Blade& b, const Spinor& psi);

/// ψ ↦ x·ψ for a general Clifford element (sum over its blades).
Spinor element_act(const GammaRep& rep, const CliffordElement& x, const Spinor& psi);

/// ψ ↦ (Σᵢ vᵢ eⁱ)·ψ — Clifford action of a vector, v indexed 0-based.
Spinor vector_act(const GammaRep& rep, const std::vector<ExtScalar>& v, const Spinor& psi);

/// Spin generator action x^{pq} ∘ ψ = ¼ e^[p e^q] ψ = ½ eᵖe^q ψ (p ≠ q).
/// Throws std::invalid_argument when p = q.
Spinor spin_act(const GammaRep& rep, int p, int q, const Spinor& psi);

/// (φ e^I ψ) := φᵀ C (blade matrix) ψ — no complex conjugation.
///
/// Selection rule: with C a product of n generators and e^I flipping
/// chirality for odd |I|, a nonzero pairing needs
///     chir(φ) = (−1)^(n+|I|) · chir(ψ).
/// Violating definite chiralities throw std::invalid_argument naming the
/// rule; zero or mixed inputs never throw.
ExtScalar pair_bilinear(const GammaRep& rep, const Spinor& phi, const Blade& b, const Spinor& psi);

/// (φ ψ) = φᵀ C ψ — grade-0 convenience overload.
ExtScalar pair_bilinear(const GammaRep& rep, const Spinor& phi, const Spinor& psi);

/// ⟨φ, ψ⟩ = Σ conj(φ_c) ψ_c.  Definite, different chiralities throw.
ExtScalar pair_hermitian(const Spinor& phi, const Spinor& psi);

/// ψ ↦ C ψ* (chirality preserved for n even, flipped for n odd).
Spinor charge_conjugate(const GammaRep& rep, const Spinor& psi);

/// All grade-k masks of Cl(two_n) in lexicographic order on the ascending
/// index tuples (the iteration order every module uses for e^{i₁…i_k} sums).
std::vector<Mask> grade_masks(int two_n, int k);

}  // namespace atlas
