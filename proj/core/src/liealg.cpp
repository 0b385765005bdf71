#include "atlas/liealg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "atlas/linalg.hpp"
#include "atlas/octonion.hpp"

namespace atlas {

namespace {

const GammaRep& rep16() {
    static const GammaRep r(8);
    return r;
}

const GammaRep& rep10() {
    static const GammaRep r(5);
    return r;
}

bool e8_layout(Algebra a) { return a == Algebra::e8 || a == Algebra::g2; }

int layout_so_n(Algebra a) { return e8_layout(a) ? 16 : 10; }

/// Ascending list of the 2ⁿ spinor indices with the given chirality sign.
std::vector<int> chiral_indices(int n, int sign) {
    std::vector<int> idx;
    for (int c = 0; c < (1 << n); ++c)
        if (index_chirality(static_cast<std::size_t>(c)) == sign) idx.push_back(c);
    return idx;
}

/// Lexicographic index of the pair (p,q), 1 ≤ p < q ≤ n, in the so basis.
int so_pair_index(int n, int p, int q) {
    int base = 0;
    for (int a = 1; a < p; ++a) base += n - a;
    return base + (q - p - 1);
}

/// C = AB − BA for row-major n×n matrices, skipping zero entries.
std::vector<ExtScalar> mat_commutator(const std::vector<ExtScalar>& A,
                                      const std::vector<ExtScalar>& B, int n) {
    std::vector<ExtScalar> C(static_cast<std::size_t>(n) * n, ExtScalar::zero());
    for (int p = 0; p < n; ++p)
        for (int k = 0; k < n; ++k) {
            const ExtScalar& a = A[p * n + k];
            if (a.is_zero()) continue;
            for (int q = 0; q < n; ++q) {
                const ExtScalar& b = B[k * n + q];
                if (!b.is_zero()) C[p * n + q] += a * b;
            }
        }
    for (int p = 0; p < n; ++p)
        for (int k = 0; k < n; ++k) {
            const ExtScalar& b = B[p * n + k];
            if (b.is_zero()) continue;
            for (int q = 0; q < n; ++q) {
                const ExtScalar& a = A[k * n + q];
                if (!a.is_zero()) C[p * n + q] -= b * a;
            }
        }
    return C;
}

const ExtScalar& three_i() {
    static const ExtScalar v(Rational(0), Rational(3), Rational(0), Rational(0));
    return v;
}

/// −i·e¹⁰·ξ — the f4 partner of a Δ⁺₁₀ spinor.
Spinor f4_partner(const Spinor& xi) {
    return times_i_pow(ExtScalar::one(), 3) * apply(rep10().generator(10), xi);
}

bool f4_constraints_hold(const LieElement& z) {
    for (int p = 1; p <= 10; ++p)
        if (!z.so_at(p, 10).is_zero() && p != 10) return false;
    if (!z.u1.is_zero()) return false;
    return z.minus == f4_partner(z.plus);
}

/// Core e8-layout bracket (also used by g2 before its closure check).
LieElement bracket_e8_core(const LieElement& x, const LieElement& y, Algebra tag) {
    LieElement out = LieElement::zero(tag);
    out.so = mat_commutator(x.so, y.so, 16);
    if (!x.plus.is_zero() && !y.plus.is_zero()) {
        for (int p = 1; p <= 16; ++p)
            for (int q = p + 1; q <= 16; ++q) {
                Blade b{(Mask(1) << (p - 1)) | (Mask(1) << (q - 1)), ExtScalar::one()};
                ExtScalar c = -ExtScalar::half() * pair_bilinear(rep16(), x.plus, b, y.plus);
                if (!c.is_zero()) out.add_so(p, q, c);
            }
    }
    out.plus = so_spin_act(rep16(), x, y.plus) - so_spin_act(rep16(), y, x.plus);
    return out;
}

/// Core e6-layout bracket (also used by f4 before its closure check).
LieElement bracket_e6_core(const LieElement& x, const LieElement& y, Algebra tag) {
    LieElement out = LieElement::zero(tag);
    out.so = mat_commutator(x.so, y.so, 10);
    const ExtScalar i_quarter =
        times_i_pow(ExtScalar::half() * ExtScalar::half(), 1);  // i/4
    if (!x.plus.is_zero() && !y.minus.is_zero()) {
        for (int p = 1; p <= 10; ++p)
            for (int q = p + 1; q <= 10; ++q) {
                Blade b{(Mask(1) << (p - 1)) | (Mask(1) << (q - 1)), ExtScalar::one()};
                ExtScalar c = -ExtScalar::half() * pair_bilinear(rep10(), x.plus, b, y.minus);
                if (!c.is_zero()) out.add_so(p, q, c);
            }
        out.u1 += i_quarter * pair_bilinear(rep10(), x.plus, y.minus);
    }
    if (!y.plus.is_zero() && !x.minus.is_zero()) {
        for (int p = 1; p <= 10; ++p)
            for (int q = p + 1; q <= 10; ++q) {
                Blade b{(Mask(1) << (p - 1)) | (Mask(1) << (q - 1)), ExtScalar::one()};
                ExtScalar c = ExtScalar::half() * pair_bilinear(rep10(), y.plus, b, x.minus);
                if (!c.is_zero()) out.add_so(p, q, c);
            }
        out.u1 -= i_quarter * pair_bilinear(rep10(), y.plus, x.minus);
    }
    out.plus = so_spin_act(rep10(), x, y.plus) - so_spin_act(rep10(), y, x.plus) +
               three_i() * (x.u1 * y.plus - y.u1 * x.plus);
    out.minus = so_spin_act(rep10(), x, y.minus) - so_spin_act(rep10(), y, x.minus) -
                three_i() * (x.u1 * y.minus - y.u1 * x.minus);
    return out;
}

/// Solve for g2 coordinates over the 28 so(8)-block pairs (9 ≤ p < q ≤ 16);
/// nullopt when outside the 14-dim span.
std::optional<std::vector<ExtScalar>> g2_solve(const LieElement& z);

}  // namespace

int algebra_dim(Algebra a) {
    switch (a) {
        case Algebra::g2: return 14;
        case Algebra::f4: return 52;
        case Algebra::e6: return 78;
        case Algebra::e8: return 248;
    }
    throw std::invalid_argument("unknown algebra");
}

const char* algebra_name(Algebra a) {
    switch (a) {
        case Algebra::g2: return "g2";
        case Algebra::f4: return "f4";
        case Algebra::e6: return "e6";
        case Algebra::e8: return "e8";
    }
    throw std::invalid_argument("unknown algebra");
}

Algebra algebra_from_name(const std::string& name) {
    if (name == "g2") return Algebra::g2;
    if (name == "f4") return Algebra::f4;
    if (name == "e6") return Algebra::e6;
    if (name == "e8") return Algebra::e8;
    throw std::invalid_argument("unknown algebra name: " + name);
}

LieElement LieElement::zero(Algebra a) {
    LieElement z;
    z.algebra = a;
    const int n = layout_so_n(a);
    z.so.assign(static_cast<std::size_t>(n) * n, ExtScalar::zero());
    z.plus = Spinor(e8_layout(a) ? 8 : 5);
    z.minus = Spinor(e8_layout(a) ? 0 : 5);
    return z;
}

int LieElement::so_n() const { return layout_so_n(algebra); }

ExtScalar LieElement::so_at(int p, int q) const {
    const int n = so_n();
    if (p < 1 || q < 1 || p > n || q > n) throw std::invalid_argument("so index out of range");
    return so[static_cast<std::size_t>(p - 1) * n + (q - 1)];
}

void LieElement::add_so(int p, int q, const ExtScalar& c) {
    const int n = so_n();
    if (p < 1 || q < 1 || p > n || q > n || p == q)
        throw std::invalid_argument("so index out of range");
    so[static_cast<std::size_t>(p - 1) * n + (q - 1)] += c;
    so[static_cast<std::size_t>(q - 1) * n + (p - 1)] -= c;
}

bool LieElement::is_zero() const {
    for (const ExtScalar& c : so)
        if (!c.is_zero()) return false;
    return plus.is_zero() && minus.is_zero() && u1.is_zero();
}

LieElement operator+(const LieElement& x, const LieElement& y) {
    if (x.algebra != y.algebra) throw std::invalid_argument("lie element algebra mismatch");
    LieElement z = x;
    for (std::size_t k = 0; k < z.so.size(); ++k) z.so[k] += y.so[k];
    z.plus = x.plus + y.plus;
    z.minus = x.minus + y.minus;
    z.u1 += y.u1;
    return z;
}

LieElement operator-(const LieElement& x, const LieElement& y) {
    return x + ExtScalar(-1) * y;
}

LieElement operator*(const ExtScalar& c, const LieElement& x) {
    LieElement z = x;
    for (ExtScalar& v : z.so) v = c * v;
    z.plus = c * x.plus;
    z.minus = c * x.minus;
    z.u1 = c * x.u1;
    return z;
}

LieElement so_generator(Algebra a, int p, int q) {
    if (a != Algebra::e6 && a != Algebra::e8)
        throw std::invalid_argument("so_generator builds e6 or e8 elements");
    LieElement z = LieElement::zero(a);
    if (p == q) throw std::invalid_argument("so generator needs p != q");
    z.add_so(p, q, ExtScalar::one());
    return z;
}

LieElement rho_element() {
    LieElement z = LieElement::zero(Algebra::e6);
    z.u1 = ExtScalar::one();
    return z;
}

LieElement spinor_plus_element(Algebra a, const Spinor& xi) {
    if (a != Algebra::e6 && a != Algebra::e8)
        throw std::invalid_argument("spinor elements belong to e6 or e8");
    LieElement z = LieElement::zero(a);
    if (xi.n() != z.plus.n()) throw std::invalid_argument("spinor dimension mismatch");
    z.plus = xi;
    return z;
}

LieElement spinor_minus_element(const Spinor& eta) {
    LieElement z = LieElement::zero(Algebra::e6);
    if (eta.n() != 5) throw std::invalid_argument("spinor dimension mismatch");
    z.minus = eta;
    return z;
}

LieElement as_e6(const LieElement& x) {
    if (x.algebra != Algebra::f4 && x.algebra != Algebra::e6)
        throw std::invalid_argument("as_e6 expects an f4 or e6 element");
    LieElement z = x;
    z.algebra = Algebra::e6;
    return z;
}

LieElement as_f4(const LieElement& x) {
    if (x.algebra != Algebra::f4 && x.algebra != Algebra::e6)
        throw std::invalid_argument("as_f4 expects an e6-layout element");
    if (!f4_constraints_hold(x))
        throw std::invalid_argument(
            "element violates the f4 constraints (x in so(9), u1 = 0, eta = -i e^10 xi)");
    LieElement z = x;
    z.algebra = Algebra::f4;
    return z;
}

std::vector<ExtScalar> so_vector_act(const LieElement& x, const std::vector<ExtScalar>& v) {
    const int n = x.so_n();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length mismatch");
    std::vector<ExtScalar> out(v.size(), ExtScalar::zero());
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const ExtScalar& m = x.so[static_cast<std::size_t>(p) * n + q];
            if (!m.is_zero()) out[p] += m * v[q];
        }
    return out;
}

Spinor so_spin_act(const GammaRep& rep, const LieElement& x, const Spinor& psi) {
    Spinor out(psi.n());
    if (psi.is_zero()) return out;
    const int n = x.so_n();
    if (2 * psi.n() != n) throw std::invalid_argument("spinor/so dimension mismatch");
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            const ExtScalar& m = x.so[static_cast<std::size_t>(p - 1) * n + (q - 1)];
            if (!m.is_zero()) out = out + m * spin_act(rep, p, q, psi);
        }
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.algebra != y.algebra)
        throw std::invalid_argument("bracket requires elements of the same algebra");
    switch (x.algebra) {
        case Algebra::e8: return bracket_e8_core(x, y, Algebra::e8);
        case Algebra::e6: return bracket_e6_core(x, y, Algebra::e6);
        case Algebra::f4: {
            LieElement z = bracket_e6_core(x, y, Algebra::f4);
            if (!f4_constraints_hold(z))
                throw std::logic_error("f4 bracket failed to close in the constrained span");
            return z;
        }
        case Algebra::g2: {
            LieElement z = bracket_e8_core(x, y, Algebra::g2);
            if (!z.plus.is_zero() || !g2_solve(z).has_value())
                throw std::logic_error("g2 bracket failed to close in the 14-dim span");
            return z;
        }
    }
    throw std::invalid_argument("unknown algebra");
}

// ---------------------------------------------------------------------------
// Canonical bases and coordinates
// ---------------------------------------------------------------------------

namespace {

LieElement g2_from_octonion_element(const CliffordElement& x, Algebra tag) {
    LieElement z = LieElement::zero(tag);
    for (const auto& [mask, gamma] : x.terms()) {
        if (gamma.is_zero()) continue;
        Mask m = mask;
        if (__builtin_popcount(m) != 2 || (m >> 8) != 0)
            throw std::invalid_argument("octonion derivation must be grade-2 over Cl(8)");
        int a = __builtin_ctz(m) + 1;
        Mask rest = m & (m - 1);
        int b = __builtin_ctz(rest) + 1;
        // γ·eᵃe^b = 2γ·x^{ab}, shifted onto coordinates 9..16.
        z.add_so(a + 8, b + 8, ExtScalar(2) * gamma);
    }
    return z;
}

std::vector<LieElement> build_basis(Algebra a) {
    std::vector<LieElement> basis;
    switch (a) {
        case Algebra::e8: {
            for (int p = 1; p <= 16; ++p)
                for (int q = p + 1; q <= 16; ++q) basis.push_back(so_generator(a, p, q));
            for (int idx : chiral_indices(8, +1))
                basis.push_back(spinor_plus_element(a, Spinor::basis(8, idx)));
            break;
        }
        case Algebra::e6: {
            for (int p = 1; p <= 10; ++p)
                for (int q = p + 1; q <= 10; ++q) basis.push_back(so_generator(a, p, q));
            for (int idx : chiral_indices(5, +1))
                basis.push_back(spinor_plus_element(a, Spinor::basis(5, idx)));
            for (int idx : chiral_indices(5, -1))
                basis.push_back(spinor_minus_element(Spinor::basis(5, idx)));
            basis.push_back(rho_element());
            break;
        }
        case Algebra::f4: {
            for (int p = 1; p <= 9; ++p)
                for (int q = p + 1; q <= 9; ++q)
                    basis.push_back(as_f4(so_generator(Algebra::e6, p, q)));
            for (int idx : chiral_indices(5, +1)) {
                Spinor xi = Spinor::basis(5, idx);
                LieElement z = spinor_plus_element(Algebra::e6, xi);
                z.minus = f4_partner(xi);
                basis.push_back(as_f4(z));
            }
            break;
        }
        case Algebra::g2: {
            for (const CliffordElement& x : g2_basis())
                basis.push_back(g2_from_octonion_element(x, Algebra::g2));
            break;
        }
    }
    return basis;
}

/// 28 coordinates of the so(8) block 9 ≤ p < q ≤ 16 of an e8-layout element.
std::vector<ExtScalar> so8_block_coords(const LieElement& z) {
    std::vector<ExtScalar> v;
    v.reserve(28);
    for (int p = 9; p <= 16; ++p)
        for (int q = p + 1; q <= 16; ++q) v.push_back(z.so_at(p, q));
    return v;
}

namespace g2_solver {
const ExactMatrix& matrix() {
    static const ExactMatrix m = [] {
        const std::vector<LieElement>& basis = algebra_basis(Algebra::g2);
        ExactMatrix a(28, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::vector<ExtScalar> col = so8_block_coords(basis[j]);
            for (std::size_t r = 0; r < col.size(); ++r) a.at(r, j) = col[r];
        }
        return a;
    }();
    return m;
}
}  // namespace g2_solver

std::optional<std::vector<ExtScalar>> g2_solve(const LieElement& z) {
    if (!z.plus.is_zero() || !z.minus.is_zero() || !z.u1.is_zero()) return std::nullopt;
    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 16; ++q)
            if (p != q && !z.so_at(p, q).is_zero()) return std::nullopt;
    return g2_solver::matrix().solve(so8_block_coords(z));
}

void require_chiral_support(const Spinor& psi, int sign, const char* what) {
    for (std::size_t c = 0; c < psi.size(); ++c)
        if (index_chirality(c) != sign && !psi[c].is_zero())
            throw std::invalid_argument(std::string("spinor has support of the wrong "
                                                    "chirality in the ") +
                                        what + " part");
}

}  // namespace

const std::vector<LieElement>& algebra_basis(Algebra a) {
    static const std::vector<LieElement> g2b = build_basis(Algebra::g2);
    static const std::vector<LieElement> f4b = build_basis(Algebra::f4);
    static const std::vector<LieElement> e6b = build_basis(Algebra::e6);
    static const std::vector<LieElement> e8b = build_basis(Algebra::e8);
    switch (a) {
        case Algebra::g2: return g2b;
        case Algebra::f4: return f4b;
        case Algebra::e6: return e6b;
        case Algebra::e8: return e8b;
    }
    throw std::invalid_argument("unknown algebra");
}

std::vector<ExtScalar> coordinates_of(const LieElement& x) {
    const int n = x.so_n();
    for (int p = 1; p <= n; ++p) {
        if (!x.so[static_cast<std::size_t>(p - 1) * n + (p - 1)].is_zero())
            throw std::invalid_argument("so part has a diagonal entry");
        for (int q = p + 1; q <= n; ++q)
            if (!(x.so_at(p, q) + x.so_at(q, p)).is_zero())
                throw std::invalid_argument("so part is not antisymmetric");
    }
    std::vector<ExtScalar> coords;
    switch (x.algebra) {
        case Algebra::e8: {
            if (!x.u1.is_zero()) throw std::invalid_argument("e8 element with a rho part");
            require_chiral_support(x.plus, +1, "Delta+");
            coords.reserve(248);
            for (int p = 1; p <= 16; ++p)
                for (int q = p + 1; q <= 16; ++q) coords.push_back(x.so_at(p, q));
            for (int idx : chiral_indices(8, +1)) coords.push_back(x.plus[idx]);
            break;
        }
        case Algebra::e6: {
            require_chiral_support(x.plus, +1, "Delta+");
            require_chiral_support(x.minus, -1, "Delta-");
            coords.reserve(78);
            for (int p = 1; p <= 10; ++p)
                for (int q = p + 1; q <= 10; ++q) coords.push_back(x.so_at(p, q));
            for (int idx : chiral_indices(5, +1)) coords.push_back(x.plus[idx]);
            for (int idx : chiral_indices(5, -1)) coords.push_back(x.minus[idx]);
            coords.push_back(x.u1);
            break;
        }
        case Algebra::f4: {
            if (!f4_constraints_hold(x))
                throw std::invalid_argument("element violates the f4 constraints");
            coords.reserve(52);
            for (int p = 1; p <= 9; ++p)
                for (int q = p + 1; q <= 9; ++q) coords.push_back(x.so_at(p, q));
            for (int idx : chiral_indices(5, +1)) coords.push_back(x.plus[idx]);
            break;
        }
        case Algebra::g2: {
            std::optional<std::vector<ExtScalar>> sol = g2_solve(x);
            if (!sol) throw std::invalid_argument("element lies outside the g2 span");
            coords = std::move(*sol);
            break;
        }
    }
    return coords;
}

LieElement element_from_coordinates(Algebra a, const std::vector<ExtScalar>& coords) {
    if (static_cast<int>(coords.size()) != algebra_dim(a))
        throw std::invalid_argument("coordinate count mismatch");
    LieElement z = LieElement::zero(a);
    std::size_t k = 0;
    switch (a) {
        case Algebra::e8: {
            for (int p = 1; p <= 16; ++p)
                for (int q = p + 1; q <= 16; ++q) z.add_so(p, q, coords[k++]);
            for (int idx : chiral_indices(8, +1)) z.plus[idx] = coords[k++];
            break;
        }
        case Algebra::e6: {
            for (int p = 1; p <= 10; ++p)
                for (int q = p + 1; q <= 10; ++q) z.add_so(p, q, coords[k++]);
            for (int idx : chiral_indices(5, +1)) z.plus[idx] = coords[k++];
            for (int idx : chiral_indices(5, -1)) z.minus[idx] = coords[k++];
            z.u1 = coords[k++];
            break;
        }
        case Algebra::f4: {
            for (int p = 1; p <= 9; ++p)
                for (int q = p + 1; q <= 9; ++q) z.add_so(p, q, coords[k++]);
            for (int idx : chiral_indices(5, +1)) z.plus[idx] = coords[k++];
            z.minus = f4_partner(z.plus);
            break;
        }
        case Algebra::g2: {
            const std::vector<LieElement>& basis = algebra_basis(a);
            for (std::size_t j = 0; j < basis.size(); ++j) z = z + coords[j] * basis[j];
            break;
        }
    }
    return z;
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, ExtScalar>> sparsify(const std::vector<ExtScalar>& coords) {
    std::vector<std::pair<int, ExtScalar>> out;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) out.emplace_back(static_cast<int>(k), coords[k]);
    return out;
}

/// Specialised spinor×spinor brackets of e8: [b_c, b_d] has so part
/// M[p][q] = −½ (b_c e^{pq} b_d), evaluated by O(1) signed-perm walks.
void fill_e8_spinor_pairs(StructureConstants& sc) {
    const GammaRep& R = rep16();
    const SignedPermMatrix ct = R.charge_conj().transpose();
    const std::vector<int> sp = chiral_indices(8, +1);
    const int dim = sc.dim;
    for (std::size_t a = 0; a < sp.size(); ++a) {
        const int i = 120 + static_cast<int>(a);
        const int c = sp[a];
        const std::uint32_t widx = ct.row_of(c);
        const unsigned wph = ct.phase_of(c);
        for (std::size_t b = a + 1; b < sp.size(); ++b) {
            const int j = 120 + static_cast<int>(b);
            const int d = sp[b];
            std::vector<std::pair<int, ExtScalar>> entries;
            for (int p = 1; p <= 16; ++p) {
                const SignedPermMatrix& gp = R.generator(p);
                for (int q = p + 1; q <= 16; ++q) {
                    const SignedPermMatrix& gq = R.generator(q);
                    const std::uint32_t d1 = gq.row_of(d);
                    const std::uint32_t d2 = gp.row_of(d1);
                    if (d2 != widx) continue;
                    const unsigned ph = wph + gq.phase_of(d) + gp.phase_of(d1);
                    ExtScalar coeff = times_i_pow(-ExtScalar::half(), ph);
                    entries.emplace_back(so_pair_index(16, p, q), coeff);
                }
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            sc.table[static_cast<std::size_t>(i) * dim + j] = entries;
            for (auto& e : entries) e.second = -e.second;
            sc.table[static_cast<std::size_t>(j) * dim + i] = std::move(entries);
        }
    }
}

}  // namespace

StructureConstants build_structure_constants(Algebra a) {
    const std::vector<LieElement>& basis = algebra_basis(a);
    StructureConstants sc;
    sc.algebra = a;
    sc.dim = algebra_dim(a);
    sc.table.assign(static_cast<std::size_t>(sc.dim) * sc.dim, {});
    const int spinor_start = a == Algebra::e8 ? 120 : sc.dim;  // e8 fast-path split
    for (int i = 0; i < sc.dim; ++i) {
        for (int j = i + 1; j < sc.dim; ++j) {
            if (a == Algebra::e8 && i >= spinor_start) continue;  // handled below
            std::vector<std::pair<int, ExtScalar>> entries =
                sparsify(coordinates_of(bracket(basis[i], basis[j])));
            sc.table[static_cast<std::size_t>(i) * sc.dim + j] = entries;
            for (auto& e : entries) e.second = -e.second;
            sc.table[static_cast<std::size_t>(j) * sc.dim + i] = std::move(entries);
        }
    }
    if (a == Algebra::e8) fill_e8_spinor_pairs(sc);
    return sc;
}

const StructureConstants& structure_constants(Algebra a) {
    static const StructureConstants g2t = build_structure_constants(Algebra::g2);
    static const StructureConstants f4t = build_structure_constants(Algebra::f4);
    static const StructureConstants e6t = build_structure_constants(Algebra::e6);
    static const StructureConstants e8t = build_structure_constants(Algebra::e8);
    switch (a) {
        case Algebra::g2: return g2t;
        case Algebra::f4: return f4t;
        case Algebra::e6: return e6t;
        case Algebra::e8: return e8t;
    }
    throw std::invalid_argument("unknown algebra");
}

Json structure_constants_json(const StructureConstants& sc) {
    Json j;
    j["algebra"] = algebra_name(sc.algebra);
    j["dim"] = sc.dim;
    Json brackets = Json::array();
    for (int i = 0; i < sc.dim; ++i)
        for (int jj = i + 1; jj < sc.dim; ++jj) {
            const auto& entries = sc.entry(i, jj);
            if (entries.empty()) continue;
            Json coeffs = Json::array();
            for (const auto& [k, c] : entries) coeffs.push_back(Json::array({k, Json(c)}));
            brackets.push_back(Json{{"i", i}, {"j", jj}, {"coeffs", std::move(coeffs)}});
        }
    j["brackets"] = std::move(brackets);
    return j;
}

// ---------------------------------------------------------------------------
// Jacobi sweeps
// ---------------------------------------------------------------------------

namespace {

struct ScaledEntry {
    int k;
    long long re, im;
};

struct ScaledTable {
    bool usable = false;
    int dim = 0;
    long long scale = 1;
    std::vector<std::vector<ScaledEntry>> t;
};

ScaledTable build_scaled(const StructureConstants& sc) {
    ScaledTable st;
    st.dim = sc.dim;
    long long lcm = 1;
    for (const auto& list : sc.table)
        for (const auto& [k, c] : list) {
            if (!c.is_gaussian()) return st;  // √2 present: fall back to exact scalars
            lcm = std::lcm(lcm, c.a_re.den());
            lcm = std::lcm(lcm, c.a_im.den());
            if (lcm > 1'000'000) return st;
        }
    st.scale = lcm;
    st.t.resize(sc.table.size());
    for (std::size_t idx = 0; idx < sc.table.size(); ++idx) {
        auto& out = st.t[idx];
        out.reserve(sc.table[idx].size());
        for (const auto& [k, c] : sc.table[idx])
            out.push_back(ScaledEntry{k, c.a_re.num() * (lcm / c.a_re.den()),
                                      c.a_im.num() * (lcm / c.a_im.den())});
    }
    st.usable = true;
    return st;
}

/// One worker's share of the exhaustive sweep: i ≡ worker (mod stride).
void jacobi_worker(const ScaledTable& st, int worker, int stride, std::atomic<bool>& failed,
                   long long& checked, std::array<int, 3>& witness) {
    const int dim = st.dim;
    std::vector<std::pair<long long, long long>> acc(
        static_cast<std::size_t>(dim), {0, 0});
    std::vector<int> touched;
    touched.reserve(64);
    auto compose = [&](const std::vector<ScaledEntry>& list, int k, long long sign) {
        for (const ScaledEntry& e : list) {
            const auto& inner = st.t[static_cast<std::size_t>(e.k) * dim + k];
            for (const ScaledEntry& f : inner) {
                auto& cell = acc[static_cast<std::size_t>(f.k)];
                if (cell.first == 0 && cell.second == 0) touched.push_back(f.k);
                // (e.re + i e.im)(f.re + i f.im), scaled by sign
                cell.first += sign * (e.re * f.re - e.im * f.im);
                cell.second += sign * (e.re * f.im + e.im * f.re);
            }
        }
    };
    for (int i = worker; i < dim; i += stride) {
        if (failed.load(std::memory_order_relaxed)) return;
        for (int j = i + 1; j < dim; ++j) {
            const auto& tij = st.t[static_cast<std::size_t>(i) * dim + j];
            for (int k = j + 1; k < dim; ++k) {
                compose(tij, k, +1);
                compose(st.t[static_cast<std::size_t>(j) * dim + k], i, +1);
                compose(st.t[static_cast<std::size_t>(i) * dim + k], j, -1);
                bool ok = true;
                for (int idx : touched) {
                    auto& cell = acc[static_cast<std::size_t>(idx)];
                    if (cell.first != 0 || cell.second != 0) ok = false;
                    cell = {0, 0};
                }
                touched.clear();
                ++checked;
                if (!ok) {
                    witness = {i, j, k};
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    }
}

/// Exact-scalar fallback (same sweep, ExtScalar accumulation).
JacobiReport jacobi_exhaustive_exact(const StructureConstants& sc) {
    JacobiReport rep;
    rep.algebra = sc.algebra;
    rep.exhaustive = true;
    const int dim = sc.dim;
    std::vector<ExtScalar> acc(static_cast<std::size_t>(dim), ExtScalar::zero());
    std::vector<int> touched;
    auto compose = [&](const std::vector<std::pair<int, ExtScalar>>& list, int k, int sign) {
        for (const auto& [m, c] : list)
            for (const auto& [l, d] : sc.entry(m, k)) {
                if (acc[l].is_zero()) touched.push_back(l);
                ExtScalar v = c * d;
                acc[l] += sign > 0 ? v : -v;
            }
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                compose(sc.entry(i, j), k, +1);
                compose(sc.entry(j, k), i, +1);
                compose(sc.entry(i, k), j, -1);
                bool ok = true;
                for (int idx : touched) {
                    if (!acc[idx].is_zero()) ok = false;
                    acc[idx] = ExtScalar::zero();
                }
                touched.clear();
                ++rep.checked;
                if (!ok) {
                    rep.ok = false;
                    rep.witness = {i, j, k};
                    return rep;
                }
            }
    rep.ok = true;
    return rep;
}

}  // namespace

JacobiReport jacobi_check(Algebra a, bool exhaustive, long long budget, std::uint64_t seed,
                          int threads) {
    JacobiReport rep;
    rep.algebra = a;
    rep.exhaustive = exhaustive;
    if (!exhaustive) {
        Rng rng(seed);
        const int dim = algebra_dim(a);
        auto random_element = [&] {
            std::vector<ExtScalar> coords(static_cast<std::size_t>(dim));
            for (ExtScalar& c : coords) c = rng.next_scalar();
            return element_from_coordinates(a, coords);
        };
        for (long long t = 0; t < budget; ++t) {
            LieElement x = random_element(), y = random_element(), z = random_element();
            LieElement res = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                             bracket(bracket(z, x), y);
            ++rep.checked;
            if (!res.is_zero()) {
                rep.ok = false;
                rep.witness = {static_cast<int>(t), -1, -1};
                return rep;
            }
        }
        rep.ok = true;
        return rep;
    }

    const StructureConstants& sc = structure_constants(a);
    ScaledTable st = build_scaled(sc);
    if (!st.usable) return jacobi_exhaustive_exact(sc);

    int workers = std::max(1, threads);
    workers = std::min<int>(workers, 64);
    std::atomic<bool> failed{false};
    std::vector<long long> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::array<int, 3>> wit(static_cast<std::size_t>(workers), {-1, -1, -1});
    if (workers == 1) {
        jacobi_worker(st, 0, 1, failed, counts[0], wit[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(jacobi_worker, std::cref(st), w, workers, std::ref(failed),
                              std::ref(counts[w]), std::ref(wit[w]));
        for (auto& th : pool) th.join();
    }
    for (long long c : counts) rep.checked += c;
    rep.ok = !failed.load();
    if (!rep.ok) {
        std::array<int, 3> best{-1, -1, -1};
        for (const auto& w : wit)
            if (w[0] >= 0 && (best[0] < 0 || w < best)) best = w;
        rep.witness = best;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Centralizers and distinguished subalgebras
// ---------------------------------------------------------------------------

std::vector<LieElement> centralizer(const std::vector<LieElement>& sub, Algebra ambient) {
    std::vector<LieElement> cur = algebra_basis(ambient);
    const int n = algebra_dim(ambient);
    for (const LieElement& x : sub) {
        if (x.algebra != ambient)
            throw std::invalid_argument("centralizer: sub element not in the ambient algebra");
        if (cur.empty()) break;
        ExactMatrix a(static_cast<std::size_t>(n), cur.size());
        for (std::size_t j = 0; j < cur.size(); ++j) {
            std::vector<ExtScalar> co = coordinates_of(bracket(x, cur[j]));
            for (int r = 0; r < n; ++r) a.at(static_cast<std::size_t>(r), j) = co[r];
        }
        std::vector<std::vector<ExtScalar>> ker = a.kernel();
        std::vector<LieElement> next;
        next.reserve(ker.size());
        for (const auto& kv : ker) {
            LieElement z = LieElement::zero(ambient);
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (!kv[j].is_zero()) z = z + kv[j] * cur[j];
            next.push_back(std::move(z));
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<LieElement> su3_basis_e8() {
    // (eᵃ+ieᵃ⁺¹)∧(e^b−ie^{b+1}) = x^{ab} + x^{a+1,b+1} − i x^{a,b+1} + i x^{a+1,b}
    const ExtScalar i = ExtScalar::i();
    auto g = [&](int a, int b) {
        LieElement z = LieElement::zero(Algebra::e8);
        z.add_so(a, b, ExtScalar::one());
        z.add_so(a + 1, b + 1, ExtScalar::one());
        z.add_so(a, b + 1, -i);
        z.add_so(a + 1, b, i);
        return z;
    };
    std::vector<LieElement> basis;
    const int pairs[3] = {11, 13, 15};
    for (int a : pairs)
        for (int b : pairs)
            if (a != b) basis.push_back(g(a, b));
    // Diagonal (eᵃ+ieᵃ⁺¹)∧(eᵃ−ieᵃ⁺¹) = −2i x^{a,a+1}; keep the traceless diffs.
    auto diag = [&](int a) {
        LieElement z = LieElement::zero(Algebra::e8);
        z.add_so(a, a + 1, ExtScalar(-2) * i);
        return z;
    };
    basis.push_back(diag(11) - diag(13));
    basis.push_back(diag(13) - diag(15));
    return basis;
}

std::vector<LieElement> g2_basis_e8() {
    std::vector<LieElement> basis;
    for (const CliffordElement& x : g2_basis())
        basis.push_back(g2_from_octonion_element(x, Algebra::e8));
    return basis;
}

LieElement embed_e6(const LieElement& x) {
    if (x.algebra != Algebra::e6 && x.algebra != Algebra::f4)
        throw std::invalid_argument("embed_e6 expects an e6-layout element");
    LieElement z = LieElement::zero(Algebra::e8);
    for (int p = 1; p <= 10; ++p)
        for (int q = p + 1; q <= 10; ++q) {
            ExtScalar c = x.so_at(p, q);
            if (!c.is_zero()) z.add_so(p, q, c);
        }
    if (!x.u1.is_zero()) {
        z.add_so(11, 12, ExtScalar(2) * x.u1);
        z.add_so(13, 14, ExtScalar(2) * x.u1);
        z.add_so(15, 16, ExtScalar(2) * x.u1);
    }
    // ξ ⊗ |+++⟩ and η ⊗ |−−−⟩: the Cl(6) factor holds the three low bits.
    for (std::size_t c = 0; c < x.plus.size(); ++c)
        if (!x.plus[c].is_zero()) z.plus[(c << 3) | 0] = x.plus[c];
    for (std::size_t c = 0; c < x.minus.size(); ++c)
        if (!x.minus[c].is_zero()) z.plus[(c << 3) | 7] = x.minus[c];
    return z;
}

// ---------------------------------------------------------------------------
// Killing form (e6)
// ---------------------------------------------------------------------------

ExtScalar killing_e6(const LieElement& x, const LieElement& y) {
    if (x.algebra != Algebra::e6 || y.algebra != Algebra::e6)
        throw std::invalid_argument("killing_e6 is defined for e6 elements");
    ExtScalar so_trace;
    for (int p = 0; p < 10; ++p)
        for (int q = 0; q < 10; ++q) {
            const ExtScalar& a = x.so[static_cast<std::size_t>(p) * 10 + q];
            if (a.is_zero()) continue;
            so_trace += a.conj() * y.so[static_cast<std::size_t>(q) * 10 + p];
        }
    // −⅛ trace over the 32-dim spinor representation (x acting as ½e^{ij})
    // = −½ trace of the 10×10 vector matrices: Tr_Δ[x∘y∘] = 4·Tr_vec[xy].
    ExtScalar out = -ExtScalar::half() * so_trace;
    out += pair_hermitian(x.plus, y.plus);
    out += pair_hermitian(x.minus, y.minus);
    out += ExtScalar(12) * x.u1.conj() * y.u1;
    return out;
}

std::vector<LieElement> compact_e6_basis() {
    std::vector<LieElement> basis;
    for (int p = 1; p <= 10; ++p)
        for (int q = p + 1; q <= 10; ++q) basis.push_back(so_generator(Algebra::e6, p, q));
    basis.push_back(rho_element());
    for (int idx : chiral_indices(5, +1)) {
        for (const ExtScalar& c : {ExtScalar::one(), ExtScalar::i()}) {
            Spinor xi = Spinor::basis(5, idx, c);
            LieElement z = spinor_plus_element(Algebra::e6, xi);
            z.minus = charge_conjugate(rep10(), xi);  // η = C ξ*
            basis.push_back(z);
        }
    }
    return basis;
}

bool is_positive_real(const ExtScalar& x) {
    if (!x.is_real()) return false;
    const Rational& u = x.a_re;
    const Rational& v = x.b_re;
    if (u.sign() >= 0 && v.sign() >= 0) return u.sign() > 0 || v.sign() > 0;
    if (u.sign() <= 0 && v.sign() <= 0) return false;
    Rational g = u * u - Rational(2) * v * v;  // sign of (u−v√2)(u+v√2)
    return u.sign() > 0 ? g.sign() > 0 : g.sign() < 0;
}

}  // namespace atlas
