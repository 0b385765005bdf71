/// @file rep27.cpp
/// Block-formula implementation of the 27 and 27* of e6 (see rep27.hpp for
/// the conventions).  Everything is exact; the only nontrivial numerics are
/// charge-conjugation bilinears delegated to the Clifford layer.

#include "atlas/rep27.hpp"

#include <cstddef>
#include <stdexcept>

namespace atlas {

namespace {

const GammaRep& rep10() {
    static const GammaRep rep(5);
    return rep;
}

/// Ascending spinor indices of the requested chirality inside Spinor(5).
std::vector<std::size_t> chirality_indices(int sign) {
    std::vector<std::size_t> out;
    out.reserve(16);
    for (std::size_t idx = 0; idx < 32; ++idx)
        if (index_chirality(idx) == sign) out.push_back(idx);
    return out;
}

const std::vector<std::size_t>& plus_indices() {
    static const std::vector<std::size_t> idx = chirality_indices(+1);
    return idx;
}

const std::vector<std::size_t>& minus_indices() {
    static const std::vector<std::size_t> idx = chirality_indices(-1);
    return idx;
}

ExtScalar dot10(const std::vector<ExtScalar>& a, const std::vector<ExtScalar>& b) {
    ExtScalar out = ExtScalar::zero();
    for (std::size_t k = 0; k < 10; ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) out += a[k] * b[k];
    return out;
}

/// (α e^g β) for generator g ∈ 1..10, i.e. αᵀC₁₀e^gβ.
ExtScalar grade1_pair(const Spinor& alpha, int g, const Spinor& beta) {
    return pair_bilinear(rep10(), alpha, Blade{Mask(1) << (g - 1)}, beta);
}

void require_e6(const LieElement& x, const char* what) {
    if (x.algebra != Algebra::e6)
        throw std::invalid_argument(std::string(what) + " requires an e6 element");
}

/// Single cyclic term of the cubic: (v_a·v_c)s_b − (1/√2)(ψ_a v_c·e ψ_b).
ExtScalar cubic_term(const std::vector<ExtScalar>& va, const Spinor& psia,
                     const ExtScalar& sb, const Spinor& psib,
                     const std::vector<ExtScalar>& vc) {
    ExtScalar out = dot10(va, vc) * sb;
    if (!psia.is_zero() && !psib.is_zero())
        out -= ExtScalar::inv_sqrt2() *
               pair_bilinear(rep10(), psia, vector_act(rep10(), vc, psib));
    return out;
}

std::vector<ExtScalar> read_scalar_array(const Json& j, const char* key, std::size_t n) {
    const Json& arr = j.at(key);
    if (!arr.is_array() || arr.size() != n)
        throw std::invalid_argument(std::string("expected a length-") + std::to_string(n) +
                                    " array for key '" + key + "'");
    std::vector<ExtScalar> out;
    out.reserve(n);
    for (const Json& e : arr) out.push_back(e.get<ExtScalar>());
    return out;
}

}  // namespace

bool Vector27::is_zero() const {
    for (const ExtScalar& c : v)
        if (!c.is_zero()) return false;
    return psi.is_zero() && s.is_zero();
}

Vector27 operator+(const Vector27& a, const Vector27& b) {
    Vector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.v[k] = a.v[k] + b.v[k];
    out.psi = a.psi + b.psi;
    out.s = a.s + b.s;
    return out;
}

Vector27 operator-(const Vector27& a, const Vector27& b) {
    Vector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.v[k] = a.v[k] - b.v[k];
    out.psi = a.psi - b.psi;
    out.s = a.s - b.s;
    return out;
}

Vector27 operator*(const ExtScalar& c, const Vector27& a) {
    Vector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.v[k] = c * a.v[k];
    out.psi = c * a.psi;
    out.s = c * a.s;
    return out;
}

bool operator==(const Vector27& a, const Vector27& b) {
    return a.v == b.v && a.psi == b.psi && a.s == b.s;
}

bool Covector27::is_zero() const {
    for (const ExtScalar& c : u)
        if (!c.is_zero()) return false;
    return phi.is_zero() && t.is_zero();
}

Covector27 operator+(const Covector27& a, const Covector27& b) {
    Covector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.u[k] = a.u[k] + b.u[k];
    out.phi = a.phi + b.phi;
    out.t = a.t + b.t;
    return out;
}

Covector27 operator-(const Covector27& a, const Covector27& b) {
    Covector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.u[k] = a.u[k] - b.u[k];
    out.phi = a.phi - b.phi;
    out.t = a.t - b.t;
    return out;
}

Covector27 operator*(const ExtScalar& c, const Covector27& a) {
    Covector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.u[k] = c * a.u[k];
    out.phi = c * a.phi;
    out.t = c * a.t;
    return out;
}

bool operator==(const Covector27& a, const Covector27& b) {
    return a.u == b.u && a.phi == b.phi && a.t == b.t;
}

Vector27 act27(const LieElement& x, const Vector27& p) {
    require_e6(x, "act27");
    const GammaRep& rep = rep10();
    Vector27 out;

    // x∘Ψ = (xv, ½x_{ij}e^{ij}ψ, 0)
    out.v = so_vector_act(x, p.v);
    out.psi = so_spin_act(rep, x, p.psi);

    // ϱ∘Ψ = (2iv, −iψ, −4is), scaled by the ϱ-coefficient r = x.u1
    if (!x.u1.is_zero()) {
        const ExtScalar ir = times_i_pow(x.u1, 1);
        for (std::size_t k = 0; k < 10; ++k) out.v[k] += ExtScalar(2) * ir * p.v[k];
        out.psi = out.psi - ir * p.psi;
        out.s -= ExtScalar(4) * ir * p.s;
    }

    // ξ∘Ψ = ((1/√2)(ξe^iψ)e_i, sξ, 0)
    if (!x.plus.is_zero()) {
        if (!p.psi.is_zero())
            for (int g = 1; g <= 10; ++g)
                out.v[g - 1] += ExtScalar::inv_sqrt2() * grade1_pair(x.plus, g, p.psi);
        out.psi = out.psi + p.s * x.plus;
    }

    // η∘Ψ = (0, −(1/√2)(v·e)η, −(ηψ))
    if (!x.minus.is_zero()) {
        out.psi = out.psi - ExtScalar::inv_sqrt2() * vector_act(rep, p.v, x.minus);
        if (!p.psi.is_zero()) out.s -= pair_bilinear(rep, x.minus, p.psi);
    }
    return out;
}

Covector27 act27_dual(const LieElement& x, const Covector27& f) {
    require_e6(x, "act27_dual");
    const GammaRep& rep = rep10();
    Covector27 out;

    // x∘Φ = (xu, ½x_{ij}e^{ij}φ, 0)
    out.u = so_vector_act(x, f.u);
    out.phi = so_spin_act(rep, x, f.phi);

    // ϱ∘Φ = (−2iu, iφ, 4it)
    if (!x.u1.is_zero()) {
        const ExtScalar ir = times_i_pow(x.u1, 1);
        for (std::size_t k = 0; k < 10; ++k) out.u[k] -= ExtScalar(2) * ir * f.u[k];
        out.phi = out.phi + ir * f.phi;
        out.t += ExtScalar(4) * ir * f.t;
    }

    // ξ∘Φ = (0, −(1/√2)(u·e)ξ, −(φξ))
    if (!x.plus.is_zero()) {
        out.phi = out.phi - ExtScalar::inv_sqrt2() * vector_act(rep, f.u, x.plus);
        if (!f.phi.is_zero()) out.t -= pair_bilinear(rep, f.phi, x.plus);
    }

    // η∘Φ = ((1/√2)(φe^iη)e_i, tη, 0)
    if (!x.minus.is_zero()) {
        if (!f.phi.is_zero())
            for (int g = 1; g <= 10; ++g)
                out.u[g - 1] += ExtScalar::inv_sqrt2() * grade1_pair(f.phi, g, x.minus);
        out.phi = out.phi + f.t * x.minus;
    }
    return out;
}

ExtScalar pairing27(const Covector27& f, const Vector27& p) {
    ExtScalar out = dot10(f.u, p.v);
    if (!f.phi.is_zero() && !p.psi.is_zero()) out += pair_bilinear(rep10(), f.phi, p.psi);
    out += f.t * p.s;
    return out;
}

ExtScalar d_cubic(const Vector27& p1, const Vector27& p2, const Vector27& p3) {
    return cubic_term(p1.v, p1.psi, p2.s, p2.psi, p3.v) +
           cubic_term(p2.v, p2.psi, p3.s, p3.psi, p1.v) +
           cubic_term(p3.v, p3.psi, p1.s, p1.psi, p2.v);
}

ExtScalar d_cubic_dual(const Covector27& f1, const Covector27& f2, const Covector27& f3) {
    return cubic_term(f1.u, f1.phi, f2.t, f2.phi, f3.u) +
           cubic_term(f2.u, f2.phi, f3.t, f3.phi, f1.u) +
           cubic_term(f3.u, f3.phi, f1.t, f1.phi, f2.u);
}

Covector27 diamond27(const Vector27& p1, const Vector27& p2) {
    const GammaRep& rep = rep10();
    Covector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.u[k] = p1.v[k] * p2.s + p2.v[k] * p1.s;
    if (!p1.psi.is_zero() && !p2.psi.is_zero())
        for (int g = 1; g <= 10; ++g)
            out.u[g - 1] -= ExtScalar::inv_sqrt2() * grade1_pair(p1.psi, g, p2.psi);
    out.phi = ExtScalar(-1) * ExtScalar::inv_sqrt2() *
              (vector_act(rep, p1.v, p2.psi) + vector_act(rep, p2.v, p1.psi));
    out.t = dot10(p1.v, p2.v);
    return out;
}

Vector27 diamond27_dual(const Covector27& f1, const Covector27& f2) {
    const GammaRep& rep = rep10();
    Vector27 out;
    for (std::size_t k = 0; k < 10; ++k) out.v[k] = f1.u[k] * f2.t + f2.u[k] * f1.t;
    if (!f1.phi.is_zero() && !f2.phi.is_zero())
        for (int g = 1; g <= 10; ++g)
            out.v[g - 1] -= ExtScalar::inv_sqrt2() * grade1_pair(f1.phi, g, f2.phi);
    out.psi = ExtScalar(-1) * ExtScalar::inv_sqrt2() *
              (vector_act(rep, f1.u, f2.phi) + vector_act(rep, f2.u, f1.phi));
    out.s = dot10(f1.u, f2.u);
    return out;
}

std::vector<LieElement> stabilizer_psi0() {
    // Real kernel over the compact real form.  (Over the complexified
    // algebra the annihilator of Ψ₀ is the 61-dim so(10) ⊕ Δ⁻; the Spin(10)
    // statement is about the compact group, whose reality condition ties the
    // Δ⁻ part to the Δ⁺ part.)  Each of the 27 coordinates splits into four
    // rational components, so the real kernel is the kernel of an exact
    // 108×78 rational matrix, and its basis vectors have rational entries.
    const std::vector<LieElement> basis = compact_e6_basis();
    const Vector27 p0 = Vector27::psi0();
    const Rational r0(0);
    ExactMatrix m(108, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::vector<ExtScalar> col = vector27_coords(act27(basis[j], p0));
        for (std::size_t r = 0; r < 27; ++r) {
            m.at(4 * r + 0, j) = ExtScalar(col[r].a_re, r0, r0, r0);
            m.at(4 * r + 1, j) = ExtScalar(col[r].a_im, r0, r0, r0);
            m.at(4 * r + 2, j) = ExtScalar(col[r].b_re, r0, r0, r0);
            m.at(4 * r + 3, j) = ExtScalar(col[r].b_im, r0, r0, r0);
        }
    }
    std::vector<LieElement> out;
    for (const std::vector<ExtScalar>& k : m.kernel()) {
        LieElement x = LieElement::zero(Algebra::e6);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!k[j].is_zero()) x = x + k[j] * basis[j];
        out.push_back(x);
    }
    return out;
}

ExactMatrix exp_nilpotent(const LieElement& z) {
    require_e6(z, "exp_nilpotent");
    bool so_zero = true;
    for (const ExtScalar& c : z.so)
        if (!c.is_zero()) {
            so_zero = false;
            break;
        }
    const bool pure_sector = z.plus.is_zero() || z.minus.is_zero();
    if (!so_zero || !z.u1.is_zero() || !pure_sector)
        throw std::invalid_argument(
            "exp_nilpotent requires an e6 element purely in the Δ⁺ or Δ⁻ sector");

    ExactMatrix n(27, 27);
    std::vector<ExtScalar> unit(27, ExtScalar::zero());
    for (std::size_t c = 0; c < 27; ++c) {
        unit[c] = ExtScalar::one();
        const std::vector<ExtScalar> col = vector27_coords(act27(z, vector27_from_coords(unit)));
        unit[c] = ExtScalar::zero();
        for (std::size_t r = 0; r < 27; ++r) n.at(r, c) = col[r];
    }

    const ExactMatrix n2 = n * n;
    if (!(n2 * n).is_zero())
        throw std::logic_error("exp_nilpotent: action has a nonzero cube");

    ExactMatrix out = ExactMatrix::identity(27);
    for (std::size_t r = 0; r < 27; ++r)
        for (std::size_t c = 0; c < 27; ++c)
            out.at(r, c) += n.at(r, c) + ExtScalar::half() * n2.at(r, c);
    return out;
}

std::vector<ExtScalar> vector27_coords(const Vector27& p) {
    std::vector<ExtScalar> out;
    out.reserve(27);
    for (std::size_t k = 0; k < 10; ++k) out.push_back(p.v[k]);
    for (std::size_t idx : plus_indices()) out.push_back(p.psi[idx]);
    out.push_back(p.s);
    return out;
}

Vector27 vector27_from_coords(const std::vector<ExtScalar>& c) {
    if (c.size() != 27) throw std::invalid_argument("vector27_from_coords needs 27 coordinates");
    Vector27 p;
    for (std::size_t k = 0; k < 10; ++k) p.v[k] = c[k];
    for (std::size_t j = 0; j < 16; ++j) p.psi[plus_indices()[j]] = c[10 + j];
    p.s = c[26];
    return p;
}

Vector27 apply27(const ExactMatrix& m, const Vector27& p) {
    if (m.rows() != 27 || m.cols() != 27)
        throw std::invalid_argument("apply27 expects a 27×27 matrix");
    return vector27_from_coords(m.mul_vec(vector27_coords(p)));
}

void to_json(Json& j, const Vector27& p) {
    j = Json::object();
    Json vs = Json::array();
    for (std::size_t k = 0; k < 10; ++k) vs.push_back(p.v[k]);
    Json ps = Json::array();
    for (std::size_t idx : plus_indices()) ps.push_back(p.psi[idx]);
    j["v"] = std::move(vs);
    j["psi"] = std::move(ps);
    j["s"] = p.s;
}

void from_json(const Json& j, Vector27& p) {
    p = Vector27{};
    const std::vector<ExtScalar> vs = read_scalar_array(j, "v", 10);
    for (std::size_t k = 0; k < 10; ++k) p.v[k] = vs[k];
    const std::vector<ExtScalar> ps = read_scalar_array(j, "psi", 16);
    for (std::size_t k = 0; k < 16; ++k) p.psi[plus_indices()[k]] = ps[k];
    p.s = j.at("s").get<ExtScalar>();
}

void to_json(Json& j, const Covector27& f) {
    j = Json::object();
    Json us = Json::array();
    for (std::size_t k = 0; k < 10; ++k) us.push_back(f.u[k]);
    Json ps = Json::array();
    for (std::size_t idx : minus_indices()) ps.push_back(f.phi[idx]);
    j["u"] = std::move(us);
    j["phi"] = std::move(ps);
    j["t"] = f.t;
}

void from_json(const Json& j, Covector27& f) {
    f = Covector27{};
    const std::vector<ExtScalar> us = read_scalar_array(j, "u", 10);
    for (std::size_t k = 0; k < 10; ++k) f.u[k] = us[k];
    const std::vector<ExtScalar> ps = read_scalar_array(j, "phi", 16);
    for (std::size_t k = 0; k < 16; ++k) f.phi[minus_indices()[k]] = ps[k];
    f.t = j.at("t").get<ExtScalar>();
}

}  // namespace atlas
