#include "atlas/albert.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace atlas {
namespace {

const GammaRep& rep10() {
    static const GammaRep rep(5);
    return rep;
}

ExtScalar sqrt2() { return ExtScalar(Rational(0), Rational(0), Rational(1), Rational(0)); }

/// √2·i — the coefficient carried by the 10th vector slot of the singlet.
ExtScalar sqrt2_i() { return ExtScalar(Rational(0), Rational(0), Rational(0), Rational(1)); }

Json scalar_array_json(const std::vector<ExtScalar>& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(c);
    return arr;
}

std::vector<ExtScalar> read_scalar_array(const Json& j, const char* key, std::size_t n) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != n)
        throw std::invalid_argument(std::string("expected a length-") + std::to_string(n) +
                                    " array for key '" + key + "'");
    std::vector<ExtScalar> out;
    out.reserve(n);
    for (const auto& e : j.at(key)) out.push_back(e.get<ExtScalar>());
    return out;
}

Json octonion_json(const Octonion& x) {
    Json arr = Json::array();
    for (int a = 0; a < 8; ++a) arr.push_back(x[a]);
    return arr;
}

Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8)
        throw std::invalid_argument("expected a length-8 array for an octonion entry");
    Octonion x;
    for (int a = 0; a < 8; ++a) x[a] = j.at(static_cast<std::size_t>(a)).get<ExtScalar>();
    return x;
}

/// Shared x-extraction of the two Veronese dictionaries:
/// x⃗ = (𝚞/√2, bar(η)/√2, bar(ξ)/√2) as octonions.
std::array<Octonion, 3> veronese_x(const Vector27& p) {
    const auto split = split_spinor(p.psi);
    const ExtScalar c = ExtScalar::inv_sqrt2();
    std::array<Octonion, 3> x;
    x[0] = c * vector_octonion(p);
    x[1] = c * triality().inv_s(split.second).bar();
    x[2] = c * triality().inv_t(split.first).bar();
    return x;
}

/// Shared inverse: rebuild (𝚞, ψ) from x⃗ and install (r, t, s).
Vector27 point_from_x(const std::array<Octonion, 3>& x, const ExtScalar& r, const ExtScalar& t,
                      const ExtScalar& s) {
    const ExtScalar rt2 = sqrt2();
    Vector27 p;
    for (int a = 0; a < 8; ++a) p.v[static_cast<std::size_t>(a)] = rt2 * x[0][a];
    p.v[8] = ExtScalar::inv_sqrt2() * r;
    p.v[9] = ExtScalar::i() * ExtScalar::inv_sqrt2() * t;
    const Spinor eta = triality().map_s((rt2 * x[1]).bar());
    const Spinor xi = triality().map_t((rt2 * x[2]).bar());
    p.psi = join_spinor(xi, eta);
    p.s = s;
    return p;
}

}  // namespace

// ───────────────────────── split coordinates ─────────────────────────

ExtScalar coord_r(const Vector27& p) { return sqrt2() * p.v[8]; }

ExtScalar coord_t(const Vector27& p) { return -ExtScalar::i() * sqrt2() * p.v[9]; }

Octonion vector_octonion(const Vector27& p) {
    Octonion u;
    for (int a = 0; a < 8; ++a) u[a] = p.v[static_cast<std::size_t>(a)];
    return u;
}

// ─────────────────── distinguished vectors ───────────────────

Vector27 f4_singlet_raw() {
    Vector27 w;
    w.v[9] = sqrt2_i();
    w.s = ExtScalar::one();
    return w;
}

Sqrt3Vector27 f4_singlet() {
    const ExtScalar third(Rational(1, 3));
    return Sqrt3Vector27(Vector27::zero(), third * f4_singlet_raw());
}

Vector27 f4_base_point() {
    Vector27 b;
    b.v[9] = -sqrt2_i();
    return b;
}

// ───────────────── σ-isomorphism and invariant pairing ─────────────────

Vector27 sigma_iso(const Covector27& f) {
    Vector27 p;
    p.v = f.u;
    p.v[9] = -f.u[9];
    p.psi = ExtScalar::i() * mask_act(rep10(), Mask{1u << 9}, f.phi);
    p.s = f.t;
    return p;
}

Covector27 sigma_iso_inverse(const Vector27& p) {
    Covector27 f;
    f.u = p.v;
    f.u[9] = -p.v[9];
    f.phi = -ExtScalar::i() * mask_act(rep10(), Mask{1u << 9}, p.psi);
    f.t = p.s;
    return f;
}

ExtScalar f4_pairing(const Vector27& p1, const Vector27& p2) {
    return pairing27(sigma_iso_inverse(p2), p1);
}

Sqrt3Scalar f4_pairing(const Sqrt3Vector27& p1, const Sqrt3Vector27& p2) {
    const ExtScalar three(3);
    return Sqrt3Scalar(
        f4_pairing(p1.plain, p2.plain) + three * f4_pairing(p1.rt3, p2.rt3),
        f4_pairing(p1.plain, p2.rt3) + f4_pairing(p1.rt3, p2.plain));
}

Vector27 diamond_f4(const Vector27& p1, const Vector27& p2) {
    return sigma_iso(diamond27(p1, p2));
}

// ───────────────────── Hermitian octonion matrices ─────────────────────

bool JordanMatrix::is_zero() const {
    return d1.is_zero() && d2.is_zero() && d3.is_zero() && x12.is_zero() && x23.is_zero() &&
           x13.is_zero();
}

JordanMatrix operator+(const JordanMatrix& a, const JordanMatrix& b) {
    JordanMatrix r;
    r.d1 = a.d1 + b.d1;
    r.d2 = a.d2 + b.d2;
    r.d3 = a.d3 + b.d3;
    r.x12 = a.x12 + b.x12;
    r.x23 = a.x23 + b.x23;
    r.x13 = a.x13 + b.x13;
    return r;
}

JordanMatrix operator-(const JordanMatrix& a, const JordanMatrix& b) {
    return a + (ExtScalar(-1) * b);
}

JordanMatrix operator*(const ExtScalar& c, const JordanMatrix& a) {
    JordanMatrix r;
    r.d1 = c * a.d1;
    r.d2 = c * a.d2;
    r.d3 = c * a.d3;
    r.x12 = c * a.x12;
    r.x23 = c * a.x23;
    r.x13 = c * a.x13;
    return r;
}

JordanMatrix jordan_star(const JordanMatrix& a, const JordanMatrix& b) {
    const ExtScalar half = ExtScalar::half();
    JordanMatrix r;
    r.d1 = a.d1 * b.d1 + dot(a.x12, b.x12) + dot(a.x13, b.x13);
    r.d2 = dot(a.x12, b.x12) + a.d2 * b.d2 + dot(a.x23, b.x23);
    r.d3 = dot(a.x13, b.x13) + dot(a.x23, b.x23) + a.d3 * b.d3;
    r.x12 = half * ((a.d1 + a.d2) * b.x12 + (b.d1 + b.d2) * a.x12 +
                    star(a.x13, b.x23.bar()) + star(b.x13, a.x23.bar()));
    r.x13 = half * ((a.d1 + a.d3) * b.x13 + (b.d1 + b.d3) * a.x13 + star(a.x12, b.x23) +
                    star(b.x12, a.x23));
    r.x23 = half * ((a.d2 + a.d3) * b.x23 + (b.d2 + b.d3) * a.x23 +
                    star(a.x12.bar(), b.x13) + star(b.x12.bar(), a.x13));
    return r;
}

ExtScalar jordan_matrix_det(const JordanMatrix& m) {
    return m.d1 * m.d2 * m.d3 - m.d1 * dot(m.x23, m.x23) - m.d2 * dot(m.x13, m.x13) -
           m.d3 * dot(m.x12, m.x12) + ExtScalar(2) * dot(m.x12.bar(), star(m.x23, m.x13.bar()));
}

void to_json(Json& j, const JordanMatrix& m) {
    j = Json{{"diag", scalar_array_json({m.d1, m.d2, m.d3})},
             {"oct", Json::array({octonion_json(m.x12), octonion_json(m.x23),
                                  octonion_json(m.x13)})}};
}

void from_json(const Json& j, JordanMatrix& m) {
    const std::vector<ExtScalar> diag = read_scalar_array(j, "diag", 3);
    if (!j.contains("oct") || !j.at("oct").is_array() || j.at("oct").size() != 3)
        throw std::invalid_argument("expected a length-3 array for key 'oct'");
    m.d1 = diag[0];
    m.d2 = diag[1];
    m.d3 = diag[2];
    m.x12 = octonion_from_json(j.at("oct").at(0));
    m.x23 = octonion_from_json(j.at("oct").at(1));
    m.x13 = octonion_from_json(j.at("oct").at(2));
}

// ───────────────────── the two Jordan arrangements ─────────────────────

namespace {

/// Shared off-diagonal block (ξ/√2, η/√2, 𝚞/√2) of both arrangements.
void install_offdiag(JordanMatrix& m, const Vector27& p) {
    const auto split = split_spinor(p.psi);
    const ExtScalar c = ExtScalar::inv_sqrt2();
    m.x12 = c * triality().inv_t(split.first);
    m.x23 = c * triality().inv_s(split.second);
    m.x13 = c * vector_octonion(p);
}

}  // namespace

JordanMatrix j_map(const Vector27& p) {
    const ExtScalar half = ExtScalar::half();
    const ExtScalar r = coord_r(p);
    const ExtScalar t = coord_t(p);
    JordanMatrix m;
    m.d1 = half * (r - p.s);
    m.d2 = half * (p.s - t);
    m.d3 = -half * (r + p.s);
    install_offdiag(m, p);
    return m;
}

JordanMatrix j_map_cone(const Vector27& p) {
    const ExtScalar half = ExtScalar::half();
    const ExtScalar r = coord_r(p);
    const ExtScalar t = coord_t(p);
    JordanMatrix m;
    m.d1 = half * (r + t);
    m.d2 = p.s;
    m.d3 = -half * (r - t);
    install_offdiag(m, p);
    return m;
}

ExtScalar jordan_det(const Vector27& p) {
    return ExtScalar(Rational(-1, 6)) * d_cubic(p, p, p);
}

JordanMatrix f4_orbit_project(const Vector27& p) {
    if (!on_cone(p)) throw std::invalid_argument("f4_orbit_project: point is not on the cone");
    const ExtScalar tau = p.s + coord_t(p);
    if (tau.is_zero())
        throw std::domain_error(
            "f4_orbit_project: point lies on the stratum at infinity (s + t = 0)");
    return tau.inverse() * j_map_cone(p);
}

// ───────────────────────── the real form ─────────────────────────

Spinor reality_involution(const Spinor& psi) {
    return ExtScalar::i() * mask_act(rep10(), Mask{1u << 9}, charge_conjugate(rep10(), psi));
}

bool reality_check(const Vector27& p) {
    for (std::size_t i = 0; i < 9; ++i)
        if (!p.v[i].is_real()) return false;
    if (!coord_t(p).is_real() || !p.s.is_real()) return false;
    return reality_involution(p.psi) == p.psi;
}

RealForm26 RealForm26::from(const Vector27& p) {
    if (!reality_check(p))
        throw std::invalid_argument("RealForm26: the point violates the reality conditions");
    return RealForm26{p};
}

// ─────────────────── Veronese vectors and charts ───────────────────

bool veronese_check(const VeroneseVector& vv) {
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        if (!(star(vv.x[i], vv.x[j]) == vv.lam[k] * vv.x[k].bar())) return false;
        if (!(dot(vv.x[i], vv.x[i]) == vv.lam[j] * vv.lam[k])) return false;
    }
    return true;
}

VeroneseVector veronese_from_cone(const Vector27& p) {
    const ExtScalar half = ExtScalar::half();
    const ExtScalar r = coord_r(p);
    const ExtScalar t = coord_t(p);
    VeroneseVector vv;
    vv.x = veronese_x(p);
    vv.lam = {p.s, half * (t + r), half * (t - r)};
    return vv;
}

Vector27 point_from_veronese(const VeroneseVector& vv) {
    const ExtScalar r = vv.lam[1] - vv.lam[2];
    const ExtScalar t = vv.lam[1] + vv.lam[2];
    return point_from_x(vv.x, r, t, vv.lam[0]);
}

VeroneseVector veronese_from_op2(const Vector27& p) {
    const ExtScalar half = ExtScalar::half();
    const ExtScalar r = coord_r(p);
    VeroneseVector vv;
    vv.x = veronese_x(p);
    vv.lam = {p.s + ExtScalar::one(), half * (r - p.s), -half * (r + p.s)};
    return vv;
}

Vector27 point_from_veronese_op2(const VeroneseVector& vv) {
    if (!(vv.lam[0] + vv.lam[1] + vv.lam[2] == ExtScalar::one()))
        throw std::invalid_argument(
            "point_from_veronese_op2: the projective-plane dictionary requires the unit "
            "normalization (the three scalar coordinates must sum to 1)");
    const ExtScalar s = vv.lam[0] - ExtScalar::one();
    const ExtScalar r = vv.lam[1] - vv.lam[2];
    const ExtScalar t = ExtScalar(-2) - s;
    return point_from_x(vv.x, r, t, s);
}

VeroneseVector veronese_from_octonion_triple(const std::array<Octonion, 3>& z) {
    VeroneseVector vv;
    for (int i = 0; i < 3; ++i) {
        vv.x[static_cast<std::size_t>(i)] = star(z[(i + 1) % 3], z[(i + 2) % 3].bar());
        vv.lam[static_cast<std::size_t>(i)] = dot(z[i], z[i]);
    }
    return vv;
}

OctonionChart projective_chart(int i, const VeroneseVector& vv) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("projective_chart: the chart index must be 1, 2, or 3");
    const ExtScalar& lam = vv.lam[static_cast<std::size_t>(i - 1)];
    if (lam.is_zero())
        throw std::domain_error(
            "projective_chart: the chart's scalar coordinate vanishes at this point");
    const ExtScalar inv = lam.inverse();
    OctonionChart c;
    c.a = inv * vv.x[static_cast<std::size_t>(i % 3)];
    c.b = inv * vv.x[static_cast<std::size_t>((i + 1) % 3)];
    return c;
}

OctonionChart projective_transition(const OctonionChart& c) {
    OctonionChart next;
    next.a = bar_inverse(c.b.bar());
    next.b = star(bar_inverse(c.b), c.a.bar());
    return next;
}

}  // namespace atlas
