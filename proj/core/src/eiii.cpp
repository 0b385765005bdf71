#include "atlas/eiii.hpp"

#include <array>
#include <stdexcept>

#include "atlas/liealg.hpp"
#include "atlas/rng.hpp"

namespace atlas {

namespace {

const GammaRep& rep10() {
    static const GammaRep rep(5);
    return rep;
}

const GammaRep& rep8() {
    static const GammaRep rep(4);
    return rep;
}

const ExtScalar& sqrt2() {
    static const ExtScalar s(Rational(0), Rational(0), Rational(1), Rational(0));
    return s;
}

std::vector<std::size_t> chirality_indices(int n, int sign) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < (std::size_t(1) << n); ++c)
        if (index_chirality(c) == sign) out.push_back(c);
    return out;
}

const std::vector<std::size_t>& plus10() {
    static const std::vector<std::size_t> idx = chirality_indices(5, +1);
    return idx;
}

const std::vector<std::size_t>& minus10() {
    static const std::vector<std::size_t> idx = chirality_indices(5, -1);
    return idx;
}

ExtScalar dot(const std::vector<ExtScalar>& a, const std::vector<ExtScalar>& b) {
    ExtScalar acc = ExtScalar::zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

/// Sign of the permutation sorting five distinct indices ascending.
int perm_sign5(const std::array<int, 5>& idx) {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (idx[i] > idx[j]) ++inv;
    return (inv & 1) ? -1 : +1;
}

void require_spinor(const Spinor& psi, int n, const char* what) {
    if (psi.n() != n)
        throw std::invalid_argument(std::string(what) + " requires a " +
                                    std::to_string(std::size_t(1) << n) + "-component spinor");
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

Json scalar_array_json(const std::vector<ExtScalar>& xs) {
    Json arr = Json::array();
    for (const ExtScalar& x : xs) arr.push_back(x);
    return arr;
}

/// Components of psi at the given indices, ascending.
std::vector<ExtScalar> pack_components(const Spinor& psi, const std::vector<std::size_t>& idx) {
    std::vector<ExtScalar> out;
    out.reserve(idx.size());
    for (std::size_t c : idx) out.push_back(psi[c]);
    return out;
}

Spinor unpack_components(int n, const std::vector<ExtScalar>& xs,
                         const std::vector<std::size_t>& idx) {
    Spinor out(n);
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = xs[k];
    return out;
}

const std::vector<std::size_t>& spin8_indices(Side side) {
    static const std::vector<std::size_t> plus = chirality_indices(4, +1);
    static const std::vector<std::size_t> minus = chirality_indices(4, -1);
    return side == Side::plus ? minus : plus;  // plus side carries η ∈ Δ⁻₈
}

}  // namespace

std::pair<Spinor, Spinor> split_spinor(const Spinor& psi) {
    require_spinor(psi, 5, "split_spinor");
    Spinor xi(4), eta(4);
    for (std::size_t c8 = 0; c8 < 16; ++c8) {
        xi[c8] = psi[c8 << 1];
        eta[c8] = psi[(c8 << 1) | 1];
    }
    return {xi, eta};
}

Spinor join_spinor(const Spinor& xi, const Spinor& eta) {
    require_spinor(xi, 4, "join_spinor");
    require_spinor(eta, 4, "join_spinor");
    Spinor psi(5);
    for (std::size_t c8 = 0; c8 < 16; ++c8) {
        psi[c8 << 1] = xi[c8];
        psi[(c8 << 1) | 1] = eta[c8];
    }
    return psi;
}

ExtScalar tplus_of(const Vector27& p) { return sqrt2() * (p.v[8] + ExtScalar::i() * p.v[9]); }

ExtScalar tminus_of(const Vector27& p) { return sqrt2() * (p.v[8] - ExtScalar::i() * p.v[9]); }

std::vector<ExtScalar> plucker_residual(const Vector27& p) {
    std::vector<ExtScalar> r;
    r.reserve(27);
    const ExtScalar two(2);
    for (int i = 0; i < 10; ++i) {
        const ExtScalar bil = pair_bilinear(rep10(), p.psi, Blade{Mask(1) << i}, p.psi);
        r.push_back(two * p.v[static_cast<std::size_t>(i)] * p.s - ExtScalar::inv_sqrt2() * bil);
    }
    const Spinor vpsi = vector_act(rep10(), p.v, p.psi);
    for (std::size_t c : minus10()) r.push_back(vpsi[c]);
    r.push_back(dot(p.v, p.v));
    return r;
}

bool on_cone(const Vector27& p) {
    for (const ExtScalar& x : plucker_residual(p))
        if (!x.is_zero()) return false;
    return true;
}

Vector27 chart_s(const Spinor& psi, const ExtScalar& s) {
    require_spinor(psi, 5, "chart_s");
    if (s.is_zero()) throw std::invalid_argument("chart_s requires s != 0");
    const ExtScalar coef = ExtScalar::inv_sqrt2() * ExtScalar::half() * s.inverse();
    Vector27 out = Vector27::zero();
    for (int i = 0; i < 10; ++i)
        out.v[static_cast<std::size_t>(i)] =
            coef * pair_bilinear(rep10(), psi, Blade{Mask(1) << i}, psi);
    out.psi = psi;
    out.s = s;
    return out;
}

Vector27 chart_tpm(Side side, const ExtScalar& tcoord, const Spinor& spin8,
                   const std::vector<ExtScalar>& u8) {
    if (tcoord.is_zero()) throw std::invalid_argument("chart_tpm requires a nonzero t coordinate");
    require_spinor(spin8, 4, "chart_tpm");
    if (u8.size() != 8) throw std::invalid_argument("chart_tpm requires 8 vector components");
    const int want = side == Side::plus ? -1 : +1;
    if (!spin8.is_zero() && spin8.chirality_sign() != want)
        throw std::invalid_argument(side == Side::plus
                                        ? "chart_tpm plus side requires η of negative Cl(8) chirality"
                                        : "chart_tpm minus side requires ξ of positive Cl(8) chirality");
    const ExtScalar tinv = tcoord.inverse();
    Spinor xi(4), eta(4);
    ExtScalar s, tp, tm;
    if (side == Side::plus) {
        eta = spin8;
        xi = -((sqrt2() * tinv) * vector_act(rep8(), u8, eta));
        s = -(tinv * pair_bilinear(rep8(), eta, eta));
        tp = tcoord;
        tm = ExtScalar(-2) * tinv * dot(u8, u8);
    } else {
        xi = spin8;
        eta = (sqrt2() * tinv) * vector_act(rep8(), u8, xi);
        s = tinv * pair_bilinear(rep8(), xi, xi);
        tm = tcoord;
        tp = ExtScalar(-2) * tinv * dot(u8, u8);
    }
    Vector27 out = Vector27::zero();
    for (std::size_t a = 0; a < 8; ++a) out.v[a] = u8[a];
    const ExtScalar q = ExtScalar::inv_sqrt2() * ExtScalar::half();  // 1/(2√2)
    out.v[8] = q * (tp + tm);
    out.v[9] = -(ExtScalar::i() * q * (tp - tm));
    out.psi = join_spinor(xi, eta);
    out.s = s;
    return out;
}

Spinor rotate_spinor(int a, const Spinor& psi) {
    if (a < 1 || a > 9) throw std::invalid_argument("rotation index must be in 1..9");
    require_spinor(psi, 5, "rotate_spinor");
    const Mask m = (Mask(1) << (a - 1)) | (Mask(1) << 9);
    return ExtScalar::inv_sqrt2() * (psi + mask_act(rep10(), m, psi));
}

Vector27 rotate_frame(int a, const Vector27& p) {
    if (a < 1 || a > 9) throw std::invalid_argument("rotation index must be in 1..9");
    Vector27 out = p;
    out.v[static_cast<std::size_t>(a - 1)] = p.v[9];
    out.v[9] = -p.v[static_cast<std::size_t>(a - 1)];
    out.psi = rotate_spinor(a, p.psi);
    return out;
}

int rotation_index(const Vector27& p) {
    for (int a = 1; a <= 9; ++a) {
        // t̂± only involve v̂₉ = v₉ (or v₁₀ when a = 9) and v̂₁₀ = −v_a.
        const ExtScalar v9 = a == 9 ? p.v[9] : p.v[8];
        const ExtScalar v10 = -p.v[static_cast<std::size_t>(a - 1)];
        const ExtScalar iv10 = ExtScalar::i() * v10;
        if (!(v9 + iv10).is_zero() || !(v9 - iv10).is_zero()) return a;
    }
    return 0;
}

bool is_pure(const Spinor& psi) {
    require_spinor(psi, 5, "is_pure");
    for (int i = 0; i < 10; ++i)
        if (!pair_bilinear(rep10(), psi, Blade{Mask(1) << i}, psi).is_zero()) return false;
    return true;
}

PureSpinorFrame pure_frame(const Spinor& psi0) {
    require_spinor(psi0, 5, "pure_frame");
    if (psi0.chirality() != Chirality::plus)
        throw std::invalid_argument("pure_frame requires a positive-chirality spinor");
    if (!is_pure(psi0)) throw std::invalid_argument("pure_frame requires a pure spinor");
    if (pair_hermitian(psi0, psi0) != ExtScalar::one())
        throw std::invalid_argument("pure_frame requires a normalized spinor, ⟨ψ₀,ψ₀⟩ = 1");
    PureSpinorFrame fr;
    fr.psi0 = psi0;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            const Mask m = (Mask(1) << i) | (Mask(1) << j);
            const ExtScalar jij = ExtScalar::i() * pair_hermitian(psi0, mask_act(rep10(), m, psi0));
            fr.J.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = jij;
            fr.J.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -jij;
        }
    fr.omega.assign(1024, ExtScalar::zero());
    fr.omega_bar.assign(1024, ExtScalar::zero());
    const ExtScalar norm = ExtScalar(Rational(1, 4), Rational(0), Rational(0), Rational(0)) *
                           ExtScalar::inv_sqrt2();  // 1/(4√2)
    const Spinor cpsi = charge_conjugate(rep10(), psi0);
    for (Mask m : grade_masks(10, 5)) {
        fr.omega_bar[m] = norm * pair_bilinear(rep10(), psi0, Blade{m}, psi0);
        fr.omega[m] = norm * pair_hermitian(psi0, mask_act(rep10(), m, cpsi));
    }
    const ExtScalar ihalf = ExtScalar::i() * ExtScalar::half();
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            const ExtScalar base = i == j ? ExtScalar::half() : ExtScalar::zero();
            fr.p10.at(i, j) = base - ihalf * fr.J.at(i, j);
            fr.p01.at(i, j) = base + ihalf * fr.J.at(i, j);
        }
    return fr;
}

const PureSpinorFrame& standard_frame() {
    static const PureSpinorFrame fr = pure_frame(Spinor::basis(5, 0));
    return fr;
}

Spinor apply_two_form(const ExactMatrix& k, const Spinor& psi) {
    if (k.rows() != 10 || k.cols() != 10)
        throw std::invalid_argument("apply_two_form requires a 10×10 matrix");
    require_spinor(psi, 5, "apply_two_form");
    Spinor out(5);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            const ExtScalar c = k.at(i, j) - k.at(j, i);
            if (c.is_zero()) continue;
            const Mask m = (Mask(1) << i) | (Mask(1) << j);
            out = out + c * mask_act(rep10(), m, psi);
        }
    return out;
}

PureDecomposition pure_decompose(const Spinor& psi, const PureSpinorFrame& frame) {
    require_spinor(psi, 5, "pure_decompose");
    PureDecomposition d;
    d.f = pair_hermitian(frame.psi0, psi);
    d.x.assign(10, ExtScalar::zero());
    for (int i = 0; i < 10; ++i)
        d.x[static_cast<std::size_t>(i)] =
            pair_bilinear(rep10(), frame.psi0, Blade{Mask(1) << i}, psi);
    const ExtScalar iff = ExtScalar::i() * d.f;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            const Mask m = (Mask(1) << i) | (Mask(1) << j);
            const ExtScalar kt = pair_hermitian(frame.psi0, mask_act(rep10(), m, psi));
            const ExtScalar kij = kt + iff * frame.J.at(i, j);
            d.K.at(i, j) = kij;
            d.K.at(j, i) = -kij;
        }
    return d;
}

Spinor reconstruct_spinor(const PureSpinorFrame& frame, const ExtScalar& f,
                          const std::vector<ExtScalar>& x, const ExactMatrix& k) {
    if (x.size() != 10) throw std::invalid_argument("reconstruct_spinor requires 10 x-components");
    const ExtScalar eighth(Rational(1, 8), Rational(0), Rational(0), Rational(0));
    Spinor out = f * frame.psi0 - eighth * apply_two_form(k, frame.psi0);
    const Spinor cpsi = charge_conjugate(rep10(), frame.psi0);
    return out + ExtScalar::half() * vector_act(rep10(), x, cpsi);
}

ExactMatrix project_20(const PureSpinorFrame& frame, const ExactMatrix& k) {
    return frame.p10 * k * frame.p01;
}

std::vector<ExtScalar> project_01(const PureSpinorFrame& frame, const std::vector<ExtScalar>& u) {
    return frame.p01.mul_vec(u);
}

bool is_type_20(const PureSpinorFrame& frame, const ExactMatrix& k) {
    return (k * frame.p10).is_zero();
}

bool is_type_01(const PureSpinorFrame& frame, const std::vector<ExtScalar>& u) {
    for (const ExtScalar& c : frame.p10.mul_vec(u))
        if (!c.is_zero()) return false;
    return true;
}

std::vector<ExtScalar> omega_bar_kk(const PureSpinorFrame& frame, const ExactMatrix& k) {
    if (k.rows() != 10 || k.cols() != 10)
        throw std::invalid_argument("omega_bar_kk requires a 10×10 matrix");
    std::vector<ExtScalar> out(10, ExtScalar::zero());
    const ExtScalar four(4);
    for (int i = 0; i < 10; ++i) {
        ExtScalar acc = ExtScalar::zero();
        for (int p = 0; p < 10; ++p) {
            if (p == i) continue;
            for (int q = p + 1; q < 10; ++q) {
                if (q == i) continue;
                const ExtScalar& kpq = k.at(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
                if (kpq.is_zero()) continue;
                for (int r = 0; r < 10; ++r) {
                    if (r == i || r == p || r == q) continue;
                    for (int s = r + 1; s < 10; ++s) {
                        if (s == i || s == p || s == q) continue;
                        const ExtScalar& krs =
                            k.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
                        if (krs.is_zero()) continue;
                        const Mask m = (Mask(1) << i) | (Mask(1) << p) | (Mask(1) << q) |
                                       (Mask(1) << r) | (Mask(1) << s);
                        const ExtScalar& ob = frame.omega_bar[m];
                        if (ob.is_zero()) continue;
                        ExtScalar term = ob * kpq * krs;
                        if (perm_sign5({i, p, q, r, s}) < 0) term = -term;
                        acc += term;
                    }
                }
            }
        }
        out[static_cast<std::size_t>(i)] = four * acc;
    }
    return out;
}

Vector27 chart_xinfty(const PureSpinorFrame& frame, const ExtScalar& f, const ExactMatrix& k,
                      const std::vector<ExtScalar>& ubar, const ExtScalar& s, bool* projected) {
    if (k.rows() != 10 || k.cols() != 10)
        throw std::invalid_argument("chart_xinfty requires a 10×10 K");
    if (ubar.size() != 10) throw std::invalid_argument("chart_xinfty requires 10 ubar components");
    if (f.is_zero()) throw std::invalid_argument("chart_xinfty requires f != 0");
    ExactMatrix kk = k;
    std::vector<ExtScalar> uu = ubar;
    bool fixed = false;
    if (!is_type_20(frame, kk)) {
        kk = project_20(frame, kk);
        fixed = true;
    }
    if (!is_type_01(frame, uu)) {
        uu = project_01(frame, uu);
        fixed = true;
    }
    if (fixed && projected == nullptr)
        throw std::invalid_argument(
            "chart_xinfty: K/ubar violate their (2,0)/(0,1) type constraints");
    if (projected != nullptr) *projected = fixed;

    const ExtScalar finv = f.inverse();
    const std::vector<ExtScalar> kub = kk.mul_vec(uu);
    Vector27 out = Vector27::zero();
    for (std::size_t i = 0; i < 10; ++i) out.v[i] = uu[i] - ExtScalar::half() * finv * kub[i];
    const std::vector<ExtScalar> contraction = omega_bar_kk(frame, kk);
    const ExtScalar c32(Rational(1, 32), Rational(0), Rational(0), Rational(0));
    std::vector<ExtScalar> x(10);
    for (std::size_t i = 0; i < 10; ++i)
        x[i] = sqrt2() * finv * (s * uu[i] + c32 * contraction[i]);
    out.psi = reconstruct_spinor(frame, f, x, kk);
    out.s = s;
    return out;
}

const char* chart_name(Chart c) {
    switch (c) {
        case Chart::s: return "s";
        case Chart::tplus: return "tplus";
        case Chart::tminus: return "tminus";
        case Chart::xinfty: return "xinfty";
        case Chart::gr24: return "gr24";
    }
    throw std::invalid_argument("unknown chart");
}

Chart chart_from_name(const std::string& name) {
    if (name == "s") return Chart::s;
    if (name == "tplus") return Chart::tplus;
    if (name == "tminus") return Chart::tminus;
    if (name == "xinfty") return Chart::xinfty;
    if (name == "gr24") return Chart::gr24;
    throw std::invalid_argument("unknown chart name: " + name);
}

ExactMatrix k_matrix_from_scalars(const std::vector<ExtScalar>& kscal) {
    if (kscal.size() != 10)
        throw std::invalid_argument("k_matrix_from_scalars requires 10 coefficients");
    ExactMatrix out(10, 10);
    // w_k has components (1, −i) at positions (2k−2, 2k−1), 0-based k = row.
    const std::array<ExtScalar, 2> w = {ExtScalar::one(), -ExtScalar::i()};
    std::size_t n = 0;
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t l = k + 1; l < 5; ++l, ++n) {
            const ExtScalar& c = kscal[n];
            if (c.is_zero()) continue;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    const ExtScalar term = c * w[a] * w[b];
                    out.at(2 * k + a, 2 * l + b) += term;
                    out.at(2 * l + b, 2 * k + a) -= term;
                }
        }
    return out;
}

std::vector<ExtScalar> k_scalars_from_matrix(const ExactMatrix& k) {
    if (k.rows() != 10 || k.cols() != 10)
        throw std::invalid_argument("k_scalars_from_matrix requires a 10×10 matrix");
    // c_{kl} = ¼ w̄_kᵀ K w̄_l with w̄_k = (1, +i) at (2k−2, 2k−1).
    const std::array<ExtScalar, 2> wb = {ExtScalar::one(), ExtScalar::i()};
    const ExtScalar quarter(Rational(1, 4), Rational(0), Rational(0), Rational(0));
    std::vector<ExtScalar> out;
    out.reserve(10);
    for (std::size_t kk = 0; kk < 5; ++kk)
        for (std::size_t l = kk + 1; l < 5; ++l) {
            ExtScalar acc = ExtScalar::zero();
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) acc += wb[a] * k.at(2 * kk + a, 2 * l + b) * wb[b];
            out.push_back(quarter * acc);
        }
    return out;
}

std::vector<ExtScalar> ubar_from_scalars(const std::vector<ExtScalar>& d) {
    if (d.size() != 5) throw std::invalid_argument("ubar_from_scalars requires 5 coefficients");
    std::vector<ExtScalar> u(10, ExtScalar::zero());
    for (std::size_t k = 0; k < 5; ++k) {
        u[2 * k] = d[k];
        u[2 * k + 1] = ExtScalar::i() * d[k];
    }
    return u;
}

std::vector<ExtScalar> ubar_scalars_from_vector(const std::vector<ExtScalar>& u) {
    if (u.size() != 10) throw std::invalid_argument("ubar_scalars_from_vector requires 10 components");
    std::vector<ExtScalar> d;
    d.reserve(5);
    for (std::size_t k = 0; k < 5; ++k)
        d.push_back(ExtScalar::half() * (u[2 * k] - ExtScalar::i() * u[2 * k + 1]));
    return d;
}

Vector27 assemble(const ChartPoint& p) {
    switch (p.chart) {
        case Chart::s: return chart_s(p.psi, p.s);
        case Chart::tplus: return chart_tpm(Side::plus, p.tcoord, p.spin8, p.u8);
        case Chart::tminus: return chart_tpm(Side::minus, p.tcoord, p.spin8, p.u8);
        case Chart::xinfty:
            return chart_xinfty(standard_frame(), p.f, k_matrix_from_scalars(p.kscal),
                                ubar_from_scalars(p.ubar5), p.s);
        case Chart::gr24: break;
    }
    throw std::invalid_argument("gr24 points do not assemble to a 27-vector");
}

bool point_in_chart(const Vector27& p, Chart c) {
    switch (c) {
        case Chart::s: return !p.s.is_zero();
        case Chart::tplus: return !tplus_of(p).is_zero();
        case Chart::tminus: return !tminus_of(p).is_zero();
        case Chart::xinfty: return !pair_hermitian(standard_frame().psi0, p.psi).is_zero();
        case Chart::gr24: break;
    }
    return false;
}

ChartPoint chart_point_from(const Vector27& p, Chart target) {
    if (target == Chart::gr24) throw std::invalid_argument("gr24 is not a cone chart");
    if (!point_in_chart(p, target))
        throw std::domain_error(std::string("point is not in the ") + chart_name(target) + " chart");
    ChartPoint cp;
    cp.chart = target;
    switch (target) {
        case Chart::s:
            cp.psi = p.psi;
            cp.s = p.s;
            break;
        case Chart::tplus:
        case Chart::tminus: {
            const auto [xi, eta] = split_spinor(p.psi);
            cp.tcoord = target == Chart::tplus ? tplus_of(p) : tminus_of(p);
            cp.spin8 = target == Chart::tplus ? eta : xi;
            cp.u8.assign(p.v.begin(), p.v.begin() + 8);
            break;
        }
        case Chart::xinfty: {
            const PureSpinorFrame& fr = standard_frame();
            const PureDecomposition d = pure_decompose(p.psi, fr);
            cp.f = d.f;
            cp.kscal = k_scalars_from_matrix(d.K);
            cp.ubar5 = ubar_scalars_from_vector(project_01(fr, p.v));
            cp.s = p.s;
            break;
        }
        case Chart::gr24: break;
    }
    return cp;
}

ChartPoint chart_transition(const ChartPoint& p, Chart target) {
    if (p.chart == Chart::gr24 || target == Chart::gr24)
        throw std::invalid_argument("gr24 points do not participate in chart transitions");
    return chart_point_from(assemble(p), target);
}

Vector27 orbit_sample(std::uint64_t seed, int word_length) {
    if (word_length < 1) throw std::invalid_argument("orbit_sample requires word_length >= 1");
    Rng rng(seed);
    Vector27 p = Vector27::psi0();
    for (int step = 0; step < word_length; ++step) {
        const std::uint64_t move = rng.next_below(3);
        if (move == 2) {
            p = rotate_frame(static_cast<int>(1 + rng.next_below(9)), p);
            continue;
        }
        const std::vector<std::size_t>& idx = move == 0 ? plus10() : minus10();
        Spinor z(5);
        for (int k = 0; k < 3; ++k) z[idx[rng.next_below(16)]] += ExtScalar(rng.next_int(-2, 2));
        if (z.is_zero()) continue;
        const LieElement x =
            move == 0 ? spinor_plus_element(Algebra::e6, z) : spinor_minus_element(z);
        const Vector27 first = act27(x, p);
        const Vector27 second = act27(x, first);
        p = p + first + ExtScalar::half() * second;
    }
    return p;
}

bool projective_equal(const Vector27& a, const Vector27& b) {
    const std::vector<ExtScalar> xs = vector27_coords(a);
    const std::vector<ExtScalar> ys = vector27_coords(b);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] * ys[j] != xs[j] * ys[i]) return false;
    return true;
}

std::vector<ExtScalar> gr24_plucker(const ExactMatrix& g) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("gr24_plucker requires a 4×4 matrix");
    std::vector<ExtScalar> z;
    z.reserve(6);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            z.push_back(g.at(i, 0) * g.at(j, 1) - g.at(j, 0) * g.at(i, 1));
    return z;
}

ExtScalar gr24_relation(const std::vector<ExtScalar>& z) {
    if (z.size() != 6) throw std::invalid_argument("gr24_relation requires 6 minors");
    return z[0] * z[5] - z[1] * z[4] + z[2] * z[3];
}

void to_json(Json& j, const ChartPoint& p) {
    Json params = Json::object();
    switch (p.chart) {
        case Chart::s:
            params["psi"] = scalar_array_json(pack_components(p.psi, plus10()));
            params["s"] = p.s;
            break;
        case Chart::tplus:
        case Chart::tminus: {
            const Side side = p.chart == Chart::tplus ? Side::plus : Side::minus;
            params["t"] = p.tcoord;
            params["spin8"] = scalar_array_json(pack_components(p.spin8, spin8_indices(side)));
            params["u8"] = scalar_array_json(p.u8);
            break;
        }
        case Chart::xinfty: {
            params["frame"] = "standard";
            params["f"] = p.f;
            params["K"] = scalar_array_json(p.kscal);
            params["ubar"] = scalar_array_json(p.ubar5);
            params["s"] = p.s;
            break;
        }
        case Chart::gr24: {
            std::vector<ExtScalar> flat;
            flat.reserve(16);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) flat.push_back(p.g.at(r, c));
            params["g"] = scalar_array_json(flat);
            break;
        }
    }
    j = Json::object();
    j["chart"] = chart_name(p.chart);
    j["params"] = std::move(params);
}

void from_json(const Json& j, ChartPoint& p) {
    p = ChartPoint{};
    p.chart = chart_from_name(j.at("chart").get<std::string>());
    const Json& params = j.at("params");
    switch (p.chart) {
        case Chart::s:
            p.psi = unpack_components(5, read_scalar_array(params, "psi", 16), plus10());
            p.s = params.at("s").get<ExtScalar>();
            break;
        case Chart::tplus:
        case Chart::tminus: {
            const Side side = p.chart == Chart::tplus ? Side::plus : Side::minus;
            p.tcoord = params.at("t").get<ExtScalar>();
            p.spin8 = unpack_components(4, read_scalar_array(params, "spin8", 8), spin8_indices(side));
            p.u8 = read_scalar_array(params, "u8", 8);
            break;
        }
        case Chart::xinfty: {
            if (params.at("frame").get<std::string>() != "standard")
                throw std::invalid_argument("only the standard pure-spinor frame is serialized");
            p.f = params.at("f").get<ExtScalar>();
            p.kscal = read_scalar_array(params, "K", 10);
            p.ubar5 = read_scalar_array(params, "ubar", 5);
            p.s = params.at("s").get<ExtScalar>();
            break;
        }
        case Chart::gr24: {
            const std::vector<ExtScalar> flat = read_scalar_array(params, "g", 16);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) p.g.at(r, c) = flat[4 * r + c];
            break;
        }
    }
}

}  // namespace atlas
