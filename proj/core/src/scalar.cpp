#include "atlas/scalar.hpp"

#include <ostream>
#include <sstream>

namespace atlas {

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExtScalar division by zero");
    // G = A² − 2B² ∈ ℚ(i), where A = a_re + a_im·i and B = b_re + b_im·i.
    const Rational two(2), four(4);
    Rational g_re = a_re * a_re - a_im * a_im - two * (b_re * b_re - b_im * b_im);
    Rational g_im = two * a_re * a_im - four * b_re * b_im;
    // N = |G|² is a positive rational (G ≠ 0 because √2 ∉ ℚ(i)).
    Rational n = g_re * g_re + g_im * g_im;
    // G⁻¹ = conj(G)/N, then x⁻¹ = (A − B√2)·G⁻¹.
    Rational inv_re = g_re / n;
    Rational inv_im = -(g_im / n);
    ExtScalar conj2 = conj_sqrt2();
    return conj2 * ExtScalar(inv_re, inv_im, Rational(), Rational());
}

Rational ExtScalar::norm() const {
    // x·conj(x) = u + v√2 with u = |A|² + 2|B|² and v = 2·Re(A·conj(B));
    // multiplying by the √2-conjugate pair gives u² − 2v² ∈ ℚ, ≥ 0.
    const Rational two(2);
    Rational u = a_re * a_re + a_im * a_im + two * (b_re * b_re + b_im * b_im);
    Rational v = two * (a_re * b_re + a_im * b_im);
    return u * u - two * v * v;
}

namespace {

/// Append one signed term "coeff·unit" to a sum under construction.
/// unit is "", "i", "√2" or "i√2"; non-integer coefficients of a unit are
/// parenthesized so "(3/2)√2" cannot be misread.
void append_term(std::string& out, const Rational& coeff, const char* unit) {
    if (coeff.is_zero()) return;
    Rational mag = coeff.abs();
    if (out.empty()) {
        if (coeff.sign() < 0) out += '-';
    } else {
        out += coeff.sign() < 0 ? " - " : " + ";
    }
    bool has_unit = unit[0] != '\0';
    if (!has_unit) {
        out += mag.to_string();
        return;
    }
    if (!(mag == Rational(1))) {
        if (mag.is_integer()) {
            out += mag.to_string();
        } else {
            out += '(';
            out += mag.to_string();
            out += ')';
        }
    }
    out += unit;
}

}  // namespace

std::string ExtScalar::to_string() const {
    std::string out;
    append_term(out, a_re, "");
    append_term(out, a_im, "i");
    append_term(out, b_re, "√2");
    append_term(out, b_im, "i√2");
    if (out.empty()) out = "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.to_string(); }

}  // namespace atlas
