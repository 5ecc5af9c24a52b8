#include "yvpoly/intpoly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "yvpoly/errors.hpp"

namespace yvpoly {

namespace {

const Int kZeroInt(0);

// Primes below 2^64 used for the modular gcd degree bound.
constexpr std::array<unsigned long, 3> kProbePrimes = {
    2305843009213693951UL,   // 2^61 - 1
    9223372036854775783UL,   // 2^63 - 25
    18446744073709551557UL,  // 2^64 - 59
};

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long powmod(unsigned long base, unsigned long exp, unsigned long m) {
    unsigned long r = 1 % m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::vector<unsigned long> reduce_mod(const IntPoly& p, unsigned long m) {
    std::vector<unsigned long> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), m);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Degree of gcd(a, b) over F_p, or -1 if p divides a leading coefficient
// (which would make the bound unusable).
int gcd_degree_mod(const IntPoly& a, const IntPoly& b, unsigned long p) {
    if (mpz_fdiv_ui(a.leading().get_mpz_t(), p) == 0) return -1;
    if (mpz_fdiv_ui(b.leading().get_mpz_t(), p) == 0) return -1;
    std::vector<unsigned long> u = reduce_mod(a, p);
    std::vector<unsigned long> v = reduce_mod(b, p);
    while (!v.empty()) {
        // u <- u mod v
        unsigned long inv = powmod(v.back(), p - 2, p);
        while (u.size() >= v.size()) {
            unsigned long q = mulmod(u.back(), inv, p);
            std::size_t off = u.size() - v.size();
            for (std::size_t j = 0; j < v.size(); ++j) {
                unsigned long t = mulmod(q, v[j], p);
                u[off + j] = (u[off + j] >= t) ? u[off + j] - t
                                               : u[off + j] + (p - t);
            }
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return static_cast<int>(u.size()) - 1;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("mixed decimal/fraction literal: " + text);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal: " + text);
        Int num(digits);
        Int den(1);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rational_to_decimal(const Rat& x, unsigned digits) {
    Int num = x.get_num();
    const Int& den = x.get_den();
    bool neg = sign(num) < 0;
    if (neg) num = -num;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int t = num * scale, q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    if (Int(2 * r) >= den) q += 1;  // round half away from zero
    Int ipart = q / scale, fpart = q % scale;
    std::string out = neg && (sign(q) != 0) ? "-" : "";
    out += ipart.get_str();
    if (digits > 0) {
        std::string f = fpart.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

IntPoly::IntPoly(Int constant) {
    if (sign(constant) != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::variable() { return monomial(Int(1), 1); }

IntPoly IntPoly::monomial(Int coeff, unsigned exponent) {
    if (sign(coeff) == 0) return IntPoly();
    std::vector<Int> c(exponent + 1);
    c[exponent] = std::move(coeff);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroInt;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    // Schoolbook convolution.  Adequate for degrees a few hundred; swap in a
    // subquadratic multiply here if the degree range ever grows.
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sign(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& k, const IntPoly& p) {
    if (sign(k) == 0) return IntPoly();
    std::vector<Int> c(p.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * p.coeffs_[i];
    return IntPoly(std::move(c));
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
    std::vector<std::string> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].get_str();
    return out;
}

IntPoly IntPoly::from_decimal_strings(const std::vector<std::string>& strings) {
    std::vector<Int> c(strings.size());
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (mpz_set_str(c[i].get_mpz_t(), strings[i].c_str(), 10) != 0)
            throw std::invalid_argument("bad coefficient string: " + strings[i]);
    }
    return IntPoly(std::move(c));
}

std::string IntPoly::to_text(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Int& c = coeffs_[k];
        if (sign(c) == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sign(c) < 0) out << "-";
            first = false;
        } else {
            out << (sign(c) < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str();
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

IntPoly derivative(const IntPoly& p, unsigned order) {
    IntPoly r = p;
    for (unsigned k = 0; k < order; ++k) {
        if (r.is_zero()) break;
        std::vector<Int> c(r.coeffs().size() > 0 ? r.coeffs().size() - 1 : 0);
        for (std::size_t i = 1; i < r.coeffs().size(); ++i)
            c[i - 1] = Int(static_cast<unsigned long>(i)) * r.coeffs()[i];
        r = IntPoly(std::move(c));
    }
    return r;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero())
        throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < q.degree())
        throw NotDivisibleError("exact_div: degree of dividend below divisor");
    const int dq = q.degree();
    std::vector<Int> rem(p.coeffs());
    std::vector<Int> quot(p.degree() - dq + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& lead = rem[k + dq];
        if (sign(lead) == 0) continue;
        Int qk, r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    q.leading().get_mpz_t());
        if (sign(r) != 0)
            throw NotDivisibleError("exact_div: leading coefficient not divisible");
        for (int j = 0; j < dq; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(),
                       q.coeffs()[j].get_mpz_t());
        lead = 0;
        quot[k] = std::move(qk);
    }
    for (const Int& c : rem)
        if (sign(c) != 0)
            throw NotDivisibleError("exact_div: nonzero remainder");
    return IntPoly(std::move(quot));
}

Int content(const IntPoly& p) {
    if (p.is_zero()) return Int(0);
    // Accumulate smallest coefficients first so the gcd collapses early.
    std::vector<std::size_t> idx;
    idx.reserve(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (sign(p.coeffs()[i]) != 0) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return mpz_size(p.coeffs()[a].get_mpz_t()) <
               mpz_size(p.coeffs()[b].get_mpz_t());
    });
    Int g(0);
    for (std::size_t i : idx) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeffs()[i].get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (g == 1) return p;
    std::vector<Int> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        mpz_divexact(c[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

namespace detail {

// Pseudo-remainder: returns R with R == lc(b)^passes * a  (mod b).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b,
                         unsigned& lc_passes) {
    const int db = b.degree();
    const Int& lc = b.leading();
    std::vector<Int> r(a.coeffs());
    lc_passes = 0;
    while (static_cast<int>(r.size()) - 1 >= db) {
        if (sign(r.back()) == 0) {
            r.pop_back();
            continue;
        }
        Int t = std::move(r.back());
        r.pop_back();
        const std::size_t off = r.size() - static_cast<std::size_t>(db);
        // r <- lc*r - t*b*z^off
        for (Int& c : r) c *= lc;
        for (int j = 0; j < db; ++j)
            mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[j].get_mpz_t());
        ++lc_passes;
    }
    return IntPoly(std::move(r));
}

}  // namespace detail

IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd_primitive: both inputs are zero");
    auto positive_primitive = [](const IntPoly& f) {
        IntPoly g = primitive_part(f);
        return sign(g.leading()) < 0 ? -g : g;
    };
    if (p.is_zero()) return positive_primitive(q);
    if (q.is_zero()) return positive_primitive(p);

    IntPoly a = positive_primitive(p);
    IntPoly b = positive_primitive(q);
    if (a.degree() == 0 || b.degree() == 0) return IntPoly::one();
    if (a.degree() < b.degree()) std::swap(a, b);

    // A constant gcd mod a leading-coefficient-preserving prime bounds the
    // integer gcd degree by zero, settling the (common) coprime case without
    // a remainder sequence.
    for (unsigned long prime : kProbePrimes) {
        int d = gcd_degree_mod(a, b, prime);
        if (d == 0) return IntPoly::one();
        if (d > 0) break;  // usable prime, possibly nontrivial gcd
    }

    while (!b.is_zero()) {
        if (b.degree() == 0) return IntPoly::one();
        unsigned passes = 0;
        IntPoly r = detail::pseudo_remainder(a, b, passes);
        a = std::move(b);
        b = primitive_part(r);
    }
    return positive_primitive(a);
}

namespace {

// Numerator of p(num/den) * den^deg as a single integer Horner pass.
Int horner_numerator(const IntPoly& p, const Int& num, const Int& den) {
    const auto& c = p.coeffs();
    Int acc = c.back();
    if (den == 1) {
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            acc *= num;
            acc += c[i];
        }
        return acc;
    }
    Int dpow(1);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dpow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
    }
    return acc;
}

}  // namespace

Rat evaluate_at(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return Rat(0);
    Int num = horner_numerator(p, Int(x.get_num()), Int(x.get_den()));
    Int den;
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(),
               static_cast<unsigned long>(p.degree()));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

int sign_at(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    // Denominator power is positive, so the Horner numerator carries the sign.
    return sign(horner_numerator(p, Int(x.get_num()), Int(x.get_den())));
}

Rat cauchy_root_bound(const IntPoly& p) {
    if (p.degree() < 1)
        throw DegreeZeroError("cauchy_root_bound: polynomial is constant");
    Int m(0);
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        Int a = abs(p.coeffs()[i]);
        if (a > m) m = a;
    }
    Rat b(m, abs(p.leading()));
    b.canonicalize();
    return b + 1;
}

unsigned long root_bound_log2(const IntPoly& p) {
    if (p.degree() < 1)
        throw DegreeZeroError("root_bound_log2: polynomial is constant");
    const Int lead = abs(p.leading());
    const std::size_t d = static_cast<std::size_t>(p.degree());
    unsigned long best = 0;
    bool any = false;
    for (std::size_t i = 1; i <= d; ++i) {
        const Int& c = p.coeffs()[d - i];
        if (sign(c) == 0) continue;
        any = true;
        Int a = abs(c), q;
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
        if (sign(q) <= 0) q = 1;
        unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2);  // q < 2^bits
        unsigned long t = (bits + i - 1) / i;                   // ceil(bits/i)
        best = std::max(best, t);
    }
    if (!any) return 0;  // all roots are zero
    return best + 1;     // the Lagrange factor of 2
}

}  // namespace yvpoly
