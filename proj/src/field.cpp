#include "cychom/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace cychom {

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::cyclotomic(std::uint32_t n) {
    if (n < 1) throw error("cyclotomic order must be >= 1");
    return {n, false};
}

FieldSpec FieldSpec::rational_functions(FieldSpec base) {
    if (base.func_field)
        throw error("function fields cannot be nested");
    return {base.cyc_order, true};
}

std::string FieldSpec::str() const {
    std::string s = cyc_order == 1 ? "Q" : "Q(z_" + std::to_string(cyc_order) + ")";
    if (func_field) s += "(t)";
    return s;
}

// ---------------------------------------------------------------------------
// Rational-coefficient polynomial helpers (ascending coefficient order).

namespace {

using RatPoly = std::vector<BigRat>;

void rtrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact long division; requires the remainder to vanish.
RatPoly divide_exact(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        rtrim(a);
    }
    if (!a.empty()) throw error("non-exact polynomial division");
    return q;
}

std::vector<std::uint32_t> proper_divisors(std::uint32_t n) {
    std::vector<std::uint32_t> ds;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

} // namespace

std::vector<BigRat> cyclotomic_polynomial(std::uint32_t n) {
    static std::map<std::uint32_t, RatPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    RatPoly p(n + 1, BigRat(0));
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d : proper_divisors(n))
        p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, p);
    return p;
}

// ---------------------------------------------------------------------------
// Cyclotomic base field Q[x]/Phi_n

Cyclotomic::Cyclotomic(std::uint32_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    if (n < 1) throw error("cyclotomic order must be >= 1");
}

CycElem Cyclotomic::reduce(std::vector<BigRat> poly) const {
    const std::size_t d = degree();
    while (poly.size() > d) {
        BigRat f = poly.back();
        std::size_t shift = poly.size() - phi_.size();
        for (std::size_t i = 0; i < phi_.size(); ++i)
            poly[shift + i] -= f * phi_[i];
        rtrim(poly);
        // the subtraction zeroed the leading coefficient, but lower ones may
        // still exceed the degree bound only via poly.size(); loop handles it
    }
    rtrim(poly);
    return CycElem{std::move(poly)};
}

CycElem Cyclotomic::add(const CycElem& a, const CycElem& b) const {
    RatPoly r(std::max(a.c.size(), b.c.size()), BigRat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    rtrim(r);
    return CycElem{std::move(r)};
}

CycElem Cyclotomic::sub(const CycElem& a, const CycElem& b) const {
    RatPoly r(std::max(a.c.size(), b.c.size()), BigRat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    rtrim(r);
    return CycElem{std::move(r)};
}

CycElem Cyclotomic::neg(const CycElem& a) const {
    CycElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

CycElem Cyclotomic::mul(const CycElem& a, const CycElem& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    RatPoly r(a.c.size() + b.c.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] += a.c[i] * b.c[j];
    }
    return reduce(std::move(r));
}

CycElem Cyclotomic::inv(const CycElem& a) const {
    if (a.is_zero()) throw division_by_zero();
    // Extended Euclid on (Phi_n, a) in Q[x]: s*Phi + t*a = g with g constant,
    // since Phi_n is irreducible over Q and deg a < deg Phi.
    RatPoly r0 = phi_, r1 = a.c;
    RatPoly t0, t1 = {BigRat(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        RatPoly q;
        RatPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            BigRat f = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, BigRat(0));
            q[shift] += f;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] -= f * r1[i];
            rtrim(rem);
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        RatPoly qt(q.size() + t1.size(), BigRat(0));
        if (!q.empty() && !t1.empty()) {
            qt.assign(q.size() + t1.size() - 1, BigRat(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt[i + j] += q[i] * t1[j];
        } else {
            qt.clear();
        }
        RatPoly nt(std::max(t0.size(), qt.size()), BigRat(0));
        for (std::size_t i = 0; i < t0.size(); ++i) nt[i] += t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        rtrim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.size() != 1)
        throw error("cyclotomic inverse: gcd not constant (modulus not irreducible?)");
    BigRat g = r0[0];
    for (auto& x : t0) x /= g;
    return reduce(std::move(t0));
}

CycElem Cyclotomic::one() const { return CycElem{{BigRat(1)}}; }

CycElem Cyclotomic::from_rational(const BigRat& r) const {
    if (r == 0) return {};
    return CycElem{{r}};
}

CycElem Cyclotomic::zeta() const {
    return reduce({BigRat(0), BigRat(1)});
}

const Cyclotomic& cyclotomic_field(std::uint32_t n) {
    static std::map<std::uint32_t, Cyclotomic> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Cyclotomic(n)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Polynomials in t over the base field (for function-field values).

namespace {

using BasePoly = std::vector<CycElem>;

void btrim(BasePoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BasePoly badd(const Cyclotomic& cy, const BasePoly& a, const BasePoly& b) {
    BasePoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = cy.add(r[i], b[i]);
    btrim(r);
    return r;
}

BasePoly bmul(const Cyclotomic& cy, const BasePoly& a, const BasePoly& b) {
    if (a.empty() || b.empty()) return {};
    BasePoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = cy.add(r[i + j], cy.mul(a[i], b[j]));
        }
    }
    btrim(r);
    return r;
}

// Remainder of a by b (b nonzero).
BasePoly brem(const Cyclotomic& cy, BasePoly a, const BasePoly& b) {
    CycElem lc_inv = cy.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        CycElem f = cy.mul(a.back(), lc_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = cy.sub(a[shift + i], cy.mul(f, b[i]));
        btrim(a);
    }
    return a;
}

BasePoly bmonic(const Cyclotomic& cy, BasePoly p) {
    if (p.empty()) return p;
    CycElem inv = cy.inv(p.back());
    for (auto& x : p) x = cy.mul(x, inv);
    return p;
}

BasePoly bgcd(const Cyclotomic& cy, BasePoly a, BasePoly b) {
    btrim(a);
    btrim(b);
    while (!b.empty()) {
        BasePoly r = brem(cy, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return bmonic(cy, std::move(a));
}

BasePoly bdiv_exact(const Cyclotomic& cy, BasePoly a, const BasePoly& b) {
    if (b.empty()) throw division_by_zero();
    BasePoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    CycElem lc_inv = cy.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        CycElem f = cy.mul(a.back(), lc_inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = cy.sub(a[shift + i], cy.mul(f, b[i]));
        btrim(a);
    }
    if (!a.empty()) throw error("non-exact base polynomial division");
    btrim(q);
    return q;
}

} // namespace

// ---------------------------------------------------------------------------
// Scalar

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.fs_ == b.fs_))
        throw field_mismatch(a.fs_.str() + " vs " + b.fs_.str());
}

Scalar Scalar::zero(const FieldSpec& fs) {
    Scalar s;
    s.fs_ = fs;
    if (!s.plain()) s.den_ = {cyclotomic_field(fs.cyc_order).one()};
    return s;
}

Scalar Scalar::one(const FieldSpec& fs) {
    Scalar s = zero(fs);
    if (s.plain()) s.q_ = 1;
    else s.num_ = {cyclotomic_field(fs.cyc_order).one()};
    return s;
}

Scalar Scalar::of(const FieldSpec& fs, const BigRat& v) {
    Scalar s = zero(fs);
    if (s.plain()) s.q_ = v;
    else if (v != 0) s.num_ = {cyclotomic_field(fs.cyc_order).from_rational(v)};
    return s;
}

Scalar Scalar::of(const FieldSpec& fs, long num, long den) {
    return of(fs, BigRat(num, den));
}

Scalar Scalar::zeta(const FieldSpec& fs) {
    if (fs.cyc_order == 1) return one(fs); // zeta_1 = 1
    Scalar s = zero(fs);
    CycElem z = cyclotomic_field(fs.cyc_order).zeta();
    if (!z.is_zero()) s.num_ = {std::move(z)};
    return s;
}

Scalar Scalar::t_gen(const FieldSpec& fs) {
    if (!fs.func_field) throw error("t is only available in function fields");
    Scalar s = zero(fs);
    const auto& cy = cyclotomic_field(fs.cyc_order);
    s.num_ = {CycElem{}, cy.one()};
    return s;
}

Scalar Scalar::t_power(const FieldSpec& fs, long long k) {
    if (!fs.func_field) {
        if (k == 0) return one(fs);
        throw error("t is only available in function fields");
    }
    Scalar s = zero(fs);
    const auto& cy = cyclotomic_field(fs.cyc_order);
    std::size_t a = static_cast<std::size_t>(k >= 0 ? k : -k);
    std::vector<CycElem> p(a + 1);
    p[a] = cy.one();
    if (k >= 0) {
        s.num_ = std::move(p);
    } else {
        s.num_ = {cy.one()};
        s.den_ = std::move(p);
    }
    return s;
}

bool Scalar::is_zero() const { return plain() ? q_ == 0 : num_.empty(); }

bool Scalar::is_one() const {
    if (plain()) return q_ == 1;
    return num_.size() == 1 && den_.size() == 1 &&
           num_[0] == CycElem{{BigRat(1)}} && den_[0] == CycElem{{BigRat(1)}};
}

bool Scalar::is_constant() const {
    return plain() || (num_.size() <= 1 && den_.size() == 1);
}

void Scalar::canonicalize() {
    const auto& cy = cyclotomic_field(fs_.cyc_order);
    btrim(num_);
    btrim(den_);
    if (den_.empty()) throw division_by_zero();
    if (num_.empty()) {
        den_ = {cy.one()};
        return;
    }
    if (!fs_.func_field) {
        // degree-0 fraction: fold the denominator into the numerator
        num_ = {cy.mul(num_[0], cy.inv(den_[0]))};
        den_ = {cy.one()};
        if (num_[0].is_zero()) num_.clear();
        return;
    }
    BasePoly g = bgcd(cy, num_, den_);
    if (g.size() > 1 || !(g.empty() || g[0] == cy.one())) {
        num_ = bdiv_exact(cy, std::move(num_), g);
        den_ = bdiv_exact(cy, std::move(den_), g);
    }
    CycElem lc_inv = cy.inv(den_.back());
    for (auto& x : den_) x = cy.mul(x, lc_inv);
    for (auto& x : num_) x = cy.mul(x, lc_inv);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (plain()) {
        r.q_ = -r.q_;
        return r;
    }
    const auto& cy = cyclotomic_field(fs_.cyc_order);
    for (auto& x : r.num_) x = cy.neg(x);
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    if (plain()) {
        Scalar r = *this;
        r.q_ += o.q_;
        return r;
    }
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const auto& cy = cyclotomic_field(fs_.cyc_order);
    Scalar r = zero(fs_);
    if (!fs_.func_field) {
        CycElem s = cy.add(num_[0], o.num_[0]);
        if (!s.is_zero()) r.num_ = {std::move(s)};
        return r;
    }
    BasePoly n1 = bmul(cy, num_, o.den_);
    BasePoly n2 = bmul(cy, o.num_, den_);
    r.num_ = badd(cy, n1, n2);
    r.den_ = bmul(cy, den_, o.den_);
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (plain()) {
        check_same_field(*this, o);
        Scalar r = *this;
        r.q_ -= o.q_;
        return r;
    }
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    if (plain()) {
        Scalar r = *this;
        r.q_ *= o.q_;
        return r;
    }
    if (is_zero() || o.is_zero()) return zero(fs_);
    const auto& cy = cyclotomic_field(fs_.cyc_order);
    Scalar r = zero(fs_);
    if (!fs_.func_field) {
        CycElem p = cy.mul(num_[0], o.num_[0]);
        if (!p.is_zero()) r.num_ = {std::move(p)};
        return r;
    }
    r.num_ = bmul(cy, num_, o.num_);
    r.den_ = bmul(cy, den_, o.den_);
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (plain()) {
        check_same_field(*this, o);
        q_ += o.q_;
        return *this;
    }
    *this = *this + o;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (plain()) {
        check_same_field(*this, o);
        q_ -= o.q_;
        return *this;
    }
    *this = *this - o;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (plain()) {
        check_same_field(*this, o);
        q_ *= o.q_;
        return *this;
    }
    *this = *this * o;
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw division_by_zero();
    Scalar r = *this;
    if (plain()) {
        r.q_ = 1 / q_;
        return r;
    }
    std::swap(r.num_, r.den_);
    r.canonicalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw division_by_zero();
    if (plain()) {
        check_same_field(*this, o);
        Scalar r = *this;
        r.q_ /= o.q_;
        return r;
    }
    check_same_field(*this, o);
    return *this * o.inv();
}

BigRat Scalar::as_rational() const {
    if (!plain()) throw error("as_rational: scalar is not a plain rational");
    return q_;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// Renders a cyclotomic element as a polynomial in z, descending powers.
std::string base_str(const CycElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t ip = e.c.size(); ip-- > 0;) {
        const BigRat& r = e.c[ip];
        if (r == 0) continue;
        BigRat a = r < 0 ? BigRat(-r) : r;
        if (first) {
            if (r < 0) out += "-";
            first = false;
        } else {
            out += r < 0 ? " - " : " + ";
        }
        if (ip == 0) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += "z";
            if (ip >= 2) out += "^" + std::to_string(ip);
        }
    }
    return out;
}

bool is_rational_elem(const CycElem& e) { return e.c.size() <= 1; }

// Polynomial in t over the base, descending powers.
std::string tpoly_str(const std::vector<CycElem>& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t kp = p.size(); kp-- > 0;) {
        const CycElem& e = p[kp];
        if (e.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (is_rational_elem(e)) {
            BigRat r = e.c.empty() ? BigRat(0) : e.c[0];
            negative = r < 0;
            BigRat a = negative ? BigRat(-r) : r;
            if (kp == 0) {
                body = rat_str(a);
            } else {
                if (a != 1) body = rat_str(a) + "*";
                body += "t";
                if (kp >= 2) body += "^" + std::to_string(kp);
            }
        } else {
            body = "(" + base_str(e) + ")";
            if (kp >= 1) {
                body += "*t";
                if (kp >= 2) body += "^" + std::to_string(kp);
            }
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (plain()) return rat_str(q_);
    if (!fs_.func_field) return base_str(num_[0]);
    if (den_.size() == 1 && den_[0] == CycElem{{BigRat(1)}})
        return tpoly_str(num_);
    return "(" + tpoly_str(num_) + ")/(" + tpoly_str(den_) + ")";
}

// ---------------------------------------------------------------------------
// Parsing: a small expression grammar over integers and the symbols z, t with
// + - * / ^ and parentheses.  Evaluation happens directly in the field, so
// every literal the printer emits round-trips, and forms like (t^2-1)/(t-1)
// reduce to canonical values.

class ScalarParser {
public:
    ScalarParser(const FieldSpec& fs, std::string_view text) : fs_(fs), s_(text) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("trailing characters in scalar literal: '" +
                              std::string(s_.substr(pos_)) + "'");
        return v;
    }

private:
    FieldSpec fs_;
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) throw parse_error("division by zero in scalar literal");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar v = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw parse_error("expected non-negative integer exponent after '^'");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            Scalar r = Scalar::one(fs_);
            for (unsigned long i = 0; i < e; ++i) r = r * v;
            return r;
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of scalar literal");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw parse_error("missing ')' in scalar literal");
            return v;
        }
        if (c == 'z') {
            if (fs_.cyc_order < 2)
                throw parse_error("symbol z is not available in field " + fs_.str());
            ++pos_;
            return Scalar::zeta(fs_);
        }
        if (c == 't') {
            if (!fs_.func_field)
                throw parse_error("symbol t is not available in field " + fs_.str());
            ++pos_;
            return Scalar::t_gen(fs_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            BigInt n(std::string(s_.substr(start, pos_ - start)));
            return Scalar::of(fs_, BigRat(n));
        }
        throw parse_error(std::string("unexpected character '") + c + "' in scalar literal");
    }
};

Scalar Scalar::parse(const FieldSpec& fs, std::string_view text) {
    return ScalarParser(fs, text).run();
}

} // namespace cychom
