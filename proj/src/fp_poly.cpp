#include "nscurve/fp_poly.hpp"

#include "nscurve/error.hpp"

#include <algorithm>
#include <sstream>

namespace nscurve {

bool is_prime(Coeff p) {
    if (p < 2) return false;
    for (Coeff d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Coeff mod_reduce(long long v, Coeff p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
}

Coeff mod_inverse(Coeff a, Coeff p) {
    a %= p;
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod p");
    // p is small; Fermat's little theorem.
    std::uint64_t result = 1, base = a;
    Coeff e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Coeff>(result);
}

PrimeScalar::PrimeScalar(long long v, Coeff prime) : value(mod_reduce(v, prime)), p(prime) {}
PrimeScalar PrimeScalar::operator+(PrimeScalar o) const { return {static_cast<long long>(value) + o.value, p}; }
PrimeScalar PrimeScalar::operator-(PrimeScalar o) const { return {static_cast<long long>(value) - o.value, p}; }
PrimeScalar PrimeScalar::operator*(PrimeScalar o) const {
    return {static_cast<long long>(value) * o.value, p};
}
PrimeScalar PrimeScalar::operator-() const { return {-static_cast<long long>(value), p}; }
PrimeScalar PrimeScalar::inverse() const { return {mod_inverse(value, p), p}; }

FpPoly::FpPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(Coeff p, long long c) { return FpPoly(p, {mod_reduce(c, p)}); }

FpPoly FpPoly::monomial(Coeff p, long long c, std::size_t deg) {
    std::vector<Coeff> v(deg + 1, 0);
    v[deg] = mod_reduce(c, p);
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same(const FpPoly& o) const {
    if (p_ != o.p_) throw Error(ErrorKind::InvalidArgument, "characteristic mismatch");
}

long FpPoly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<long>(i);
    return -1;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    check_same(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        Coeff s = (*this)[i] + o[i];
        r.c_[i] = s >= p_ ? s - p_ : s;
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c ? p_ - c : 0;
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
    check_same(o);
    FpPoly r(p_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        const std::uint64_t a = c_[i];
        for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * o.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<Coeff>(acc[i] % p_);
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(Coeff c) const {
    c %= p_;
    FpPoly r(p_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = static_cast<Coeff>(static_cast<std::uint64_t>(x) * c % p_);
    return r;
}

FpPoly FpPoly::pow(unsigned long e) const {
    FpPoly result = constant(p_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

void FpPoly::divmod(const FpPoly& d, FpPoly& q, FpPoly& r) const {
    check_same(d);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    r = *this;
    q = FpPoly(p_);
    if (r.degree() < d.degree()) return;
    const Coeff inv = mod_inverse(d.lead(), p_);
    const std::size_t dd = d.c_.size() - 1;
    q.c_.assign(r.c_.size() - dd, 0);
    for (std::size_t k = r.c_.size(); k-- > dd;) {
        Coeff c = r.c_[k];
        if (!c) continue;
        Coeff f = static_cast<Coeff>(static_cast<std::uint64_t>(c) * inv % p_);
        q.c_[k - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) {
            Coeff sub = static_cast<Coeff>(static_cast<std::uint64_t>(f) * d.c_[j] % p_);
            Coeff& x = r.c_[k - dd + j];
            x = x >= sub ? x - sub : x + p_ - sub;
        }
    }
    q.trim();
    r.trim();
}

FpPoly FpPoly::operator/(const FpPoly& d) const {
    FpPoly q, r;
    divmod(d, q, r);
    return q;
}

FpPoly FpPoly::operator%(const FpPoly& d) const {
    FpPoly q, r;
    divmod(d, q, r);
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(mod_inverse(lead(), p_));
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = static_cast<Coeff>(static_cast<std::uint64_t>(c_[i]) * (i % p_) % p_);
    r.trim();
    return r;
}

FpPoly FpPoly::stretch(std::size_t k) const {
    if (k == 1 || c_.size() <= 1) return *this;
    FpPoly r(p_);
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

bool FpPoly::exponents_divisible_by(std::size_t k) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] && i % k) return false;
    return true;
}

FpPoly FpPoly::shrink(std::size_t k) const {
    if (!exponents_divisible_by(k))
        throw Error(ErrorKind::InvalidArgument, "shrink: exponent not divisible");
    if (k == 1 || c_.size() <= 1) return *this;
    FpPoly r(p_);
    r.c_.assign((c_.size() - 1) / k + 1, 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i * k];
    return r;
}

Coeff FpPoly::eval(Coeff x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
    return static_cast<Coeff>(acc);
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool poly_square_root(const FpPoly& q, FpPoly& out) {
    const Coeff p = q.p();
    if (p == 2) throw Error(ErrorKind::InvalidArgument, "square roots need odd characteristic");
    if (q.is_zero()) {
        out = FpPoly(p);
        return true;
    }
    if (q.degree() % 2) return false;
    Coeff root = 0;
    bool found = false;
    for (Coeff s = 1; s < p && !found; ++s)
        if (static_cast<std::uint64_t>(s) * s % p == q.lead()) {
            root = s;
            found = true;
        }
    if (!found) return false;
    const std::size_t n = static_cast<std::size_t>(q.degree() / 2);
    std::vector<Coeff> g(n + 1, 0);
    g[n] = root;
    const Coeff inv2g = mod_inverse(static_cast<Coeff>(2 * root % p), p);
    // coefficient of u^(n+k) in g^2 is 2 g_n g_k + sum_{i+j=n+k, k<i,j<n} g_i g_j
    for (std::size_t k = n; k-- > 0;) {
        std::uint64_t s = 0;
        for (std::size_t i = k + 1; i < n; ++i) {
            std::size_t j = n + k - i;
            if (j > k && j < n) s += static_cast<std::uint64_t>(g[i]) * g[j];
        }
        long long rest = static_cast<long long>(q[n + k]) - static_cast<long long>(s % p);
        g[k] = static_cast<Coeff>(static_cast<std::uint64_t>(mod_reduce(rest, p)) * inv2g % p);
    }
    FpPoly cand(p, g);
    if (cand * cand != q) return false;
    out = cand;
    return true;
}

} // namespace nscurve
