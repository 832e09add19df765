#include "nscurve/tower.hpp"

#include "nscurve/error.hpp"

#include <algorithm>
#include <sstream>

namespace nscurve {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void check_p(const TowerScalar& a, const TowerScalar& b) {
    if (a.p() != b.p()) throw Error(ErrorKind::InvalidArgument, "characteristic mismatch");
}

} // namespace

TowerScalar::TowerScalar(long long c, Coeff p) : num_(FpPoly::constant(p, c)), den_(FpPoly::constant(p, 1)) {}

TowerScalar::TowerScalar(FpPoly num, FpPoly den, int level)
    : num_(std::move(num)), den_(std::move(den)), level_(level) {
    if (level < 0) throw Error(ErrorKind::InvalidArgument, "negative level");
    if (num_.p() != den_.p()) throw Error(ErrorKind::InvalidArgument, "characteristic mismatch");
    normalize();
}

TowerScalar TowerScalar::t(Coeff p) { return TowerScalar(FpPoly::monomial(p, 1, 1), FpPoly::constant(p, 1), 0); }

TowerScalar TowerScalar::generator(int level, Coeff p) {
    return TowerScalar(FpPoly::monomial(p, 1, 1), FpPoly::constant(p, 1), level);
}

void TowerScalar::normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.p(), 1);
        return;
    }
    if (!den_.is_constant()) {
        FpPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (den_.lead() != 1) {
        Coeff inv = mod_inverse(den_.lead(), den_.p());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

int common_level(const TowerScalar& a, const TowerScalar& b) { return std::max(a.level(), b.level()); }

TowerScalar lift(const TowerScalar& x, int m, int max_level) {
    if (m < x.level()) throw Error(ErrorKind::InvalidArgument, "lift to a lower level");
    if (m > max_level) throw Error(ErrorKind::LevelOverflow, "level " + std::to_string(m) + " exceeds max_level");
    if (m == x.level()) return x;
    std::size_t k = ipow(x.p(), m - x.level());
    return TowerScalar(x.num().stretch(k), x.den().stretch(k), m);
}

namespace {

// Both operands at the same level without the max_level guard (the
// operands already exist, so their level is admissible).
std::pair<TowerScalar, TowerScalar> aligned(const TowerScalar& a, const TowerScalar& b) {
    check_p(a, b);
    if (a.level() == b.level()) return {a, b};
    int m = common_level(a, b);
    return {lift(a, m, m), lift(b, m, m)};
}

} // namespace

TowerScalar TowerScalar::operator+(const TowerScalar& o) const {
    if (level_ != o.level_ || p() != o.p()) {
        auto [a, b] = aligned(*this, o);
        return a + b;
    }
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    TowerScalar r;
    r.level_ = level_;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        r.normalize();
        return r;
    }
    if (den_.is_one()) {
        r.num_ = num_ * o.den_ + o.num_;
        r.den_ = r.num_.is_zero() ? den_ : o.den_;
        return r;
    }
    if (o.den_.is_one()) {
        r.num_ = num_ + o.num_ * den_;
        r.den_ = r.num_.is_zero() ? o.den_ : den_;
        return r;
    }
    FpPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        if (r.num_.is_zero()) r.den_ = FpPoly::constant(p(), 1);
        return r;
    }
    FpPoly b1 = den_ / g, d1 = o.den_ / g;
    FpPoly n = num_ * d1 + o.num_ * b1;
    FpPoly g2 = gcd(n, g);
    r.num_ = n / g2;
    r.den_ = (den_ / g2) * d1;
    r.normalize();
    return r;
}

TowerScalar TowerScalar::operator-() const {
    TowerScalar r = *this;
    r.num_ = -num_;
    return r;
}

TowerScalar TowerScalar::operator-(const TowerScalar& o) const { return *this + (-o); }

TowerScalar TowerScalar::operator*(const TowerScalar& o) const {
    if (level_ != o.level_ || p() != o.p()) {
        auto [a, b] = aligned(*this, o);
        return a * b;
    }
    TowerScalar r;
    r.level_ = level_;
    if (is_zero() || o.is_zero()) {
        r.num_ = FpPoly(p());
        r.den_ = FpPoly::constant(p(), 1);
        return r;
    }
    if (den_.is_one() && o.den_.is_one()) {
        r.num_ = num_ * o.num_;
        r.den_ = den_;
        return r;
    }
    FpPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    FpPoly a = g1.is_one() ? num_ : num_ / g1;
    FpPoly d = g1.is_one() ? o.den_ : o.den_ / g1;
    FpPoly c = g2.is_one() ? o.num_ : o.num_ / g2;
    FpPoly b = g2.is_one() ? den_ : den_ / g2;
    r.num_ = a * c;
    r.den_ = b * d;
    if (r.den_.lead() != 1) r.normalize();
    return r;
}

TowerScalar TowerScalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    TowerScalar r;
    r.level_ = level_;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

TowerScalar TowerScalar::operator/(const TowerScalar& o) const { return *this * o.inverse(); }

TowerScalar TowerScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    TowerScalar r;
    r.level_ = level_;
    r.num_ = num_.pow(static_cast<unsigned long>(e));
    r.den_ = den_.pow(static_cast<unsigned long>(e));
    if (r.num_.is_zero()) r.den_ = FpPoly::constant(p(), 1);
    return r;
}

bool TowerScalar::operator==(const TowerScalar& o) const {
    if (p() != o.p()) return false;
    if (level_ == o.level_) return num_ == o.num_ && den_ == o.den_;
    auto [a, b] = aligned(*this, o);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

TowerScalar TowerScalar::reduced() const {
    TowerScalar r = *this;
    const std::size_t p = this->p();
    while (r.level_ > 0 && r.num_.exponents_divisible_by(p) && r.den_.exponents_divisible_by(p)) {
        r.num_ = r.num_.shrink(p);
        r.den_ = r.den_.shrink(p);
        --r.level_;
    }
    return r;
}

TowerScalar TowerScalar::retagged(int level) const {
    TowerScalar r = *this;
    r.level_ = level;
    return r;
}

std::string TowerScalar::debug_string() const {
    std::ostringstream os;
    os << "[" << num_.to_string("r") << "]/[" << den_.to_string("r") << "]@" << level_;
    return os.str();
}

TowerScalar p_th_root(const TowerScalar& x, int max_level) {
    if (x.level() + 1 > max_level)
        throw Error(ErrorKind::LevelOverflow, "p-th root needs level " + std::to_string(x.level() + 1));
    return TowerScalar(x.num(), x.den(), x.level() + 1);
}

TowerScalar frobenius(const TowerScalar& x, int k) {
    // (n(r_m)/d(r_m))^p = n(r_{m-1})/d(r_{m-1}); at level 0, t -> t^p.
    TowerScalar y = x;
    for (int i = 0; i < k; ++i) {
        if (y.level() > 0)
            y = TowerScalar(y.num(), y.den(), y.level() - 1);
        else
            y = TowerScalar(y.num().stretch(y.p()), y.den().stretch(y.p()), 0);
    }
    return y;
}

TowerScalar derive(const TowerScalar& x) {
    FpPoly n = x.num().derivative() * x.den() - x.num() * x.den().derivative();
    return TowerScalar(n, x.den() * x.den(), x.level());
}

int level_of(const TowerScalar& x) {
    // d/dr_m x = 0 exactly when x is a p-th power of an element at level m,
    // i.e. lies at level m - 1.
    TowerScalar y = x;
    while (y.level() > 0 && derive(y).is_zero())
        y = TowerScalar(y.num().shrink(y.p()), y.den().shrink(y.p()), y.level() - 1);
    return y.level();
}

TowerScalar KCoordinates::reconstruct() const {
    if (coords.empty()) return TowerScalar(0);
    const Coeff p = coords.front().p();
    TowerScalar acc(0, p);
    TowerScalar rp(1, p);
    TowerScalar r = TowerScalar::generator(level, p);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        acc += coords[i] * rp;
        rp *= r;
    }
    return acc;
}

KCoordinates k_coordinates(const TowerScalar& x) { return k_coordinates(x, x.level()); }

KCoordinates k_coordinates(const TowerScalar& x0, int m) {
    const TowerScalar x = lift(x0, m, m);
    const Coeff p = x.p();
    const std::size_t q = ipow(p, m);
    KCoordinates out;
    out.level = m;
    if (m == 0) {
        out.coords.push_back(x);
        return out;
    }
    // den^q = den(t) as an element of K, so 1/den = den^(q-1)/den(t).
    FpPoly n = x.den().is_one() ? x.num() : x.num() * x.den().pow(q - 1);
    std::vector<std::vector<Coeff>> parts(q);
    for (std::size_t j = 0; j < n.coeffs().size(); ++j) {
        Coeff c = n.coeffs()[j];
        if (!c) continue;
        auto& v = parts[j % q];
        std::size_t e = j / q;
        if (v.size() <= e) v.resize(e + 1, 0);
        v[e] = c;
    }
    out.coords.reserve(q);
    for (std::size_t i = 0; i < q; ++i) out.coords.emplace_back(FpPoly(p, parts[i]), x.den(), 0);
    return out;
}

std::optional<TowerScalar> scalar_square_root(const TowerScalar& x) {
    FpPoly a, b;
    // den is monic; a square root of num may need a scalar fix-up, which
    // the canonical root of each part handles.
    if (!poly_square_root(x.num(), a)) return std::nullopt;
    if (!poly_square_root(x.den(), b)) return std::nullopt;
    return TowerScalar(a, b, x.level());
}

namespace {

int matrix_level(const Matrix& m) {
    int lv = 0;
    for (const auto& row : m)
        for (const auto& e : row) lv = std::max(lv, e.level());
    return lv;
}

} // namespace

Echelon row_echelon(const Matrix& input, const std::vector<int>& column_order, bool reduced) {
    Echelon out;
    if (input.empty()) return out;
    const std::size_t ncols = input.front().size();
    const int lv = matrix_level(input);
    Matrix a = input;
    for (auto& row : a) {
        if (row.size() != ncols) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
        for (auto& e : row)
            if (e.level() != lv) e = lift(e, lv, lv);
    }
    std::vector<int> order = column_order;
    if (order.empty())
        for (std::size_t c = 0; c < ncols; ++c) order.push_back(static_cast<int>(c));

    std::size_t next = 0;
    for (int col : order) {
        if (next == a.size()) break;
        std::size_t piv = a.size();
        for (std::size_t i = next; i < a.size(); ++i)
            if (!a[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == a.size()) continue;
        // keep the relative order of the remaining rows
        if (piv != next) std::rotate(a.begin() + next, a.begin() + piv, a.begin() + piv + 1);
        auto& prow = a[next];
        if (!prow[col].is_one()) {
            TowerScalar inv = prow[col].inverse();
            for (auto& e : prow)
                if (!e.is_zero()) e *= inv;
        }
        for (std::size_t i = reduced ? 0 : next + 1; i < a.size(); ++i) {
            if (i == next || a[i][col].is_zero()) continue;
            TowerScalar f = a[i][col];
            for (std::size_t c = 0; c < ncols; ++c)
                if (!prow[c].is_zero()) a[i][c] -= f * prow[c];
        }
        out.pivots.push_back(col);
        ++next;
    }
    a.resize(next);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m, {}, false).rank(); }

Matrix null_space(const Matrix& m, std::size_t ncols) {
    Matrix basis;
    if (m.empty()) {
        for (std::size_t c = 0; c < ncols; ++c) {
            std::vector<TowerScalar> v(ncols, TowerScalar(0));
            v[c] = TowerScalar(1);
            basis.push_back(v);
        }
        return basis;
    }
    const Coeff p = m.front().front().p();
    Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<TowerScalar> v(ncols, TowerScalar(0, p));
        v[f] = TowerScalar(1, p);
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    return row_echelon(basis).rows;
}

} // namespace nscurve
