#include "nscurve/series.hpp"

#include "nscurve/error.hpp"

#include <algorithm>

namespace nscurve {

PowerSeriesTrunc::PowerSeriesTrunc(int N, Coeff p) : p_(p), c_(static_cast<std::size_t>(std::max(N, 0)), TowerScalar(0, p)) {}

PowerSeriesTrunc::PowerSeriesTrunc(std::vector<TowerScalar> coeffs, int N) : p_(3), c_(std::move(coeffs)) {
    if (!c_.empty()) p_ = c_.front().p();
    c_.resize(static_cast<std::size_t>(std::max(N, 0)), TowerScalar(0, p_));
}

PowerSeriesTrunc PowerSeriesTrunc::constant(const TowerScalar& c, int N) {
    PowerSeriesTrunc s(N, c.p());
    if (N > 0) s.c_[0] = c;
    return s;
}

PowerSeriesTrunc PowerSeriesTrunc::variable(int N, Coeff p) {
    PowerSeriesTrunc s(N, p);
    if (N > 1) s.c_[1] = TowerScalar(1, p);
    return s;
}

int PowerSeriesTrunc::level() const {
    int lv = 0;
    for (const auto& c : c_) lv = std::max(lv, c.level());
    return lv;
}

int PowerSeriesTrunc::order() const {
    for (int k = 0; k < prec(); ++k)
        if (!c_[k].is_zero()) return k;
    return prec();
}

PowerSeriesTrunc PowerSeriesTrunc::operator+(const PowerSeriesTrunc& o) const {
    const int N = std::min(prec(), o.prec());
    PowerSeriesTrunc r(N, p_);
    for (int k = 0; k < N; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::operator-() const {
    PowerSeriesTrunc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::operator-(const PowerSeriesTrunc& o) const { return *this + (-o); }

PowerSeriesTrunc PowerSeriesTrunc::operator*(const PowerSeriesTrunc& o) const {
    const int oa = order(), ob = o.order();
    const int N = std::min({prec() + ob, o.prec() + oa, std::max(prec(), o.prec())});
    PowerSeriesTrunc r(N, p_);
    for (int i = oa; i < std::min(prec(), N); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = ob; i + j < N && j < o.prec(); ++j)
            if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::operator*(const TowerScalar& c) const {
    PowerSeriesTrunc r = *this;
    for (auto& x : r.c_)
        if (!x.is_zero()) x *= c;
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::inverse() const {
    if (prec() == 0 || c_[0].is_zero()) throw Error(ErrorKind::DivisionByZero, "series without constant term");
    const int N = prec();
    PowerSeriesTrunc r(N, p_);
    const TowerScalar inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < N; ++k) {
        TowerScalar acc(0, p_);
        for (int j = 1; j <= k; ++j)
            if (!c_[j].is_zero() && !r.c_[k - j].is_zero()) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::divided_by(const PowerSeriesTrunc& d) const {
    const int e = d.order();
    if (e >= d.prec()) throw Error(ErrorKind::DivisionByZero, "division by a series that is zero");
    if (order() < e) throw Error(ErrorKind::InvalidArgument, "series division leaves a pole");
    std::vector<TowerScalar> a(c_.begin() + e, c_.end()), b(d.c_.begin() + e, d.c_.end());
    PowerSeriesTrunc num(a, prec() - e), den(b, d.prec() - e);
    const int N = std::min(num.prec(), den.prec());
    return num.truncated(N) * den.truncated(N).inverse();
}

PowerSeriesTrunc PowerSeriesTrunc::derivative() const {
    PowerSeriesTrunc r(std::max(prec() - 1, 0), p_);
    for (int k = 1; k < prec(); ++k)
        if (!c_[k].is_zero()) r.c_[k - 1] = c_[k] * TowerScalar(k, p_);
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::truncated(int N) const {
    PowerSeriesTrunc r = *this;
    r.c_.resize(static_cast<std::size_t>(std::min(N, prec())));
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::frobenius(int k) const {
    PowerSeriesTrunc r = *this;
    for (auto& c : r.c_) c = nscurve::frobenius(c, k);
    return r;
}

PowerSeriesTrunc PowerSeriesTrunc::lifted(int level) const {
    PowerSeriesTrunc r = *this;
    for (auto& c : r.c_) c = lift(c, level, std::max(level, c.level()));
    return r;
}

bool PowerSeriesTrunc::operator==(const PowerSeriesTrunc& o) const { return c_ == o.c_; }

} // namespace nscurve
