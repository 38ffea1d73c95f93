#include "mdiff/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdiff {

namespace {
constexpr int kNegInf = INT32_MIN / 4;
}

TruncSeries::TruncSeries(VarId var, int low, int high, bool tail_complete)
    : var_(var), low_(low), high_(high), tail_complete_(tail_complete) {
    if (low_ > high_) throw std::invalid_argument("series window is empty");
    c_.resize(high_ - low_ + 1);
}

const MPoly& TruncSeries::coeff(int exp) const {
    static const MPoly zero;
    if (exp < low_ || exp > high_) return zero;
    return c_[exp - low_];
}

void TruncSeries::set_coeff(int exp, MPoly c) {
    if (exp < low_ || exp > high_) {
        if (c.is_zero()) return;
        throw std::out_of_range("exponent outside series window");
    }
    c_[exp - low_] = std::move(c);
}

int TruncSeries::top_nonzero() const {
    for (int e = high_; e >= low_; e--)
        if (!coeff(e).is_zero()) return e;
    return low_ - 1;
}

bool TruncSeries::same_on_window(const TruncSeries& o) const {
    if (var_ != o.var_) return false;
    int lo = std::max(low_, o.low_);
    int hi = std::max(high_, o.high_);
    for (int e = lo; e <= hi; e++)
        if (!(coeff(e) == o.coeff(e))) return false;
    return true;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("series variable mismatch");
    int lo = std::max(tail_complete_ ? kNegInf : low_, o.tail_complete_ ? kNegInf : o.low_);
    lo = std::max(lo, std::min(low_, o.low_));
    int hi = std::max(high_, o.high_);
    TruncSeries r(var_, lo, hi, tail_complete_ && o.tail_complete_);
    for (int e = lo; e <= hi; e++) r.set_coeff(e, coeff(e) + o.coeff(e));
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return *this + o.scaled(MPoly(-1));
}

TruncSeries TruncSeries::scaled(const MPoly& c) const {
    TruncSeries r(var_, low_, high_, tail_complete_);
    for (int e = low_; e <= high_; e++) r.set_coeff(e, coeff(e) * c);
    return r;
}

TruncSeries TruncSeries::clamped(int floor) const {
    if (floor <= low_) return *this;
    if (floor > high_) return TruncSeries::zero(var_, high_);
    bool still_complete = tail_complete_;
    for (int e = low_; e < floor && still_complete; e++)
        if (!coeff(e).is_zero()) still_complete = false;
    TruncSeries r(var_, floor, high_, still_complete);
    for (int e = floor; e <= high_; e++) r.set_coeff(e, coeff(e));
    return r;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries r(var_, low_ - 1, high_ - 1, tail_complete_);
    for (int e = low_; e <= high_; e++) r.set_coeff(e - 1, coeff(e) * rat(e));
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b,
                       std::optional<int> floor, std::optional<int> ceiling) {
    if (a.var() != b.var()) throw std::invalid_argument("series variable mismatch");
    int ta = a.top_nonzero(), tb = b.top_nonzero();
    if (ta < a.low() || tb < b.low()) { // a or b is zero on its window
        int at = std::min(a.high(), b.high());
        return TruncSeries::zero(a.var(), at);
    }
    int hi = std::min(a.high() + b.high(), ceiling.value_or(a.high() + b.high()));
    int lo = a.low() + b.low();
    if (!a.tail_complete()) lo = std::max(lo, a.low() + tb);
    if (!b.tail_complete()) lo = std::max(lo, b.low() + ta);
    bool complete = a.tail_complete() && b.tail_complete();
    if (floor && *floor > lo) {
        lo = *floor;
        complete = false; // conservatively; re-derived by clamped() users
    }
    if (lo > hi) return TruncSeries::zero(a.var(), hi);
    TruncSeries r(a.var(), lo, hi, complete);
    for (int e1 = a.low(); e1 <= ta; e1++) {
        const MPoly& ca = a.coeff(e1);
        if (ca.is_zero()) continue;
        int e2lo = std::max(b.low(), lo - e1);
        int e2hi = std::min(tb, hi - e1);
        for (int e2 = e2lo; e2 <= e2hi; e2++) {
            const MPoly& cb = b.coeff(e2);
            if (cb.is_zero()) continue;
            r.set_coeff(e1 + e2, r.coeff(e1 + e2) + ca * cb);
        }
    }
    return r;
}

TruncSeries series_pow(const TruncSeries& a, int n, int floor) {
    if (n < 0) throw std::invalid_argument("negative power");
    if (n == 0) {
        TruncSeries one(a.var(), 0, 0, false);
        one.set_coeff(0, MPoly(1));
        return one;
    }
    // Work a little deeper than requested so the window still covers `floor`
    // after n-1 truncated multiplications.
    int work = floor - n - 1;
    TruncSeries r = a.clamped(work);
    for (int k = 2; k <= n; k++) r = series_mul(r, a, work);
    if (r.low() > floor)
        throw std::invalid_argument("series_pow: insufficient depth for requested floor");
    return r.clamped(floor);
}

TruncSeries series_plus_part(const TruncSeries& a) {
    if (a.low() > 0 && !a.tail_complete())
        throw std::invalid_argument("plus-part needs the window to reach exponent 0");
    int hi = std::max(a.high(), 0);
    TruncSeries r(a.var(), 0, hi, true);
    for (int e = 0; e <= a.high(); e++) r.set_coeff(e, a.coeff(e));
    return r;
}

MPoly series_residue(const TruncSeries& a) {
    if (a.low() > -1 && !a.tail_complete())
        throw std::invalid_argument("residue: coefficient of exponent -1 was truncated away");
    return a.coeff(-1);
}

TruncSeries series_reciprocal(const TruncSeries& a, int floor) {
    int top = a.top_nonzero();
    if (top < a.low() || !(a.coeff(top) == MPoly(1)))
        throw std::invalid_argument("reciprocal needs leading coefficient 1");
    // a = x^top (1 + u) with u of strictly negative order; invert the unit.
    TruncSeries u(a.var(), a.low() - top, -1, a.tail_complete());
    for (int e = a.low(); e < top; e++) u.set_coeff(e - top, a.coeff(e));
    TruncSeries inv(a.var(), floor + top, -top, false);
    inv.set_coeff(-top, MPoly(1));
    TruncSeries pw = TruncSeries::zero(a.var(), 0);
    pw.set_coeff(0, MPoly(1));
    int uord = -1;
    for (int k = 1; k * uord + (-top) >= floor + top - 1 && k * uord >= floor; k++) {
        pw = series_mul(pw, u, floor);
        if (pw.top_nonzero() < pw.low()) break;
        for (int e = pw.low(); e <= pw.high(); e++) {
            int t = e - top;
            if (t < inv.low() || t > inv.high()) continue;
            inv.set_coeff(t, inv.coeff(t) + pw.coeff(e) * rat(k % 2 == 0 ? 1 : -1));
        }
    }
    return inv;
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner, int floor) {
    TruncSeries inv = series_reciprocal(inner, floor - inner.high());
    TruncSeries acc = TruncSeries::zero(inner.var(), 0);
    // Positive powers ascending, negative powers descending, both chained.
    TruncSeries pos(inner.var(), 0, 0, true), neg = pos;
    pos.set_coeff(0, MPoly(1));
    neg.set_coeff(0, MPoly(1));
    for (int e = 0; e <= outer.high(); e++) {
        if (!outer.coeff(e).is_zero()) acc = acc + pos.scaled(outer.coeff(e));
        if (e < outer.high()) pos = series_mul(pos, inner, floor);
    }
    for (int e = -1; e >= outer.low(); e--) {
        neg = series_mul(neg, inv, floor);
        if (!outer.coeff(e).is_zero()) acc = acc + neg.scaled(outer.coeff(e));
    }
    return acc;
}

TruncSeries series_reversion(const TruncSeries& lam, int depth) {
    if (lam.var() != var_p) throw std::invalid_argument("reversion expects a series in p");
    if (!(lam.coeff(1) == MPoly(1)) || !lam.coeff(0).is_zero() || lam.top_nonzero() > 1)
        throw std::invalid_argument("reversion: series must have shape p + lower order tail");
    if (depth < 1) throw std::invalid_argument("reversion depth must be >= 1");
    int floor = -depth - 2;
    TruncSeries q(var_lam, -depth, 1, true);
    q.set_coeff(1, MPoly(1));
    for (int m = 1; m <= depth; m++) {
        TruncSeries img = series_compose(lam, q, floor);
        // residual lambda(q) - lambda vanishes above exponent -m by induction
        MPoly e = -img.coeff(-m);
        q.set_coeff(-m, e);
    }
    return q;
}

} // namespace mdiff
