#pragma once

#include <optional>
#include <vector>

#include "mdiff/mpoly.hpp"

namespace mdiff {

// Truncated Laurent series in one distinguished variable with MPoly
// coefficients.
//
// A series stores coefficients on the window [low, high] and represents a
// Laurent polynomial whose support lies at or below `high`. Coefficients
// below `low` have been discarded unless `tail_complete()` holds, in which
// case the stored data is the whole object. Binary operations compute the
// exact result wherever the operands determine it and shrink the window
// accordingly, so a residue or plus-part taken afterwards is either exact or
// rejected loudly.
class TruncSeries {
  public:
    TruncSeries(VarId var, int low, int high, bool tail_complete = false);

    static TruncSeries zero(VarId var, int at = 0) { return TruncSeries(var, at, at, true); }

    const VarId& var() const { return var_; }
    int low() const { return low_; }
    int high() const { return high_; }
    bool tail_complete() const { return tail_complete_; }

    const MPoly& coeff(int exp) const; // zero outside the window
    void set_coeff(int exp, MPoly c);
    // Largest exponent carrying a nonzero coefficient (low-1 when empty).
    int top_nonzero() const;

    bool same_on_window(const TruncSeries& o) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries scaled(const MPoly& c) const;

    // Keep exponents >= floor only.
    TruncSeries clamped(int floor) const;

    TruncSeries derivative() const; // d/d(var)

  private:
    VarId var_;
    int low_, high_;
    bool tail_complete_;
    std::vector<MPoly> c_;
};

// Product, truncated at min(a.high+b.high, ceiling) and clamped below at
// floor. The window of the result is the largest one on which the operands
// determine the product.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b,
                       std::optional<int> floor = std::nullopt,
                       std::optional<int> ceiling = std::nullopt);

// a^n computed as a power chain; the result is exact on [floor, n*a.high].
TruncSeries series_pow(const TruncSeries& a, int n, int floor);

// Terms with exponent >= 0; requires the window to reach down to 0.
TruncSeries series_plus_part(const TruncSeries& a);

// Coefficient of exponent -1; requires low <= -1.
MPoly series_residue(const TruncSeries& a);

// Reciprocal of a series whose top term is 1*var^(a.top); exact down to floor.
TruncSeries series_reciprocal(const TruncSeries& a, int floor);

// Substitute `inner` (a series in its own variable) for the variable of
// `outer`; the result is a series in inner.var(), exact down to floor.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner, int floor);

// Functional inverse of a series of shape p + (tail with exponents <= -1):
// returns p(lambda) = lambda + sum_{k>=1} e_k lambda^{-k} with e_k computed
// for k <= depth. The output variable is var_lam.
TruncSeries series_reversion(const TruncSeries& lam, int depth);

} // namespace mdiff
