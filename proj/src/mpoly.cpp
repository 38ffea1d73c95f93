#include "mdiff/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdiff {

Monomial::Monomial(std::initializer_list<std::pair<VarId, int>> factors) {
    for (const auto& [v, e] : factors)
        if (e != 0) v_.emplace_back(v, e);
    std::sort(v_.begin(), v_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < v_.size(); i++)
        if (v_[i].first == v_[i - 1].first) throw std::invalid_argument("repeated variable in monomial");
}

Monomial Monomial::var(const VarId& v, int exp) {
    Monomial m;
    if (exp != 0) m.v_.emplace_back(v, exp);
    return m;
}

int Monomial::exponent(const VarId& v) const {
    for (const auto& [u, e] : v_)
        if (u == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [u, e] : v_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.v_.reserve(v_.size() + o.v_.size());
    size_t i = 0, j = 0;
    while (i < v_.size() && j < o.v_.size()) {
        if (v_[i].first < o.v_[j].first) {
            r.v_.push_back(v_[i++]);
        } else if (o.v_[j].first < v_[i].first) {
            r.v_.push_back(o.v_[j++]);
        } else {
            int e = v_[i].second + o.v_[j].second;
            if (e != 0) r.v_.emplace_back(v_[i].first, e);
            i++, j++;
        }
    }
    for (; i < v_.size(); i++) r.v_.push_back(v_[i]);
    for (; j < o.v_.size(); j++) r.v_.push_back(o.v_[j]);
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    size_t i = 0, j = 0;
    while (i < v_.size() && j < o.v_.size()) {
        if (v_[i].first < o.v_[j].first)
            return v_[i].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (o.v_[j].first < v_[i].first)
            return o.v_[j].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        if (v_[i].second != o.v_[j].second)
            return v_[i].second > o.v_[j].second ? std::strong_ordering::less : std::strong_ordering::greater;
        i++, j++;
    }
    if (i < v_.size()) return v_[i].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (j < o.v_.size()) return o.v_[j].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

MPoly::MPoly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial{}, c);
}

MPoly MPoly::var(const VarId& v, int exp) {
    MPoly p;
    p.t_.emplace(Monomial::var(v, exp), rat(1));
    return p;
}

MPoly MPoly::term(const Rational& c, const Monomial& m) {
    MPoly p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_constant());
}

const Rational& MPoly::coeff(const Monomial& m) const {
    static const Rational zero(0);
    auto it = t_.find(m);
    return it == t_.end() ? zero : it->second;
}

MPoly& MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(*this);
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r(*this);
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    MPoly r(*this);
    for (auto& [m, x] : r.t_) x *= c;
    return r;
}

MPoly MPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    MPoly r(*this);
    for (auto& [m, x] : r.t_) x /= c;
    return r;
}

MPoly MPoly::derivative(const VarId& v) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m * Monomial::var(v, -1), c * e);
    }
    return r;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& repl) const {
    // Per-variable power cache; substituted variables must appear with
    // nonnegative exponents.
    std::map<std::pair<VarId, int>, MPoly> powers;
    auto power = [&](const VarId& v, int e) -> const MPoly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        MPoly p = e == 0 ? MPoly(1) : repl.at(v);
        for (int k = 1; k < e; k++) p = p * repl.at(v);
        return powers.emplace(key, std::move(p)).first->second;
    };
    MPoly r;
    for (const auto& [m, c] : t_) {
        MPoly acc(c);
        Monomial untouched;
        for (const auto& [v, e] : m.factors()) {
            if (!repl.count(v)) {
                untouched = untouched * Monomial::var(v, e);
                continue;
            }
            if (e < 0) throw std::invalid_argument("negative exponent in substitution");
            acc = acc * power(v, e);
        }
        for (const auto& [m2, c2] : acc.terms()) r.add_term(m2 * untouched, c2);
    }
    return r;
}

MPoly MPoly::coeff_of(const VarId& v, int k) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        if (m.exponent(v) != k) continue;
        r.add_term(m * Monomial::var(v, -k), c);
    }
    return r;
}

int MPoly::max_exponent(const VarId& v) const {
    int best = 0;
    for (const auto& [m, c] : t_) best = std::max(best, m.exponent(v));
    return best;
}

int MPoly::min_exponent(const VarId& v) const {
    int best = 0;
    for (const auto& [m, c] : t_) best = std::min(best, m.exponent(v));
    return best;
}

int MPoly::weight(const Monomial& m, const Grading& g) const {
    int w = 0;
    for (const auto& [v, e] : m.factors()) {
        auto wt = g.weight(v);
        if (!wt) throw std::invalid_argument("unweighted variable " + var_name(v));
        w += e * *wt;
    }
    return w;
}

MPoly MPoly::weighted_truncate(const Grading& g, int bound) const {
    MPoly r;
    for (const auto& [m, c] : t_)
        if (weight(m, g) <= bound) r.add_term(m, c);
    return r;
}

bool MPoly::is_homogeneous(const Grading& g, int w) const {
    for (const auto& [m, c] : t_)
        if (weight(m, g) != w) return false;
    return true;
}

MPoly mpoly_log(const MPoly& a, const Grading& g, int bound) {
    if (a.constant_term() != 1) throw std::invalid_argument("log argument must have constant term 1");
    MPoly n = (a - MPoly(1)).weighted_truncate(g, bound);
    for (const auto& [m, c] : n.terms())
        if (n.weight(m, g) <= 0) throw std::invalid_argument("log tail must have positive weight");
    // Smallest positive weight present bounds the number of powers needed.
    int minw = bound + 1;
    for (const auto& [m, c] : n.terms()) minw = std::min(minw, n.weight(m, g));
    MPoly r, pw(1);
    int kmax = minw > 0 ? bound / minw : 0;
    for (int k = 1; k <= kmax; k++) {
        pw = (pw * n).weighted_truncate(g, bound);
        r += pw * rat(k % 2 == 1 ? 1 : -1, k);
    }
    return r;
}

} // namespace mdiff
