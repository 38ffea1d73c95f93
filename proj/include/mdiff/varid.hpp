#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace mdiff {

// Variable families. The order of the enumerators fixes the canonical
// variable order used everywhere (serialization, printing, monomial keys).
enum class Family : uint8_t {
    F,     // f_i, dependent variables of the lambda series, i >= 1
    W,     // w_i, conserved densities, i >= 1
    T,     // t_d, second-type generating variables, d >= 2
    TP,    // t^alpha, Frobenius coordinates, alpha in Z \ {-1}
    X,     // x
    Y,     // y
    Z,     // z
    Q,     // q, SL2 character variable
    P,     // p, Laurent series variable
    Lam,   // lambda, reversion target variable
    Zeta,  // zeta
    FD,    // f_i^(j), jet variables; i >= 1, j >= 0
};

struct VarId {
    Family fam;
    int32_t i1 = 0; // index within the family
    int32_t i2 = 0; // derivative order, FD only

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

VarId var_f(int i);
VarId var_w(int i);
VarId var_t(int d);
VarId var_tp(int alpha);
VarId var_fd(int i, int j);
inline constexpr VarId var_x{Family::X};
inline constexpr VarId var_y{Family::Y};
inline constexpr VarId var_z{Family::Z};
inline constexpr VarId var_q{Family::Q};
inline constexpr VarId var_p{Family::P};
inline constexpr VarId var_lam{Family::Lam};
inline constexpr VarId var_zeta{Family::Zeta};

// Plain-text names: "f3", "w2", "t5", "tp-4", "x", ..., "f2_1" for f_2^(1).
std::string var_name(const VarId& v);
std::optional<VarId> var_parse(const std::string& name);

// Weight assignment used for graded truncation. Families not covered are
// rejected by weighted operations.
class Grading {
  public:
    using WeightFn = std::function<std::optional<int>(const VarId&)>;

    explicit Grading(WeightFn fn) : fn_(std::move(fn)) {}

    std::optional<int> weight(const VarId& v) const { return fn_(v); }

    // deg f_i = deg w_i = i+1, deg p = 1.
    static Grading dkp();
    // deg t_d = d.
    static Grading t_weight();
    // deg t^{-c} = c, deg t^{alpha>=0} = 0.
    static Grading tp_neg_weight();
    // total degree in the given families (weight 1), everything else 0.
    static Grading degree_in(std::initializer_list<Family> fams);

  private:
    WeightFn fn_;
};

} // namespace mdiff
