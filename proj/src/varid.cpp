#include "mdiff/varid.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdiff {

VarId var_f(int i) {
    if (i < 1) throw std::invalid_argument("f index must be >= 1");
    return {Family::F, i, 0};
}

VarId var_w(int i) {
    if (i < 1) throw std::invalid_argument("w index must be >= 1");
    return {Family::W, i, 0};
}

VarId var_t(int d) {
    if (d < 2) throw std::invalid_argument("t index must be >= 2");
    return {Family::T, d, 0};
}

VarId var_tp(int alpha) {
    if (alpha == -1) throw std::invalid_argument("t^alpha index -1 is excluded");
    return {Family::TP, alpha, 0};
}

VarId var_fd(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("bad jet variable index");
    return {Family::FD, i, j};
}

std::string var_name(const VarId& v) {
    switch (v.fam) {
        case Family::F: return "f" + std::to_string(v.i1);
        case Family::W: return "w" + std::to_string(v.i1);
        case Family::T: return "t" + std::to_string(v.i1);
        case Family::TP: return "tp" + std::to_string(v.i1);
        case Family::X: return "x";
        case Family::Y: return "y";
        case Family::Z: return "z";
        case Family::Q: return "q";
        case Family::P: return "p";
        case Family::Lam: return "lam";
        case Family::Zeta: return "zeta";
        case Family::FD:
            return "f" + std::to_string(v.i1) + "_" + std::to_string(v.i2);
    }
    throw std::logic_error("unreachable");
}

std::optional<VarId> var_parse(const std::string& name) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t k = (s[0] == '-') ? 1 : 0;
        if (k == s.size()) return false;
        return std::all_of(s.begin() + k, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (name == "x") return var_x;
    if (name == "y") return var_y;
    if (name == "z") return var_z;
    if (name == "q") return var_q;
    if (name == "p") return var_p;
    if (name == "lam") return var_lam;
    if (name == "zeta") return var_zeta;
    try {
        if (name.rfind("tp", 0) == 0 && is_int(name.substr(2)))
            return var_tp(std::stoi(name.substr(2)));
        if (name.size() > 1 && name[0] == 't' && is_int(name.substr(1)))
            return var_t(std::stoi(name.substr(1)));
        if (name.size() > 1 && name[0] == 'w' && is_int(name.substr(1)))
            return var_w(std::stoi(name.substr(1)));
        if (name.size() > 1 && name[0] == 'f') {
            auto us = name.find('_');
            if (us == std::string::npos) {
                if (is_int(name.substr(1))) return var_f(std::stoi(name.substr(1)));
            } else if (is_int(name.substr(1, us - 1)) && is_int(name.substr(us + 1))) {
                return var_fd(std::stoi(name.substr(1, us - 1)), std::stoi(name.substr(us + 1)));
            }
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

Grading Grading::dkp() {
    return Grading([](const VarId& v) -> std::optional<int> {
        switch (v.fam) {
            case Family::F:
            case Family::W: return v.i1 + 1;
            case Family::P: return 1;
            default: return std::nullopt;
        }
    });
}

Grading Grading::t_weight() {
    return Grading([](const VarId& v) -> std::optional<int> {
        if (v.fam == Family::T) return v.i1;
        return std::nullopt;
    });
}

Grading Grading::tp_neg_weight() {
    return Grading([](const VarId& v) -> std::optional<int> {
        if (v.fam == Family::TP) return v.i1 < 0 ? -v.i1 : 0;
        return std::nullopt;
    });
}

Grading Grading::degree_in(std::initializer_list<Family> fams) {
    std::vector<Family> fs(fams);
    return Grading([fs](const VarId& v) -> std::optional<int> {
        for (Family f : fs)
            if (v.fam == f) return 1;
        return 0;
    });
}

} // namespace mdiff
