#include "quadsolv/diff_poly.hpp"

#include <sstream>

namespace quadsolv {

std::string derivative_symbol(const std::string& sym, int order) {
    if (order <= 3) return sym + std::string(static_cast<size_t>(order), '\'');
    return sym + "^(" + std::to_string(order) + ")";
}

std::string to_string(const DiffPoly& p, const std::string& sym) {
    if (is_zero(p)) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        CoeffFormat f = format_coeff_ratfunc(c);
        if (first) {
            if (f.negative) os << "-";
            first = false;
        } else {
            os << (f.negative ? " - " : " + ");
        }
        std::string mono;
        for (const auto& [ord, e] : m.exps) {
            if (!mono.empty()) mono += "*";
            mono += derivative_symbol(sym, ord);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << f.magnitude;
        } else {
            if (!f.is_one) os << (f.composite ? "(" + f.magnitude + ")" : f.magnitude) << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace quadsolv
