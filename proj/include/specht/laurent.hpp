#ifndef SPECHT_LAURENT_HPP
#define SPECHT_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

namespace specht {

// Sparse integer Laurent polynomial in one indeterminate v.
class Laurent {
public:
    Laurent() = default;
    static Laurent monomial(long long coeff, int exp) {
        Laurent r;
        if (coeff != 0) r.terms_[exp] = coeff;
        return r;
    }
    static Laurent one() { return monomial(1, 0); }

    const std::map<int, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    long long at_one() const {
        long long s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    bool divisible_by_v() const { return terms_.empty() || terms_.begin()->first >= 1; }
    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
    bool nonnegative_coeffs() const {
        for (auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    // degree s when the polynomial is exactly v^s
    std::optional<int> monic_monomial_degree() const {
        if (terms_.size() == 1 && terms_.begin()->second == 1) return terms_.begin()->first;
        return std::nullopt;
    }

    // substitute v -> v^{-1}
    Laurent bar() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long long a = c;
            if (!first) {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            bool unit = (a == 1 || a == -1) && e != 0;
            if (a == -1 && e != 0) out += '-';
            if (!unit) out += std::to_string(a);
            if (e != 0) {
                out += 'v';
                if (e != 1) out += '^' + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, long long> terms_;  // exponent -> nonzero coefficient
};

}  // namespace specht

#endif
