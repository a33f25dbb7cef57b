#include "qsuper/rational.hpp"

namespace qsuper {

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { return field_error("malformed rational literal: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) throw bad();
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw bad();
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpz_class(text));
    }
    const std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    check_int(n);
    check_int(d);
    return Rational(mpz_class(n), mpz_class(d));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw field_error("division by zero");
        return Rational(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

} // namespace qsuper
