#include "wallx/rational.hpp"

#include <cctype>

namespace wallx {

Rat rat_from_string(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
              ch == '+' || ch == '/'))
            throw parse_error("invalid rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw parse_error("invalid rational literal: " + text);
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

long rat_to_long(const Rat& x) {
    if (!rat_is_integer(x))
        throw domain_error("expected an integer, got " + rat_to_string(x));
    if (!x.get_num().fits_slong_p())
        throw domain_error("integer out of range: " + rat_to_string(x));
    return x.get_num().get_si();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace wallx
