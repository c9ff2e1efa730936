#include "lahkit/scalar.hpp"

#include <vector>

namespace lahkit {

Scalar Scalar::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Integer(s));
        return Scalar(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw domain_error("Scalar: cannot parse '" + s + "'");
    }
}

Integer factorial(long n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0) throw domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(const std::vector<long>& parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw domain_error("multinomial: negative part");
        total += p;
    }
    Integer r = factorial(total);
    for (long p : parts) r /= factorial(p);
    return r;
}

Integer multifactorial(long n, long r) {
    if (n < 0) throw domain_error("multifactorial: negative n");
    Integer v = 1;
    for (long j = 0; j < n; ++j) v *= (1 + j * r);
    return v;
}

Integer shifted_multifactorial(long n, long r) {
    if (n < 0) throw domain_error("shifted_multifactorial: negative n");
    Integer v = 1;
    for (long j = 0; j < n; ++j) v *= ((r - 1) + j * r);
    return v;
}

Integer rising_product(long j, long i) {
    if (j < 1 || j > i + 1) throw domain_error("rising_product: need 1 <= j <= i+1");
    Integer v = 1;
    for (long l = j; l <= i; ++l) v *= l;
    return v;
}

Scalar comb_scalar(const std::string& kind, const std::vector<long>& args) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw domain_error("comb_scalar: '" + kind + "' expects " +
                               std::to_string(n) + " argument(s)");
    };
    if (kind == "factorial") {
        need(1);
        return Scalar(factorial(args[0]));
    }
    if (kind == "binomial") {
        need(2);
        return Scalar(binomial(args[0], args[1]));
    }
    if (kind == "multinomial") return Scalar(multinomial(args));
    if (kind == "multifactorial") {
        need(2);
        return Scalar(multifactorial(args[0], args[1]));
    }
    if (kind == "shifted-multifactorial") {
        need(2);
        return Scalar(shifted_multifactorial(args[0], args[1]));
    }
    throw domain_error("comb_scalar: unknown kind '" + kind + "'");
}

} // namespace lahkit
