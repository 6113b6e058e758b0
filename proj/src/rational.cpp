#include "lambdachar/rational.hpp"

#include "lambdachar/errors.hpp"

#include <charconv>
#include <functional>

namespace lambdachar {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    std::string digits(s.substr(i));
    out = BigInt(digits, 10);
    if (s[0] == '-') out = -out;
    return true;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    auto slash = text.find('/');
    BigInt num, den = 1;
    bool ok = slash == std::string_view::npos
                  ? parse_integer(text, num)
                  : parse_integer(text.substr(0, slash), num) &&
                        parse_integer(text.substr(slash + 1), den);
    if (!ok) throw InputError("not a rational number: '" + std::string(text) + "'");
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

long Rational::to_long() const {
    if (!is_integer()) throw NonIntegral("value " + to_string() + " is not an integer");
    if (!q_.get_num().fits_slong_p()) throw InputError("integer " + to_string() + " is too large");
    return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str(10);
}

Rational binomial(const Rational& r, unsigned n) {
    Rational acc = 1;
    for (unsigned i = 0; i < n; ++i) {
        acc *= r - Rational(static_cast<long>(i));
        acc /= Rational(static_cast<long>(i + 1));
    }
    return acc;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::size_t hash_value(const Rational& x) {
    return std::hash<std::string>{}(x.to_string());
}

} // namespace lambdachar
