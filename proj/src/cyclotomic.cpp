#include "lambdachar/cyclotomic.hpp"

#include "lambdachar/errors.hpp"
#include "lambdachar/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace lambdachar {

namespace {

// Phi_N cache: concurrent readers, serialized insertion. Entries are never
// erased, so references stay valid for the life of the process.
struct PhiCache {
    std::shared_mutex mu;
    std::map<int, std::unique_ptr<std::vector<long>>> polys;
};

PhiCache& phi_cache() {
    static PhiCache cache;
    return cache;
}

std::vector<long> compute_phi(int n) {
    // (x^n - 1) / prod_{d | n, d < n} Phi_d with exact integer division.
    std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& div = cyclotomic_polynomial(d);
        // Divisors are monic, so long division stays integral.
        std::size_t dn = num.size() - 1, dd = div.size() - 1;
        std::vector<long> q(dn - dd + 1, 0);
        for (std::size_t i = dn + 1; i-- > dd;) {
            long c = num[i];
            if (c == 0) continue;
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
        }
        num = std::move(q);
    }
    return num;
}

// Reduces a dense vector in powers of zeta_n (any length) to the power basis.
std::vector<Rational> reduce_dense(int n, std::vector<Rational> v) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    if (v.size() > static_cast<std::size_t>(n)) {
        for (std::size_t j = static_cast<std::size_t>(n); j < v.size(); ++j)
            if (!v[j].is_zero()) v[j % static_cast<std::size_t>(n)] += v[j];
        v.resize(static_cast<std::size_t>(n));
    }
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0) v[i - deg + j] -= c * Rational(phi[j]);
    }
    v.resize(deg, Rational(0));
    return v;
}

// Integer form of reduce_dense; Phi_n is monic so no denominators appear.
void reduce_dense_int(int n, std::vector<BigInt>& v) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    if (v.size() > static_cast<std::size_t>(n)) {
        for (std::size_t j = static_cast<std::size_t>(n); j < v.size(); ++j)
            if (sgn(v[j]) != 0) v[j % static_cast<std::size_t>(n)] += v[j];
        v.resize(static_cast<std::size_t>(n));
    }
    BigInt t;
    for (std::size_t i = v.size(); i-- > deg;) {
        if (sgn(v[i]) == 0) continue;
        BigInt c = v[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0) {
                t = c * phi[j];
                v[i - deg + j] -= t;
            }
    }
    v.resize(deg, BigInt(0));
}

// Numerators over the least common denominator, which is returned.
BigInt to_integers(const std::vector<Rational>& v, std::vector<BigInt>& nums) {
    BigInt d = 1;
    for (const auto& x : v)
        if (!x.is_zero() && x.denominator() != 1) d = lcm(d, x.denominator());
    nums.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) nums[i] = d == 1 ? v[i].numerator() : v[i].numerator() * (d / v[i].denominator());
    return d;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
    if (n < 1) throw InputError("cyclotomic order must be positive");
    auto& cache = phi_cache();
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.polys.find(n);
        if (it != cache.polys.end()) return *it->second;
    }
    // Computed outside the lock: the recursion takes the lock for divisors.
    auto poly = std::make_unique<std::vector<long>>(n == 1 ? std::vector<long>{-1, 1} : compute_phi(n));
    std::unique_lock lock(cache.mu);
    auto [it, inserted] = cache.polys.emplace(n, std::move(poly));
    return *it->second;
}

Cyclotomic Cyclotomic::make(int order, const std::vector<std::pair<long, Rational>>& terms) {
    if (order < 1) throw InputError("cyclotomic order must be positive, got " + std::to_string(order));
    std::vector<Rational> dense(static_cast<std::size_t>(order), Rational(0));
    for (const auto& [e, q] : terms) dense[static_cast<std::size_t>(mod_pos(e, order))] += q;
    return Cyclotomic(order, reduce_dense(order, std::move(dense)));
}

Cyclotomic Cyclotomic::root(int order, long exponent) {
    return make(order, {{exponent, Rational(1)}});
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(order)))
        throw std::invalid_argument("coefficient vector length must be phi(order)");
    return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == order_) return *this;
    if (m % order_) throw std::invalid_argument("lift target must be a multiple of the order");
    if (is_rational()) {
        std::vector<Rational> v(static_cast<std::size_t>(euler_phi(m)), Rational(0));
        v[0] = c_[0];
        return Cyclotomic(m, std::move(v));
    }
    // zeta_N = zeta_m^(m/N)
    std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<Rational> dense((c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) dense[i * step] = c_[i];
    return Cyclotomic(m, reduce_dense(m, std::move(dense)));
}

Cyclotomic Cyclotomic::minimal() const {
    if (is_rational()) return Cyclotomic(c_[0]);
    for (int d = 1; d < order_; ++d) {
        if (order_ % d) continue;
        // x lies in Q(zeta_d) iff it is fixed by every zeta -> zeta^k with k = 1 mod d.
        bool fixed = true;
        for (long k = 1 + d; k < order_ && fixed; k += d)
            if (std::gcd(k, static_cast<long>(order_)) == 1 && !(galois(k) == *this)) fixed = false;
        if (!fixed) continue;
        // Solve for coordinates over Q(zeta_d): the lifts of its basis vectors
        // are distinct powers zeta_N^(i*N/d), but those may not be basis
        // elements, so solve the linear system by elimination.
        int pd = euler_phi(d);
        std::size_t rows = c_.size();
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(static_cast<std::size_t>(pd) + 1, Rational(0)));
        for (int i = 0; i < pd; ++i) {
            auto col = root(d, i).lifted(order_).c_;
            for (std::size_t r = 0; r < rows; ++r) a[r][static_cast<std::size_t>(i)] = col[r];
        }
        for (std::size_t r = 0; r < rows; ++r) a[r][static_cast<std::size_t>(pd)] = c_[r];
        std::size_t pivot_row = 0;
        std::vector<int> pivot_col_of_row;
        for (int col = 0; col < pd; ++col) {
            std::size_t p = pivot_row;
            while (p < rows && a[p][static_cast<std::size_t>(col)].is_zero()) ++p;
            if (p == rows) continue;
            std::swap(a[p], a[pivot_row]);
            Rational inv = Rational(1) / a[pivot_row][static_cast<std::size_t>(col)];
            for (auto& x : a[pivot_row]) x *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pivot_row || a[r][static_cast<std::size_t>(col)].is_zero()) continue;
                Rational f = a[r][static_cast<std::size_t>(col)];
                for (std::size_t j = 0; j < a[r].size(); ++j) a[r][j] -= f * a[pivot_row][j];
            }
            pivot_col_of_row.push_back(col);
            ++pivot_row;
        }
        std::vector<Rational> out(static_cast<std::size_t>(pd), Rational(0));
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            out[static_cast<std::size_t>(pivot_col_of_row[r])] = a[r][static_cast<std::size_t>(pd)];
        return Cyclotomic(d, std::move(out));
    }
    return *this;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw NotRational("value " + to_string() + " is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]).lifted(order_);
    using P = Polynomial<Rational>;
    const auto& phi = cyclotomic_polynomial(order_);
    std::vector<Rational> pc;
    for (long x : phi) pc.emplace_back(x);
    // Extended Euclid tracking only the cofactor of a: s*a = r (mod Phi).
    P r0(pc), r1(c_);
    P s0, s1(Rational(1));
    while (r1.degree() > 0) {
        auto [q, r] = P::divmod(r0, r1);
        P s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi is irreducible.
    Rational inv = Rational(1) / r1.coeff(0);
    std::vector<Rational> v = s1.coeffs();
    for (auto& x : v) x *= inv;
    return Cyclotomic(order_, reduce_dense(order_, std::move(v)));
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (is_rational()) return *this;
    long kk = mod_pos(k, order_);
    if (std::gcd(kk, static_cast<long>(order_)) != 1) throw std::invalid_argument("galois exponent must be a unit");
    std::vector<Rational> dense(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) dense[static_cast<std::size_t>(mod_pos(static_cast<long>(i) * kk, order_))] += c_[i];
    return Cyclotomic(order_, reduce_dense(order_, std::move(dense)));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic acc = Cyclotomic(1).lifted(order_);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    if (order_ != o.order_) {
        int m = lcm_int(order_, o.order_);
        *this = lifted(m);
        Cyclotomic ol = o.lifted(m);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += ol.c_[i];
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.is_rational()) {
        const Rational s = o.c_[0];
        int m = lcm_int(order_, o.order_);
        if (m != order_) *this = lifted(m);
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (is_rational()) {
        const Rational s = c_[0];
        *this = o.lifted(lcm_int(order_, o.order_));
        for (auto& x : c_) x *= s;
        return *this;
    }
    int m = lcm_int(order_, o.order_);
    const Cyclotomic a = lifted(m), b = o.lifted(m);
    // Multiply integer numerators and divide once at the end.
    std::vector<BigInt> an, bn;
    BigInt den = to_integers(a.c_, an) * to_integers(b.c_, bn);
    std::vector<BigInt> dense(an.size() + bn.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < an.size(); ++i) {
        if (sgn(an[i]) == 0) continue;
        for (std::size_t j = 0; j < bn.size(); ++j)
            if (sgn(bn[j]) != 0) mpz_addmul(dense[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
    reduce_dense_int(m, dense);
    std::vector<Rational> out;
    out.reserve(dense.size());
    for (auto& x : dense) out.push_back(den == 1 ? Rational(x) : Rational(x, den));
    *this = Cyclotomic(m, std::move(out));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    if (a.is_rational() || b.is_rational()) return false;
    int m = lcm_int(a.order_, b.order_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms_at(int m) const {
    Cyclotomic l = lifted(m);
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < l.c_.size(); ++i)
        if (!l.c_[i].is_zero()) out.emplace_back(static_cast<int>(i), l.c_[i]);
    return out;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c_[0].to_string();
    Cyclotomic m = minimal();
    std::string out;
    std::string z = "z" + std::to_string(m.order_);
    for (std::size_t i = 0; i < m.c_.size(); ++i) {
        const Rational& q = m.c_[i];
        if (q.is_zero()) continue;
        bool neg = q.sign() < 0;
        Rational a = neg ? -q : q;
        std::string mono = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
        std::string term = i == 0 ? a.to_string() : (a == Rational(1) ? mono : a.to_string() + "*" + mono);
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

} // namespace lambdachar
