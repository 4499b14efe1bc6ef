#include "core/field.hpp"

#include <algorithm>

namespace ckinf {

namespace {

using poly = std::vector<std::uint32_t>;  // little-endian coefficients over F_p

void trim(poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const poly& f) { return static_cast<int>(f.size()) - 1; }

poly psub(const poly& a, const poly& b, std::uint32_t p) {
    poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

poly pmul(const poly& a, const poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// Reduction by a monic modulus f.
poly pmod(poly a, const poly& f, std::uint32_t p) {
    trim(a);
    int df = degree(f);
    while (degree(a) >= df) {
        std::uint32_t c = a.back();
        int shift = degree(a) - df;
        for (int i = 0; i <= df; ++i)
            a[i + shift] = (a[i + shift] + std::uint64_t(p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

poly pgcd(poly a, poly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint64_t r = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::uint32_t lead = inv_mod_p(b.back());
        poly bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>(std::uint64_t(c) * lead % p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

poly ppow(poly base, std::uint64_t e, const poly& f, std::uint32_t p) {
    poly r{1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Rabin test: f (monic, degree m) is irreducible over F_p iff x^{p^m} = x mod f
// and gcd(x^{p^{m/t}} - x, f) = 1 for each prime t | m.
bool irreducible(const poly& f, std::uint32_t p) {
    int md = degree(f);
    std::vector<poly> frob(md + 1);  // frob[j] = x^{p^j} mod f
    frob[0] = pmod(poly{0, 1}, f, p);
    for (int j = 1; j <= md; ++j) frob[j] = ppow(frob[j - 1], p, f, p);
    poly x = pmod(poly{0, 1}, f, p);
    if (psub(frob[md], x, p) != poly{}) return false;
    for (std::uint64_t t : distinct_prime_factors(md)) {
        poly g = pgcd(psub(frob[md / t], x, p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint32_t> Field::to_poly(felem a) const {
    std::vector<std::uint32_t> c(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = a % p;
        a /= p;
    }
    return c;
}

felem Field::from_poly(const std::vector<std::uint32_t>& c) const {
    require(c.size() <= m, "polynomial degree exceeds field degree");
    std::uint64_t a = 0;
    for (size_t i = c.size(); i-- > 0;) {
        require(c[i] < p, "coefficient out of range");
        a = a * p + c[i];
    }
    return static_cast<felem>(a);
}

Field Field::make(std::uint32_t p, std::uint32_t m) {
    require(is_prime_u32(p), "p must be prime");
    require(m >= 1, "m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= max_size, "field size exceeds limit");
    }
    if (m == 1) return make(p, m, {0, 1});
    // Scan low parts by ascending integer encoding; the first irreducible wins.
    for (std::uint64_t e = 0; e < q; ++e) {
        poly f(m + 1, 0);
        std::uint64_t t = e;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (irreducible(f, p)) return make(p, m, f);
    }
    fail_internal("no irreducible modulus found");
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    require(is_prime_u32(p), "p must be prime");
    require(m >= 1, "m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= max_size, "field size exceeds limit");
    }
    require(modulus.size() == m + 1, "modulus must have degree m");
    for (auto c : modulus) require(c < p, "modulus coefficient out of range");
    require(modulus[m] == 1, "modulus must be monic");
    if (m > 1) require(irreducible(modulus, p), "modulus must be irreducible");

    Field F;
    F.p = p;
    F.m = m;
    F.q = q;
    F.modulus = std::move(modulus);
    F.init();
    return F;
}

void Field::init() {
    qm1_primes_ = distinct_prime_factors(q - 1);
    primitive_element = 0;
    for (felem a = 1; a < q; ++a) {
        bool full = true;
        for (std::uint64_t t : qm1_primes_)
            if (pow_generic(a, (q - 1) / t) == 1) {
                full = false;
                break;
            }
        if (full) {
            primitive_element = a;
            break;
        }
    }
    if (primitive_element == 0) fail_internal("no primitive element found");

    if (q <= table_limit) {
        exp_.assign(q - 1, 0);
        log_.assign(q, 0);
        felem cur = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_generic(cur, primitive_element);
        }
        if (cur != 1) fail_internal("primitive element order mismatch");
    }
}

felem Field::add(felem a, felem b) const {
    if (p == 2) return a ^ b;
    if (m == 1) {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    felem r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t s = a % p + b % p;
        if (s >= p) s -= p;
        r += static_cast<felem>(s * mult);
        a /= p;
        b /= p;
        mult *= p;
    }
    return r;
}

felem Field::neg(felem a) const {
    if (p == 2) return a;
    if (m == 1) return a == 0 ? 0 : p - a;
    felem r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t c = a % p;
        r += static_cast<felem>((c == 0 ? 0 : p - c) * mult);
        a /= p;
        mult *= p;
    }
    return r;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_generic(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (m == 1) return static_cast<felem>(std::uint64_t(a) * b % p);
    poly r = pmod(pmul(to_poly(a), to_poly(b), p), modulus, p);
    std::uint64_t enc = 0;
    for (size_t i = r.size(); i-- > 0;) enc = enc * p + r[i];
    return static_cast<felem>(enc);
}

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t e = log_[a] + log_[b];
        if (e >= q - 1) e -= q - 1;
        return exp_[e];
    }
    return mul_generic(a, b);
}

felem Field::pow_generic(felem a, std::uint64_t e) const {
    felem r = 1;
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        e >>= 1;
    }
    return r;
}

felem Field::pow(felem a, std::int64_t e) const {
    if (e == 0) return 1;
    if (a == 0) {
        require(e > 0, "zero has no negative powers");
        return 0;
    }
    if (e < 0) return pow(inv(a), -e);
    if (!exp_.empty()) {
        std::uint64_t k = static_cast<std::uint64_t>(e) % (q - 1);
        std::uint64_t idx = (std::uint64_t(log_[a]) * (k % (q - 1))) % (q - 1);
        return exp_[idx];
    }
    felem r = 1;
    std::uint64_t ee = static_cast<std::uint64_t>(e);
    while (ee) {
        if (ee & 1) r = mul(r, a);
        a = mul(a, a);
        ee >>= 1;
    }
    return r;
}

felem Field::inv(felem a) const {
    require(a != 0, "zero is not invertible");
    if (!exp_.empty()) {
        std::uint64_t e = (q - 1 - log_[a]) % (q - 1);
        return exp_[e];
    }
    return pow_generic(a, q - 2);
}

bool Field::is_square(felem a) const {
    if (a == 0 || p == 2) return true;
    if (!exp_.empty()) return log_[a] % 2 == 0;
    return pow(a, static_cast<std::int64_t>((q - 1) / 2)) == 1;
}

std::optional<felem> Field::sqrt(felem a) const {
    if (a == 0) return 0;
    if (p == 2) return pow(a, static_cast<std::int64_t>(q / 2));
    felem y;
    if (!exp_.empty()) {
        std::uint64_t e = log_[a];
        if (e % 2 != 0) return std::nullopt;
        y = exp_[e / 2];
    } else {
        if (!is_square(a)) return std::nullopt;
        // Tonelli-Shanks on the cyclic group of order q-1 = 2^s * t.
        std::uint64_t t = q - 1;
        std::uint32_t s = 0;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        felem z = 0;
        for (felem c = 2; c < q; ++c)
            if (!is_square(c)) {
                z = c;
                break;
            }
        felem mroot = pow(z, static_cast<std::int64_t>(t));
        felem u = pow(a, static_cast<std::int64_t>(t));
        felem x = pow(a, static_cast<std::int64_t>((t + 1) / 2));
        std::uint32_t r = s;
        while (u != 1) {
            std::uint32_t i = 0;
            felem w = u;
            while (w != 1) {
                w = mul(w, w);
                ++i;
            }
            felem b = mroot;
            for (std::uint32_t j = 0; j + i + 1 < r; ++j) b = mul(b, b);
            mroot = mul(b, b);
            u = mul(u, mroot);
            x = mul(x, b);
            r = i;
        }
        y = x;
    }
    felem y2 = neg(y);
    return std::min(y, y2);
}

std::uint64_t Field::dlog(felem a) const {
    require(a != 0, "zero has no discrete log");
    if (!log_.empty()) return log_[a];
    // Fields above the table limit: linear scan (used only in small-scale checks).
    felem cur = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        if (cur == a) return i;
        cur = mul(cur, primitive_element);
    }
    fail_internal("discrete log not found");
}

std::uint64_t Field::element_order(felem a) const {
    require(a != 0, "zero has no multiplicative order");
    std::uint64_t ord = q - 1;
    for (std::uint64_t t : qm1_primes_)
        while (ord % t == 0 && pow(a, static_cast<std::int64_t>(ord / t)) == 1) ord /= t;
    return ord;
}

std::vector<felem> Field::subfield_elements(std::uint32_t r) const {
    require(r >= 1 && m % r == 0, "subfield degree must divide m");
    std::uint64_t qr = 1;
    for (std::uint32_t i = 0; i < r; ++i) qr *= p;
    std::vector<felem> out;
    out.reserve(qr);
    out.push_back(0);
    felem gen = pow(primitive_element, static_cast<std::int64_t>((q - 1) / (qr - 1)));
    felem cur = 1;
    for (std::uint64_t j = 0; j < qr - 1; ++j) {
        out.push_back(cur);
        cur = mul(cur, gen);
    }
    std::sort(out.begin(), out.end());
    if (out.size() != qr || std::adjacent_find(out.begin(), out.end()) != out.end())
        fail_internal("subfield enumeration produced duplicates");
    return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
    return std::make_shared<Field>(Field::make(p, m));
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus) {
    return std::make_shared<Field>(Field::make(p, m, modulus));
}

} // namespace ckinf
