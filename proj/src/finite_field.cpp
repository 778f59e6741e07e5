#include "forge/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "forge/error.hpp"
#include "forge/rng.hpp"

namespace forge {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

// Dense F_p[x] helpers, coefficients low to high, trimmed. Only used to pick
// and invert modulo extension moduli, so they favour brevity over speed.
struct SmallPoly {
    const FiniteField& F;

    void trim(Vec& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    Vec mul(const Vec& a, const Vec& b) const {
        if (a.empty() || b.empty()) return {};
        Vec r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add_p(r[i + j], F.mul_p(a[i], b[j]));
        trim(r);
        return r;
    }

    Vec sub(Vec a, const Vec& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub_p(a[i], b[i]);
        trim(a);
        return a;
    }

    // Returns (quotient, remainder).
    std::pair<Vec, Vec> divmod(Vec a, const Vec& b) const {
        trim(a);
        if (a.size() < b.size()) return {{}, a};
        const u64 lead_inv = F.inv_p(b.back());
        Vec q(a.size() - b.size() + 1, 0);
        for (std::size_t shift = q.size(); shift-- > 0;) {
            const u64 c = F.mul_p(a[shift + b.size() - 1], lead_inv);
            q[shift] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub_p(a[shift + i], F.mul_p(c, b[i]));
        }
        trim(a);
        trim(q);
        return {q, a};
    }

    Vec mod(const Vec& a, const Vec& m) const { return divmod(a, m).second; }

    Vec gcd(Vec a, Vec b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Vec r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    Vec powmod(Vec base, u64 e, const Vec& m) const {
        Vec result{1};
        base = mod(base, m);
        while (e > 0) {
            if (e & 1) result = mod(mul(result, base), m);
            base = mod(mul(base, base), m);
            e >>= 1;
        }
        return result;
    }

    // Ben-Or: no factor of degree <= deg/2.
    bool irreducible(const Vec& m) const {
        const std::size_t k = m.size() - 1;
        Vec xp{0, 1};
        for (std::size_t i = 1; i <= k / 2; ++i) {
            xp = powmod(xp, F.characteristic(), m);
            Vec g = gcd(m, sub(xp, Vec{0, 1}));
            if (g.size() != 1) return false;
        }
        return true;
    }
};

struct Registry {
    std::mutex mutex;
    std::map<std::tuple<u64, int, u64>, std::unique_ptr<FiniteField>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    auto mulmod = [n](u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n); };
    auto powmod = [&](u64 a, u64 e) {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        a %= n;
        if (a == 0) continue;
        u64 x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FiniteField::FiniteField(u64 p, int k, const std::array<u64, kMaxExtDegree + 1>& modulus, u64 seed)
    : p_(p), k_(k), small_(p < (1ULL << 32)), seed_(seed), modulus_(modulus) {}

const FiniteField& FiniteField::prime(u64 p) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto key = std::make_tuple(p, 1, u64{0});
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return *it->second;
    if (p == 2) raise(ErrorKind::InvalidArgument, "characteristic 2 is not supported");
    if (p >= kMaxPrime || !is_prime_u64(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime below 2^61");
    std::array<u64, kMaxExtDegree + 1> modulus{};
    modulus[1] = 1;  // x
    auto field = std::unique_ptr<FiniteField>(new FiniteField(p, 1, modulus, 0));
    auto& ref = *field;
    reg.fields.emplace(key, std::move(field));
    return ref;
}

const FiniteField& FiniteField::extension(u64 p, int k, u64 seed) {
    if (k < 1 || k > kMaxExtDegree) raise(ErrorKind::InvalidDegree, "extension degree " + std::to_string(k) + " outside [1, 6]");
    const FiniteField& base = prime(p);
    if (k == 1) return base;
    {
        auto& reg = registry();
        std::lock_guard lock(reg.mutex);
        auto it = reg.fields.find(std::make_tuple(p, k, seed));
        if (it != reg.fields.end()) return *it->second;
    }
    SmallPoly poly{base};
    Rng rng(Rng::derive(seed, (p << 3) ^ static_cast<u64>(k)));
    Vec m;
    for (;;) {
        m.assign(static_cast<std::size_t>(k) + 1, 0);
        for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)] = rng.below(p);
        m[static_cast<std::size_t>(k)] = 1;
        if (m[0] != 0 && poly.irreducible(m)) break;
    }
    std::array<u64, kMaxExtDegree + 1> modulus{};
    std::copy(m.begin(), m.end(), modulus.begin());
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto key = std::make_tuple(p, k, seed);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return *it->second;
    auto field = std::unique_ptr<FiniteField>(new FiniteField(p, k, modulus, seed));
    auto& ref = *field;
    reg.fields.emplace(key, std::move(field));
    return ref;
}

Integer FiniteField::order() const {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, static_cast<unsigned long>(k_));
    return q;
}

std::string FiniteField::name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

Fq FiniteField::zero() const { return Fq(this); }

Fq FiniteField::one() const {
    Fq r(this);
    r.c_[0] = 1;
    return r;
}

Fq FiniteField::from_u64(u64 n) const {
    Fq r(this);
    r.c_[0] = n % p_;
    return r;
}

Fq FiniteField::from_int(std::int64_t n) const {
    if (n >= 0) return from_u64(static_cast<u64>(n));
    const u64 mag = static_cast<u64>(-(n + 1)) + 1;
    Fq r(this);
    r.c_[0] = neg_p(mag % p_);
    return r;
}

Fq FiniteField::from_integer(const Integer& n) const {
    return from_u64(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p_)));
}

Fq FiniteField::from_rational(const Rational& r) const {
    Fq den = from_integer(r.denominator());
    if (den.is_zero()) raise(ErrorKind::DivisionByZero, "denominator of " + r.to_string() + " vanishes mod " + std::to_string(p_));
    return from_integer(r.numerator()) / den;
}

Fq FiniteField::from_coeffs(std::span<const u64> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(k_))
        raise(ErrorKind::InvalidArgument, "too many coefficients for " + name());
    Fq r(this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = coeffs[i] % p_;
    return r;
}

Fq FiniteField::generator() const {
    Fq r(this);
    if (k_ == 1) {
        r.c_[0] = 0;  // t = root of x, i.e. 0; unused for prime fields
        return r;
    }
    r.c_[1] = 1;
    return r;
}

Fq FiniteField::random(Rng& rng) const {
    Fq r(this);
    for (int i = 0; i < k_; ++i) r.c_[static_cast<std::size_t>(i)] = rng.below(p_);
    return r;
}

Fq FiniteField::element_at(u64 index) const {
    Fq r(this);
    for (int i = 0; i < k_; ++i) {
        r.c_[static_cast<std::size_t>(i)] = index % p_;
        index /= p_;
    }
    return r;
}

FiniteField::u64 FiniteField::index_of(const Fq& a) const {
    u64 idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a.c_[static_cast<std::size_t>(i)];
    return idx;
}

FiniteField::u64 FiniteField::pow_p(u64 a, u64 e) const noexcept {
    u64 r = 1 % p_;
    while (e) {
        if (e & 1) r = mul_p(r, a);
        a = mul_p(a, a);
        e >>= 1;
    }
    return r;
}

FiniteField::u64 FiniteField::inv_p(u64 a) const {
    if (a % p_ == 0) raise(ErrorKind::ZeroInverse, "inverse of 0 in " + name());
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a % p_;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<u64>(t);
}

int FiniteField::legendre(u64 a) const noexcept {
    a %= p_;
    if (a == 0) return 0;
    return pow_p(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

void FiniteField::mul(const u64* a, const u64* b, u64* out) const noexcept {
    if (k_ == 1) {
        out[0] = mul_p(a[0], b[0]);
        return;
    }
    u64 prod[2 * kMaxExtDegree - 1] = {};
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) prod[i + j] = add_p(prod[i + j], mul_p(a[i], b[j]));
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        const u64 c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i < k_; ++i) prod[d - k_ + i] = sub_p(prod[d - k_ + i], mul_p(c, modulus_[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < k_; ++i) out[i] = prod[i];
}

void FiniteField::inv(const u64* a, u64* out) const {
    if (k_ == 1) {
        out[0] = inv_p(a[0]);
        return;
    }
    SmallPoly poly{prime_field()};
    Vec r0(modulus_.begin(), modulus_.begin() + k_ + 1);
    Vec r1(a, a + k_);
    poly.trim(r1);
    if (r1.empty()) raise(ErrorKind::ZeroInverse, "inverse of 0 in " + name());
    Vec s0{}, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = poly.divmod(r0, r1);
        Vec s = poly.sub(s0, poly.mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    const u64 c = inv_p(r1[0]);
    for (int i = 0; i < k_; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        out[i] = si < s1.size() ? mul_p(s1[si], c) : 0;
    }
}

// ---- Fq ----

void Fq::check_same(const Fq& o) const {
    if (field_ != o.field_) raise(ErrorKind::InvalidArgument, "mixing elements of different fields");
}

bool Fq::in_prime_field() const noexcept {
    for (int i = 1; i < kMaxExtDegree; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

Fq::u64 Fq::to_u64() const {
    if (!in_prime_field()) raise(ErrorKind::InvalidArgument, "element " + to_string() + " is not in the prime field");
    return c_[0];
}

bool Fq::is_zero() const noexcept {
    for (u64 c : c_)
        if (c != 0) return false;
    return true;
}

bool Fq::is_one() const noexcept { return c_[0] == 1 && in_prime_field(); }

Fq& Fq::operator+=(const Fq& o) {
    check_same(o);
    for (int i = 0; i < field_->k_; ++i) c_[static_cast<std::size_t>(i)] = field_->add_p(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    check_same(o);
    for (int i = 0; i < field_->k_; ++i) c_[static_cast<std::size_t>(i)] = field_->sub_p(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)]);
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    check_same(o);
    std::array<u64, kMaxExtDegree> out{};
    field_->mul(c_.data(), o.c_.data(), out.data());
    c_ = out;
    return *this;
}

Fq Fq::operator-() const {
    Fq r(*this);
    for (int i = 0; i < field_->k_; ++i) r.c_[static_cast<std::size_t>(i)] = field_->neg_p(c_[static_cast<std::size_t>(i)]);
    return r;
}

Fq Fq::inv() const {
    Fq r(field_);
    field_->inv(c_.data(), r.c_.data());
    return r;
}

Fq Fq::pow(u64 e) const {
    Fq r = one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fq Fq::pow(const Integer& e) const {
    if (e < 0) return inv().pow(Integer(-e));
    Fq r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r *= *this;
    }
    return r;
}

Fq::u64 Fq::norm() const {
    const FiniteField& F = *field_;
    const int k = F.k_;
    if (k == 1) return c_[0];
    // Determinant of multiplication-by-a on the basis 1, t, ..., t^{k-1}.
    u64 m[kMaxExtDegree][kMaxExtDegree] = {};
    Fq col = *this;
    const Fq t = F.generator();
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) m[i][j] = col.c_[static_cast<std::size_t>(i)];
        col *= t;
    }
    u64 det = 1;
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < k; ++j) std::swap(m[pivot][j], m[c][j]);
            det = F.neg_p(det);
        }
        det = F.mul_p(det, m[c][c]);
        const u64 inv = F.inv_p(m[c][c]);
        for (int r = c + 1; r < k; ++r) {
            if (m[r][c] == 0) continue;
            const u64 f = F.mul_p(m[r][c], inv);
            for (int j = c; j < k; ++j) m[r][j] = F.sub_p(m[r][j], F.mul_p(f, m[c][j]));
        }
    }
    return det;
}

int Fq::chi() const {
    if (is_zero()) return 0;
    return field_->legendre(norm());
}

std::string Fq::to_string() const {
    if (field_ == nullptr) return "<unbound>";
    if (field_->k_ == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (int i = 0; i < field_->k_; ++i) {
        if (i) s += ",";
        s += std::to_string(c_[static_cast<std::size_t>(i)]);
    }
    return s + "]";
}

std::vector<Fq> field_sqrt(const Fq& a, std::uint64_t seed) {
    if (a.is_zero()) return {a};
    const int c = a.chi();
    if (c < 0) return {};
    const FiniteField& F = a.field();
    const Integer q = F.order();
    // q - 1 = 2^s * t with t odd.
    Integer t = q - 1;
    unsigned s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t /= 2;
        ++s;
    }
    Fq root;
    if (s == 1) {
        root = a.pow(Integer((q + 1) / 4));
    } else {
        Rng rng(Rng::derive(seed, F.characteristic() * 7 + static_cast<std::uint64_t>(F.degree())));
        Fq z;
        do {
            z = F.random(rng);
        } while (z.chi() != -1);
        Fq cc = z.pow(t);
        Fq x = a.pow(Integer((t + 1) / 2));
        Fq b = a.pow(t);
        unsigned m = s;
        while (!b.is_one()) {
            unsigned i = 0;
            Fq b2 = b;
            while (!b2.is_one()) {
                b2 *= b2;
                ++i;
            }
            Fq w = cc;
            for (unsigned j = 0; j + i + 1 < m; ++j) w *= w;
            x *= w;
            cc = w * w;
            b *= cc;
            m = i;
        }
        root = x;
    }
    return {root, -root};
}

}  // namespace forge
