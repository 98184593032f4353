#include "spherex/cyc.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace spherex {

long long euler_phi(long long n) {
    long long r = n;
    for (long long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

namespace {

long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

long long inv_mod(long long a, long long n) {
    long long t = 0, nt = 1, r = n, nr = mod(a, n);
    while (nr) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw InternalError("inv_mod: not invertible");
    return mod(t, n);
}

std::vector<long long> poly_divexact(std::vector<long long> num, const std::vector<long long>& den) {
    // den is monic
    std::size_t dn = den.size() - 1;
    std::vector<long long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

struct PolyCache {
    std::shared_mutex mu;
    std::map<long long, std::unique_ptr<std::vector<long long>>> polys;
};

PolyCache& poly_cache() {
    static PolyCache c;
    return c;
}

// Data for reducing modulo Phi_L, using Phi_L(x) = Phi_R(x^s) with R = rad(L).
struct FieldData {
    long long L, R, s, phiR, phiL;
    std::vector<long long> primes;
    // ymod[m - phiR] = y^m mod Phi_R for phiR <= m < R, as sparse (j, coeff)
    std::vector<std::vector<std::pair<int, long long>>> ymod;
};

FieldData build_field(long long L) {
    FieldData fd;
    fd.L = L;
    fd.primes = prime_factors(L);
    fd.R = 1;
    for (long long p : fd.primes) fd.R *= p;
    fd.s = L / fd.R;
    fd.phiR = euler_phi(fd.R);
    fd.phiL = fd.phiR * fd.s;
    const auto& phi = cyclotomic_polynomial(fd.R);
    // cur = y^m mod Phi_R, dense; y * cur folds y^phiR = -sum phi[j] y^j
    std::vector<long long> cur(fd.phiR, 0);
    cur[0] = 1;
    for (long long m = 1; m < fd.R; ++m) {
        long long lead = cur[fd.phiR - 1];
        for (long long j = fd.phiR - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (long long j = 0; j < fd.phiR && lead; ++j) {
            long long t;
            if (__builtin_mul_overflow(lead, phi[j], &t) || __builtin_sub_overflow(cur[j], t, &cur[j]))
                throw InternalError("cyclotomic reduction overflow");
        }
        if (m < fd.phiR) continue;
        std::vector<std::pair<int, long long>> sp;
        for (long long j = 0; j < fd.phiR; ++j)
            if (cur[j]) sp.emplace_back(int(j), cur[j]);
        fd.ymod.push_back(std::move(sp));
    }
    return fd;
}

struct FieldCache {
    std::shared_mutex mu;
    std::unordered_map<long long, std::unique_ptr<FieldData>> fields;
};

const FieldData& field(long long L) {
    thread_local std::unordered_map<long long, const FieldData*> local;
    auto it = local.find(L);
    if (it != local.end()) return *it->second;
    static FieldCache cache;
    {
        std::shared_lock lk(cache.mu);
        auto jt = cache.fields.find(L);
        if (jt != cache.fields.end()) return *(local[L] = jt->second.get());
    }
    auto fd = std::make_unique<FieldData>(build_field(L));
    std::unique_lock lk(cache.mu);
    auto [jt, inserted] = cache.fields.emplace(L, std::move(fd));
    return *(local[L] = jt->second.get());
}

constexpr long long kMaxConductor = 4'000'000;

long long lcm_checked(long long a, long long b) {
    long long l = std::lcm(a, b);
    if (l > kMaxConductor) throw ResourceError("cyclotomic conductor too large: " + std::to_string(l));
    return l;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
    auto& cache = poly_cache();
    {
        std::shared_lock lk(cache.mu);
        auto it = cache.polys.find(n);
        if (it != cache.polys.end()) return *it->second;
    }
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divexact(num, cyclotomic_polynomial(d));
    std::unique_lock lk(cache.mu);
    auto [it, ins] = cache.polys.emplace(n, std::make_unique<std::vector<long long>>(std::move(num)));
    return *it->second;
}

// Dense accumulator for sums c * zeta_L^e, 0 <= e < L.
class CycBuilder {
public:
    explicit CycBuilder(long long L) : fd_(field(L)) {
        auto& pool = pool_();
        if (depth_() == pool.size()) pool.push_back(std::make_unique<Buf>());
        buf_ = pool[depth_()++].get();
        if ((long long)buf_->acc.size() < L) {
            buf_->acc.resize(L);
            buf_->flag.resize(L, 0);
        }
    }
    ~CycBuilder() {
        for (int e : buf_->touched) {
            buf_->acc[e] = Rational();
            buf_->flag[e] = 0;
        }
        buf_->touched.clear();
        --depth_();
    }
    CycBuilder(const CycBuilder&) = delete;
    CycBuilder& operator=(const CycBuilder&) = delete;

    void add(long long e, const Rational& c) {
        if (c.is_zero()) return;
        int i = int(e);
        if (!buf_->flag[i]) {
            buf_->flag[i] = 1;
            buf_->touched.push_back(i);
        }
        buf_->acc[i] += c;
    }

    // Canonical in Q(zeta_L), conductor not minimized.
    std::vector<Cyc::Term> reduced_terms() {
        auto& acc = buf_->acc;
        const long long s = fd_.s, phiR = fd_.phiR;
        std::vector<int> high;
        for (int e : buf_->touched)
            if (e / s >= phiR && !acc[e].is_zero()) high.push_back(e);
        for (int e : high) {
            Rational a = std::move(acc[e]);
            acc[e] = Rational();
            long long m = e / s, c = e % s;
            for (auto [j, k] : fd_.ymod[m - phiR]) add(s * j + c, a * Rational(k));
        }
        std::vector<Cyc::Term> out;
        std::vector<int> idx = buf_->touched;
        std::sort(idx.begin(), idx.end());
        for (int e : idx)
            if (!acc[e].is_zero()) out.emplace_back(e, acc[e]);
        return out;
    }

    Cyc finish();
    Cyc finish_unminimized() {
        Cyc r;
        r.n_ = int(fd_.L);
        r.terms_ = reduced_terms();
        if (r.terms_.empty()) r.n_ = 1;
        return r;
    }

    static Cyc minimize(long long L, std::vector<Cyc::Term> terms);

private:
    struct Buf {
        std::vector<Rational> acc;
        std::vector<char> flag;
        std::vector<int> touched;
    };
    static std::vector<std::unique_ptr<Buf>>& pool_() {
        thread_local std::vector<std::unique_ptr<Buf>> p;
        return p;
    }
    static std::size_t& depth_() {
        thread_local std::size_t d = 0;
        return d;
    }

    const FieldData& fd_;
    Buf* buf_;
};

namespace {

// Re-express terms of Q(zeta_2m), m odd, in Q(zeta_m).
std::vector<Cyc::Term> halve_conductor(long long L, const std::vector<Cyc::Term>& terms) {
    long long M = L / 2;
    long long h = (M + 1) / 2;
    CycBuilder b(M);
    for (const auto& [e, c] : terms) b.add(mod(e * h, M), (e % 2) ? -c : c);
    return b.reduced_terms();
}

// Trace-based projection Q(zeta_L) -> Q(zeta_M), L = p*M with p an odd prime
// not dividing M, scaled so it is the identity on Q(zeta_M).
std::vector<Cyc::Term> project(long long L, long long p, const std::vector<Cyc::Term>& terms) {
    long long M = L / p;
    long long invM = M == 1 ? 1 : inv_mod(M % p, p);
    long long invp = M == 1 ? 0 : inv_mod(p % M, M);
    CycBuilder b(M);
    Rational w(-1, p - 1);
    for (const auto& [e, c] : terms) {
        long long i = mod(e * invM, p);
        long long j = M == 1 ? 0 : mod(e * invp, M);
        b.add(j, i == 0 ? c : c * w);
    }
    return b.reduced_terms();
}

}  // namespace

Cyc CycBuilder::minimize(long long L, std::vector<Cyc::Term> terms) {
    while (true) {
        if (terms.empty()) return Cyc();
        if (L % 4 == 2) {
            terms = halve_conductor(L, terms);
            L /= 2;
            continue;
        }
        bool changed = false;
        for (long long p : field(L).primes) {
            if (L % (p * p) == 0) {
                bool ok = std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first % p == 0; });
                if (!ok) continue;
                for (auto& t : terms) t.first = int(t.first / p);
                L /= p;
                changed = true;
                break;
            }
            if (p == 2) continue;
            auto y = project(L, p, terms);
            CycBuilder lift(L);
            for (const auto& [e, c] : y) lift.add(e * p, c);
            if (lift.reduced_terms() == terms) {
                terms = std::move(y);
                L /= p;
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    Cyc r;
    r.n_ = int(L);
    r.terms_ = std::move(terms);
    return r;
}

Cyc CycBuilder::finish() { return minimize(fd_.L, reduced_terms()); }

Cyc::Cyc(const Rational& q) {
    if (!q.is_zero()) terms_.emplace_back(0, q);
}

Cyc Cyc::make(long long n, const std::vector<std::pair<long long, Rational>>& terms) {
    if (n < 1) throw Error("cyc_make: conductor must be positive");
    if (n > kMaxConductor) throw ResourceError("cyclotomic conductor too large");
    CycBuilder b(n);
    for (const auto& [e, c] : terms) b.add(mod(e, n), c);
    return b.finish();
}

Cyc Cyc::zeta(long long n, long long e) { return make(n, {{e, Rational(1)}}); }

std::optional<Rational> Cyc::rational_value() const {
    if (n_ != 1) return std::nullopt;
    return terms_.empty() ? Rational() : terms_[0].second;
}

Rational Cyc::as_rational() const {
    auto q = rational_value();
    if (!q) throw NotRational(str());
    return *q;
}

Cyc Cyc::galois(long long a) const {
    if (n_ == 1) return *this;
    if (std::gcd(mod(a, n_), (long long)n_) != 1) throw Error("galois: exponent not coprime to conductor");
    CycBuilder b(n_);
    for (const auto& [e, c] : terms_) b.add(mod(e * a, n_), c);
    return b.finish_unminimized();
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (n_ == 1) return Cyc(terms_[0].second.inverse());
    // x^-1 = (prod of the other conjugates over a subfield) / norm, recursing down the tower
    long long L = n_;
    long long p = field(L).primes.back();
    long long M = L / p;
    Cyc y(1);
    for (long long a = 1 + M; a < L; a += M)
        if (std::gcd(a, L) == 1) y = y * galois(a);
    Cyc norm = *this * y;
    if (norm.n_ == L) throw InternalError("norm did not descend");
    return y * norm.inverse();
}

Cyc Cyc::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> z = 0;
    for (const auto& [e, c] : terms_) z += c.to_double() * std::polar(1.0, 2 * std::numbers::pi * e / n_);
    return z;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.n_ == b.n_) {
        std::vector<Cyc::Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                out.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                out.push_back(*j++);
            } else {
                Rational c = i->second + j->second;
                if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        if (a.n_ == 1) {
            Cyc r;
            r.terms_ = std::move(out);
            return r;
        }
        return CycBuilder::minimize(a.n_, std::move(out));
    }
    long long L = lcm_checked(a.n_, b.n_);
    CycBuilder bld(L);
    long long fa = L / a.n_, fb = L / b.n_;
    for (const auto& [e, c] : a.terms_) bld.add(e * fa, c);
    for (const auto& [e, c] : b.terms_) bld.add(e * fb, c);
    return bld.finish();
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Rational& q) {
    if (q.is_zero()) return Cyc();
    Cyc r = a;
    for (auto& t : r.terms_) t.second *= q;
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_zero() || b.is_zero()) return Cyc();
    if (a.n_ == 1) return b * a.terms_[0].second;
    if (b.n_ == 1) return a * b.terms_[0].second;
    long long L = lcm_checked(a.n_, b.n_);
    CycBuilder bld(L);
    long long fa = L / a.n_, fb = L / b.n_;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            long long e = ea * fa + eb * fb;
            if (e >= L) e -= L;
            bld.add(e, ca * cb);
        }
    return bld.finish();
}

std::size_t Cyc::hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (const auto& [e, c] : terms_) h = (h * 1000003u) ^ (std::hash<int>()(e) + 0x9e3779b97f4a7c15ull * c.hash());
    return h;
}

std::string Cyc::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (!first) {
            out += a.sign() < 0 ? " - " : " + ";
            a = a.abs();
        }
        out += a.str();
        if (e != 0) out += "*z(" + std::to_string(n_) + ")^" + std::to_string(e);
        first = false;
    }
    return out;
}

Cyc Cyc::parse(std::string_view text) {
    // terms separated by " + " / " - "; each term is "c" or "c*z(N)^e"
    std::string s(text);
    std::vector<std::pair<long long, Rational>> terms;
    long long n = 1;
    std::size_t pos = 0;
    int sign = 1;
    while (pos <= s.size()) {
        std::size_t next = std::string::npos;
        int next_sign = 1;
        for (std::size_t i = pos + 1; i + 2 < s.size(); ++i) {
            if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
                next = i;
                next_sign = s[i + 1] == '-' ? -1 : 1;
                break;
            }
        }
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        long long e = 0;
        auto star = tok.find("*z(");
        std::string coeff = tok;
        if (star != std::string::npos) {
            coeff = tok.substr(0, star);
            auto close = tok.find(")^", star);
            if (close == std::string::npos) throw ParseError("bad cyclotomic term: " + tok);
            long long tn = std::stoll(tok.substr(star + 3, close - star - 3));
            e = std::stoll(tok.substr(close + 2));
            if (n != 1 && tn != n) throw ParseError("mixed conductors in: " + std::string(text));
            n = tn;
        }
        Rational c = Rational::parse(coeff);
        terms.emplace_back(e, sign < 0 ? -c : c);
        if (next == std::string::npos) break;
        pos = next + 3;
        sign = next_sign;
    }
    return make(n, terms);
}

nlohmann::json Cyc::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) terms.push_back({e, c.str()});
    return {{"conductor", n_}, {"terms", terms}};
}

Cyc Cyc::from_json(const nlohmann::json& j) {
    std::vector<std::pair<long long, Rational>> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at(0).get<long long>(), Rational::parse(t.at(1).get<std::string>()));
    return make(j.at("conductor").get<long long>(), terms);
}

std::pair<long long, long long> root_of_unity_log(const Cyc& x) {
    auto z = x.to_complex();
    if (x.is_zero() || std::abs(std::abs(z) - 1.0) > 1e-6) throw NotRootOfUnity(x.str());
    long long M = std::lcm(2LL, (long long)x.conductor());
    double turns = std::arg(z) / (2 * std::numbers::pi);
    long long e = mod(std::llround(turns * M), M);
    if (!(Cyc::zeta(M, e) == x)) throw NotRootOfUnity(x.str());
    long long g = std::gcd(e, M);
    return {M / g, e / g};
}

std::ostream& operator<<(std::ostream& os, const Cyc& x) { return os << x.str(); }

}  // namespace spherex
