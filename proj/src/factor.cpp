#include <algorithm>
#include <map>

#include "ratmed/error.hpp"
#include "ratmed/exact.hpp"

namespace ratmed {

namespace {

constexpr unsigned kTrialLimit = 10000;

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Deterministic for n < 3317044064679887385961981 with these bases.
constexpr unsigned kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr unsigned kExtraBases[] = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long r, unsigned base) {
    const Integer nm1 = n - 1;
    Integer x;
    const Integer a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial factor of composite n (odd, no factor below the trial limit).
Integer brent_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        const unsigned long batch = 128;
        unsigned long r = 1;
        auto step = [&](Integer& v) { v = (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            // The batch overshot; replay one step at a time from the saved point.
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const SqrtResult r = int_sqrt(n);
    if (r.exact) {
        split(r.root, out);
        split(r.root, out);
        return;
    }
    const Integer f = brent_rho(n);
    split(f, out);
    split(n / f, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exponent == 0 || !is_prime(terms_[i].prime))
            throw DomainError("factorization term needs a prime and exponent >= 1: " + ratmed::to_string(terms_[i].prime));
        if (i > 0 && terms_[i - 1].prime >= terms_[i].prime)
            throw DomainError("factorization primes must be strictly increasing");
    }
}

Integer Factorization::value() const {
    Integer v = 1;
    for (const auto& t : terms_) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
        v *= p;
    }
    return v;
}

std::string Factorization::to_string() const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += "·";
        out += t.prime.get_str(10);
        if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
}

Factorization Factorization::parse(std::string_view text) {
    std::string s(text);
    for (std::string::size_type pos; (pos = s.find("·")) != std::string::npos;)
        s.replace(pos, std::string("·").size(), "*");
    if (s == "1") return {};
    std::vector<PrimePower> terms;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find('*', start);
        if (end == std::string::npos) end = s.size();
        const std::string item = s.substr(start, end - start);
        const auto caret = item.find('^');
        PrimePower pp;
        pp.prime = parse_integer(item.substr(0, caret));
        pp.exponent = caret == std::string::npos
                          ? 1U
                          : static_cast<unsigned>(parse_integer(item.substr(caret + 1)).get_ui());
        terms.push_back(std::move(pp));
        start = end + 1;
    }
    return Factorization(std::move(terms));
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned p : kDeterministicBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    for (unsigned base : kDeterministicBases)
        if (!miller_rabin_round(n, d, r, base)) return false;
    static const Integer kDeterministicBound("3317044064679887385961981", 10);
    if (n >= kDeterministicBound) {
        for (unsigned base : kExtraBases)
            if (!miller_rabin_round(n, d, r, base)) return false;
    }
    return true;
}

Factorization factorize(const Integer& n) {
    if (n < 1) throw DomainError("factorize needs n >= 1");
    std::map<Integer, unsigned> counts;
    Integer m = n;
    for (unsigned p : small_primes()) {
        if (static_cast<Integer>(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++counts[Integer(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    split(m, counts);
    std::vector<PrimePower> terms;
    terms.reserve(counts.size());
    for (auto& [p, e] : counts) terms.push_back({p, e});
    return Factorization(std::move(terms));
}

}  // namespace ratmed
