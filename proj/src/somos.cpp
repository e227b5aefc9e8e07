#include "ratmed/somos.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

#include "ratmed/error.hpp"

namespace ratmed {

namespace {

bool window_holds(const std::vector<Rational>& t, std::size_t i) {
    return t[i + 5] * t[i] == t[i + 4] * t[i + 1] + t[i + 3] * t[i + 2];
}

// Grow-only cache of one canonical sequence. Readers share the lock; growth
// takes it exclusively and recomputes the missing tail from the stored terms.
class CanonicalCache {
public:
    explicit CanonicalCache(SomosSequence seed) : seq_(std::move(seed)) {}

    Integer term(long n) {
        if (n < 0) throw DomainError("canonical sequences start at index 0");
        {
            std::shared_lock lock(mutex_);
            if (seq_.contains(n)) return seq_.at(n).num();
        }
        std::unique_lock lock(mutex_);
        if (!seq_.contains(n)) {
            // Grow geometrically so repeated small requests stay cheap.
            const long want = std::max(n, 2 * seq_.last_index());
            seq_ = somos5_extend(seq_, static_cast<std::size_t>(want - seq_.last_index()));
            for (const auto& x : seq_.terms())
                if (!x.is_integer()) throw InvariantViolation("canonical Somos term is not an integer");
        }
        return seq_.at(n).num();
    }

    SomosSequence through(long last) {
        term(last);
        std::shared_lock lock(mutex_);
        std::vector<Rational> terms(seq_.terms().begin(), seq_.terms().begin() + last + 1);
        return SomosSequence(0, std::move(terms));
    }

private:
    std::shared_mutex mutex_;
    SomosSequence seq_;
};

CanonicalCache& s_cache() {
    static CanonicalCache cache(canonical_S_seed());
    return cache;
}

CanonicalCache& t_cache() {
    static CanonicalCache cache(canonical_T_seed());
    return cache;
}

}  // namespace

SomosSequence::SomosSequence(long base_index, std::vector<Rational> terms)
    : base_(base_index), terms_(std::move(terms)), seed_base_(base_index), seed_(terms_) {
    if (terms_.size() < 5) throw DomainError("a Somos-5 sequence needs at least five terms");
    for (std::size_t i = 0; i + 5 < terms_.size(); ++i) {
        if (!window_holds(terms_, i))
            throw DomainError("Somos-5 recurrence fails on the window starting at index " +
                              std::to_string(base_ + static_cast<long>(i)));
    }
}

const Rational& SomosSequence::at(long n) const {
    if (!contains(n))
        throw DomainError("Somos term " + std::to_string(n) + " is outside the stored window [" +
                          std::to_string(base_) + ", " + std::to_string(last_index()) + "]");
    return terms_[static_cast<std::size_t>(n - base_)];
}

SomosSequence somos5_extend(const SomosSequence& seq, std::size_t count) {
    SomosSequence out = seq;
    auto& t = out.terms_;
    t.reserve(t.size() + count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t m = t.size();
        const Rational& divisor = t[m - 5];
        if (divisor.is_zero())
            throw ZeroDivisionError("Somos-5 forward step divides by a zero term",
                                    out.base_ + static_cast<long>(m - 5));
        t.push_back((t[m - 1] * t[m - 4] + t[m - 2] * t[m - 3]) / divisor);
    }
    return out;
}

SomosSequence somos5_backward(const SomosSequence& seq, std::size_t count) {
    // x[m] x[m+5] = x[m+4] x[m+1] + x[m+3] x[m+2], solved for x[m].
    std::vector<Rational> t = seq.terms();
    long base = seq.base_index();
    for (std::size_t k = 0; k < count; ++k) {
        const Rational& divisor = t[4];
        if (divisor.is_zero())
            throw ZeroDivisionError("Somos-5 backward step divides by a zero term", base + 4);
        Rational x = (t[3] * t[0] + t[2] * t[1]) / divisor;
        t.insert(t.begin(), std::move(x));
        --base;
    }
    SomosSequence out = seq;
    out.base_ = base;
    out.terms_ = std::move(t);
    return out;
}

SomosSequence canonical_S_seed() { return SomosSequence(0, {1, 1, 1, 2, 3}); }

SomosSequence canonical_T_seed() { return SomosSequence(0, {0, 1, -1, 1, 1, -7}); }

Integer canonical_S(long n) { return s_cache().term(n); }
Integer canonical_T(long n) { return t_cache().term(n); }

SomosSequence canonical_S_sequence(long last) { return s_cache().through(std::max(last, 4L)); }
SomosSequence canonical_T_sequence(long last) { return t_cache().through(std::max(last, 5L)); }

Rational ratio_u(const SomosSequence& seq, long n) {
    const Rational den = seq.at(n - 1) * seq.at(n);
    if (den.is_zero()) {
        const long zero_at = seq.at(n - 1).is_zero() ? n - 1 : n;
        throw ZeroDivisionError("ratio u[" + std::to_string(n) + "] has a zero denominator", zero_at);
    }
    return seq.at(n - 2) * seq.at(n + 1) / den;
}

}  // namespace ratmed
