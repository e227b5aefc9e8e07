#pragma once

#include <vector>

#include "ratmed/exact.hpp"

namespace ratmed {

/// A window of a Somos-5 sequence
///
///     x[n+5] x[n] = x[n+4] x[n+1] + x[n+3] x[n+2]
///
/// stored as consecutive terms x[base], x[base+1], ... The constructor checks
/// the recurrence on every six-term window, so a seed of five arbitrary terms
/// is always accepted while a longer seed must already be consistent.
class SomosSequence {
public:
    /// Throws DomainError if fewer than five terms are given or a six-term
    /// window breaks the recurrence.
    SomosSequence(long base_index, std::vector<Rational> terms);

    long base_index() const { return base_; }
    long last_index() const { return base_ + static_cast<long>(terms_.size()) - 1; }
    std::size_t size() const { return terms_.size(); }
    bool contains(long n) const { return n >= base_ && n <= last_index(); }

    /// Throws DomainError if `n` is outside the stored window.
    const Rational& at(long n) const;

    const std::vector<Rational>& terms() const { return terms_; }
    /// The terms the sequence was originally constructed from.
    const std::vector<Rational>& seed() const { return seed_; }
    long seed_base_index() const { return seed_base_; }

private:
    friend SomosSequence somos5_extend(const SomosSequence&, std::size_t);
    friend SomosSequence somos5_backward(const SomosSequence&, std::size_t);

    long base_;
    std::vector<Rational> terms_;
    long seed_base_;
    std::vector<Rational> seed_;
};

/// Appends `count` terms. Throws ZeroDivisionError naming the index of the
/// zero divisor term.
SomosSequence somos5_extend(const SomosSequence& seq, std::size_t count);

/// Prepends `count` terms using the recurrence solved for its lowest-index
/// term. Throws ZeroDivisionError naming the index of the zero divisor term.
SomosSequence somos5_backward(const SomosSequence& seq, std::size_t count);

/// S: 1, 1, 1, 2, 3, 5, 11, 37, ... from index 0.
SomosSequence canonical_S_seed();
/// T: 0, 1, -1, 1, 1, -7, 8, ... from index 0. Six seed terms because the
/// first window divides by T[0] = 0.
SomosSequence canonical_T_seed();

/// Terms of the canonical sequences, memoized and grown on demand. Safe to
/// call from several threads. Throws DomainError for n < 0.
Integer canonical_S(long n);
Integer canonical_T(long n);

/// A canonical sequence materialized through index `last` (from index 0).
SomosSequence canonical_S_sequence(long last);
SomosSequence canonical_T_sequence(long last);

/// u[n] = x[n-2] x[n+1] / (x[n-1] x[n]). Throws ZeroDivisionError if the
/// denominator vanishes and DomainError if a term is missing.
Rational ratio_u(const SomosSequence& seq, long n);

}  // namespace ratmed
