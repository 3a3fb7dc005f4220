#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "indpoly/polynomial.hpp"

namespace indpoly {

struct UnimodalityResult {
    bool unimodal = true;
    /// First and last index at which the maximum is attained.
    std::size_t mode_first = 0;
    std::size_t mode_last = 0;
    /// Index of the first entry that rises after a descent.
    std::optional<std::size_t> violation;
};

struct InequalityResult {
    bool holds = true;
    /// Smallest interior index i at which the inequality fails.
    std::optional<std::size_t> violation;
};

/// Nondecreasing then nonincreasing; plateaus are allowed anywhere.
UnimodalityResult check_unimodal(std::span<const BigInt> seq);

/// a_i^2 >= a_{i-1} a_{i+1} (strict: >) for every interior i.
/// Throws std::invalid_argument on an empty sequence or a nonpositive entry.
InequalityResult check_log_concave(std::span<const BigInt> seq, bool strict);

/// Newton's inequality i (d - i) a_i^2 >= (i + 1)(d - i + 1) a_{i-1} a_{i+1},
/// d = length - 1, compared by exact cross-multiplication. Sequences with no
/// interior index satisfy it vacuously.
InequalityResult check_newton(std::span<const BigInt> seq);

struct SequenceVerdict {
    bool unimodal = true;
    std::size_t mode_first = 0;
    std::size_t mode_last = 0;
    std::optional<std::size_t> unimodal_violation;
    bool log_concave = true;
    std::optional<std::size_t> log_concave_violation;
    bool strictly_log_concave = true;
    std::optional<std::size_t> strict_violation;
    bool newton_satisfied = true;
    std::optional<std::size_t> newton_violation;

    friend bool operator==(const SequenceVerdict&, const SequenceVerdict&) = default;
};

SequenceVerdict diagnose(std::span<const BigInt> seq);
inline SequenceVerdict diagnose(const IntPolynomial& p) { return diagnose(p.coefficients()); }

}  // namespace indpoly
