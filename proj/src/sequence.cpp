#include "indpoly/sequence.hpp"

#include <stdexcept>

namespace indpoly {

namespace {

void require_positive(std::span<const BigInt> seq) {
    if (seq.empty()) throw std::invalid_argument("sequence must be nonempty");
    for (const auto& a : seq)
        if (a <= 0) throw std::invalid_argument("sequence entries must be positive");
}

}  // namespace

UnimodalityResult check_unimodal(std::span<const BigInt> seq) {
    if (seq.empty()) throw std::invalid_argument("sequence must be nonempty");
    UnimodalityResult r;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] > seq[r.mode_first]) r.mode_first = i;
        if (seq[i] >= seq[r.mode_first]) r.mode_last = i;
    }
    bool descending = false;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] < seq[i - 1]) {
            descending = true;
        } else if (seq[i] > seq[i - 1] && descending) {
            r.unimodal = false;
            r.violation = i;
            break;
        }
    }
    return r;
}

InequalityResult check_log_concave(std::span<const BigInt> seq, bool strict) {
    require_positive(seq);
    InequalityResult r;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const BigInt lhs = seq[i] * seq[i];
        const BigInt rhs = seq[i - 1] * seq[i + 1];
        if (strict ? lhs <= rhs : lhs < rhs) {
            r.holds = false;
            r.violation = i;
            break;
        }
    }
    return r;
}

InequalityResult check_newton(std::span<const BigInt> seq) {
    require_positive(seq);
    InequalityResult r;
    const std::size_t d = seq.size() - 1;
    for (std::size_t i = 1; i < d; ++i) {
        const BigInt lhs = BigInt(i) * (d - i) * seq[i] * seq[i];
        const BigInt rhs = BigInt(i + 1) * (d - i + 1) * seq[i - 1] * seq[i + 1];
        if (lhs < rhs) {
            r.holds = false;
            r.violation = i;
            break;
        }
    }
    return r;
}

SequenceVerdict diagnose(std::span<const BigInt> seq) {
    SequenceVerdict v;
    const auto u = check_unimodal(seq);
    v.unimodal = u.unimodal;
    v.mode_first = u.mode_first;
    v.mode_last = u.mode_last;
    v.unimodal_violation = u.violation;
    const auto lc = check_log_concave(seq, false);
    v.log_concave = lc.holds;
    v.log_concave_violation = lc.violation;
    const auto slc = check_log_concave(seq, true);
    v.strictly_log_concave = slc.holds;
    v.strict_violation = slc.violation;
    const auto nw = check_newton(seq);
    v.newton_satisfied = nw.holds;
    v.newton_violation = nw.violation;
    return v;
}

}  // namespace indpoly
