#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace indpoly {

/// Malformed graph6 / edge-list input. `offset` is the byte offset in the line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An input that exceeds a configured size cap.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation at (or numerically at) a pole of a map.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Root finder failed to converge; carries the best iterate found.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::vector<std::complex<double>> best, double residual)
        : std::runtime_error(what), best_(std::move(best)), residual_(residual) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<std::complex<double>> best_;
    double residual_;
};

}  // namespace indpoly
