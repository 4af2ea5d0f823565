#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace moduli {

// Thrown for malformed user-level input (bad JSON, inconsistent sizes, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a well-formed computation cannot proceed or an internal
// consistency check fails.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bijection of {1..n}, stored as its image array: img[i-1] = p(i).
// Products compose like functions: (p * q)(i) = p(q(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // Reverses lo..hi inside {1..n}.
    static Perm reversal(int n, int lo, int hi);
    static Perm transposition(int n, int a, int b);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;
    // True when p(i) = i + k (mod n) in the 1-based sense for some k.
    bool is_rotation() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

    std::string str() const;

private:
    std::vector<int> img_;
};

}  // namespace moduli
