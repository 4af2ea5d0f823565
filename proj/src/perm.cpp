#include "moduli/perm.hpp"

#include <numeric>

namespace moduli {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw InputError("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    Perm p;
    p.img_ = std::move(v);
    return p;
}

Perm Perm::reversal(int n, int lo, int hi) {
    if (lo < 1 || hi > n || lo > hi) throw InputError("reversal outside 1..n");
    Perm p = identity(n);
    for (int i = lo; i <= hi; ++i) p.img_[static_cast<std::size_t>(i - 1)] = lo + hi - i;
    return p;
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Perm Perm::inverse() const {
    Perm p = identity(size());
    for (int i = 1; i <= size(); ++i) p.img_[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return p;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

bool Perm::is_rotation() const {
    const int n = size();
    if (n == 0) return true;
    const int k = ((*this)(1) - 1 + n) % n;
    for (int i = 1; i <= n; ++i)
        if ((*this)(i) != (i - 1 + k) % n + 1) return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw InputError("permutation size mismatch");
    Perm p = Perm::identity(a.size());
    for (int i = 1; i <= a.size(); ++i) p.img_[static_cast<std::size_t>(i - 1)] = a(b(i));
    return p;
}

std::string Perm::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s + ")";
}

}  // namespace moduli
