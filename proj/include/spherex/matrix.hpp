#pragma once

#include "spherex/cyc.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace spherex {

// Dense square matrix over cyclotomic numbers. Group elements are the 2x2 case.
class CycMatrix {
public:
    CycMatrix() = default;
    explicit CycMatrix(int dim) : dim_(dim), e_(std::size_t(dim) * dim) {}
    CycMatrix(int dim, std::vector<Cyc> entries);
    CycMatrix(std::initializer_list<std::initializer_list<Cyc>> rows);

    static CycMatrix identity(int dim);
    static CycMatrix scalar(int dim, const Cyc& c);
    static CycMatrix diag(std::vector<Cyc> d);

    int dim() const { return dim_; }
    const Cyc& operator()(int i, int j) const { return e_[std::size_t(i) * dim_ + j]; }
    Cyc& operator()(int i, int j) { return e_[std::size_t(i) * dim_ + j]; }
    const std::vector<Cyc>& entries() const { return e_; }

    CycMatrix adjoint() const;
    CycMatrix transpose() const;
    Cyc trace() const;
    Cyc det() const;
    CycMatrix pow(long long e) const;  // e >= 0, or negative for unitary matrices
    bool is_identity() const;
    bool is_unitary() const;

    std::string str() const;
    nlohmann::json to_json() const;
    std::size_t hash() const;

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const Cyc& c, const CycMatrix& a);
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }

private:
    int dim_ = 0;
    std::vector<Cyc> e_;
};

// Riemenschneider's generator matrices. zeta_k = exp(2 pi i / k).
namespace mats {
CycMatrix phi(long long k);  // diag(zeta_k, zeta_k)
CycMatrix psi(long long k);  // diag(zeta_k, zeta_k^-1)
CycMatrix eta();
CycMatrix tau();
CycMatrix omega();
CycMatrix iota();
CycMatrix sigma();
CycMatrix cyclic_generator(long long n, long long q);  // diag(zeta_n, zeta_n^q)
}  // namespace mats

}  // namespace spherex

template <>
struct std::hash<spherex::CycMatrix> {
    std::size_t operator()(const spherex::CycMatrix& m) const noexcept { return m.hash(); }
};
