#include "spherex/matrix.hpp"

#include "spherex/errors.hpp"

namespace spherex {

CycMatrix::CycMatrix(int dim, std::vector<Cyc> entries) : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != std::size_t(dim) * dim) throw Error("CycMatrix: wrong number of entries");
}

CycMatrix::CycMatrix(std::initializer_list<std::initializer_list<Cyc>> rows) : dim_(int(rows.size())) {
    for (const auto& r : rows) {
        if (int(r.size()) != dim_) throw Error("CycMatrix: matrix must be square");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

CycMatrix CycMatrix::identity(int dim) { return scalar(dim, Cyc(1)); }

CycMatrix CycMatrix::scalar(int dim, const Cyc& c) {
    CycMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = c;
    return m;
}

CycMatrix CycMatrix::diag(std::vector<Cyc> d) {
    CycMatrix m(int(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[i];
    return m;
}

CycMatrix CycMatrix::adjoint() const {
    CycMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Cyc CycMatrix::trace() const {
    Cyc t;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

Cyc CycMatrix::det() const {
    const auto& a = *this;
    switch (dim_) {
        case 0: return Cyc(1);
        case 1: return a(0, 0);
        case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        case 3:
            return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                   a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                   a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        default: break;
    }
    // Gaussian elimination over the field
    CycMatrix m = *this;
    Cyc d(1);
    for (int c = 0; c < dim_; ++c) {
        int p = c;
        while (p < dim_ && m(p, c).is_zero()) ++p;
        if (p == dim_) return Cyc();
        if (p != c) {
            for (int j = 0; j < dim_; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Cyc inv = m(c, c).inverse();
        for (int r = c + 1; r < dim_; ++r) {
            if (m(r, c).is_zero()) continue;
            Cyc f = m(r, c) * inv;
            for (int j = c; j < dim_; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

CycMatrix CycMatrix::pow(long long e) const {
    if (e < 0) return adjoint().pow(-e);
    CycMatrix r = identity(dim_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool CycMatrix::is_identity() const { return *this == identity(dim_); }

bool CycMatrix::is_unitary() const { return (*this * adjoint()).is_identity(); }

std::string CycMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < dim_; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < dim_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
        s += "]";
    }
    return s + "]";
}

nlohmann::json CycMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < dim_; ++j) row.push_back((*this)(i, j).to_json());
        rows.push_back(row);
    }
    return rows;
}

std::size_t CycMatrix::hash() const {
    std::size_t h = std::size_t(dim_);
    for (const auto& c : e_) h = h * 0x100000001b3ull ^ c.hash();
    return h;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) throw Error("matrix dimension mismatch");
    int n = a.dim_;
    CycMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Cyc& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

CycMatrix operator*(const Cyc& c, const CycMatrix& a) {
    CycMatrix m = a;
    for (auto& x : m.e_) x = c * x;
    return m;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
    return m;
}

namespace mats {

namespace {
Cyc z(long long n, long long e = 1) { return Cyc::zeta(n, e); }
}  // namespace

CycMatrix phi(long long k) { return CycMatrix::diag({z(k), z(k)}); }
CycMatrix psi(long long k) { return CycMatrix::diag({z(k), z(k, -1)}); }

CycMatrix eta() {
    // 1/sqrt(2) = (zeta_8 + zeta_8^7) / 2
    Cyc s = (z(8) + z(8, 7)) * Rational(1, 2);
    return s * CycMatrix{{z(8), z(8, 3)}, {z(8), z(8, 7)}};
}

CycMatrix tau() { return CycMatrix{{Cyc(0), z(4)}, {z(4), Cyc(0)}}; }

CycMatrix omega() { return CycMatrix::diag({z(5, 3), z(5, 2)}); }

CycMatrix iota() {
    // sqrt(5) = 1 + 2 (zeta_5 + zeta_5^4)
    Cyc sqrt5 = Cyc(1) + (z(5) + z(5, 4)) * Rational(2);
    Cyc s = sqrt5.inverse();
    Cyc a = z(5, 4) - z(5), b = z(5, 2) - z(5, 3);
    return s * CycMatrix{{a, b}, {b, -a}};
}

CycMatrix sigma() { return CycMatrix{{Cyc(0), Cyc(-1)}, {Cyc(1), Cyc(0)}}; }

CycMatrix cyclic_generator(long long n, long long q) { return CycMatrix::diag({z(n), z(n, q)}); }

}  // namespace mats

}  // namespace spherex
