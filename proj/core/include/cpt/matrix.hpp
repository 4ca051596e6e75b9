#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/gaussian.hpp"

namespace cpt {

// Largest matrix dimension the pipeline will construct by default. Covers
// every spinbasis in scope including the 64x64 tensor-field case, with room
// to spare; CLI callers can raise it via CPT_DIM_CAP.
inline constexpr int kDefaultDimCap = 256;

// Dense square matrix over an exact scalar. Values are immutable in practice:
// every operation returns a fresh matrix.
template <typename S>
class DenseMatrix {
 public:
  DenseMatrix() : DenseMatrix(1) {}
  explicit DenseMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) throw DomainError("matrix dimension must be positive");
  }

  static DenseMatrix identity(int dim) {
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = S(1);
    return m;
  }

  int dim() const { return dim_; }

  S& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const S& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_zero() const {
    for (const S& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("matrix product: dimension mismatch");
    DenseMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i) {
      for (int k = 0; k < a.dim_; ++k) {
        const S& aik = a.at(i, k);
        if (aik.is_zero()) continue;  // spinbasis matrices are mostly zeros
        for (int j = 0; j < a.dim_; ++j) {
          const S& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          out.at(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("matrix sum: dimension mismatch");
    DenseMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim_ != b.dim_) throw DomainError("matrix difference: dimension mismatch");
    DenseMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
    return out;
  }

  DenseMatrix operator-() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
    return out;
  }

  friend DenseMatrix operator*(const S& s, const DenseMatrix& a) {
    DenseMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = s * a.e_[i];
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // Entrywise complex conjugate.
  DenseMatrix conj() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].conj();
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<S> e_;
};

template <typename S>
DenseMatrix<S> kron(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  const int da = a.dim(), db = b.dim();
  DenseMatrix<S> out(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const S& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) out.at(i * db + k, j * db + l) = aij * b.at(k, l);
    }
  return out;
}

enum class CompareKind { equal, negatives, scalar_multiple, unrelated };

template <typename S>
struct CompareResult {
  CompareKind kind = CompareKind::unrelated;
  S lambda{};  // A = lambda * B when kind != unrelated
};

// Detects A = lambda*B: proposes lambda from the first entry where either
// matrix is nonzero, then verifies globally. O(dim^2).
template <typename S>
CompareResult<S> compare(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix compare: dimension mismatch");
  S lambda{};
  bool found = false;
  for (int i = 0; i < a.dim() && !found; ++i)
    for (int j = 0; j < a.dim() && !found; ++j) {
      const bool az = a.at(i, j).is_zero(), bz = b.at(i, j).is_zero();
      if (az && bz) continue;
      if (az != bz) return {CompareKind::unrelated, S{}};
      lambda = a.at(i, j) / b.at(i, j);
      found = true;
    }
  if (!found) return {CompareKind::equal, S(1)};  // both zero
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.at(i, j) != lambda * b.at(i, j)) return {CompareKind::unrelated, S{}};
  if (lambda == S(1)) return {CompareKind::equal, lambda};
  if (lambda == -S(1)) return {CompareKind::negatives, lambda};
  return {CompareKind::scalar_multiple, lambda};
}

using ExactMatrix = DenseMatrix<GaussianRational>;

}  // namespace cpt
