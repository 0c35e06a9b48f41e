#pragma once

// Finite-dimensional complex Hilbert spaces. Objects carry only a dimension,
// morphisms are dense complex matrices (tgt.dim x src.dim), the dagger is the
// conjugate transpose, and kernels are orthonormal bases of null spaces.
//
// Numerical policy: rank decisions (which singular values are zero) use
// rank_eps, morphism equality uses an absolute max-norm threshold law_eps.
// Anything between the two is a hard failure, not a fudge.

#include <complex>
#include <cstddef>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "common.hpp"

namespace dagkern {

class FdHilb {
 public:
  struct Object {
    std::size_t dim = 0;
  };

  struct Mor {
    Object src;
    Object tgt;
    Eigen::MatrixXcd mat;  // tgt.dim x src.dim
  };

  static constexpr bool enumerable = false;
  static constexpr bool boolean_category = false;
  static constexpr bool has_opclassifier = false;

  double rank_eps = 1e-9;
  double law_eps = 1e-8;

  FdHilb() = default;
  explicit FdHilb(double rank_epsilon, double law_epsilon)
      : rank_eps(rank_epsilon), law_eps(law_epsilon) {}

  std::string name() const { return "fdhilb"; }

  std::size_t obj_size(const Object& x) const { return x.dim; }
  bool obj_eq(const Object& a, const Object& b) const { return a.dim == b.dim; }
  bool objects_isomorphic(const Object& a, const Object& b) const { return a.dim == b.dim; }

  Object zero_object() const { return Object{0}; }
  bool is_zero_object(const Object& x) const { return x.dim == 0; }

  const Object& src(const Mor& f) const { return f.src; }
  const Object& tgt(const Mor& f) const { return f.tgt; }

  Mor make_mor(Object x, Object y, Eigen::MatrixXcd m) const {
    if (static_cast<std::size_t>(m.rows()) != y.dim ||
        static_cast<std::size_t>(m.cols()) != x.dim)
      throw InvalidMorphism("fdhilb morphism: matrix shape does not match objects");
    return Mor{x, y, std::move(m)};
  }

  Mor identity(const Object& x) const {
    return Mor{x, x, Eigen::MatrixXcd::Identity(x.dim, x.dim)};
  }

  Mor zero_mor(const Object& x, const Object& y) const {
    return Mor{x, y, Eigen::MatrixXcd::Zero(y.dim, x.dim)};
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (f.tgt.dim != g.src.dim) throw ObjectMismatch("fdhilb compose: object mismatch");
    return Mor{f.src, g.tgt, g.mat * f.mat};
  }

  Mor dagger(const Mor& f) const { return Mor{f.tgt, f.src, f.mat.adjoint()}; }

  bool mor_eq(const Mor& f, const Mor& g) const {
    if (f.src.dim != g.src.dim || f.tgt.dim != g.tgt.dim) return false;
    if (f.mat.size() == 0) return true;
    return (f.mat - g.mat).cwiseAbs().maxCoeff() <= law_eps;
  }

  // Canonical orthonormal basis of null(f), as a dagger mono into src.
  Mor kernel(const Mor& f) const {
    Eigen::MatrixXcd basis;
    if (f.src.dim == 0) {
      basis = Eigen::MatrixXcd(0, 0);
    } else if (f.tgt.dim == 0 || f.mat.cwiseAbs().maxCoeff() == 0.0) {
      basis = Eigen::MatrixXcd::Identity(f.src.dim, f.src.dim);
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f.mat, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_eps) ++rank;
      const Eigen::MatrixXcd raw =
          svd.matrixV().rightCols(static_cast<Eigen::Index>(f.src.dim) - rank);
      basis = canonical_basis(raw, f.src.dim);
    }
    return Mor{Object{static_cast<std::size_t>(basis.cols())}, f.src, std::move(basis)};
  }

  std::size_t rank(const Mor& f) const {
    if (f.mat.size() == 0 || f.mat.cwiseAbs().maxCoeff() == 0.0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f.mat);
    std::size_t r = 0;
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rank_eps) ++r;
    return r;
  }

  // Deterministic orthonormal basis of span(cols): orthonormalise, form the
  // projector (basis-independent), Gram-Schmidt its columns left to right,
  // then rotate each survivor's phase so its first sizable entry is real > 0.
  Eigen::MatrixXcd canonical_basis(const Eigen::MatrixXcd& cols, std::size_t ambient) const {
    const Eigen::Index n = static_cast<Eigen::Index>(ambient);
    if (cols.cols() == 0 || n == 0) return Eigen::MatrixXcd(n, 0);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rank_eps) ++k;
    if (k == 0) return Eigen::MatrixXcd(n, 0);
    const Eigen::MatrixXcd q = svd.matrixU().leftCols(k);
    const Eigen::MatrixXcd proj = q * q.adjoint();

    Eigen::MatrixXcd out(n, k);
    Eigen::Index got = 0;
    for (Eigen::Index j = 0; j < n && got < k; ++j) {
      Eigen::VectorXcd v = proj.col(j);
      if (got > 0)
        v -= out.leftCols(got) * (out.leftCols(got).adjoint() * v);
      const double norm = v.norm();
      if (norm > 1e-7) out.col(got++) = v / norm;
    }
    if (got != k)
      throw LogicError("fdhilb canonical_basis: Gram-Schmidt lost rank");

    for (Eigen::Index j = 0; j < k; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const std::complex<double> e = out(i, j);
        if (std::abs(e) > 1e-7) {
          out.col(j) *= std::conj(e) / std::abs(e);
          break;
        }
      }
    }
    return out;
  }

  Mor sample_mor(const Object& x, const Object& y, std::mt19937_64& rng) const {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd m(y.dim, x.dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return Mor{x, y, std::move(m)};
  }

  // Haar-ish random isometry y.dim x k via QR of a Gaussian matrix.
  Mor sample_isometry(const Object& y, std::size_t k, std::mt19937_64& rng) const {
    if (k > y.dim) throw InvalidMorphism("fdhilb sample_isometry: rank exceeds dimension");
    const Mor g = sample_mor(Object{k}, y, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g.mat);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(y.dim, k);
    return Mor{Object{k}, y, std::move(q)};
  }

  std::string show_obj(const Object& x) const { return "C^" + std::to_string(x.dim); }

  std::string show(const Mor& f) const {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < f.mat.rows(); ++i) {
      if (i) os << "; ";
      for (Eigen::Index j = 0; j < f.mat.cols(); ++j) {
        if (j) os << ", ";
        os << f.mat(i, j).real();
        if (f.mat(i, j).imag() != 0.0) os << (f.mat(i, j).imag() > 0 ? "+" : "") << f.mat(i, j).imag() << "i";
      }
    }
    os << "] : " << show_obj(f.src) << " -> " << show_obj(f.tgt);
    return os.str();
  }
};

}  // namespace dagkern
