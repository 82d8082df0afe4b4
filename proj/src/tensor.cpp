#include "bas/tensor.hpp"

#include <sstream>

#include "bas/errors.hpp"

namespace bas {

namespace {

std::size_t pow_n(int n, int e) {
  std::size_t p = 1;
  for (int i = 0; i < e; ++i) p *= std::size_t(n);
  return p;
}

}  // namespace

Tensor::Tensor(int r, int s, int n) : r_(r), s_(s), n_(n) {
  if (r != 0 && r != 1) throw InputShapeError("tensor valence r must be 0 or 1");
  comp_.resize(pow_n(n, r + s));
}

std::size_t Tensor::flat(const std::vector<int>& idx) const {
  if (int(idx.size()) != r_ + s_) throw InputShapeError("tensor index arity mismatch");
  std::size_t f = 0;
  for (int k : idx) {
    if (k < 0 || k >= n_) throw InputShapeError("tensor index out of range");
    f = f * n_ + k;
  }
  return f;
}

Tensor Tensor::from_fn(int r, int s, int n,
                       const std::function<Rational(const std::vector<int>&)>& fn) {
  Tensor t(r, s, n);
  std::vector<int> idx(r + s, 0);
  for (std::size_t f = 0; f < t.comp_.size(); ++f) {
    std::size_t rem = f;
    for (int k = r + s - 1; k >= 0; --k) {
      idx[k] = int(rem % n);
      rem /= n;
    }
    t.comp_[f] = fn(idx);
  }
  return t;
}

Tensor Tensor::from_matrix(const Mat& A) {
  Tensor t(1, 1, A.rows());
  for (int a = 0; a < A.rows(); ++a)
    for (int i = 0; i < A.cols(); ++i) t.at({a, i}) = A(a, i);
  return t;
}

Tensor Tensor::from_bilinear(const Mat& B) {
  Tensor t(0, 2, B.rows());
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) t.at({i, j}) = B(i, j);
  return t;
}

Rational& Tensor::at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
const Rational& Tensor::at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }

Vec Tensor::value(const std::vector<int>& covariant_idx) const {
  if (r_ != 1) throw InputShapeError("value() needs a (1,s) tensor");
  Vec v(n_);
  std::vector<int> idx(1 + s_);
  for (int k = 0; k < s_; ++k) idx[1 + k] = covariant_idx[k];
  for (int a = 0; a < n_; ++a) {
    idx[0] = a;
    v[a] = comp_[flat(idx)];
  }
  return v;
}

bool Tensor::is_zero() const {
  for (const auto& x : comp_)
    if (x != 0) return false;
  return true;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (r_ != o.r_ || s_ != o.s_ || n_ != o.n_) throw InputShapeError("tensor add shape");
  Tensor t = *this;
  for (std::size_t f = 0; f < comp_.size(); ++f) t.comp_[f] += o.comp_[f];
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (r_ != o.r_ || s_ != o.s_ || n_ != o.n_) throw InputShapeError("tensor sub shape");
  Tensor t = *this;
  for (std::size_t f = 0; f < comp_.size(); ++f) t.comp_[f] -= o.comp_[f];
  return t;
}

Tensor Tensor::operator*(const Rational& c) const {
  Tensor t = *this;
  for (auto& x : t.comp_) x *= c;
  return t;
}

void Tensor::for_each_covariant(const std::function<void(const std::vector<int>&)>& fn) const {
  std::vector<int> idx(s_, 0);
  std::size_t total = pow_n(n_, s_);
  for (std::size_t f = 0; f < total; ++f) {
    std::size_t rem = f;
    for (int k = s_ - 1; k >= 0; --k) {
      idx[k] = int(rem % n_);
      rem /= n_;
    }
    fn(idx);
  }
}

bool Tensor::is_alternating() const {
  bool ok = true;
  for_each_covariant([&](const std::vector<int>& cov) {
    if (!ok) return;
    for (int a = 0; a < s_ && ok; ++a)
      for (int b = a + 1; b < s_ && ok; ++b) {
        std::vector<int> swapped = cov;
        std::swap(swapped[a], swapped[b]);
        if (r_ == 0) {
          if (at(cov) != -at(swapped)) ok = false;
        } else {
          std::vector<int> i1(1 + s_), i2(1 + s_);
          for (int k = 0; k < s_; ++k) {
            i1[1 + k] = cov[k];
            i2[1 + k] = swapped[k];
          }
          for (int u = 0; u < n_ && ok; ++u) {
            i1[0] = i2[0] = u;
            if (at(i1) != -at(i2)) ok = false;
          }
        }
      }
  });
  return ok;
}

bool Tensor::is_symmetric() const {
  bool ok = true;
  for_each_covariant([&](const std::vector<int>& cov) {
    if (!ok) return;
    for (int a = 0; a < s_ && ok; ++a)
      for (int b = a + 1; b < s_ && ok; ++b) {
        std::vector<int> swapped = cov;
        std::swap(swapped[a], swapped[b]);
        if (r_ == 0 && at(cov) != at(swapped)) ok = false;
      }
  });
  return ok;
}

std::string Tensor::first_nonzero(const std::vector<std::string>& names) const {
  std::vector<int> idx(r_ + s_, 0);
  for (std::size_t f = 0; f < comp_.size(); ++f) {
    if (comp_[f] == 0) continue;
    std::size_t rem = f;
    for (int k = r_ + s_ - 1; k >= 0; --k) {
      idx[k] = int(rem % n_);
      rem /= n_;
    }
    std::ostringstream os;
    os << "component(";
    for (int k = 0; k < r_ + s_; ++k) {
      if (k) os << ",";
      int i = idx[k];
      os << (i < int(names.size()) ? names[i] : std::to_string(i));
    }
    os << ") = " << to_string(comp_[f]);
    return os.str();
  }
  return "";
}

Tensor gl_action(const Mat& A, const Tensor& tau) {
  int n = tau.n();
  if (A.rows() != n || A.cols() != n) throw InputShapeError("gl_action shape");
  Tensor out(tau.r(), tau.s(), n);
  if (tau.r() == 1) {
    // A o tau term
    out = Tensor::from_fn(1, tau.s(), n, [&](const std::vector<int>& idx) {
      Rational v = 0;
      std::vector<int> j = idx;
      for (int b = 0; b < n; ++b) {
        if (A(idx[0], b) == 0) continue;
        j[0] = b;
        v += A(idx[0], b) * tau.at(j);
      }
      return v;
    });
  }
  // minus sum over covariant slots
  Tensor sum_part = Tensor::from_fn(tau.r(), tau.s(), n, [&](const std::vector<int>& idx) {
    Rational v = 0;
    int off = tau.r();
    std::vector<int> j = idx;
    for (int slot = 0; slot < tau.s(); ++slot) {
      int orig = idx[off + slot];
      for (int b = 0; b < n; ++b) {
        if (A(b, orig) == 0) continue;
        j[off + slot] = b;
        v += tau.at(j) * A(b, orig);
      }
      j[off + slot] = orig;
    }
    return v;
  });
  return out - sum_part;
}

Mat contract_to_matrix(const Tensor& T, const Vec& v) {
  if (T.r() != 1 || T.s() != 2) throw InputShapeError("contract_to_matrix needs (1,2)");
  int n = T.n();
  Mat m(n, n);
  for (int a = 0; a < n; ++a)
    for (int w = 0; w < n; ++w) {
      Rational x = 0;
      for (int i = 0; i < n; ++i)
        if (v[i] != 0) x += v[i] * T.at({a, i, w});
      m(a, w) = x;
    }
  return m;
}

Tensor contract(const Tensor& tau, const Vec& v) {
  if (tau.s() < 1) throw InputShapeError("contract needs a covariant slot");
  int n = tau.n();
  Tensor out(tau.r(), tau.s() - 1, n);
  out = Tensor::from_fn(tau.r(), tau.s() - 1, n, [&](const std::vector<int>& idx) {
    Rational x = 0;
    std::vector<int> j(tau.r() + tau.s());
    for (int k = 0; k < tau.r(); ++k) j[k] = idx[k];
    for (int k = 0; k < tau.s() - 1; ++k) j[tau.r() + 1 + k] = idx[tau.r() + k];
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      j[tau.r()] = i;
      x += v[i] * tau.at(j);
    }
    return x;
  });
  return out;
}

Tensor lower(const Tensor& tau, const Mat& g) {
  if (tau.r() != 1) throw InputShapeError("lower needs a (1,s) tensor");
  int n = tau.n();
  return Tensor::from_fn(0, tau.s() + 1, n, [&](const std::vector<int>& idx) {
    // idx = (i_1..i_s, z): g(tau(i_1..i_s), x_z)
    Rational x = 0;
    std::vector<int> j(1 + tau.s());
    for (int k = 0; k < tau.s(); ++k) j[1 + k] = idx[k];
    int z = idx[tau.s()];
    for (int a = 0; a < n; ++a) {
      if (g(a, z) == 0) continue;
      j[0] = a;
      x += tau.at(j) * g(a, z);
    }
    return x;
  });
}

Tensor raise_last(const Tensor& tau, const Mat& g_inv) {
  if (tau.r() != 0 || tau.s() < 1) throw InputShapeError("raise_last needs (0,s), s>=1");
  int n = tau.n();
  return Tensor::from_fn(1, tau.s() - 1, n, [&](const std::vector<int>& idx) {
    Rational x = 0;
    std::vector<int> j(tau.s());
    for (int k = 0; k < tau.s() - 1; ++k) j[k] = idx[1 + k];
    int a = idx[0];
    for (int z = 0; z < n; ++z) {
      if (g_inv(a, z) == 0) continue;
      j[tau.s() - 1] = z;
      x += g_inv(a, z) * tau.at(j);
    }
    return x;
  });
}

}  // namespace bas
