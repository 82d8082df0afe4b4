#include "bas/polynomial.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "bas/errors.hpp"

namespace bas {

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Vec r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Vec r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  Vec r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  Vec r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(long(i));
  return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / c_.back();
  Vec r = c_;
  for (auto& x : r) x *= inv;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  // Clear denominators, divide by integer content, normalize sign of lead.
  mpz_class den_lcm = 1;
  for (const auto& x : c_) {
    mpz_class d = x.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& x : c_) {
    mpz_class v = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (content == 0) content = 1;
  if (ints.back() < 0) content = -content;
  Vec r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = Rational(ints[i] / content);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputShapeError("polynomial division by zero");
  Vec r = a.c_;
  int db = b.degree();
  Rational lead_inv = 1 / b.leading();
  while (int(r.size()) - 1 >= db) {
    Rational f = r.back() * lead_inv;
    int shift = int(r.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) r[shift + i] -= f * b.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = rem(x, y).primitive();
    x = y;
    y = r;
  }
  return x.monic();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = coeff(k);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rational mag = abs(a);
    if (mag != 1 || k == 0) os << to_string(mag);
    if (k >= 1) {
      if (mag != 1) os << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

namespace {

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  // Sturm chain; primitive parts keep coefficient growth under control.
  std::vector<Polynomial> chain{p.primitive(), p.derivative().primitive()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = Polynomial::rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    // primitive() forces a positive leading coefficient, so restore the sign
    // of -r explicitly; the chain only tolerates positive rescaling.
    Vec next = r.primitive().coeffs();
    if (r.leading() > 0)
      for (auto& x : next) x = -x;
    chain.push_back(Polynomial(std::move(next)));
  }
  return chain;
}

int sign_changes_at(const std::vector<Polynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : chain)
    if (!q.is_zero()) signs.push_back(sign(q.eval(x)));
  return sign_changes(signs);
}

}  // namespace

int count_real_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial> chain = sturm_chain(p);
  // Signs at -inf and +inf from leading terms.
  std::vector<int> at_minus, at_plus;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int lead = sign(q.leading());
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

Polynomial minimal_polynomial(const Mat& M) {
  if (M.rows() != M.cols()) throw InputShapeError("minimal_polynomial: non-square");
  int n = M.rows();
  int nn = n * n;
  // Stack I, M, M^2, ... flattened until a linear dependence appears.
  std::vector<Vec> powers;
  Mat p = Mat::identity(n);
  for (int d = 0; d <= n; ++d) {
    Vec flat(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[i * n + j] = p(i, j);
    // Solve for coefficients expressing flat in terms of previous powers.
    Mat sys(nn, int(powers.size()));
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < int(powers.size()); ++c) sys(r, c) = powers[c][r];
    auto res = linear_solve(sys, flat);
    if (res.particular) {
      Vec coeffs(d + 1);
      for (int k = 0; k < d; ++k) coeffs[k] = -(*res.particular)[k];
      coeffs[d] = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(std::move(flat));
    p = p * M;
  }
  throw InternalInconsistencyError("minimal polynomial not found within dimension bound");
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  // Sturm isolation plus Stern-Brocot reconstruction.  Any rational root of a
  // primitive integer polynomial has denominator dividing the leading
  // coefficient; the simplest rational in an isolating interval has the
  // smallest denominator of any rational it contains, so once that exceeds
  // the leading coefficient the isolated root is irrational.  This stays
  // exact and polynomial-time even when the coefficients are enormous.
  std::vector<Rational> roots;
  auto record = [&roots](const Rational& r) {
    for (const auto& s : roots)
      if (s == r) return;
    roots.push_back(r);
  };
  auto floor_q = [](const Rational& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return f;
  };
  // Simplest rational in the open interval (lo, hi): continued-fraction
  // descent through the Stern-Brocot tree.
  std::function<Rational(const Rational&, const Rational&)> simplest =
      [&](const Rational& lo, const Rational& hi) -> Rational {
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return Rational(-simplest(Rational(-hi), Rational(-lo)));
    Rational a(floor_q(lo));
    if (a + 1 < hi) return Rational(a + 1);
    if (lo == a) {
      // (a, hi) with hi <= a+1: reciprocal interval is (1/(hi-a), infinity).
      mpz_class n = floor_q(Rational(1) / (hi - a)) + 1;
      return Rational(a + Rational(1) / Rational(n));
    }
    return Rational(a + Rational(1) / simplest(Rational(1) / (hi - a),
                                               Rational(1) / (lo - a)));
  };
  auto deflate = [](const Polynomial& f, const Rational& r) {
    Vec c = f.coeffs();
    int n = int(c.size()) - 1;
    Vec h(n);
    Rational carry = c[n];
    for (int k = n - 1; k >= 0; --k) {
      h[std::size_t(k)] = carry;
      carry = c[std::size_t(k)] + r * carry;
    }
    return Polynomial(std::move(h));
  };

  Polynomial q = p.primitive();
  while (q.degree() > 0) {
    Vec c = q.coeffs();
    if (c[0] == 0) {
      record(0);
      c.erase(c.begin());
      q = Polynomial(std::move(c)).primitive();
      continue;
    }
    // Cauchy bound: all roots satisfy |x| < M.
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      Rational a = c[i] / c.back();
      if (a < 0) a = Rational(-a);
      if (a > bound) bound = a;
    }
    Rational M = bound + 1;
    mpz_class den_bound = abs(c.back().get_num());
    std::vector<Polynomial> chain = sturm_chain(q);
    // Distinct roots in (lo, hi]; valid whenever q(lo) != 0 and q(hi) != 0.
    auto count = [&chain](const Rational& lo, const Rational& hi) {
      return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
    };
    bool found = false;
    Rational root;
    std::vector<std::pair<Rational, Rational>> work{{Rational(-M), M}};
    while (!work.empty() && !found) {
      auto [lo, hi] = work.back();
      work.pop_back();
      int n = count(lo, hi);
      if (n == 0) continue;
      if (n > 1) {
        Rational mid = (lo + hi) / 2;
        if (q.eval(mid) == 0) {
          root = mid;
          found = true;
        } else {
          work.emplace_back(lo, mid);
          work.emplace_back(mid, hi);
        }
        continue;
      }
      // Exactly one root in (lo, hi); walk the Stern-Brocot tree towards it.
      while (true) {
        Rational cand = simplest(lo, hi);
        if (q.eval(cand) == 0) {
          root = cand;
          found = true;
          break;
        }
        if (cand.get_den() > den_bound) break;  // the isolated root is irrational
        if (count(lo, cand) > 0)
          hi = cand;
        else
          lo = cand;
      }
    }
    if (!found) break;
    record(root);
    q = deflate(q, root).primitive();
  }
  return roots;
}

SemisimpleCertificate real_semisimple_test(const Mat& M) {
  SemisimpleCertificate cert;
  cert.min_poly = minimal_polynomial(M);
  Polynomial g = Polynomial::gcd(cert.min_poly, cert.min_poly.derivative());
  cert.squarefree = g.degree() == 0;
  cert.real_root_count = count_real_roots(cert.min_poly);
  cert.all_roots_real = cert.real_root_count == cert.min_poly.degree();
  cert.verdict = cert.squarefree && cert.all_roots_real;
  return cert;
}

}  // namespace bas
