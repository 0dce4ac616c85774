#ifndef DRINMOD_UPOLY_HPP
#define DRINMOD_UPOLY_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace drinmod {

/// Dense univariate polynomial over a coefficient ring R. R must provide
/// +, -, *, unary -, ==, is_zero(), is_one(); a default-constructed R acts
/// as zero. Normalized: no stored leading zeros, so degree() is exact.
template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(R v) {
    UPoly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }

  const R& coeff(size_t i) const {
    static const R zero{};
    return i < c_.size() ? c_[i] : zero;
  }
  void set_coeff(size_t i, R v) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = std::move(v);
    trim();
  }

  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("UPoly::leading: zero polynomial");
    return c_.back();
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return UPoly(std::move(r));
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<R> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<R> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const R& s) const {
    std::vector<R> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * s;
    return UPoly(std::move(r));
  }
  bool operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  R evaluate(const R& x) const {
    if (c_.empty()) return R{};
    R acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly compose(const UPoly& inner) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;)
      acc = acc * inner + constant(c_[i]);
    return acc;
  }

  /// x^n * P(1/x) for n >= deg P: coefficient i of the result is c_{n-i}.
  UPoly reciprocal(size_t n) const {
    if (static_cast<long>(n) < degree())
      throw std::invalid_argument("UPoly::reciprocal: n below degree");
    std::vector<R> r(n + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return UPoly(std::move(r));
  }

  /// Formal derivative; `scalar(k)` must produce the image of the integer k
  /// in R, supplied by the caller as a function.
  template <class IntImage>
  UPoly derivative(IntImage&& scalar) const {
    if (c_.size() <= 1) return {};
    std::vector<R> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * scalar(i);
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<R> c_;
};

}  // namespace drinmod

#endif
