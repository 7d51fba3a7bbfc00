#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace fisherq {

/// Strictly increasing, non-empty list of positive moment orders k.
class MomentOrderSet {
 public:
  /// Throws DomainError unless `orders` is non-empty, positive and strictly
  /// increasing.
  explicit MomentOrderSet(std::vector<int> orders);
  MomentOrderSet(std::initializer_list<int> orders)
      : MomentOrderSet(std::vector<int>(orders)) {}

  std::size_t size() const { return orders_.size(); }
  int operator[](std::size_t i) const { return orders_[i]; }
  std::span<const int> orders() const { return orders_; }
  bool contains(int k) const;
  /// Position of order k; throws DomainError if absent.
  std::size_t index_of(int k) const;

  auto begin() const { return orders_.begin(); }
  auto end() const { return orders_.end(); }

  friend bool operator==(const MomentOrderSet&, const MomentOrderSet&) = default;

 private:
  std::vector<int> orders_;
};

/// Real values keyed by moment order. `Tag` keeps multipliers, moments and
/// weights from being mixed up at call sites.
template <class Tag>
class OrderIndexed {
 public:
  OrderIndexed(MomentOrderSet orders, std::vector<double> values);
  /// Builds from (k, value) pairs listed in increasing k.
  OrderIndexed(std::initializer_list<std::pair<int, double>> entries);

  const MomentOrderSet& orders() const { return orders_; }
  std::size_t size() const { return values_.size(); }

  /// Value at position i (not order k).
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  int order(std::size_t i) const { return orders_[i]; }

  /// Value for order k; throws DomainError if k is not present.
  double at(int k) const { return values_[orders_.index_of(k)]; }
  double& at(int k) { return values_[orders_.index_of(k)]; }

  std::span<const double> values() const { return values_; }

  friend bool operator==(const OrderIndexed&, const OrderIndexed&) = default;

 private:
  MomentOrderSet orders_;
  std::vector<double> values_;
};

struct MultiplierTag {};
struct MomentTag {};

/// Lagrange multipliers lambda_k, the expansion coefficients of the
/// information potential U(x) = -(1/8) sum_k lambda_k x^k.
using MultiplierVector = OrderIndexed<MultiplierTag>;
/// Expectation values <x^k>.
using MomentVector = OrderIndexed<MomentTag>;

/// Integration constants F_k of the closed-form I and alpha solutions.
/// C_k and D_k are the constants in the |<x^k>|^(-2/k) and
/// |lambda_k|^(2/(2+k)) forms respectively.
class ReferenceWeights {
 public:
  /// Throws DomainError unless every F_k > 0.
  ReferenceWeights(MomentOrderSet orders, std::vector<double> f_values);
  ReferenceWeights(std::initializer_list<std::pair<int, double>> entries);

  const MomentOrderSet& orders() const { return orders_; }
  std::size_t size() const { return f_.size(); }

  double f(std::size_t i) const { return f_[i]; }
  /// C_k = (k/2) F_k^(2/k)
  double c(std::size_t i) const;
  /// D_k = ((k+2)/2) F_k^(2/(2+k))
  double d(std::size_t i) const;
  double f_at(int k) const { return f_[orders_.index_of(k)]; }

  std::span<const double> f_values() const { return f_; }
  std::vector<double> c_values() const;
  std::vector<double> d_values() const;

 private:
  MomentOrderSet orders_;
  std::vector<double> f_;
};

/// Throws DomainError when the two order sets differ.
void require_same_orders(const MomentOrderSet& a, const MomentOrderSet& b,
                         const char* context);

}  // namespace fisherq
