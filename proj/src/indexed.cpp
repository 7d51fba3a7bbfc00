#include "fisherq/indexed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fisherq/errors.hpp"

namespace fisherq {

MomentOrderSet::MomentOrderSet(std::vector<int> orders)
    : orders_(std::move(orders)) {
  if (orders_.empty()) throw DomainError("moment order set is empty");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1)
      throw DomainError("moment order must be >= 1, got " +
                        std::to_string(orders_[i]));
    if (i > 0 && orders_[i] <= orders_[i - 1])
      throw DomainError("moment orders must be strictly increasing");
  }
}

bool MomentOrderSet::contains(int k) const {
  return std::binary_search(orders_.begin(), orders_.end(), k);
}

std::size_t MomentOrderSet::index_of(int k) const {
  auto it = std::lower_bound(orders_.begin(), orders_.end(), k);
  if (it == orders_.end() || *it != k)
    throw DomainError("moment order " + std::to_string(k) + " not present");
  return static_cast<std::size_t>(it - orders_.begin());
}

namespace {

std::vector<int> keys_of(std::initializer_list<std::pair<int, double>> e) {
  std::vector<int> keys;
  keys.reserve(e.size());
  for (const auto& [k, v] : e) keys.push_back(k);
  return keys;
}

std::vector<double> values_of(std::initializer_list<std::pair<int, double>> e) {
  std::vector<double> vals;
  vals.reserve(e.size());
  for (const auto& [k, v] : e) vals.push_back(v);
  return vals;
}

}  // namespace

template <class Tag>
OrderIndexed<Tag>::OrderIndexed(MomentOrderSet orders,
                                std::vector<double> values)
    : orders_(std::move(orders)), values_(std::move(values)) {
  if (values_.size() != orders_.size())
    throw DomainError("value count does not match moment order count");
}

template <class Tag>
OrderIndexed<Tag>::OrderIndexed(
    std::initializer_list<std::pair<int, double>> entries)
    : OrderIndexed(MomentOrderSet(keys_of(entries)), values_of(entries)) {}

template class OrderIndexed<MultiplierTag>;
template class OrderIndexed<MomentTag>;

ReferenceWeights::ReferenceWeights(MomentOrderSet orders,
                                   std::vector<double> f_values)
    : orders_(std::move(orders)), f_(std::move(f_values)) {
  if (f_.size() != orders_.size())
    throw DomainError("weight count does not match moment order count");
  for (double f : f_) {
    if (!(f > 0.0) || !std::isfinite(f))
      throw DomainError("reference weight F_k must be positive and finite");
  }
}

ReferenceWeights::ReferenceWeights(
    std::initializer_list<std::pair<int, double>> entries)
    : ReferenceWeights(MomentOrderSet(keys_of(entries)), values_of(entries)) {}

double ReferenceWeights::c(std::size_t i) const {
  const double k = orders_[i];
  return 0.5 * k * std::pow(f_[i], 2.0 / k);
}

double ReferenceWeights::d(std::size_t i) const {
  const double k = orders_[i];
  return 0.5 * (k + 2.0) * std::pow(f_[i], 2.0 / (2.0 + k));
}

std::vector<double> ReferenceWeights::c_values() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = c(i);
  return out;
}

std::vector<double> ReferenceWeights::d_values() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = d(i);
  return out;
}

void require_same_orders(const MomentOrderSet& a, const MomentOrderSet& b,
                         const char* context) {
  if (!(a == b))
    throw DomainError(std::string(context) + ": moment order sets differ");
}

}  // namespace fisherq
