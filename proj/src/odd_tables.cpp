// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "odd_tables.hpp"

#include <array>
#include <map>
#include <tuple>

namespace pgf::detail {

namespace {

constexpr int kLevels = (kMaxOddDim - 3) / 2 + 1;

std::array<std::vector<EuclidTerm>, kLevels> build_euclid() {
  // P_{n+1}(x) = (x + 2n + 1) P_n(x) - x P_n'(x), P_0 = 1
  std::array<std::vector<EuclidTerm>, kLevels> out;
  std::vector<double> p{1.0};
  for (int n = 0; n < kLevels; ++n) {
    for (int k = 0; k < static_cast<int>(p.size()); ++k)
      if (p[k] != 0.0) out[n].push_back({k, p[k]});
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] += (2.0 * n + 1.0) * p[k];
      q[k] -= static_cast<double>(k) * p[k];
    }
    p = q;
  }
  return out;
}

std::array<std::vector<HyperTerm>, kLevels> build_hyper() {
  using Key = std::tuple<int, int, int>;
  std::array<std::vector<HyperTerm>, kLevels> out;
  std::map<Key, double> cur{{{0, 0, 1}, 1.0}};
  for (int n = 0; n < kLevels; ++n) {
    for (const auto& [key, c] : cur)
      if (c != 0.0) out[n].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    // -(1/sh) d/dr [e^{-br} b^a ch^p / sh^q]
    //   = b^{a+1} ch^p/sh^{q+1} - p b^a ch^{p-1}/sh^q + q b^a ch^{p+1}/sh^{q+2}
    std::map<Key, double> next;
    for (const auto& [key, c] : cur) {
      const auto [a, p, q] = key;
      next[{a + 1, p, q + 1}] += c;
      if (p > 0) next[{a, p - 1, q}] -= p * c;
      next[{a, p + 1, q + 2}] += q * c;
    }
    cur = next;
  }
  return out;
}

std::array<std::vector<SphereTerm>, kLevels> build_sphere() {
  using Key = std::tuple<bool, int, int, int>;
  std::array<std::vector<SphereTerm>, kLevels> out;
  std::map<Key, double> cur{{{false, 0, 0, 1}, 1.0}};
  for (int n = 0; n < kLevels; ++n) {
    for (const auto& [key, c] : cur)
      if (c != 0.0) out[n].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), c});
    // d/dr H(b(pi - r)) = -b H~ with H~ the partner; then
    // -(1/sin) d/dr [H b^a cos^p / sin^q]
    //   = b^{a+1} H~ cos^p/sin^{q+1} + p H b^a cos^{p-1}/sin^q + q H b^a cos^{p+1}/sin^{q+2}
    std::map<Key, double> next;
    for (const auto& [key, c] : cur) {
      const auto [h, a, p, q] = key;
      next[{!h, a + 1, p, q + 1}] += c;
      if (p > 0) next[{h, a, p - 1, q}] += p * c;
      next[{h, a, p + 1, q + 2}] += q * c;
    }
    cur = next;
  }
  return out;
}

void check_level(int n) {
  if (n < 0 || n >= kLevels) throw Error(ErrorKind::DomainError, "odd-dimension table covers d <= 13");
}

}  // namespace

const std::vector<EuclidTerm>& euclid_odd_terms(int n) {
  static const auto table = build_euclid();
  check_level(n);
  return table[n];
}

const std::vector<HyperTerm>& hyper_odd_terms(int n) {
  static const auto table = build_hyper();
  check_level(n);
  return table[n];
}

const std::vector<SphereTerm>& sphere_odd_terms(int n) {
  static const auto table = build_sphere();
  check_level(n);
  return table[n];
}

}  // namespace pgf::detail
