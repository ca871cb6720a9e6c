// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/linpoly/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace qhelab {

void LinearPolynomial::validate() const {
  if (n < 1) throw std::invalid_argument("polynomial needs at least one variable");
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("coefficient count must equal n");
  for (Bit b : a)
    if (b > 1) throw std::invalid_argument("coefficients are bits");
  if (c > 1) throw std::invalid_argument("constant is a bit");
}

Bit LinearPolynomial::eval(const std::vector<Bit>& x) const {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("input length must equal n");
  Bit y = c;
  for (int i = 0; i < n; ++i) y ^= a[i] & x[i];
  return y & 1;
}

Bit LinearPolynomial::weight() const {
  Bit w = 0;
  for (Bit b : a) w ^= b;
  return w;
}

LinearPolynomial polynomial_from_json(const nlohmann::json& j) {
  LinearPolynomial p;
  p.n = j.at("n").get<int>();
  p.a = j.at("a").get<std::vector<Bit>>();
  p.c = j.value("c", Bit{0});
  p.validate();
  return p;
}

nlohmann::json polynomial_to_json(const LinearPolynomial& p) { return {{"n", p.n}, {"a", p.a}, {"c", p.c}}; }

Vector encode_single(Bit x, Bit s) {
  Vector v = Vector::Zero(2);
  if (!s) {
    v(x & 1) = 1.0;
  } else {
    const double r = 1.0 / std::sqrt(2.0);
    v << r, x ? -r : r;
  }
  return v;
}

Vector encode_pair(Bit x, Bit s) {
  // First qubit carries x only in the Z basis; second only in the X basis.
  const Vector first = s ? encode_single(0, 1) : encode_single(x, 0);
  const Vector second = s ? encode_single(x, 1) : encode_single(0, 0);
  Vector v(4);
  for (int b2 = 0; b2 < 2; ++b2)
    for (int b1 = 0; b1 < 2; ++b1) v(b1 + 2 * b2) = first(b1) * second(b2);
  return v;
}

std::vector<Bit> split_bit(Bit x, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<Bit> parts(k);
  Bit acc = x & 1;
  for (int j = 0; j + 1 < k; ++j) {
    parts[j] = rng.bit();
    acc ^= parts[j];
  }
  parts[k - 1] = acc;
  return parts;
}

void check_inputs(const std::vector<Bit>& x, const LinearPolynomial& p, int k) {
  p.validate();
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<int>(x.size()) != p.n) throw std::invalid_argument("input length must equal n");
  for (Bit b : x)
    if (b > 1) throw std::invalid_argument("inputs are bits");
}

}  // namespace qhelab
