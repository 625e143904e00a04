// Copyright 2026 The qremesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qremesh/core/operator_sum.hpp"

#include <map>

namespace qremesh::core {

TensorTerm TensorTerm::parse(Complex c, std::string_view symbols) {
  TensorTerm t;
  t.coefficient = c;
  t.factors.reserve(symbols.size());
  for (char ch : symbols) {
    auto e = from_symbol(ch);
    if (!e) throw std::invalid_argument(std::string("unknown factor symbol '") + ch + "'");
    t.factors.push_back(*e);
  }
  return t;
}

TensorTerm TensorTerm::identity(int n, Complex c) {
  return TensorTerm(c, std::vector<Elementary>(static_cast<std::size_t>(n), Elementary::Identity));
}

std::string TensorTerm::label() const {
  std::string s;
  s.reserve(factors.size());
  for (Elementary e : factors) s.push_back(symbol(e));
  return s;
}

TensorTerm TensorTerm::adjoint() const {
  TensorTerm t(std::conj(coefficient), factors);
  for (auto& e : t.factors) e = core::adjoint(e);
  return t;
}

CompiledTerm compile(const TensorTerm& term) {
  const int n = term.num_qubits();
  if (n > 62) throw std::length_error("tensor term wider than 62 qubits");
  CompiledTerm c;
  c.scale = term.coefficient;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << bit_of(n, q);
    switch (term.factors[q]) {
      case Elementary::Identity:
        break;
      case Elementary::PauliZ:
        c.sign |= bit;
        break;
      case Elementary::Pplus:
        c.care |= bit;
        break;
      case Elementary::Pminus:
        c.care |= bit;
        c.value |= bit;
        break;
      case Elementary::PauliX:
        c.flip |= bit;
        break;
      case Elementary::PauliY:
        c.flip |= bit;
        c.sign |= bit;
        c.scale *= Complex(0.0, 1.0);
        break;
      case Elementary::SigmaPlus:
        c.flip |= bit;
        c.care |= bit;
        c.value |= bit;
        break;
      case Elementary::SigmaMinus:
        c.flip |= bit;
        c.care |= bit;
        break;
    }
  }
  return c;
}

OperatorSum::OperatorSum(int n, std::vector<TensorTerm> terms) : n_(n) {
  terms_.reserve(terms.size());
  for (auto& t : terms) add(std::move(t));
}

void OperatorSum::add(TensorTerm t) {
  if (t.num_qubits() != n_) {
    throw LengthMismatch("term has " + std::to_string(t.num_qubits()) +
                         " factors, operator has " + std::to_string(n_) + " qubits");
  }
  terms_.push_back(std::move(t));
}

void OperatorSum::add(const OperatorSum& other) {
  if (other.n_ != n_) throw LengthMismatch("operator sums differ in qubit count");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

OperatorSum OperatorSum::scaled(Complex s) const {
  OperatorSum out = *this;
  for (auto& t : out.terms_) t.coefficient *= s;
  if (s.imag() != 0.0) out.hermitian_ = false;
  return out;
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out(n_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(t.adjoint());
  out.hermitian_ = hermitian_;
  return out;
}

OperatorSum OperatorSum::simplified(double tol) const {
  std::map<std::string, std::size_t> index;
  std::vector<TensorTerm> merged;
  for (const auto& t : terms_) {
    auto [it, inserted] = index.emplace(t.label(), merged.size());
    if (inserted) {
      merged.push_back(t);
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  OperatorSum out(n_);
  for (auto& t : merged) {
    if (std::abs(t.coefficient) > tol) out.terms_.push_back(std::move(t));
  }
  out.hermitian_ = hermitian_;
  return out;
}

OperatorSum OperatorSum::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw LengthMismatch("permutation size mismatch");
  OperatorSum out(n_);
  for (const auto& t : terms_) {
    TensorTerm p(t.coefficient, std::vector<Elementary>(t.factors.size()));
    for (int q = 0; q < n_; ++q) p.factors[perm[q]] = t.factors[q];
    out.terms_.push_back(std::move(p));
  }
  out.hermitian_ = hermitian_;
  return out;
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out = a;
  out.add(b);
  out.set_hermitian(a.hermitian() && b.hermitian());
  return out;
}

OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) {
  return a + b.scaled(-1.0);
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  if (a.num_qubits() != b.num_qubits()) throw LengthMismatch("operator product qubit mismatch");
  const int n = a.num_qubits();
  OperatorSum out(n);
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      TensorTerm t(x.coefficient * y.coefficient, std::vector<Elementary>(n));
      bool zero = false;
      for (int q = 0; q < n && !zero; ++q) {
        auto p = multiply(x.factors[q], y.factors[q]);
        if (!p) {
          zero = true;
        } else {
          t.coefficient *= p->first;
          t.factors[q] = p->second;
        }
      }
      if (!zero) out.add(std::move(t));
    }
  }
  return out;
}

OperatorSum kron(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out(a.num_qubits() + b.num_qubits());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      TensorTerm t(x.coefficient * y.coefficient, x.factors);
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.add(std::move(t));
    }
  }
  out.set_hermitian(a.hermitian() && b.hermitian());
  return out;
}

OperatorSum kron(std::initializer_list<OperatorSum> parts) {
  OperatorSum out = identity_op(0);
  bool herm = true;
  for (const auto& p : parts) {
    out = kron(out, p);
    herm = herm && p.hermitian();
  }
  out.set_hermitian(herm);
  return out;
}

OperatorSum identity_op(int n) {
  OperatorSum out(n, {TensorTerm::identity(n)});
  out.set_hermitian(true);
  return out;
}

OperatorSum power_op(Elementary e, int n, Complex c) {
  OperatorSum out(n, {TensorTerm(c, std::vector<Elementary>(static_cast<std::size_t>(n), e))});
  out.set_hermitian(c.imag() == 0.0 && (is_diagonal(e) || e == Elementary::PauliX ||
                                        e == Elementary::PauliY));
  return out;
}

}  // namespace qremesh::core
