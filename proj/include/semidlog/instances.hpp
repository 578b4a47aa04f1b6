#pragma once

// Concrete semigroup families. Canonical key encodings (format v1):
//   zmod           8-byte big-endian residue
//   matmod         d*d entries, row-major, each 8-byte big-endian
//   boolmat        d*d bits, row-major, MSB-first, zero-padded to a byte
//   transformation one byte per point, 1-indexed image
//   monogenic      8-byte big-endian canonical exponent

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "semidlog/core.hpp"
#include "semidlog/number_theory.hpp"
#include "semidlog/random.hpp"

namespace semidlog {

/// Multiplicative semigroup of Z/nZ (zero divisors included).
struct ZMod {
  using element_type = std::uint64_t;
  std::uint64_t modulus;

  explicit ZMod(std::uint64_t n) : modulus(n) {
    if (n == 0) throw std::domain_error("zmod: modulus must be positive");
  }

  void check(element_type a) const {
    if (a >= modulus) throw std::domain_error("zmod: residue out of range");
  }
  element_type multiply(element_type a, element_type b) const {
    check(a);
    check(b);
    return mulmod(a, b, modulus);
  }
  Key key(element_type a) const {
    Key k;
    detail::append_be64(k, a);
    return k;
  }
  std::string describe() const { return "zmod(" + std::to_string(modulus) + ")"; }
  friend bool operator==(const ZMod&, const ZMod&) = default;
};

/// d x d matrices mod m under matrix product. Elements are row-major.
struct MatMod {
  using element_type = std::vector<std::uint64_t>;
  std::size_t dim;
  std::uint64_t modulus;

  MatMod(std::size_t d, std::uint64_t m) : dim(d), modulus(m) {
    if (d == 0) throw std::domain_error("matmod: dimension must be positive");
    if (m == 0) throw std::domain_error("matmod: modulus must be positive");
  }

  void check(const element_type& a) const {
    if (a.size() != dim * dim) throw std::domain_error("matmod: dimension mismatch");
    for (auto v : a)
      if (v >= modulus) throw std::domain_error("matmod: entry out of range");
  }
  element_type multiply(const element_type& a, const element_type& b) const {
    if (a.size() != dim * dim || b.size() != dim * dim) throw std::domain_error("matmod: dimension mismatch");
    element_type c(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const std::uint64_t aik = a[i * dim + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < dim; ++j)
          c[i * dim + j] = static_cast<std::uint64_t>((static_cast<u128>(aik) * b[k * dim + j] + c[i * dim + j]) % modulus);
      }
    return c;
  }
  Key key(const element_type& a) const {
    Key k;
    k.reserve(8 * a.size());
    for (auto v : a) detail::append_be64(k, v);
    return k;
  }
  std::string describe() const {
    return "matmod(d=" + std::to_string(dim) + ",m=" + std::to_string(modulus) + ")";
  }
  friend bool operator==(const MatMod&, const MatMod&) = default;
};

/// d x d matrices over the boolean semiring (OR, AND). Each row is a bit
/// mask with column j at bit j, so d <= 64.
struct BoolMat {
  using element_type = std::vector<std::uint64_t>;
  std::size_t dim;

  explicit BoolMat(std::size_t d) : dim(d) {
    if (d == 0 || d > 64) throw std::domain_error("boolmat: dimension must be in [1, 64]");
  }

  std::uint64_t row_mask() const { return dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1; }
  void check(const element_type& a) const {
    if (a.size() != dim) throw std::domain_error("boolmat: dimension mismatch");
    for (auto r : a)
      if (r & ~row_mask()) throw std::domain_error("boolmat: entry out of range");
  }
  element_type multiply(const element_type& a, const element_type& b) const {
    if (a.size() != dim || b.size() != dim) throw std::domain_error("boolmat: dimension mismatch");
    element_type c(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        if ((a[i] >> k) & 1u) c[i] |= b[k];
    return c;
  }
  Key key(const element_type& a) const {
    Key k((dim * dim + 7) / 8, '\0');
    std::size_t bit = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j, ++bit)
        if ((a[i] >> j) & 1u) k[bit / 8] = static_cast<char>(k[bit / 8] | (0x80 >> (bit % 8)));
    return k;
  }
  std::string describe() const { return "boolmat(d=" + std::to_string(dim) + ")"; }
  friend bool operator==(const BoolMat&, const BoolMat&) = default;

  static element_type from_rows(const std::vector<std::vector<int>>& rows) {
    element_type out;
    for (const auto& r : rows) {
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j]) mask |= std::uint64_t{1} << j;
      out.push_back(mask);
    }
    return out;
  }
};

/// Full transformation semigroup on d points. Elements hold 0-indexed
/// images; the product a*b applies a first, then b.
struct Transformation {
  using element_type = std::vector<std::uint8_t>;
  std::size_t degree;

  explicit Transformation(std::size_t d) : degree(d) {
    if (d == 0 || d > 255) throw std::domain_error("transformation: degree must be in [1, 255]");
  }

  void check(const element_type& a) const {
    if (a.size() != degree) throw std::domain_error("transformation: degree mismatch");
    for (auto v : a)
      if (v >= degree) throw std::domain_error("transformation: image out of range");
  }
  element_type multiply(const element_type& a, const element_type& b) const {
    if (a.size() != degree || b.size() != degree) throw std::domain_error("transformation: degree mismatch");
    element_type c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  }
  Key key(const element_type& a) const {
    Key k;
    k.reserve(a.size());
    for (auto v : a) k.push_back(static_cast<char>(v + 1));
    return k;
  }
  std::string describe() const { return "transformation(d=" + std::to_string(degree) + ")"; }
  friend bool operator==(const Transformation&, const Transformation&) = default;

  /// Build from a 1-indexed image list.
  static element_type from_one_indexed(const std::vector<unsigned>& images) {
    element_type out;
    for (auto v : images) out.push_back(static_cast<std::uint8_t>(v - 1));
    return out;
  }
};

/// The monogenic semigroup <x | x^{s+L} = x^s>. Elements are canonical
/// exponents in [1, s+L-1]; the generator is exponent 1.
struct Monogenic {
  using element_type = std::uint64_t;
  std::uint64_t start;
  std::uint64_t length;

  Monogenic(std::uint64_t s, std::uint64_t L) : start(s), length(L) {
    if (s == 0 || L == 0) throw std::domain_error("monogenic: s and L must be positive");
    if (s > (std::uint64_t{1} << 62) || L > (std::uint64_t{1} << 62)) throw std::domain_error("monogenic: parameters too large");
  }

  std::uint64_t order() const { return start + length - 1; }
  element_type canon(u128 n) const {
    if (n <= order()) return static_cast<element_type>(n);
    return static_cast<element_type>((n - start) % length + start);
  }
  void check(element_type a) const {
    if (a == 0 || a > order()) throw std::domain_error("monogenic: exponent out of range");
  }
  element_type multiply(element_type a, element_type b) const {
    check(a);
    check(b);
    return canon(static_cast<u128>(a) + b);
  }
  Key key(element_type a) const {
    Key k;
    detail::append_be64(k, a);
    return k;
  }
  std::string describe() const {
    return "monogenic(s=" + std::to_string(start) + ",L=" + std::to_string(length) + ")";
  }
  friend bool operator==(const Monogenic&, const Monogenic&) = default;
};

// Seeded element generators. Entries are uniform over their range; the
// output is a pure function of (instance, seed).

inline ZMod::element_type random_element(const ZMod& s, std::uint64_t seed) {
  Rng rng(seed);
  return uniform_in(rng, 0, s.modulus - 1);
}

inline MatMod::element_type random_element(const MatMod& s, std::uint64_t seed) {
  Rng rng(seed);
  MatMod::element_type a(s.dim * s.dim);
  for (auto& v : a) v = uniform_in(rng, 0, s.modulus - 1);
  return a;
}

inline BoolMat::element_type random_element(const BoolMat& s, std::uint64_t seed) {
  Rng rng(seed);
  BoolMat::element_type a(s.dim, 0);
  for (auto& row : a)
    for (std::size_t j = 0; j < s.dim; ++j)
      if (uniform_in(rng, 0, 1)) row |= std::uint64_t{1} << j;
  return a;
}

inline Transformation::element_type random_element(const Transformation& s, std::uint64_t seed) {
  Rng rng(seed);
  Transformation::element_type a(s.degree);
  for (auto& v : a) v = static_cast<std::uint8_t>(uniform_in(rng, 0, s.degree - 1));
  return a;
}

inline Monogenic::element_type random_element(const Monogenic& s, std::uint64_t seed) {
  Rng rng(seed);
  return uniform_in(rng, 1, s.order());
}

}  // namespace semidlog
