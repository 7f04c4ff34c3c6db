#ifndef GFIT_PERM_HPP
#define GFIT_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfit {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Externally (parsing, printing) points
/// are 1-based.
///
/// Points are acted on from the right and products compose left to right:
/// (p * q)(i) = q(p(i)). Under this convention g^h = h^-1 g h and
/// [g, h] = g^-1 h^-1 g h, and longer commutators are left-normed.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree);

  // Throws ValidationError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }

  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }

  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  Permutation inverse() const;

  // Smallest point not fixed, or degree() for the identity.
  Point first_moved() const noexcept;

  // Same permutation viewed on a larger point set (new points fixed).
  Permutation extended(std::size_t degree) const;
  // Points shifted up by `offset`; degree grows by `offset`.
  Permutation shifted(std::size_t offset) const;

  std::size_t order() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  Permutation &operator*=(const Permutation &q);

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const noexcept;

private:
  std::vector<Point> images_;
};

Permutation power(const Permutation &p, long long e);

// h^-1 g h
Permutation conjugate(const Permutation &g, const Permutation &h);

// g^-1 h^-1 g h
Permutation commutator(const Permutation &g, const Permutation &h);

// Left-normed [x1, x2, ..., xk].
Permutation commutator(std::span<const Permutation> xs);

// Largest power of the prime p dividing the order of g.
std::size_t p_part(const Permutation &g, std::size_t p);

// "(1 2 3)(4 5)" with 1-based points; "()" for the identity. Throws
// ParseError naming the offending token.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Canonical cycle form: each cycle starts at its smallest point, cycles in
// order of their smallest point, fixed points omitted.
std::string format_cycles(const Permutation &p);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

} // namespace gfit

template <> struct std::hash<gfit::Permutation> {
  std::size_t operator()(const gfit::Permutation &p) const noexcept { return p.hash(); }
};

#endif
