#include "gfit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gfit/errors.hpp"

namespace gfit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw ValidationError("image array is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size())
    throw ValidationError("cannot shrink a permutation");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation Permutation::shifted(std::size_t offset) const {
  Permutation r(images_.size() + offset);
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i + offset] = static_cast<Point>(images_[i] + offset);
  return r;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw ValidationError("degree mismatch in product: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation &Permutation::operator*=(const Permutation &q) {
  if (degree() != q.degree())
    throw ValidationError("degree mismatch in product");
  for (auto &v : images_)
    v = q.images_[v];
  return *this;
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation power(const Permutation &p, long long e) {
  Permutation base = e < 0 ? p.inverse() : p;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = Permutation::identity(p.degree());
  while (n) {
    if (n & 1)
      result *= base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation &g, const Permutation &h) {
  return h.inverse() * g * h;
}

Permutation commutator(const Permutation &g, const Permutation &h) {
  return g.inverse() * h.inverse() * g * h;
}

Permutation commutator(std::span<const Permutation> xs) {
  if (xs.empty())
    throw ValidationError("empty commutator");
  Permutation acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = commutator(acc, xs[i]);
  return acc;
}

std::size_t p_part(const Permutation &g, std::size_t p) {
  std::size_t n = g.order();
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

namespace {

struct CycleLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  }

  std::string number_token() {
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != ',')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw ParseError("degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  CycleLexer lex{text};
  if (lex.done())
    lex.fail("empty permutation text");
  while (!lex.done()) {
    if (lex.peek() != '(')
      lex.fail("expected '(' but found \"" + lex.number_token() + "\"");
    ++lex.pos;
    std::vector<Point> cycle;
    for (;;) {
      if (lex.done())
        lex.fail("unterminated cycle");
      if (lex.peek() == ')') {
        ++lex.pos;
        break;
      }
      if (lex.peek() == ',') {
        ++lex.pos;
        continue;
      }
      std::string tok = lex.number_token();
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw ParseError("bad point \"" + tok + "\" in \"" + std::string(text) + "\"");
      unsigned long long v = 0;
      try {
        v = std::stoull(tok);
      } catch (const std::exception &) {
        throw ParseError("bad point \"" + tok + "\" in \"" + std::string(text) + "\"");
      }
      if (v == 0 || v > degree)
        throw ParseError("point " + tok + " out of range 1.." + std::to_string(degree));
      Point pt = static_cast<Point>(v - 1);
      if (used[pt])
        throw ParseError("repeated point " + tok);
      used[pt] = true;
      cycle.push_back(pt);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation &p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i)
      continue;
    any = true;
    os << '(';
    Point j = i;
    bool first = true;
    do {
      seen[j] = true;
      if (!first)
        os << ' ';
      os << (j + 1);
      first = false;
      j = p(j);
    } while (j != i);
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << format_cycles(p); }

} // namespace gfit
