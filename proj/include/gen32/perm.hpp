#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace gen32 {

using Point = std::uint32_t;

// A permutation of [0, n) stored as its image sequence.
//
// Products compose left to right: (a * b)(x) = b(a(x)), matching the right
// action x^(ab) = (x^a)^b used throughout.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);                // identity
  explicit Perm(std::vector<Point> images);         // validated bijection
  static Perm from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs) { return *this = *this * rhs; }
  Perm inverse() const;
  Perm pow(long long e) const;
  // g^-1 * this * g
  Perm conjugate(const Perm& g) const;

  bool is_identity() const;
  std::uint64_t order() const;  // lcm of cycle lengths
  // Smallest moved point, or degree() when the identity.
  Point first_moved() const;
  std::size_t fixed_points() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  // Lexicographic on image sequences.
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  std::size_t hash() const;

  std::string to_string() const;  // image sequence, space separated
  static Perm parse(const std::string& line);

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b

}  // namespace gen32
