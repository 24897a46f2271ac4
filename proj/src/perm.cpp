#include "gen32/perm.hpp"

#include <numeric>
#include <sstream>

#include "gen32/errors.hpp"

namespace gen32 {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("image sequence is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& c : cycles) {
    std::vector<Point> pts(c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= degree) throw PreconditionError("cycle point out of range");
      img[pts[i]] = pts[(i + 1) % pts.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw PreconditionError("degree mismatch in product");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r(degree());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Perm Perm::conjugate(const Perm& g) const {
  if (degree() != g.degree()) throw PreconditionError("degree mismatch in conjugation");
  // (g^-1 h g)(g(x)) = g(h(x))
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::size_t Perm::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

std::size_t Perm::hash() const {
  // FNV-1a over the images.
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << images_[i];
  }
  return os.str();
}

Perm Perm::parse(const std::string& line) {
  std::istringstream is(line);
  std::vector<Point> img;
  long long x;
  while (is >> x) {
    if (x < 0) throw FormatError("negative point in permutation");
    img.push_back(static_cast<Point>(x));
  }
  if (!is.eof()) throw FormatError("non-integer token in permutation: " + line);
  try {
    return Perm(std::move(img));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

}  // namespace gen32
