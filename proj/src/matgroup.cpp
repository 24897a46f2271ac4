#include "gen32/matgroup.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "gen32/errors.hpp"

namespace gen32 {

namespace {

struct EntriesHash {
  std::size_t operator()(const std::vector<Code>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// MatrixF

MatrixF::MatrixF(FieldSpec field, std::uint32_t dim, std::vector<Code> entries)
    : field_(std::move(field)), dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw PreconditionError("matrix dimension must be positive");
  if (entries_.size() != std::size_t(dim_) * dim_) throw PreconditionError("matrix entry count mismatch");
  for (auto c : entries_)
    if (c >= field_.order()) throw PreconditionError("matrix entry out of field range");
}

MatrixF MatrixF::identity(const FieldSpec& field, std::uint32_t dim) {
  std::vector<Code> e(std::size_t(dim) * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  return MatrixF(field, dim, std::move(e));
}

MatrixF MatrixF::diagonal(const FieldSpec& field, const std::vector<Code>& diag) {
  const auto dim = static_cast<std::uint32_t>(diag.size());
  std::vector<Code> e(std::size_t(dim) * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) e[i * dim + i] = diag[i];
  return MatrixF(field, dim, std::move(e));
}

Code MatrixF::determinant() const {
  const auto& f = field_;
  const std::uint32_t n = dim_;
  std::vector<Code> a = entries_;
  Code det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::uint32_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      det = f.neg(det);
    }
    const Code pv = a[col * n + col];
    det = f.mul(det, pv);
    const Code pinv = f.inv(pv);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const Code factor = f.mul(a[r * n + col], pinv);
      if (factor == 0) continue;
      for (std::uint32_t k = col; k < n; ++k) a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[col * n + k]));
    }
  }
  return det;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) throw PreconditionError("mat_mul: incompatible operands");
  const auto& f = a.field();
  const std::uint32_t n = a.dim();
  std::vector<Code> e(std::size_t(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const Code x = a(i, k);
      if (x == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) e[i * n + j] = f.add(e[i * n + j], f.mul(x, b(k, j)));
    }
  return MatrixF(f, n, std::move(e));
}

MatrixF mat_inv(const MatrixF& m) {
  const auto& f = m.field();
  const std::uint32_t n = m.dim();
  std::vector<Code> a = m.entries();
  std::vector<Code> inv = MatrixF::identity(f, n).entries();
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) throw PreconditionError("mat_inv: singular matrix");
    for (std::uint32_t k = 0; k < n; ++k) {
      std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(inv[piv * n + k], inv[col * n + k]);
    }
    const Code pinv = f.inv(a[col * n + col]);
    for (std::uint32_t k = 0; k < n; ++k) {
      a[col * n + k] = f.mul(a[col * n + k], pinv);
      inv[col * n + k] = f.mul(inv[col * n + k], pinv);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Code factor = a[r * n + col];
      for (std::uint32_t k = 0; k < n; ++k) {
        a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[col * n + k]));
        inv[r * n + k] = f.sub(inv[r * n + k], f.mul(factor, inv[col * n + k]));
      }
    }
  }
  return MatrixF(f, n, std::move(inv));
}

std::uint64_t mat_order(const MatrixF& a) {
  if (!a.is_invertible()) throw PreconditionError("mat_order: singular matrix");
  const auto id = MatrixF::identity(a.field(), a.dim());
  MatrixF x = a;
  for (std::uint64_t k = 1; k <= 10'000'000; ++k) {
    if (x == id) return k;
    x = mat_mul(x, a);
  }
  throw CapExceeded("mat_order: no identity within 10^7 powers");
}

// ---------------------------------------------------------------------------
// MatrixGroup

MatrixGroup::MatrixGroup(FieldSpec field, std::uint32_t dim, std::vector<MatrixF> generators)
    : field_(std::move(field)), dim_(dim), generators_(std::move(generators)) {
  if (generators_.empty()) throw PreconditionError("matrix group needs at least one generator");
  for (const auto& g : generators_) {
    if (!(g.field() == field_) || g.dim() != dim_) throw PreconditionError("generator field/dimension mismatch");
    if (!g.is_invertible()) throw PreconditionError("matrix group generator is singular");
  }
}

// ---------------------------------------------------------------------------
// Vector encoding and induced permutations

VectorEncoding::VectorEncoding(FieldSpec field, std::uint32_t dim) : field_(std::move(field)), dim_(dim) {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    s *= field_.order();
    if (s > kVectorDomainCap) throw CapExceeded("vector domain q^dim exceeds 10^6");
  }
  size_ = static_cast<std::uint32_t>(s);
}

std::uint32_t VectorEncoding::encode(const std::vector<Code>& v) const {
  if (v.size() != dim_) throw PreconditionError("vector length mismatch");
  std::uint32_t c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * field_.order() + v[i];
  return c;
}

std::vector<Code> VectorEncoding::decode(std::uint32_t point) const {
  if (point >= size_) throw PreconditionError("point outside vector domain");
  std::vector<Code> v(dim_);
  for (auto& x : v) {
    x = point % field_.order();
    point /= field_.order();
  }
  return v;
}

std::vector<Code> VectorEncoding::apply(const std::vector<Code>& v, const MatrixF& m) const {
  std::vector<Code> out(dim_, 0);
  for (std::uint32_t r = 0; r < dim_; ++r) {
    if (v[r] == 0) continue;
    for (std::uint32_t c = 0; c < dim_; ++c) out[c] = field_.add(out[c], field_.mul(v[r], m(r, c)));
  }
  return out;
}

Perm perm_from_matrix(const MatrixF& m, VectorDomain domain) {
  if (!m.is_invertible()) throw PreconditionError("perm_from_matrix: singular matrix");
  const VectorEncoding enc(m.field(), m.dim());
  const std::uint32_t shift = domain == VectorDomain::Nonzero ? 1 : 0;
  std::vector<Point> img(enc.size() - shift);
  for (std::uint32_t pt = shift; pt < enc.size(); ++pt) img[pt - shift] = enc.encode(enc.apply(enc.decode(pt), m)) - shift;
  return Perm(std::move(img));
}

PermGroup to_perm_group(const MatrixGroup& g, VectorDomain domain) {
  std::vector<Perm> gens;
  for (const auto& m : g.generators()) gens.push_back(perm_from_matrix(m, domain));
  const std::size_t degree = gens.front().degree();
  return PermGroup(degree, std::move(gens));
}

std::uint64_t group_order(const MatrixGroup& g) { return to_perm_group(g, VectorDomain::Nonzero).order(); }

// ---------------------------------------------------------------------------
// Irreducibility

namespace {

// Echelon basis: rows sorted by pivot, pivot entries 1, zeros before pivots.
class EchelonBasis {
 public:
  EchelonBasis(const FieldSpec& f, std::uint32_t dim) : f_(f), dim_(dim) {}

  // Reduces v; inserts and returns true when v was outside the span.
  bool insert(std::vector<Code> v, std::vector<Code>* added = nullptr) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Code c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k < dim_; ++k) v[k] = f_.sub(v[k], f_.mul(c, rows_[r][k]));
    }
    std::uint32_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const Code inv = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, inv);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, v);
    if (added) *added = std::move(v);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Code>>& rows() const { return rows_; }

 private:
  const FieldSpec& f_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::vector<Code>> rows_;
};

}  // namespace

std::vector<std::vector<Code>> spin(const MatrixGroup& g, const std::vector<Code>& v) {
  const VectorEncoding enc(g.field(), g.dim());
  EchelonBasis basis(g.field(), g.dim());
  std::vector<std::vector<Code>> queue;
  std::vector<Code> added;
  if (basis.insert(v, &added)) queue.push_back(added);
  for (std::size_t k = 0; k < queue.size() && basis.rank() < g.dim(); ++k)
    for (const auto& m : g.generators())
      if (basis.insert(enc.apply(queue[k], m), &added)) queue.push_back(added);
  return basis.rows();
}

bool is_irreducible(const MatrixGroup& g) {
  if (g.dim() == 1) return true;
  const VectorEncoding enc(g.field(), g.dim());
  for (std::uint32_t pt = 1; pt < enc.size(); ++pt) {
    const auto v = enc.decode(pt);
    std::uint32_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;  // one representative per line
    if (spin(g, v).size() < g.dim()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Restriction of scalars

MatrixF restrict_scalars(const MatrixF& m) {
  const auto& big = m.field();
  const std::uint32_t deg = big.degree();
  if (deg < 2) throw PreconditionError("restrict_scalars: field is already prime");
  const auto small = FieldSpec::make(big.characteristic(), 1);
  const std::uint32_t p = big.characteristic();
  const std::uint32_t n = m.dim() * deg;
  std::vector<Code> e(std::size_t(n) * n, 0);
  for (std::uint32_t r = 0; r < m.dim(); ++r)
    for (std::uint32_t c = 0; c < m.dim(); ++c) {
      Code basis = 1;  // code of x^i
      for (std::uint32_t i = 0; i < deg; ++i, basis *= p) {
        const auto prod = big.element(big.mul(basis, m(r, c)));
        for (std::uint32_t j = 0; j < deg; ++j) e[(r * deg + i) * n + (c * deg + j)] = prod.coeffs[j];
      }
    }
  return MatrixF(small, n, std::move(e));
}

MatrixGroup restrict_scalars(const MatrixGroup& g) {
  std::vector<MatrixF> gens;
  for (const auto& m : g.generators()) gens.push_back(restrict_scalars(m));
  const auto f = gens.front().field();
  return MatrixGroup(f, g.dim() * g.field().degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Element closure and ambient conjugacy

std::vector<MatrixF> matrix_elements(const MatrixGroup& g, std::size_t cap) {
  std::unordered_set<std::vector<Code>, EntriesHash> seen;
  std::vector<MatrixF> out{MatrixF::identity(g.field(), g.dim())};
  seen.insert(out.front().entries());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : g.generators()) {
      MatrixF y = mat_mul(out[k], s);
      if (seen.insert(y.entries()).second) {
        out.push_back(std::move(y));
        if (out.size() > cap) throw CapExceeded("matrix group exceeds element cap");
      }
    }
  return out;
}

std::uint64_t gl_order(std::uint32_t dim, std::uint64_t q) {
  unsigned __int128 qd = 1;
  for (std::uint32_t i = 0; i < dim; ++i) qd *= q;
  unsigned __int128 order = 1, qi = 1;
  for (std::uint32_t i = 0; i < dim; ++i, qi *= q) {
    order *= (qd - qi);
    if (order > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(order);
}

std::optional<MatrixF> conjugate_in_ambient(const MatrixGroup& a, const MatrixGroup& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) throw PreconditionError("conjugate_in_ambient: groups live in different GL");
  const auto& f = a.field();
  const std::uint32_t dim = a.dim();
  if (gl_order(dim, f.order()) > kAmbientCap) throw CapExceeded("conjugate_in_ambient: |GL(dim, q)| exceeds 10^5");
  if (group_order(a) != group_order(b)) throw PreconditionError("conjugate_in_ambient: |A| != |B|");

  std::unordered_set<std::vector<Code>, EntriesHash> members;
  for (const auto& m : matrix_elements(b)) members.insert(m.entries());

  const std::size_t cells = std::size_t(dim) * dim;
  std::vector<Code> e(cells, 0);
  const Code q = f.order();
  while (true) {
    // Next code vector, entry 0 least significant.
    std::size_t k = 0;
    while (k < cells && ++e[k] == q) e[k++] = 0;
    if (k == cells) break;
    MatrixF g(f, dim, e);
    if (!g.is_invertible()) continue;
    const MatrixF ginv = mat_inv(g);
    bool ok = true;
    for (const auto& x : a.generators())
      if (!members.count(mat_mul(mat_mul(ginv, x), g).entries())) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

MatrixGroup read_matrix_group(std::istream& is) {
  std::string line;
  auto blank = [](const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; };
  while (std::getline(is, line) && blank(line)) {
  }
  std::istringstream hs(line);
  long long p = 0, m = 0, dim = 0;
  if (!(hs >> p >> m >> dim) || p < 2 || m < 1 || dim < 1) throw FormatError("matrix file: expected 'p m dim' header");
  FieldSpec field = [&] {
    try {
      return FieldSpec::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    } catch (const PreconditionError& e) {
      throw FormatError(std::string("matrix file: ") + e.what());
    }
  }();
  const auto d = static_cast<std::uint32_t>(dim);

  std::vector<MatrixF> gens;
  std::vector<Code> cur;
  std::uint32_t rows = 0;
  auto flush = [&] {
    if (rows == 0) return;
    if (rows != d) throw FormatError("matrix file: matrix with wrong number of rows");
    try {
      gens.emplace_back(field, d, std::move(cur));
    } catch (const PreconditionError& e) {
      throw FormatError(std::string("matrix file: ") + e.what());
    }
    cur.clear();
    rows = 0;
  };
  while (std::getline(is, line)) {
    if (blank(line)) {
      flush();
      continue;
    }
    std::istringstream ls(line);
    long long x;
    std::uint32_t cols = 0;
    while (ls >> x) {
      if (x < 0 || x >= field.order()) throw FormatError("matrix file: entry out of range");
      cur.push_back(static_cast<Code>(x));
      ++cols;
    }
    if (!ls.eof() || cols != d) throw FormatError("matrix file: malformed row '" + line + "'");
    if (++rows > d) throw FormatError("matrix file: matrix with too many rows (missing blank line?)");
  }
  flush();
  if (gens.empty()) throw FormatError("matrix file: no matrices");
  try {
    return MatrixGroup(field, d, std::move(gens));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("matrix file: ") + e.what());
  }
}

MatrixGroup read_matrix_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open matrix file " + path);
  return read_matrix_group(in);
}

void write_matrix_group(std::ostream& os, const MatrixGroup& g) {
  os << g.field().characteristic() << ' ' << g.field().degree() << ' ' << g.dim() << '\n';
  bool first = true;
  for (const auto& m : g.generators()) {
    if (!first) os << '\n';
    first = false;
    for (std::uint32_t r = 0; r < m.dim(); ++r) {
      for (std::uint32_t c = 0; c < m.dim(); ++c) os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
  }
}

}  // namespace gen32
