#include "skewrank/pencil.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skewrank/rankcert.hpp"

namespace skewrank {

std::vector<int> KroneckerInvariants::splitting() const {
  std::vector<int> s = partition;
  s.insert(s.end(), padding, 0);
  return s;
}

std::string KroneckerInvariants::str() const {
  std::ostringstream os;
  os << "rank " << rank << ", partition (" << partition_to_string(partition) << "), padding " << padding;
  return os.str();
}

std::string partition_to_string(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty partition");
  return out;
}

namespace {

void require_pencil(const SkewPolyMatrix& a) {
  if (a.nvars() != 2) throw std::invalid_argument("pencil expected, got " + std::to_string(a.nvars()) + " variables");
}

void require_constant(const SkewPolyMatrix& a) {
  if (!certify_constant_rank(a).constant) throw std::invalid_argument("pencil does not have constant rank");
}

}  // namespace

std::vector<PolynomialKernelVector> minimal_basis(const SkewPolyMatrix& a) {
  require_pencil(a);
  require_constant(a);
  const auto basis = a.coefficient_basis();
  const RationalMatrix& aa = basis[0];
  const RationalMatrix& ab = basis[1];
  const auto n = static_cast<Eigen::Index>(a.order());
  const long rk = generic_rank(a);
  const long r = rk / 2;
  const std::size_t wanted = a.order() - static_cast<std::size_t>(rk);

  // Coefficient blocks v_0..v_delta of each basis vector, v = sum_m a^(delta-m) b^m v_m.
  std::vector<std::pair<int, RationalVector>> found;
  for (int delta = 0; delta <= r && found.size() < wanted; ++delta) {
    const Eigen::Index cols = n * (delta + 1);
    RationalMatrix system = RationalMatrix::Zero(n * (delta + 2), cols);
    for (int k = 0; k <= delta + 1; ++k) {
      if (k <= delta) system.block(n * k, n * k, n, n) = aa;
      if (k >= 1) system.block(n * k, n * (k - 1), n, n) = ab;
    }
    const RationalMatrix ker = kernel(system);
    if (ker.cols() == 0) continue;

    std::vector<RationalVector> span;
    for (const auto& [eps, w] : found) {
      for (int shift = 0; shift <= delta - eps; ++shift) {
        RationalVector v = RationalVector::Zero(cols);
        v.segment(n * shift, w.size()) = w;
        span.push_back(std::move(v));
      }
    }
    RationalMatrix current(cols, static_cast<Eigen::Index>(span.size()));
    for (std::size_t k = 0; k < span.size(); ++k) current.col(static_cast<Eigen::Index>(k)) = span[k];
    Eigen::Index current_rank = rank(current);
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
      RationalMatrix trial(cols, current.cols() + 1);
      trial << current, ker.col(c);
      const Eigen::Index tr = rank(trial);
      if (tr > current_rank) {
        current = std::move(trial);
        current_rank = tr;
        found.emplace_back(delta, ker.col(c));
      }
    }
  }
  if (found.size() != wanted)
    throw std::logic_error("minimal_basis: found " + std::to_string(found.size()) + " vectors, expected " +
                           std::to_string(wanted));

  const Ring& ring = a.ring();
  const Form va = Form::variable(ring, 0), vb = Form::variable(ring, 1);
  std::vector<PolynomialKernelVector> out;
  for (const auto& [delta, w] : found) {
    PolynomialKernelVector pk;
    pk.degree = delta;
    for (Eigen::Index i = 0; i < n; ++i) {
      Form e(ring);
      for (int m = 0; m <= delta; ++m) {
        const Rational& c = w(n * m + i);
        if (!c.is_zero()) e += c * (pow(va, static_cast<unsigned>(delta - m)) * pow(vb, static_cast<unsigned>(m)));
      }
      pk.entries.push_back(std::move(e));
    }
    out.push_back(std::move(pk));
  }
  return out;
}

KroneckerInvariants minimal_indices(const SkewPolyMatrix& a) {
  const auto basis = minimal_basis(a);
  KroneckerInvariants inv;
  inv.order = a.order();
  inv.rank = generic_rank(a);
  for (const auto& v : basis) {
    if (v.degree == 0)
      ++inv.padding;
    else
      inv.partition.push_back(v.degree);
  }
  std::sort(inv.partition.rbegin(), inv.partition.rend());
  const long sum = std::accumulate(inv.partition.begin(), inv.partition.end(), 0L);
  if (sum != inv.rank / 2)
    throw std::logic_error("minimal indices sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(inv.rank / 2));
  return inv;
}

CanonicalPencil canonical_form(const std::vector<int>& partition) { return canonical_form(partition, 0); }

CanonicalPencil canonical_form(const std::vector<int>& partition, std::size_t padding) {
  if (partition.empty()) throw std::invalid_argument("canonical_form: empty partition");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) throw std::invalid_argument("canonical_form: parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw std::invalid_argument("canonical_form: partition must be nonincreasing");
  }
  const std::size_t r = static_cast<std::size_t>(std::accumulate(partition.begin(), partition.end(), 0));
  const std::size_t h = partition.size();
  const Ring ring = make_ring({"a", "b"});
  const Form va = Form::variable(ring, 0), vb = Form::variable(ring, 1);
  SkewPolyMatrix m(2 * r + h + padding, ring);
  std::size_t row = 0, col = r;
  for (int part : partition) {
    for (int k = 0; k < part; ++k) {
      m.set(row + static_cast<std::size_t>(k), col + static_cast<std::size_t>(k), va);
      m.set(row + static_cast<std::size_t>(k), col + static_cast<std::size_t>(k) + 1, vb);
    }
    row += static_cast<std::size_t>(part);
    col += static_cast<std::size_t>(part) + 1;
  }
  CanonicalPencil out;
  out.invariants.rank = static_cast<long>(2 * r);
  out.invariants.partition = partition;
  out.invariants.padding = padding;
  out.invariants.order = m.order();
  out.matrix = std::move(m);
  return out;
}

bool equivalent(const SkewPolyMatrix& a, const SkewPolyMatrix& b) {
  require_pencil(a);
  require_pencil(b);
  if (a.order() != b.order()) {
    require_constant(a);
    require_constant(b);
    return false;
  }
  return minimal_indices(a) == minimal_indices(b);
}

}  // namespace skewrank
