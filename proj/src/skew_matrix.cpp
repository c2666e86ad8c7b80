#include "skewrank/skew_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewrank {

SkewPolyMatrix::SkewPolyMatrix(std::size_t order, Ring ring)
    : order_(order), ring_(std::move(ring)), upper_(order * (order > 0 ? order - 1 : 0) / 2, Form(ring_)) {
  if (order < 1) throw std::invalid_argument("matrix order must be positive");
  if (!ring_ || ring_->empty()) throw std::invalid_argument("matrix needs at least one variable");
}

void SkewPolyMatrix::check_indices(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_)
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside order " +
                            std::to_string(order_));
}

std::size_t SkewPolyMatrix::index(std::size_t i, std::size_t j) const {
  // i < j; rows laid out consecutively
  return i * order_ - i * (i + 1) / 2 + (j - i - 1);
}

Form SkewPolyMatrix::entry(std::size_t i, std::size_t j) const {
  check_indices(i, j);
  if (i == j) return Form(ring_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

void SkewPolyMatrix::set(std::size_t i, std::size_t j, const Form& f) {
  check_indices(i, j);
  if (i == j) {
    if (!f.is_zero()) throw std::invalid_argument("diagonal of a skew matrix must be zero");
    return;
  }
  if (!same_ring(f.ring(), ring_) && !f.is_zero()) throw std::invalid_argument("set: ring mismatch");
  if (!f.is_linear()) throw std::invalid_argument("entries must be linear forms: " + f.str());
  Form g = f.is_zero() ? Form(ring_) : f;
  if (i < j)
    upper_[index(i, j)] = std::move(g);
  else
    upper_[index(j, i)] = -g;
}

void SkewPolyMatrix::set(std::size_t i, std::size_t j, std::string_view text) { set(i, j, parse_form(text, ring_)); }

bool SkewPolyMatrix::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const Form& f) { return f.is_zero(); });
}

std::vector<RationalMatrix> SkewPolyMatrix::coefficient_basis() const {
  const auto n = static_cast<Eigen::Index>(order_);
  std::vector<RationalMatrix> basis(nvars(), RationalMatrix::Zero(n, n));
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      const Form& f = upper_[index(i, j)];
      if (f.is_zero()) continue;
      const auto c = f.linear_coefficients();
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        basis[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c[k];
        basis[k](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = -c[k];
      }
    }
  }
  return basis;
}

SkewPolyMatrix SkewPolyMatrix::from_basis(Ring ring, std::span<const RationalMatrix> basis) {
  if (basis.size() != ring->size()) throw std::invalid_argument("from_basis: need one matrix per variable");
  const auto n = static_cast<std::size_t>(basis[0].rows());
  SkewPolyMatrix out(n, ring);
  const std::size_t d = ring->size();
  for (const auto& b : basis) {
    if (static_cast<std::size_t>(b.rows()) != n || static_cast<std::size_t>(b.cols()) != n)
      throw std::invalid_argument("from_basis: matrices of different sizes");
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      if (!b(ii, ii).is_zero()) throw std::invalid_argument("from_basis: matrix is not skew-symmetric");
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        if (b(ii, jj) != -b(jj, ii)) throw std::invalid_argument("from_basis: matrix is not skew-symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Form::Term> terms;
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = basis[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (!c.is_zero()) terms.emplace_back(Monomial::variable(d, k), c);
      }
      if (!terms.empty()) out.upper_[out.index(i, j)] = Form(ring, std::move(terms));
    }
  }
  return out;
}

std::string SkewPolyMatrix::str() const {
  std::ostringstream os;
  os << order_ << "x" << order_ << " in " << ring_to_string(ring_) << "\n";
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j) {
      const Form& f = upper_[index(i, j)];
      if (!f.is_zero()) os << "  (" << i << "," << j << ") " << f.str() << "\n";
    }
  return os.str();
}

bool operator==(const SkewPolyMatrix& a, const SkewPolyMatrix& b) {
  return a.order_ == b.order_ && same_ring(a.ring_, b.ring_) && a.upper_ == b.upper_;
}

SkewPolyMatrix zero_matrix(std::size_t order, Ring ring) { return SkewPolyMatrix(order, std::move(ring)); }

PfaffianTable::PfaffianTable(const SkewPolyMatrix& a) : a_(a) {
  if (a.order() > 62) throw std::invalid_argument("pfaffian: order too large");
  const std::size_t n = a.order();
  entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries_.push_back(a.entry(i, j));
}

std::uint64_t PfaffianTable::full_mask() const { return (std::uint64_t{1} << a_.order()) - 1; }

const Form& PfaffianTable::pfaffian(std::uint64_t mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  if (__builtin_popcountll(mask) % 2 != 0) throw std::invalid_argument("pfaffian of odd-order submatrix");
  Form sum = Form::constant(a_.ring(), Rational(mask == 0 ? 1 : 0));
  if (mask != 0) {
    const int first = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    int position = 1;
    for (std::uint64_t m = rest; m != 0; m &= m - 1, ++position) {
      const int j = __builtin_ctzll(m);
      const Form& e = entries_[static_cast<std::size_t>(first) * a_.order() + static_cast<std::size_t>(j)];
      if (e.is_zero()) continue;
      const Form sub = pfaffian(rest & ~(std::uint64_t{1} << j));
      if (sub.is_zero()) continue;
      if (position % 2 == 1)
        sum += e * sub;
      else
        sum -= e * sub;
    }
  }
  return memo_.emplace(mask, std::move(sum)).first->second;
}

Form pfaffian_symbolic(const SkewPolyMatrix& a) {
  if (a.order() % 2 != 0) throw std::invalid_argument("pfaffian of odd-order matrix");
  PfaffianTable table(a);
  return table.pfaffian(table.full_mask());
}

std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t order, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > order) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t k = 0; k < size; ++k) idx[k] = k;
  while (true) {
    out.push_back(idx);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == order - size + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t m = k; m < size; ++m) idx[m] = idx[m - 1] + 1;
  }
  return out;
}

std::vector<Form> sub_pfaffians(const SkewPolyMatrix& a, std::size_t size) {
  if (size % 2 != 0) throw std::invalid_argument("sub_pfaffians: size must be even");
  if (size > a.order())
    throw std::invalid_argument("sub_pfaffians: size " + std::to_string(size) + " exceeds order " +
                                std::to_string(a.order()));
  PfaffianTable table(a);
  std::vector<Form> out;
  for (const auto& set : principal_index_sets(a.order(), size)) {
    std::uint64_t mask = 0;
    for (auto i : set) mask |= std::uint64_t{1} << i;
    out.push_back(table.pfaffian(mask));
  }
  return out;
}

RationalMatrix evaluate_at(const SkewPolyMatrix& a, std::span<const Rational> point) {
  if (point.size() != a.nvars())
    throw std::invalid_argument("evaluate_at: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(a.nvars()));
  if (std::all_of(point.begin(), point.end(), [](const Rational& x) { return x.is_zero(); }))
    throw std::invalid_argument("evaluate_at: zero point");
  const auto n = static_cast<Eigen::Index>(a.order());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Rational v = a.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).evaluate(point);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

long rank_at(const SkewPolyMatrix& a, std::span<const Rational> point) {
  return static_cast<long>(rank(evaluate_at(a, point)));
}

SkewPolyMatrix congruence_transform(const SkewPolyMatrix& a, const RationalMatrix& p) {
  const auto n = static_cast<Eigen::Index>(a.order());
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("congruence_transform: size mismatch");
  if (determinant(p).is_zero()) throw std::domain_error("congruence_transform: singular matrix");
  auto basis = a.coefficient_basis();
  const RationalMatrix pt = p.transpose();
  for (auto& b : basis) b = pt * b * p;
  return SkewPolyMatrix::from_basis(a.ring(), basis);
}

SkewPolyMatrix parameter_change(const SkewPolyMatrix& a, const RationalMatrix& l) {
  const auto d = static_cast<Eigen::Index>(a.nvars());
  if (l.rows() != d || l.cols() != d) throw std::invalid_argument("parameter_change: size mismatch");
  if (determinant(l).is_zero()) throw std::domain_error("parameter_change: singular matrix");
  std::vector<Form> images;
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<Form::Term> terms;
    for (Eigen::Index j = 0; j < d; ++j)
      if (!l(i, j).is_zero())
        terms.emplace_back(Monomial::variable(static_cast<std::size_t>(d), static_cast<std::size_t>(j)), l(i, j));
    images.emplace_back(a.ring(), std::move(terms));
  }
  return substitute_parameters(a, images);
}

SkewPolyMatrix substitute_parameters(const SkewPolyMatrix& a, std::span<const Form> images) {
  if (images.size() != a.nvars()) throw std::invalid_argument("substitute_parameters: need one image per variable");
  SkewPolyMatrix out(a.order(), images[0].ring());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      const Form e = a.entry(i, j);
      if (!e.is_zero()) out.set(i, j, linear_substitute(e, images));
    }
  return out;
}

SkewPolyMatrix embed(const SkewPolyMatrix& a, const Ring& target) {
  SkewPolyMatrix out(a.order(), target);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      const Form e = a.entry(i, j);
      if (!e.is_zero()) out.set(i, j, embed(e, target));
    }
  return out;
}

SkewPolyMatrix direct_sum(const SkewPolyMatrix& a, const SkewPolyMatrix& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("direct_sum: variable mismatch " + ring_to_string(a.ring()) + " vs " +
                                ring_to_string(b.ring()));
  const std::size_t n = a.order();
  SkewPolyMatrix out(n + b.order(), a.ring());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, a.entry(i, j));
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = i + 1; j < b.order(); ++j) out.set(n + i, n + j, b.entry(i, j));
  return out;
}

Nondegeneracy is_nondegenerate(const SkewPolyMatrix& a) {
  const auto basis = a.coefficient_basis();
  const auto n = static_cast<Eigen::Index>(a.order());
  RationalMatrix stacked(n * static_cast<Eigen::Index>(basis.size()), n);
  for (std::size_t k = 0; k < basis.size(); ++k) stacked.middleRows(static_cast<Eigen::Index>(k) * n, n) = basis[k];
  const RationalMatrix ker = kernel(stacked);
  Nondegeneracy out;
  if (ker.cols() > 0) {
    out.nondegenerate = false;
    out.witness = ker.col(0);
  }
  return out;
}

}  // namespace skewrank
