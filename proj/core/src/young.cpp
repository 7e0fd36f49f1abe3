#include "supergroup/young.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supergroup {

Partition::Partition(std::vector<long> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("partition rows must be non-negative");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition rows must be weakly decreasing");
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

long Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0L); }

Partition Partition::transpose() const {
  std::vector<long> cols(rows_.empty() ? 0 : rows_.front(), 0);
  for (long r : rows_) {
    for (long c = 0; c < r; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i) {
    if (other.rows_[i] > rows_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(long boxes, long max_rows, long max_part) {
  std::vector<Partition> out;
  if (boxes < 0) return out;
  std::vector<long> current;
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_rows >= 0 && static_cast<long>(current.size()) >= max_rows) return;
    for (long part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(boxes, max_part >= 0 ? max_part : boxes);
  return out;
}

void SuperDiagram::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("super diagram needs m, n >= 1");
  if (static_cast<long>(p.length()) > m) throw TooManyRows("p has more than m rows");
  if (static_cast<long>(q.length()) > n) throw TooManyRows("q has more than n rows");
}

Partition assemble(const SuperDiagram& sd) {
  sd.validate();
  std::vector<long> rows;
  for (long i = 0; i < sd.m; ++i) rows.push_back(sd.n + sd.p.row(i));
  const Partition below = sd.q.transpose();
  rows.insert(rows.end(), below.rows().begin(), below.rows().end());
  return Partition(std::move(rows));
}

bool is_covariant(const Partition& t, long m, long n) { return t.row(static_cast<std::size_t>(m)) <= n; }

std::optional<SuperDiagram> decompose_superdiagram(const Partition& t, long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("super diagram needs m, n >= 1");
  if (!is_covariant(t, m, n)) throw NotCovariant("diagram " + t.to_string() + " violates the (m|n) hook condition");
  if (t.row(static_cast<std::size_t>(m - 1)) < n) return std::nullopt;
  std::vector<long> p;
  for (long i = 0; i < m; ++i) p.push_back(t.row(i) - n);
  std::vector<long> below(t.rows().begin() + m, t.rows().end());
  return SuperDiagram{m, n, Partition(std::move(p)), Partition(std::move(below)).transpose()};
}

std::vector<long> k_indices(const Partition& p, long rows) {
  if (static_cast<long>(p.length()) > rows) throw TooManyRows("partition " + p.to_string() + " has too many rows");
  std::vector<long> k;
  for (long i = 1; i <= rows; ++i) k.push_back(rows + p.row(i - 1) - i);
  return k;
}

BigRational sigma_coefficient(const Partition& t) {
  if (t.empty()) return 1;
  const std::vector<long> k = k_indices(t, static_cast<long>(t.length()));
  BigInt den = 1;
  for (long v : k) den *= factorial(v);
  return make_rational(factorial(t.size()) * vandermonde(k), den);
}

BigInt hook_product(const Partition& t) {
  const Partition tt = t.transpose();
  BigInt product = 1;
  for (std::size_t i = 0; i < t.length(); ++i) {
    for (long j = 0; j < t.row(i); ++j) {
      const long arm = t.row(i) - j - 1;
      const long leg = tt.row(static_cast<std::size_t>(j)) - static_cast<long>(i) - 1;
      product *= arm + leg + 1;
    }
  }
  return product;
}

BigInt dimension_glm(const Partition& p, long m) {
  const std::vector<long> k = k_indices(p, m);
  BigInt den = 1;
  for (long i = 1; i <= m; ++i) den *= factorial(m - i);
  const BigInt num = vandermonde(k);
  if (num % den != 0) throw std::logic_error("non-integral Gl(m) dimension");
  return num / den;
}

BigRational sigma_decomposition_factor(const SuperDiagram& sd) {
  sd.validate();
  const std::vector<long> ka = k_indices(sd.p, sd.m);
  const std::vector<long> kb = k_indices(sd.q, sd.n);
  BigInt den = 1;
  for (long a : ka) {
    for (long b : kb) den *= a + b + 1;
  }
  return BigRational(BigInt(1), den);
}

BigRational norm_alpha(const SuperDiagram& sd) {
  const Partition t = assemble(sd);
  BigRational r = make_rational(factorial(t.size()), factorial(sd.p.size()) * factorial(sd.q.size()));
  r *= sigma_coefficient(sd.p) * sigma_coefficient(sd.q) / sigma_coefficient(t);
  r /= BigRational(dimension_glm(sd.p, sd.m) * dimension_glm(sd.q, sd.n));
  return sd.q.size() % 2 == 0 ? r : BigRational(-r);
}

namespace detail {

std::vector<Partition> strip_removals(const Partition& lambda, bool horizontal) {
  std::vector<Partition> out;
  const std::size_t len = lambda.length();
  std::vector<long> mu(len);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      out.emplace_back(mu);
      return;
    }
    long lo;
    long hi = lambda.row(i);
    if (horizontal) {
      lo = lambda.row(i + 1);
    } else {
      lo = std::max(0L, lambda.row(i) - 1);
    }
    if (i > 0) hi = std::min(hi, mu[i - 1]);
    for (long v = hi; v >= lo; --v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

BigInt lr_coefficient(const Partition& r, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != r.size() || !r.contains(mu)) return 0;
  if (nu.empty()) return 1;
  const std::size_t rows = r.length();
  const long letters = static_cast<long>(nu.length());
  // grid[i][j] for the skew cells; 0 marks cells of mu.
  std::vector<std::vector<long>> grid(rows);
  for (std::size_t i = 0; i < rows; ++i) grid[i].assign(static_cast<std::size_t>(r.row(i)), 0);
  std::vector<long> used(static_cast<std::size_t>(letters) + 1, 0);
  BigInt count = 0;
  // cells visited in reading order: rows top to bottom, each row right to left
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long j) {
    if (i == rows) {
      ++count;
      return;
    }
    if (j < mu.row(i)) {
      rec(i + 1, i + 1 < rows ? r.row(i + 1) - 1 : 0);
      return;
    }
    long hi = letters;
    if (j + 1 < r.row(i)) hi = std::min(hi, grid[i][j + 1]);
    long lo = 1;
    if (i > 0 && j < mu.row(i - 1)) {
      lo = 1;
    } else if (i > 0) {
      lo = grid[i - 1][j] + 1;
    }
    for (long v = lo; v <= hi; ++v) {
      if (used[v] >= nu.row(static_cast<std::size_t>(v - 1))) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      grid[i][j] = v;
      ++used[v];
      if (j - 1 >= mu.row(i)) {
        rec(i, j - 1);
      } else {
        rec(i + 1, i + 1 < rows ? r.row(i + 1) - 1 : 0);
      }
      --used[v];
    }
    grid[i][j] = 0;
  };
  rec(0, r.row(0) - 1);
  return count;
}

}  // namespace supergroup
