#include "endcohom/base_rings.hpp"

#include <regex>

#include "endcohom/errors.hpp"

namespace endcohom {

BaseRing::BaseRing(unsigned dim, std::vector<unsigned> ranks, std::vector<CupEntry> cup, std::size_t top,
                   std::string name)
    : dim_(dim), ranks_(std::move(ranks)), cup_(std::move(cup)), top_(top), name_(std::move(name)) {
  if (dim_ == 0) throw InvalidParameter("ring dimension must be positive");
  if (ranks_.size() != dim_ + 1) throw InvalidParameter("ranks must list degrees 0..dim");
  if (ranks_[0] != 1 || ranks_[dim_] != 1) throw InvalidParameter("ranks in degree 0 and dim must be 1");
  for (unsigned k = 0; k <= dim_; ++k) {
    if (ranks_[k] != ranks_[dim_ - k]) throw InvalidParameter("ranks violate Poincare duality");
  }
  for (unsigned k = 0; k <= dim_; ++k) {
    offset_.push_back(degree_of_.size());
    degree_of_.insert(degree_of_.end(), ranks_[k], k);
  }
  if (top_ != offset_[dim_]) throw InvalidParameter("top must index the degree-dim generator");

  const std::size_t n = degree_of_.size();
  table_.assign(n, std::vector<std::vector<Int>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned d = degree_of_[i] + degree_of_[j];
      if (d <= dim_) table_[i][j].assign(ranks_[d], Int(0));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    table_[0][j][local_index(j)] = 1;
    table_[j][0][local_index(j)] = 1;
  }
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& e : cup_) {
    if (e.i >= n || e.j >= n) throw InvalidParameter("cup entry index out of range");
    const unsigned d = degree_of_[e.i] + degree_of_[e.j];
    if (d > dim_) throw InvalidParameter("cup entry lands above the top degree");
    if (e.out.size() != ranks_[d]) throw InvalidParameter("cup entry has the wrong length");
    if (e.i == 0 || e.j == 0) {
      if (e.out != table_[e.i][e.j]) throw InvalidParameter("cup entry contradicts the unit");
      continue;
    }
    if (seen[e.i][e.j] && table_[e.i][e.j] != e.out) throw InvalidParameter("conflicting cup entries");
    seen[e.i][e.j] = true;
    table_[e.i][e.j] = e.out;
  }
  validate();
}

void BaseRing::validate() const {
  const std::size_t n = degree_of_.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const unsigned p = degree_of_[i], q = degree_of_[j];
      if (p + q > dim_) continue;
      const bool odd = (p * q) % 2 == 1;
      for (std::size_t k = 0; k < table_[i][j].size(); ++k) {
        if (table_[i][j][k] != (odd ? Int(-table_[j][i][k]) : table_[j][i][k])) {
          throw InvalidParameter("cup table is not graded commutative");
        }
      }
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t k = 1; k < n; ++k) {
        const unsigned p = degree_of_[i], q = degree_of_[j], r = degree_of_[k];
        if (p + q + r > dim_) continue;
        const std::vector<Int> unit_k = multiply_basis(k, 0);
        const std::vector<Int> unit_i = multiply_basis(i, 0);
        if (multiply(p + q, table_[i][j], r, unit_k) != multiply(p, unit_i, q + r, table_[j][k])) {
          throw InvalidParameter("cup table is not associative");
        }
      }
    }
  }
}

std::vector<Int> BaseRing::multiply_basis(std::size_t i, std::size_t j) const {
  if (i >= basis_size() || j >= basis_size()) throw InvalidParameter("basis index out of range");
  if (degree_of_[i] + degree_of_[j] > dim_) throw DegreeOverflow("product above the top degree");
  return table_[i][j];
}

std::vector<Int> BaseRing::multiply(unsigned p, const std::vector<Int>& a, unsigned q,
                                    const std::vector<Int>& b) const {
  if (p + q > dim_) throw DegreeOverflow("product above the top degree");
  if (a.size() != rank(p) || b.size() != rank(q)) throw DimensionMismatch("coordinate vector length");
  std::vector<Int> out(rank(p + q), Int(0));
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b[y] == 0) continue;
      const auto& prod = table_[offset_[p] + x][offset_[q] + y];
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[x] * b[y] * prod[k];
    }
  }
  return out;
}

BaseRing BaseRing::relabeled(const std::vector<std::size_t>& perm, const std::vector<int>& signs) const {
  const std::size_t n = basis_size();
  if (perm.size() != n || signs.size() != n) throw DimensionMismatch("relabeling size");
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || hit[perm[k]] || degree_of_[perm[k]] != degree_of_[k]) {
      throw InvalidParameter("relabeling is not a degree-preserving permutation");
    }
    if (signs[k] != 1 && signs[k] != -1) throw InvalidParameter("relabeling signs must be +-1");
    hit[perm[k]] = true;
  }
  if (perm[0] != 0 || signs[0] != 1) throw InvalidParameter("relabeling must fix the unit");
  std::vector<CupEntry> entries;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const unsigned d = degree_of_[i] + degree_of_[j];
      if (d > dim_) continue;
      const auto& old = table_[perm[i]][perm[j]];
      std::vector<Int> out(ranks_[d], Int(0));
      bool nonzero = false;
      for (std::size_t k = 0; k < out.size(); ++k) {
        const std::size_t g = offset_[d] + k;
        out[k] = signs[i] * signs[j] * signs[g] * old[local_index(perm[g])];
        nonzero = nonzero || out[k] != 0;
      }
      if (nonzero) entries.push_back({i, j, std::move(out)});
    }
  }
  return {dim_, ranks_, std::move(entries), top_, name_};
}

BaseRing sphere(unsigned n) {
  if (n == 0) throw InvalidParameter("Sphere(n) needs n >= 1");
  std::vector<unsigned> ranks(n + 1, 0);
  ranks[0] = ranks[n] = 1;
  return {n, ranks, {}, 1, "Sphere(" + std::to_string(n) + ")"};
}

BaseRing surface(unsigned g) {
  if (g == 0) return {2, {1, 0, 1}, {}, 1, "Surface(0)"};
  const std::size_t top = 2 * g + 1;
  std::vector<CupEntry> cup;
  for (unsigned k = 0; k < g; ++k) {
    const std::size_t a = 1 + 2 * k, b = a + 1;
    cup.push_back({a, b, {Int(1)}});
    cup.push_back({b, a, {Int(-1)}});
  }
  return {2, {1, 2 * g, 1}, std::move(cup), top, "Surface(" + std::to_string(g) + ")"};
}

namespace {

unsigned long binom(unsigned n, unsigned k) {
  unsigned long out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

BaseRing torus(unsigned n) {
  if (n == 0 || n > 12) throw InvalidParameter("Torus(n) needs 1 <= n <= 12");
  // Basis of degree d: d-subsets of {0..n-1} as bitmasks, in increasing order.
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) subsets[__builtin_popcount(mask)].push_back(mask);
  std::vector<unsigned> ranks;
  std::vector<std::size_t> offset;
  std::size_t count = 0;
  for (unsigned d = 0; d <= n; ++d) {
    ranks.push_back(static_cast<unsigned>(binom(n, d)));
    offset.push_back(count);
    count += ranks.back();
  }
  auto local = [&](unsigned d, unsigned mask) {
    for (std::size_t k = 0; k < subsets[d].size(); ++k) {
      if (subsets[d][k] == mask) return k;
    }
    return std::size_t(0);
  };
  std::vector<CupEntry> cup;
  for (unsigned p = 1; p <= n; ++p) {
    for (unsigned q = 1; p + q <= n; ++q) {
      for (std::size_t x = 0; x < subsets[p].size(); ++x) {
        for (std::size_t y = 0; y < subsets[q].size(); ++y) {
          const unsigned s = subsets[p][x], t = subsets[q][y];
          if (s & t) continue;
          // Sign of the shuffle: pairs (a in s, b in t) with a > b.
          unsigned inversions = 0;
          for (unsigned b = 0; b < n; ++b) {
            if (t >> b & 1u) inversions += __builtin_popcount(s >> (b + 1));
          }
          std::vector<Int> out(ranks[p + q], Int(0));
          out[local(p + q, s | t)] = inversions % 2 ? -1 : 1;
          cup.push_back({offset[p] + x, offset[q] + y, std::move(out)});
        }
      }
    }
  }
  return {n, ranks, std::move(cup), offset[n], n == 3 ? "Torus3" : "Torus(" + std::to_string(n) + ")"};
}

BaseRing sphere_product(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw InvalidParameter("sphere product factors need positive dimension");
  if (a > b) std::swap(a, b);
  const unsigned n = a + b;
  std::vector<unsigned> ranks(n + 1, 0);
  ranks[0] = ranks[n] = 1;
  ++ranks[a];
  ++ranks[b];
  const std::string name = "S" + std::to_string(a) + "xS" + std::to_string(b);
  const Int sign = (a * b) % 2 ? -1 : 1;
  // u (degree a), v (degree b), top uv at index 3; squares vanish.
  return {n, ranks, {{1, 2, {Int(1)}}, {2, 1, {sign}}}, 3, name};
}

BaseRing builtin_ring(const std::string& name) {
  static const std::regex sphere_re(R"(Sphere\((\d+)\)|S(\d+))");
  static const std::regex surface_re(R"(Surface\((\d+)\))");
  static const std::regex torus_re(R"(Torus\((\d+)\)|Torus(\d+)|T(\d+))");
  static const std::regex product_re(R"(S(\d+)xS\(?(\d+)\)?)");
  std::smatch m;
  auto num = [](const std::ssub_match& s) {
    if (s.length() > 4) throw InvalidParameter("ring parameter too large");
    return static_cast<unsigned>(std::stoul(s.str()));
  };
  if (std::regex_match(name, m, sphere_re)) return sphere(num(m[1].matched ? m[1] : m[2]));
  if (std::regex_match(name, m, surface_re)) return surface(num(m[1]));
  if (std::regex_match(name, m, torus_re)) {
    return torus(num(m[1].matched ? m[1] : m[2].matched ? m[2] : m[3]));
  }
  if (std::regex_match(name, m, product_re)) return sphere_product(num(m[1]), num(m[2]));
  throw InvalidParameter("unknown builtin ring '" + name + "'");
}

}  // namespace endcohom
