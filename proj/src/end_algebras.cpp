#include "endcohom/end_algebras.hpp"

#include <set>
#include <sstream>

#include "endcohom/errors.hpp"

namespace endcohom {

struct AlgebraData {
  Family family;
  unsigned top = 0;
  unsigned ends = 1;
  std::optional<BaseRing> x, y;
  std::shared_ptr<const AlgebraData> a, b;
  std::optional<AlgElem> class_a, class_b;
  std::vector<ModuleShape> modules;  // indexed 0..top
  std::vector<TrueVec> relations;
  Echelon echelon;
  std::string name;
};

std::string to_string(Family f) {
  switch (f) {
    case Family::Stringer: return "Stringer";
    case Family::SurgeredStringer: return "SurgeredStringer";
    case Family::Ladder: return "Ladder";
    case Family::Wedge: return "Wedge";
    case Family::EndSum: return "EndSum";
  }
  return "?";
}

unsigned ModuleShape::free_rank() const {
  unsigned r = 0;
  for (const auto& a : atoms) {
    if (a.kind == AtomKind::Free) r += a.rank;
  }
  return r;
}

std::size_t ModuleShape::count(AtomKind k) const {
  std::size_t n = 0;
  for (const auto& a : atoms) n += a.kind == k;
  return n;
}

std::string ModuleShape::to_string() const {
  if (atoms.empty()) return "0";
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += " + ";
    switch (a.kind) {
      case AtomKind::Free: out += "Free(" + std::to_string(a.rank) + ")"; break;
      case AtomKind::PQ: out += "PQ"; break;
      case AtomKind::KQ: out += "KQ"; break;
    }
  }
  return quotient ? "(" + out + ")/I" : out;
}

// ---------------------------------------------------------------------------
// True coordinates and echelon reduction

bool TrueVec::is_zero() const {
  for (const auto& v : ints) {
    if (v != 0) return false;
  }
  for (const auto& q : pqs) {
    if (!q.is_zero()) return false;
  }
  return true;
}

TrueVec operator+(const TrueVec& a, const TrueVec& b) {
  if (a.ints.size() != b.ints.size() || a.pqs.size() != b.pqs.size()) throw DimensionMismatch("true vector shape");
  TrueVec out = a;
  for (std::size_t i = 0; i < b.ints.size(); ++i) out.ints[i] += b.ints[i];
  for (std::size_t i = 0; i < b.pqs.size(); ++i) out.pqs[i] = out.pqs[i] + b.pqs[i];
  return out;
}

TrueVec operator*(const Int& n, const TrueVec& a) {
  TrueVec out = a;
  for (auto& v : out.ints) v *= n;
  for (auto& q : out.pqs) q = n * q;
  return out;
}

TrueVec operator-(const TrueVec& a, const TrueVec& b) { return a + Int(-1) * b; }

TrueVec to_true(const ModuleShape& m, const Coords& c) {
  if (c.size() != m.atoms.size()) throw DimensionMismatch("coordinate count differs from atom count");
  TrueVec out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    switch (m.atoms[i].kind) {
      case AtomKind::Free: {
        const auto& v = std::get<std::vector<Int>>(c[i]);
        out.ints.insert(out.ints.end(), v.begin(), v.end());
        break;
      }
      case AtomKind::PQ: out.pqs.push_back(std::get<PQElem>(c[i])); break;
      case AtomKind::KQ: {
        const GElem g = f_inv(std::get<KQElem>(c[i]));
        out.ints.push_back(g.n);
        out.pqs.push_back(g.q);
        break;
      }
    }
  }
  return out;
}

Coords from_true(const ModuleShape& m, const TrueVec& v) {
  Coords out;
  std::size_t ii = 0, qi = 0;
  for (const auto& atom : m.atoms) {
    switch (atom.kind) {
      case AtomKind::Free:
        out.emplace_back(std::vector<Int>(v.ints.begin() + ii, v.ints.begin() + ii + atom.rank));
        ii += atom.rank;
        break;
      case AtomKind::PQ: out.emplace_back(v.pqs.at(qi++)); break;
      case AtomKind::KQ: out.emplace_back(f(GElem{v.ints.at(ii++), v.pqs.at(qi++)})); break;
    }
  }
  if (ii != v.ints.size() || qi != v.pqs.size()) throw DimensionMismatch("true vector shape");
  return out;
}

Echelon echelonize(std::vector<TrueVec> rows, const std::vector<std::size_t>& order) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col : order) {
    if (r == rows.size()) break;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        const Int& v = rows[i].ints[col];
        if (v != 0 && (best == rows.size() || abs(v) < abs(rows[best].ints[col]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i].ints[col] == 0) continue;
        const Int q = rows[i].ints[col] / rows[r].ints[col];
        rows[i] = rows[i] - q * rows[r];
        if (rows[i].ints[col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r].ints[col] == 0) continue;
    if (rows[r].ints[col] < 0) rows[r] = Int(-1) * rows[r];
    e.pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i].is_zero()) e.integer_free.push_back(rows[i]);
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

TrueVec Echelon::reduce(TrueVec x) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t c = pivots[i];
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.ints[c].get_mpz_t(), rows[i].ints[c].get_mpz_t());
    if (q != 0) x = x - q * rows[i];
  }
  return x;
}

IntMatrix embed_true(const std::vector<TrueVec>& vs) {
  std::size_t poly_len = 0;
  std::set<Int> ratios;
  std::vector<HeightSeq> heights;
  for (const auto& v : vs) {
    for (const auto& q : v.pqs) {
      poly_len = std::max(poly_len, q.tail().poly_coeffs().size());
      for (const auto& [r, c] : q.tail().geometric_terms()) ratios.insert(r);
      if (const auto& h = q.tail().height_term()) {
        bool seen = false;
        for (const auto& x : heights) seen = seen || x == h->heights;
        if (!seen) heights.push_back(h->heights);
      }
    }
  }
  std::vector<std::vector<Rat>> rows;
  Int den = 1;
  for (const auto& v : vs) {
    std::vector<Rat> row(v.ints.begin(), v.ints.end());
    for (const auto& q : v.pqs) {
      const TailSpec& t = q.tail();
      for (std::size_t k = 0; k < poly_len; ++k) row.push_back(k < t.poly_coeffs().size() ? t.poly_coeffs()[k] : Rat(0));
      for (const Int& r : ratios) {
        auto it = t.geometric_terms().find(r);
        row.push_back(it == t.geometric_terms().end() ? Rat(0) : it->second);
      }
      for (const auto& h : heights) {
        row.push_back(t.height_term() && t.height_term()->heights == h ? Rat(t.height_term()->multiplier) : Rat(0));
      }
    }
    for (const auto& x : row) den = lcm(den, Int(x.get_den()));
    rows.push_back(std::move(row));
  }
  IntMatrix out;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(Rat(x * Rat(den)).get_num());
    out.append_row(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

Coord zero_coord(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Free: return std::vector<Int>(a.rank, Int(0));
    case AtomKind::PQ: return PQElem();
    case AtomKind::KQ: return KQElem();
  }
  return PQElem();
}

Coords zero_coords(const ModuleShape& m) {
  Coords out;
  for (const auto& a : m.atoms) out.push_back(zero_coord(a));
  return out;
}

std::shared_ptr<AlgebraData> base_family(Family fam, const BaseRing& x, const BaseRing* y) {
  const unsigned n = x.dim();
  if (y && y->dim() != n) throw DimensionMismatch("base rings have different dimensions");
  if (fam != Family::Stringer && n < 2) throw InvalidParameter("base ring dimension must be at least 2");
  auto d = std::make_shared<AlgebraData>();
  d->family = fam;
  d->top = n;
  d->x = x;
  if (y) d->y = *y;
  d->modules.resize(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    auto& atoms = d->modules[k].atoms;
    auto free = [&](unsigned rank, const char* label) {
      if (rank > 0) atoms.push_back({AtomKind::Free, rank, label});
    };
    const bool bottom = k == 1, top = k == n;
    switch (fam) {
      case Family::Stringer: free(x.rank(k), "X"); break;
      case Family::SurgeredStringer:
        free(x.rank(k), "X");
        if (bottom) atoms.push_back({AtomKind::PQ, 1, "tau"});
        if (top) atoms.push_back({AtomKind::PQ, 1, "sigma"});
        break;
      case Family::Ladder:
        if (top) {
          atoms.push_back({AtomKind::KQ, 1, "XY"});
          break;
        }
        free(x.rank(k), "X");
        if (bottom) atoms.push_back({AtomKind::PQ, 1, "tau"});
        free(y->rank(k), "Y");
        break;
      case Family::Wedge:
        free(x.rank(k), "X");
        if (bottom) atoms.push_back({AtomKind::PQ, 1, "tau"});
        if (top) atoms.push_back({AtomKind::PQ, 1, "mid"});
        free(y->rank(k), "Y");
        break;
      case Family::EndSum: break;
    }
  }
  d->name = to_string(fam) + "(" + x.name() + (y ? "," + y->name() : std::string()) + ")";
  return d;
}

const AlgebraData& checked(const std::shared_ptr<const AlgebraData>& d) {
  if (!d) throw InvalidParameter("use of an unbuilt algebra");
  return *d;
}

std::vector<Int> side_vector(const AlgebraData& d, unsigned deg, const Coords& c, const char* label,
                             const BaseRing& ring) {
  const auto& atoms = d.modules[deg].atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].kind == AtomKind::Free && atoms[i].label == label) return std::get<std::vector<Int>>(c[i]);
  }
  return std::vector<Int>(ring.rank(deg), Int(0));
}

Coords raw_product(const AlgebraData& d, unsigned p, const Coords& a, unsigned q, const Coords& b) {
  const unsigned k = p + q;
  if (d.family == Family::EndSum) {
    const std::size_t na_p = d.a->modules[p].atoms.size(), na_q = d.a->modules[q].atoms.size();
    Coords aa(a.begin(), a.begin() + na_p), ab(a.begin() + na_p, a.end());
    Coords ba(b.begin(), b.begin() + na_q), bb(b.begin() + na_q, b.end());
    Coords out = raw_product(*d.a, p, aa, q, ba);
    Coords rb = raw_product(*d.b, p, ab, q, bb);
    out.insert(out.end(), rb.begin(), rb.end());
    return out;
  }
  const std::vector<Int> xp = d.x->multiply(p, side_vector(d, p, a, "X", *d.x), q, side_vector(d, q, b, "X", *d.x));
  std::vector<Int> yp;
  if (d.y) yp = d.y->multiply(p, side_vector(d, p, a, "Y", *d.y), q, side_vector(d, q, b, "Y", *d.y));
  Coords out;
  for (const auto& atom : d.modules[k].atoms) {
    switch (atom.kind) {
      case AtomKind::Free: out.emplace_back(atom.label == "X" ? xp : yp); break;
      case AtomKind::PQ: out.emplace_back(PQElem()); break;  // the middle coordinate always vanishes
      case AtomKind::KQ: out.emplace_back(KQElem(xp.at(0), PowerSeries(), yp.at(0))); break;
    }
  }
  return out;
}

void check_coords(const ModuleShape& m, const Coords& c) {
  if (c.size() != m.atoms.size()) throw DimensionMismatch("coordinate count differs from atom count");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Atom& a = m.atoms[i];
    const bool ok = (a.kind == AtomKind::Free && std::holds_alternative<std::vector<Int>>(c[i]) &&
                     std::get<std::vector<Int>>(c[i]).size() == a.rank) ||
                    (a.kind == AtomKind::PQ && std::holds_alternative<PQElem>(c[i])) ||
                    (a.kind == AtomKind::KQ && std::holds_alternative<KQElem>(c[i]));
    if (!ok) throw DimensionMismatch("coordinate " + std::to_string(i) + " does not match its atom");
  }
}

Coord add_coord(const Coord& a, const Coord& b) {
  if (const auto* v = std::get_if<std::vector<Int>>(&a)) {
    std::vector<Int> out = *v;
    const auto& w = std::get<std::vector<Int>>(b);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[i];
    return out;
  }
  if (const auto* p = std::get_if<PQElem>(&a)) return *p + std::get<PQElem>(b);
  return std::get<KQElem>(a) + std::get<KQElem>(b);
}

Coord scale_coord(const Int& n, const Coord& a) {
  if (const auto* v = std::get_if<std::vector<Int>>(&a)) {
    std::vector<Int> out = *v;
    for (auto& x : out) x *= n;
    return out;
  }
  if (const auto* p = std::get_if<PQElem>(&a)) return n * *p;
  return n * std::get<KQElem>(a);
}

bool coord_is_zero(const Coord& a) {
  if (const auto* v = std::get_if<std::vector<Int>>(&a)) {
    for (const auto& x : *v) {
      if (x != 0) return false;
    }
    return true;
  }
  if (const auto* p = std::get_if<PQElem>(&a)) return p->is_zero();
  return std::get<KQElem>(a) == KQElem();
}

}  // namespace

EndAlgebra EndAlgebra::stringer(const BaseRing& x) { return EndAlgebra(base_family(Family::Stringer, x, nullptr)); }

EndAlgebra EndAlgebra::surgered_stringer(const BaseRing& x) {
  return EndAlgebra(base_family(Family::SurgeredStringer, x, nullptr));
}

EndAlgebra EndAlgebra::ladder(const BaseRing& x, const BaseRing& y) {
  return EndAlgebra(base_family(Family::Ladder, x, &y));
}

EndAlgebra EndAlgebra::wedge(const BaseRing& x, const BaseRing& y) {
  return EndAlgebra(base_family(Family::Wedge, x, &y));
}

EndAlgebra EndAlgebra::end_sum(const AlgElem& class_a, const AlgElem& class_b) {
  const AlgebraData& a = checked(class_a.alg_);
  const AlgebraData& b = checked(class_b.alg_);
  if (a.top != b.top) throw DimensionMismatch("summands have different top degrees");
  if (class_a.degree() != a.top || class_b.degree() != b.top) {
    throw DimensionMismatch("ray classes must lie in the top degree");
  }
  auto d = std::make_shared<AlgebraData>();
  d->family = Family::EndSum;
  d->top = a.top;
  d->ends = a.ends + b.ends - 1;
  d->a = class_a.alg_;
  d->b = class_b.alg_;
  d->class_a = class_a;
  d->class_b = class_b;
  d->modules.resize(a.top + 1);
  for (unsigned k = 1; k <= a.top; ++k) {
    for (Atom atom : a.modules[k].atoms) {
      atom.label = "A." + atom.label;
      d->modules[k].atoms.push_back(atom);
    }
    for (Atom atom : b.modules[k].atoms) {
      atom.label = "B." + atom.label;
      d->modules[k].atoms.push_back(atom);
    }
  }
  d->modules[a.top].quotient = true;

  const TrueVec za = to_true(a.modules[a.top], zero_coords(a.modules[a.top]));
  const TrueVec zb = to_true(b.modules[b.top], zero_coords(b.modules[b.top]));
  auto join = [](const TrueVec& u, const TrueVec& v) {
    TrueVec out = u;
    out.ints.insert(out.ints.end(), v.ints.begin(), v.ints.end());
    out.pqs.insert(out.pqs.end(), v.pqs.begin(), v.pqs.end());
    return out;
  };
  for (const auto& r : a.relations) d->relations.push_back(join(r, zb));
  for (const auto& r : b.relations) d->relations.push_back(join(za, r));
  d->relations.push_back(
      join(to_true(a.modules[a.top], class_a.coords()), Int(-1) * to_true(b.modules[b.top], class_b.coords())));

  // Pivots are searched from the last integer coordinate backwards, so the
  // B-side entry of (class_a, -class_b) is eliminated first.
  const std::size_t nints = za.ints.size() + zb.ints.size();
  std::vector<std::size_t> order;
  for (std::size_t c = nints; c-- > 0;) order.push_back(c);
  d->echelon = echelonize(d->relations, order);
  if (!d->echelon.integer_free.empty()) {
    throw InvalidParameter("end-sum relation has no integer coordinate to eliminate");
  }
  d->name = "EndSum(" + a.name + ", " + b.name + ")";
  return EndAlgebra(std::move(d));
}

Family EndAlgebra::family() const { return checked(data_).family; }
unsigned EndAlgebra::top_degree() const { return checked(data_).top; }
unsigned EndAlgebra::ends() const { return checked(data_).ends; }

const ModuleShape& EndAlgebra::module(unsigned k) const {
  static const ModuleShape empty;
  const auto& d = checked(data_);
  return k == 0 || k > d.top ? empty : d.modules[k];
}

const BaseRing* EndAlgebra::x() const { return checked(data_).x ? &*data_->x : nullptr; }
const BaseRing* EndAlgebra::y() const { return checked(data_).y ? &*data_->y : nullptr; }

std::optional<EndAlgebra> EndAlgebra::summand_a() const {
  if (!checked(data_).a) return std::nullopt;
  return EndAlgebra(data_->a);
}

std::optional<EndAlgebra> EndAlgebra::summand_b() const {
  if (!checked(data_).b) return std::nullopt;
  return EndAlgebra(data_->b);
}

std::optional<AlgElem> EndAlgebra::class_a() const { return checked(data_).class_a; }
std::optional<AlgElem> EndAlgebra::class_b() const { return checked(data_).class_b; }

const std::vector<TrueVec>& EndAlgebra::top_relations() const { return checked(data_).relations; }

AlgElem EndAlgebra::element(unsigned k, Coords coords) const {
  const auto& d = checked(data_);
  if (k == 0 || k > d.top) throw DegreeOverflow("degree " + std::to_string(k) + " is outside 1.." + std::to_string(d.top));
  check_coords(d.modules[k], coords);
  if (k == d.top && !d.relations.empty()) {
    coords = from_true(d.modules[k], d.echelon.reduce(to_true(d.modules[k], coords)));
  }
  return AlgElem(data_, k, std::move(coords));
}

AlgElem EndAlgebra::zero(unsigned k) const { return element(k, zero_coords(module(k))); }

std::vector<AlgElem> EndAlgebra::free_basis(unsigned k) const {
  std::vector<AlgElem> out;
  const ModuleShape& m = module(k);
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (m.atoms[i].kind != AtomKind::Free) continue;
    for (unsigned j = 0; j < m.atoms[i].rank; ++j) {
      Coords c = zero_coords(m);
      std::get<std::vector<Int>>(c[i])[j] = 1;
      out.push_back(element(k, std::move(c)));
    }
  }
  return out;
}

std::vector<AlgElem> EndAlgebra::pq_samples(unsigned k) const {
  std::vector<AlgElem> out;
  const ModuleShape& m = module(k);
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (m.atoms[i].kind != AtomKind::PQ) continue;
    Coords c = zero_coords(m);
    c[i] = PQElem(PowerSeries::constant_tail(1));
    out.push_back(element(k, std::move(c)));
  }
  return out;
}

std::string EndAlgebra::describe() const { return checked(data_).name; }

// ---------------------------------------------------------------------------
// Elements

bool AlgElem::is_zero() const {
  for (const auto& c : coords_) {
    if (!coord_is_zero(c)) return false;
  }
  return true;
}

namespace {

void same_space(const AlgElem& a, const AlgElem& b) {
  if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("elements belong to different algebras");
  if (a.degree() != b.degree()) throw DimensionMismatch("elements have different degrees");
}

}  // namespace

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
  same_space(a, b);
  Coords c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(add_coord(a.coords_[i], b.coords_[i]));
  return a.algebra().element(a.degree_, std::move(c));
}

AlgElem operator*(const Int& n, const AlgElem& a) {
  Coords c;
  for (const auto& x : a.coords_) c.push_back(scale_coord(n, x));
  return a.algebra().element(a.degree_, std::move(c));
}

AlgElem operator-(const AlgElem& a) { return Int(-1) * a; }
AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }

std::string AlgElem::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << " | ";
    if (const auto* v = std::get_if<std::vector<Int>>(&coords_[i])) {
      out << "(";
      for (std::size_t j = 0; j < v->size(); ++j) out << (j ? "," : "") << (*v)[j].get_str();
      out << ")";
    } else if (const auto* p = std::get_if<PQElem>(&coords_[i])) {
      out << (p->is_zero() ? "[0]" : "[series]");
    } else {
      const auto& k = std::get<KQElem>(coords_[i]);
      out << "[(" << k.r().get_str() << "," << (k.gamma().is_zero() ? "0" : "gamma") << "," << k.s().get_str() << ")]";
    }
  }
  out << "]";
  return out.str();
}

Coords cup_raw(const AlgElem& a, const AlgElem& b) {
  if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("cup of elements from different algebras");
  const AlgebraData& d = *a.algebra().data();
  if (a.degree() + b.degree() > d.top) throw DegreeOverflow("product lands above the top degree");
  return raw_product(d, a.degree(), a.coords(), b.degree(), b.coords());
}

AlgElem cup(const AlgElem& a, const AlgElem& b) {
  Coords raw = cup_raw(a, b);
  return a.algebra().element(a.degree() + b.degree(), std::move(raw));
}

// ---------------------------------------------------------------------------
// Duals and the radical

ModuleShape dual_shape(const EndAlgebra& a, unsigned k) {
  const ModuleShape& m = a.module(k);
  unsigned rank = 0;
  if (m.quotient) {
    const TrueVec z = to_true(m, zero_coords(m));
    IntMatrix rel(0, z.ints.size());
    for (const auto& r : a.top_relations()) rel.append_row(r.ints);
    rank = static_cast<unsigned>(z.ints.size() - integer_rank(rel));
  } else {
    for (const auto& atom : m.atoms) {
      switch (atom.kind) {
        case AtomKind::Free: rank += atom.rank; break;
        case AtomKind::PQ: rank += *dual_rule(DualModule::PowerSeriesModPoly).dual_rank; break;
        case AtomKind::KQ: rank += *dual_rule(DualModule::LadderTop).dual_rank; break;
      }
    }
  }
  return ModuleShape{{Atom{AtomKind::Free, rank, "dual"}}, false};
}

RadicalJ radical_j(const EndAlgebra& a, unsigned k) {
  RadicalJ out{k, {}, "", "", true, 0};
  const ModuleShape& m = a.module(k);
  std::vector<AlgElem> samples = a.pq_samples(k);
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (!out.shape.empty()) out.shape += " + ";
    if (m.atoms[i].kind == AtomKind::PQ) {
      out.atoms.push_back(i);
      out.shape += "PQ(" + m.atoms[i].label + ")";
    } else {
      out.shape += "0";
    }
    if (m.atoms[i].kind == AtomKind::KQ) {
      out.extra = "kernel of r + s on the KQ atom";
      Coords c = zero_coords(m);
      c[i] = KQElem(Int(1), PowerSeries(), Int(-1));
      samples.push_back(a.element(k, std::move(c)));
    }
  }
  if (out.shape.empty()) out.shape = "0";
  if (m.quotient && !a.top_relations().empty()) {
    out.extra = "classes whose integer part lies in the rational span of the relations";
  }
  for (const auto& s : samples) {
    for (unsigned d = 1; d + k <= a.top_degree(); ++d) {
      std::vector<AlgElem> gens = a.free_basis(d);
      for (auto& g : a.pq_samples(d)) gens.push_back(g);
      for (const auto& g : gens) {
        out.products_checked += 2;
        if (!cup(s, g).is_zero() || !cup(g, s).is_zero()) out.is_ideal = false;
      }
    }
  }
  return out;
}

}  // namespace endcohom
