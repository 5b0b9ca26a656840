#include "scissors/squares.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

#include "scissors/errors.hpp"
#include "scissors/snf.hpp"

namespace scissors {

// ---------------------------------------------------------------------------
// SquaresCategory

std::size_t SquaresCategory::add_object(const std::string& id, bool initial) {
  if (id.empty()) throw ContractError("empty object id");
  if (object_index_.count(id)) throw ContractError("duplicate object '" + id + "'");
  if (initial && initial_) throw ContractError("second initial object '" + id + "'");
  const std::size_t o = objects_.size();
  object_index_[id] = o;
  objects_.push_back(id);
  if (initial) initial_ = o;
  hid_.push_back(add_mor(hmors_, hindex_, "id(" + id + ")", id, id));
  vid_.push_back(add_mor(vmors_, vindex_, "id(" + id + ")", id, id));
  return o;
}

std::size_t SquaresCategory::object_index(const std::string& id) const {
  auto o = find_object(id);
  if (!o) throw ContractError("unknown object '" + id + "'");
  return *o;
}

std::size_t SquaresCategory::add_mor(std::vector<Morphism>& list, std::map<std::string, std::size_t>& index,
                                     const std::string& id, const std::string& src, const std::string& dst) {
  if (index.count(id)) throw ContractError("duplicate morphism '" + id + "'");
  const Morphism m{id, object_index(src), object_index(dst)};
  index[id] = list.size();
  list.push_back(m);
  return list.size() - 1;
}

std::size_t SquaresCategory::add_hmor(const std::string& id, const std::string& src, const std::string& dst) {
  return add_mor(hmors_, hindex_, id, src, dst);
}

std::size_t SquaresCategory::add_vmor(const std::string& id, const std::string& src, const std::string& dst) {
  return add_mor(vmors_, vindex_, id, src, dst);
}

namespace {

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& id, const char* kind) {
  auto it = index.find(id);
  if (it == index.end()) throw ContractError(std::string("unknown ") + kind + " morphism '" + id + "'");
  return it->second;
}

}  // namespace

void SquaresCategory::set_hcomp(const std::string& f, const std::string& g, const std::string& fg) {
  const auto key = std::make_pair(lookup(hindex_, f, "horizontal"), lookup(hindex_, g, "horizontal"));
  const std::size_t h = lookup(hindex_, fg, "horizontal");
  if ((hid_[hmors_[key.first].src] == key.first && h != key.second) ||
      (hid_[hmors_[key.second].dst] == key.second && h != key.first))
    throw ContractError("horizontal composite (" + f + ", " + g + ", " + fg + ") breaks an identity law");
  auto [it, fresh] = hcomp_.emplace(key, h);
  if (!fresh && it->second != h) throw ContractError("conflicting horizontal composites for (" + f + ", " + g + ")");
}

void SquaresCategory::set_vcomp(const std::string& f, const std::string& g, const std::string& fg) {
  const auto key = std::make_pair(lookup(vindex_, f, "vertical"), lookup(vindex_, g, "vertical"));
  const std::size_t h = lookup(vindex_, fg, "vertical");
  if ((vid_[vmors_[key.first].src] == key.first && h != key.second) ||
      (vid_[vmors_[key.second].dst] == key.second && h != key.first))
    throw ContractError("vertical composite (" + f + ", " + g + ", " + fg + ") breaks an identity law");
  auto [it, fresh] = vcomp_.emplace(key, h);
  if (!fresh && it->second != h) throw ContractError("conflicting vertical composites for (" + f + ", " + g + ")");
}

void SquaresCategory::add_square(const std::string& top, const std::string& left, const std::string& right,
                                 const std::string& bottom) {
  squares_.insert(Square{lookup(hindex_, top, "horizontal"), lookup(vindex_, left, "vertical"),
                         lookup(vindex_, right, "vertical"), lookup(hindex_, bottom, "horizontal")});
}

void SquaresCategory::add_identity_squares() {
  for (std::size_t f = 0; f < hmors_.size(); ++f)
    squares_.insert(Square{f, vid_[hmors_[f].src], vid_[hmors_[f].dst], f});
  for (std::size_t g = 0; g < vmors_.size(); ++g)
    squares_.insert(Square{hid_[vmors_[g].src], g, g, hid_[vmors_[g].dst]});
}

void SquaresCategory::add_isoclass(const std::vector<std::string>& objects) {
  if (objects.empty()) throw ContractError("empty iso-class");
  std::vector<std::size_t> cls;
  for (const auto& o : objects) cls.push_back(object_index(o));
  isoclasses_.push_back(std::move(cls));
}

void SquaresCategory::add_union(const std::string& a, const std::string& b, const std::string& c) {
  const auto key = std::make_pair(object_index(a), object_index(b));
  const std::size_t u = object_index(c);
  auto [it, fresh] = unions_.emplace(key, u);
  if (!fresh && it->second != u) throw ContractError("conflicting unions for (" + a + ", " + b + ")");
}

std::optional<std::size_t> SquaresCategory::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SquaresCategory::find_hmor(const std::string& id) const {
  auto it = hindex_.find(id);
  if (it == hindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SquaresCategory::find_vmor(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<std::size_t> compose_in(const std::vector<SquaresCategory::Morphism>& mors,
                                      const std::vector<std::size_t>& ids,
                                      const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& table,
                                      std::size_t f, std::size_t g) {
  if (mors.at(f).dst != mors.at(g).src) return std::nullopt;
  if (ids[mors[f].src] == f) return g;
  if (ids[mors[g].dst] == g) return f;
  auto it = table.find({f, g});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> unique_between(const std::vector<SquaresCategory::Morphism>& mors, std::size_t src,
                                          std::size_t dst) {
  std::optional<std::size_t> found;
  for (std::size_t m = 0; m < mors.size(); ++m)
    if (mors[m].src == src && mors[m].dst == dst) {
      if (found) return std::nullopt;
      found = m;
    }
  return found;
}

}  // namespace

std::optional<std::size_t> SquaresCategory::hcompose(std::size_t f, std::size_t g) const {
  return compose_in(hmors_, hid_, hcomp_, f, g);
}

std::optional<std::size_t> SquaresCategory::vcompose(std::size_t f, std::size_t g) const {
  return compose_in(vmors_, vid_, vcomp_, f, g);
}

std::optional<std::size_t> SquaresCategory::unique_hmor(std::size_t src, std::size_t dst) const {
  return unique_between(hmors_, src, dst);
}

std::optional<std::size_t> SquaresCategory::unique_vmor(std::size_t src, std::size_t dst) const {
  return unique_between(vmors_, src, dst);
}

std::array<std::size_t, 4> SquaresCategory::corners(const Square& s) const {
  return {hmors_.at(s.top).src, hmors_.at(s.top).dst, hmors_.at(s.bottom).src, hmors_.at(s.bottom).dst};
}

std::vector<std::vector<std::size_t>> SquaresCategory::isoclasses() const {
  std::vector<std::vector<std::size_t>> out = isoclasses_;
  std::vector<char> seen(objects_.size(), 0);
  for (const auto& cls : isoclasses_)
    for (std::size_t o : cls) seen[o] = 1;
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (!seen[o]) out.push_back({o});
  return out;
}

std::optional<std::size_t> SquaresCategory::union_of(std::size_t a, std::size_t b) const {
  auto it = unions_.find({a, b});
  if (it == unions_.end()) return std::nullopt;
  return it->second;
}

std::string SquaresCategory::square_text(const Square& s) const {
  return "(" + hmors_.at(s.top).id + ", " + vmors_.at(s.left).id + ", " + vmors_.at(s.right).id + ", " +
         hmors_.at(s.bottom).id + ")";
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_composition(const std::vector<SquaresCategory::Morphism>& mors, const std::vector<std::size_t>& ids,
                       const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& table, const char* kind,
                       std::vector<std::string>& out) {
  for (const auto& [pair, h] : table) {
    const auto& f = mors[pair.first];
    const auto& g = mors[pair.second];
    const std::string triple = "(" + f.id + ", " + g.id + ", " + mors[h].id + ")";
    if (f.dst != g.src) out.push_back(std::string(kind) + " composite " + triple + " of non-composable morphisms");
    else if (mors[h].src != f.src || mors[h].dst != g.dst)
      out.push_back(std::string(kind) + " composite " + triple + " has the wrong endpoints");
    else if ((ids[f.src] == pair.first && h != pair.second) || (ids[g.dst] == pair.second && h != pair.first))
      out.push_back(std::string(kind) + " composite " + triple + " breaks an identity law");
  }
  const std::size_t m = mors.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (mors[f].dst != mors[g].src) continue;
      auto fg = compose_in(mors, ids, table, f, g);
      if (!fg) {
        out.push_back(std::string(kind) + " composite missing for (" + mors[f].id + ", " + mors[g].id + ")");
        continue;
      }
      for (std::size_t h = 0; h < m; ++h) {
        if (mors[g].dst != mors[h].src) continue;
        auto gh = compose_in(mors, ids, table, g, h);
        if (!gh) continue;  // reported on its own pair
        auto left = compose_in(mors, ids, table, *fg, h);
        auto right = compose_in(mors, ids, table, f, *gh);
        if (left && right && *left != *right)
          out.push_back(std::string(kind) + " associativity fails on (" + mors[f].id + ", " + mors[g].id + ", " +
                        mors[h].id + ")");
      }
    }
}

}  // namespace

SquaresReport validate_squares(const SquaresCategory& c) {
  SquaresReport r;
  auto& out = r.violations;
  const auto& H = c.hmors();
  const auto& V = c.vmors();
  const std::size_t n = c.object_count();

  std::vector<std::size_t> hids, vids;
  for (std::size_t o = 0; o < n; ++o) {
    hids.push_back(c.hid(o));
    vids.push_back(c.vid(o));
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> htable, vtable;
  for (std::size_t f = 0; f < H.size(); ++f)
    for (std::size_t g = 0; g < H.size(); ++g)
      if (H[f].dst == H[g].src)
        if (auto h = c.hcompose(f, g)) htable[{f, g}] = *h;
  check_composition(H, hids, htable, "horizontal", out);
  for (std::size_t f = 0; f < V.size(); ++f)
    for (std::size_t g = 0; g < V.size(); ++g)
      if (V[f].dst == V[g].src)
        if (auto h = c.vcompose(f, g)) vtable[{f, g}] = *h;
  check_composition(V, vids, vtable, "vertical", out);

  for (const Square& s : c.squares()) {
    if (H[s.top].src != V[s.left].src || H[s.top].dst != V[s.right].src || V[s.left].dst != H[s.bottom].src ||
        V[s.right].dst != H[s.bottom].dst)
      out.push_back("square " + c.square_text(s) + " has mismatched corners");
  }

  for (std::size_t f = 0; f < H.size(); ++f) {
    const Square s{f, c.vid(H[f].src), c.vid(H[f].dst), f};
    if (!c.distinguished(s)) out.push_back("identity-bordered square " + c.square_text(s) + " is not distinguished");
  }
  for (std::size_t g = 0; g < V.size(); ++g) {
    const Square s{c.hid(V[g].src), g, g, c.hid(V[g].dst)};
    if (!c.distinguished(s)) out.push_back("identity-bordered square " + c.square_text(s) + " is not distinguished");
  }

  for (const Square& a : c.squares())
    for (const Square& b : c.squares()) {
      if (a.right == b.left) {
        auto top = c.hcompose(a.top, b.top);
        auto bottom = c.hcompose(a.bottom, b.bottom);
        if (top && bottom) {
          const Square p{*top, a.left, b.right, *bottom};
          if (!c.distinguished(p))
            out.push_back("horizontal pasting of " + c.square_text(a) + " and " + c.square_text(b) + " gives " +
                          c.square_text(p) + ", not distinguished");
        }
      }
      if (a.bottom == b.top) {
        auto left = c.vcompose(a.left, b.left);
        auto right = c.vcompose(a.right, b.right);
        if (left && right) {
          const Square p{a.top, *left, *right, b.bottom};
          if (!c.distinguished(p))
            out.push_back("vertical pasting of " + c.square_text(a) + " and " + c.square_text(b) + " gives " +
                          c.square_text(p) + ", not distinguished");
        }
      }
    }

  if (!c.initial()) {
    out.push_back("no initial object declared");
  } else {
    const std::size_t e = *c.initial();
    for (std::size_t o = 0; o < n; ++o) {
      if (!c.unique_hmor(e, o)) out.push_back("initial object has no unique horizontal morphism to " + c.object(o));
      if (!c.unique_vmor(e, o)) out.push_back("initial object has no unique vertical morphism to " + c.object(o));
    }
  }

  std::vector<int> seen(n, 0);
  for (const auto& cls : c.declared_isoclasses())
    for (std::size_t o : cls)
      if (++seen[o] == 2) out.push_back("object " + c.object(o) + " lies in more than one iso-class");

  for (const auto& [pair, u] : c.unions()) {
    const auto [a, b] = pair;
    const std::string name = c.object(a) + " u " + c.object(b) + " = " + c.object(u);
    for (std::size_t part : {a, b})
      if (!c.unique_hmor(part, u) || !c.unique_vmor(part, u))
        out.push_back("union " + name + ": no unique inclusion of " + c.object(part));
    for (const auto& [pair2, u2] : c.unions()) {
      if (pair2.first != u) continue;
      // (a u b) u x against a u (b u x).
      const std::size_t x = pair2.second;
      auto bx = c.union_of(b, x);
      auto whole = bx ? c.union_of(a, *bx) : std::nullopt;
      if (!whole || *whole != u2)
        out.push_back("union is not associative on (" + c.object(a) + ", " + c.object(b) + ", " + c.object(x) + ")");
    }
  }

  r.valid = out.empty();
  return r;
}

void require_valid(const SquaresCategory& c) {
  const SquaresReport r = validate_squares(c);
  if (!r.valid) throw ContractError("invalid squares category: " + r.violations.front());
}

// ---------------------------------------------------------------------------
// K0

namespace {

using Rows = std::vector<std::vector<Integer>>;

/// Row Hermite normal form of f in place; a tracks the row operations and
/// a_inv their inverse (f_new = a f_old, a a_inv = 1).
void hermite_rows(Rows& f, Rows& a, Rows& a_inv) {
  const std::size_t rows = f.size();
  const std::size_t cols = rows ? f[0].size() : 0;
  auto add_row = [&](std::size_t target, std::size_t source, const Integer& q) {  // target -= q source
    for (std::size_t k = 0; k < cols; ++k) f[target][k] -= q * f[source][k];
    for (std::size_t k = 0; k < rows; ++k) a[target][k] -= q * a[source][k];
    for (std::size_t k = 0; k < rows; ++k) a_inv[k][source] += q * a_inv[k][target];
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    std::swap(f[x], f[y]);
    std::swap(a[x], a[y]);
    for (auto& row : a_inv) std::swap(row[x], row[y]);
  };
  auto negate_row = [&](std::size_t x) {
    for (auto& v : f[x]) v = -v;
    for (auto& v : a[x]) v = -v;
    for (auto& row : a_inv) row[x] = -row[x];
  };
  std::size_t p = 0;
  for (std::size_t col = 0; col < cols && p < rows; ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < rows; ++i)
        if (sgn(f[i][col]) != 0 && (!best || mpz_cmpabs(f[i][col].get_mpz_t(), f[*best][col].get_mpz_t()) < 0))
          best = i;
      if (!best) break;
      swap_rows(p, *best);
      bool done = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (sgn(f[i][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), f[i][col].get_mpz_t(), f[p][col].get_mpz_t());
        add_row(i, p, q);
        if (sgn(f[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(f[p][col]) == 0) continue;
    if (sgn(f[p][col]) < 0) negate_row(p);
    for (std::size_t u = 0; u < p; ++u) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), f[u][col].get_mpz_t(), f[p][col].get_mpz_t());
      if (sgn(q) != 0) add_row(u, p, q);
    }
    ++p;
  }
}

std::string combination(const std::vector<Integer>& coeffs, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    const Integer mag = abs(coeffs[i]);
    if (out.empty()) out += sgn(coeffs[i]) < 0 ? "-" : "";
    else out += sgn(coeffs[i]) < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str();
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

K0Presentation k0_presentation(const SquaresCategory& c) {
  require_valid(c);
  K0Presentation out;
  const auto classes = c.isoclasses();
  const std::size_t k = classes.size();
  out.class_of.assign(c.object_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    out.class_labels.push_back("[" + c.object(classes[i].front()) + "]");
    for (std::size_t o : classes[i]) out.class_of[o] = i;
  }

  std::vector<std::vector<Integer>> relations;
  {
    std::vector<Integer> row(k, 0);
    row[out.class_of[*c.initial()]] = 1;
    relations.push_back(row);
  }
  for (const Square& s : c.squares()) {
    const auto [a, b, cc, d] = c.corners(s);
    std::vector<Integer> row(k, 0);
    row[out.class_of[a]] += 1;
    row[out.class_of[d]] += 1;
    row[out.class_of[b]] -= 1;
    row[out.class_of[cc]] -= 1;
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; })) relations.push_back(row);
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  IntMatrix r(relations.size(), k);
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) r(i, j) = relations[i][j];
  const SmithForm snf = smith_normal_form(r, Transforms::with_inverses);
  const std::size_t rank = snf.rank;

  // Class row e_c maps to row c of V; generator i pulls back to row i of V^-1.
  std::vector<std::size_t> torsion_index;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < rank; ++i)
    if (snf.S(i, i) != 1) {
      torsion_index.push_back(i);
      orders.push_back(snf.S(i, i));
    }
  const std::size_t free_rank = k - rank;
  const std::size_t t = torsion_index.size();

  Rows free_coords(free_rank, std::vector<Integer>(k));
  for (std::size_t j = 0; j < free_rank; ++j)
    for (std::size_t cl = 0; cl < k; ++cl) free_coords[j][cl] = snf.V(cl, rank + j);
  Rows a(free_rank, std::vector<Integer>(free_rank, 0)), a_inv = a;
  for (std::size_t j = 0; j < free_rank; ++j) a[j][j] = a_inv[j][j] = 1;
  hermite_rows(free_coords, a, a_inv);

  out.group = FgAbGroup(free_rank, orders);
  out.class_coordinates.assign(k, std::vector<Integer>(t + free_rank));
  for (std::size_t cl = 0; cl < k; ++cl) {
    for (std::size_t q = 0; q < t; ++q) {
      Integer x = snf.V(cl, torsion_index[q]) % orders[q];
      if (sgn(x) < 0) x += orders[q];
      out.class_coordinates[cl][q] = x;
    }
    for (std::size_t j = 0; j < free_rank; ++j) out.class_coordinates[cl][t + j] = free_coords[j][cl];
  }

  // Generator g as a class combination: torsion from V^-1, free through a^-1.
  auto unit_class = [&](std::size_t g) -> std::optional<std::size_t> {
    for (std::size_t cl = 0; cl < k; ++cl) {
      bool unit = true;
      for (std::size_t q = 0; q < t + free_rank && unit; ++q)
        unit = out.class_coordinates[cl][q] == (q == g ? 1 : 0);
      if (unit) return cl;
    }
    return std::nullopt;
  };
  for (std::size_t g = 0; g < t + free_rank; ++g) {
    if (auto cl = unit_class(g)) {
      out.generators.push_back(out.class_labels[*cl]);
      continue;
    }
    std::vector<Integer> coeffs(k, 0);
    if (g < t) {
      for (std::size_t cl = 0; cl < k; ++cl) coeffs[cl] = snf.V_inv(torsion_index[g], cl);
    } else {
      const std::size_t j = g - t;
      for (std::size_t i = 0; i < free_rank; ++i)
        for (std::size_t cl = 0; cl < k; ++cl) coeffs[cl] += a_inv[i][j] * snf.V_inv(rank + i, cl);
    }
    out.generators.push_back(combination(coeffs, out.class_labels));
  }
  return out;
}

FgAbGroup coequalizer_pi0(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& d0, const IntMatrix& d1) {
  const std::size_t m = target.generator_count(), n = source.generator_count();
  if (d0.rows() != m || d0.cols() != n || d1.rows() != m || d1.cols() != n)
    throw ContractError("coequalizer: maps must be " + std::to_string(m) + " x " + std::to_string(n));
  const std::size_t tt = target.torsion.size();
  for (const IntMatrix* d : {&d0, &d1})
    for (std::size_t j = 0; j < source.torsion.size(); ++j)
      for (std::size_t i = 0; i < m; ++i) {
        const Integer image = source.torsion[j] * (*d)(i, j);
        const bool zero = i < tt ? image % target.torsion[i] == 0 : image == 0;
        if (!zero) throw ContractError("coequalizer: map is not a homomorphism on torsion generator " + std::to_string(j));
      }
  IntMatrix rel(tt + n, m);
  for (std::size_t i = 0; i < tt; ++i) rel(i, i) = target.torsion[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) rel(tt + j, i) = d0(i, j) - d1(i, j);
  return FgAbGroup::from_relations(rel, m);
}

// ---------------------------------------------------------------------------
// Grids

bool is_grid(const SquaresCategory& c, const GridSimplex& g) {
  const int n = g.n;
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  if (n < 0 || g.objects.size() != side * side || g.h.size() != side * n || g.v.size() != side * n) return false;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& f = c.hmors().at(g.hmor(i, j));
      if (f.src != g.object(i, j) || f.dst != g.object(i, j + 1)) return false;
      const auto& w = c.vmors().at(g.vmor(j, i));
      if (w.src != g.object(j, i) || w.dst != g.object(j + 1, i)) return false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!c.distinguished(Square{g.hmor(i, j), g.vmor(i, j), g.vmor(i, j + 1), g.hmor(i + 1, j)})) return false;
  return true;
}

GridSimplex grid_face(const SquaresCategory& c, const GridSimplex& g, int k) {
  if (g.n < 1 || k < 0 || k > g.n) throw ContractError("grid face index out of range");
  GridSimplex out;
  out.n = g.n - 1;
  auto sigma = [k](int a) { return a < k ? a : a + 1; };
  for (int i = 0; i <= out.n; ++i)
    for (int j = 0; j <= out.n; ++j) out.objects.push_back(g.object(sigma(i), sigma(j)));
  for (int i = 0; i <= out.n; ++i)
    for (int j = 0; j < out.n; ++j) {
      const int r = sigma(i), a = sigma(j), b = sigma(j + 1);
      std::size_t f = g.hmor(r, a);
      if (b == a + 2) {
        auto fg = c.hcompose(f, g.hmor(r, a + 1));
        if (!fg) throw StructuralError("grid face: missing horizontal composite");
        f = *fg;
      }
      out.h.push_back(f);
    }
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j <= out.n; ++j) {
      const int col = sigma(j), a = sigma(i), b = sigma(i + 1);
      std::size_t f = g.vmor(a, col);
      if (b == a + 2) {
        auto fg = c.vcompose(f, g.vmor(a + 1, col));
        if (!fg) throw StructuralError("grid face: missing vertical composite");
        f = *fg;
      }
      out.v.push_back(f);
    }
  return out;
}

GridSimplex grid_degeneracy(const SquaresCategory& c, const GridSimplex& g, int k) {
  if (k < 0 || k > g.n) throw ContractError("grid degeneracy index out of range");
  GridSimplex out;
  out.n = g.n + 1;
  auto tau = [k](int a) { return a <= k ? a : a - 1; };
  for (int i = 0; i <= out.n; ++i)
    for (int j = 0; j <= out.n; ++j) out.objects.push_back(g.object(tau(i), tau(j)));
  for (int i = 0; i <= out.n; ++i)
    for (int j = 0; j < out.n; ++j)
      out.h.push_back(tau(j) == tau(j + 1) ? c.hid(g.object(tau(i), tau(j))) : g.hmor(tau(i), tau(j)));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j <= out.n; ++j)
      out.v.push_back(tau(i) == tau(i + 1) ? c.vid(g.object(tau(i), tau(j))) : g.vmor(tau(i), tau(j)));
  return out;
}

std::vector<GridSimplex> enumerate_grids(const SquaresCategory& c, int n, std::size_t budget) {
  if (n < 0) throw ContractError("grid degree must be non-negative");
  std::vector<GridSimplex> out;
  if (n == 0) {
    for (std::size_t o = 0; o < c.object_count(); ++o) out.push_back(GridSimplex{0, {o}, {}, {}});
    return out;
  }
  const std::vector<Square> all(c.squares().begin(), c.squares().end());
  std::map<std::size_t, std::vector<Square>> by_top, by_left;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Square>> by_both;
  for (const Square& s : all) {
    by_top[s.top].push_back(s);
    by_left[s.left].push_back(s);
    by_both[{s.top, s.left}].push_back(s);
  }
  static const std::vector<Square> none;
  auto find = [](const auto& map, const auto& key) -> const std::vector<Square>& {
    auto it = map.find(key);
    return it == map.end() ? none : it->second;
  };

  std::vector<Square> cells(static_cast<std::size_t>(n) * n);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == n * n) {
      if (out.size() >= budget)
        throw ResourceError("grid enumeration in degree " + std::to_string(n) + " exceeds the budget of " +
                            std::to_string(budget));
      GridSimplex g;
      g.n = n;
      auto cell = [&](int i, int j) -> const Square& { return cells[i * n + j]; };
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          const Square& s = cell(std::min(i, n - 1), std::min(j, n - 1));
          const auto corner = c.corners(s);
          g.objects.push_back(corner[(i == n ? 2 : 0) + (j == n ? 1 : 0)]);
        }
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) g.h.push_back(i < n ? cell(i, j).top : cell(n - 1, j).bottom);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) g.v.push_back(j < n ? cell(i, j).left : cell(i, n - 1).right);
      out.push_back(std::move(g));
      return;
    }
    const int i = pos / n, j = pos % n;
    const std::vector<Square>* candidates = &all;
    if (i > 0 && j > 0) candidates = &find(by_both, std::make_pair(cells[(i - 1) * n + j].bottom, cells[i * n + j - 1].right));
    else if (i > 0) candidates = &find(by_top, cells[(i - 1) * n + j].bottom);
    else if (j > 0) candidates = &find(by_left, cells[i * n + j - 1].right);
    for (const Square& s : *candidates) {
      cells[pos] = s;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

std::string grid_label(const SquaresCategory& c, const GridSimplex& g) {
  if (g.n == 0) return c.object(g.objects[0]);
  std::string out = "<";
  for (std::size_t i = 0; i < g.h.size(); ++i) out += (i ? "," : "") + c.hmors()[g.h[i]].id;
  out += "|";
  for (std::size_t i = 0; i < g.v.size(); ++i) out += (i ? "," : "") + c.vmors()[g.v[i]].id;
  return out + ">";
}

SimplicialObject grid_nerve(const SquaresCategory& c, int n_max, std::size_t budget) {
  require_valid(c);
  if (n_max < 0) throw ContractError("n_max must be non-negative");
  auto degenerate_direction = [&](const GridSimplex& g) {
    for (int j = 0; j < g.n; ++j)
      if (grid_degeneracy(c, grid_face(c, g, j), j) == g) return j;
    return -1;
  };
  std::vector<std::vector<GridSimplex>> cells;
  std::vector<std::map<GridSimplex, std::size_t>> index;
  std::size_t used = 0;
  for (int n = 0; n <= n_max; ++n) {
    cells.emplace_back();
    index.emplace_back();
    for (GridSimplex& g : enumerate_grids(c, n, budget - std::min(used, budget))) {
      ++used;
      if (degenerate_direction(g) >= 0) continue;
      index[n][g] = cells[n].size();
      cells[n].push_back(std::move(g));
    }
  }
  std::vector<std::vector<Simplex>> simplices(cells.size());
  for (int n = 0; n <= n_max; ++n)
    for (const GridSimplex& g : cells[n]) {
      Simplex s;
      s.label = grid_label(c, g);
      for (int i = 0; n >= 1 && i <= n; ++i) {
        GridSimplex f = grid_face(c, g, i);
        std::vector<int> word;
        for (int j; (j = degenerate_direction(f)) >= 0;) {
          word.push_back(j);
          f = grid_face(c, f, j);
        }
        auto it = index[f.n].find(f);
        if (it == index[f.n].end()) throw StructuralError("grid nerve: face of " + s.label + " is not a grid");
        s.faces.push_back(FaceTarget{it->second, normalize_word(std::move(word))});
      }
      simplices[n].push_back(std::move(s));
    }
  return SimplicialObject(SimplicialKind::simplicial, std::move(simplices));
}

GridSimplex string_to_grid(const SquaresCategory& c, const std::vector<std::size_t>& pieces) {
  if (pieces.size() % 2 == 0) throw ContractError("piece string must have odd length 2m+1");
  const int m = static_cast<int>(pieces.size() / 2);
  auto fold = [&](int i, int j) {  // W_i u .. u W_0 u .. u W'_j
    std::size_t acc = pieces[m - i];
    for (int p = m - i + 1; p <= m + j; ++p) {
      auto u = c.union_of(acc, pieces[p]);
      if (!u) throw ContractError("missing designated union for (" + c.object(acc) + ", " + c.object(pieces[p]) + ")");
      acc = *u;
    }
    return acc;
  };
  GridSimplex g;
  g.n = m;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) g.objects.push_back(fold(i, j));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j < m; ++j) {
      auto f = c.unique_hmor(g.object(i, j), g.object(i, j + 1));
      if (!f) throw ContractError("missing designated horizontal inclusion " + c.object(g.object(i, j)) + " -> " +
                                  c.object(g.object(i, j + 1)));
      g.h.push_back(*f);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= m; ++j) {
      auto f = c.unique_vmor(g.object(i, j), g.object(i + 1, j));
      if (!f) throw ContractError("missing designated vertical inclusion " + c.object(g.object(i, j)) + " -> " +
                                  c.object(g.object(i + 1, j)));
      g.v.push_back(*f);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Square s{g.hmor(i, j), g.vmor(i, j), g.vmor(i, j + 1), g.hmor(i + 1, j)};
      if (!c.distinguished(s)) throw ContractError("missing designated square " + c.square_text(s));
    }
  return g;
}

namespace {

std::vector<std::size_t> nerve_face(const SquaresCategory& c, const std::vector<std::size_t>& p, int k) {
  const int len = static_cast<int>(p.size());
  std::vector<std::size_t> out;
  if (k == 0) return {p.begin() + 1, p.end()};
  if (k == len) return {p.begin(), p.end() - 1};
  out.assign(p.begin(), p.begin() + k - 1);
  auto u = c.union_of(p[k - 1], p[k]);
  if (!u) throw ContractError("missing designated union for (" + c.object(p[k - 1]) + ", " + c.object(p[k]) + ")");
  out.push_back(*u);
  out.insert(out.end(), p.begin() + k + 1, p.end());
  return out;
}

}  // namespace

std::vector<std::size_t> string_sd_face(const SquaresCategory& c, const std::vector<std::size_t>& pieces, int i) {
  if (pieces.size() % 2 == 0) throw ContractError("piece string must have odd length 2m+1");
  const int m = static_cast<int>(pieces.size() / 2);
  if (m < 1 || i < 0 || i > m) throw ContractError("sd face index out of range");
  return nerve_face(c, nerve_face(c, pieces, m + 1 + i), m - i);
}

std::vector<std::vector<std::size_t>> composable_strings(const SquaresCategory& c, int m) {
  if (m < 0) throw ContractError("m must be non-negative");
  const std::size_t len = 2 * static_cast<std::size_t>(m) + 1;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  // folds[s] = left fold of cur[s..end], or nullopt.
  std::function<void(std::vector<std::optional<std::size_t>>&)> extend = [&](std::vector<std::optional<std::size_t>>& folds) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t o = 0; o < c.object_count(); ++o) {
      std::vector<std::optional<std::size_t>> next(folds.size() + 1);
      bool ok = true;
      for (std::size_t s = 0; s < folds.size() && ok; ++s) {
        next[s] = c.union_of(*folds[s], o);
        ok = next[s].has_value();
      }
      if (!ok) continue;
      next.back() = o;
      cur.push_back(o);
      extend(next);
      cur.pop_back();
    }
  };
  std::vector<std::optional<std::size_t>> start;
  extend(start);
  return out;
}

// ---------------------------------------------------------------------------
// Toy categories

namespace {

std::string set_name(unsigned mask, int n) {
  std::string s = "{";
  for (int e = 0; e < n; ++e)
    if (mask & (1u << e)) s += (s.size() > 1 ? "," : "") + std::to_string(e);
  return s + "}";
}

}  // namespace

SquaresCategory finite_sets(int n) {
  if (n < 0 || n > 5) throw ContractError("finite_sets supports universes of 0..5 elements");
  SquaresCategory c;
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> masks;
  for (unsigned s = 0; s <= full; ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (unsigned s : masks) c.add_object(set_name(s, n), s == 0);
  auto mor = [&](unsigned a, unsigned b) {
    return a == b ? "id(" + set_name(a, n) + ")" : set_name(a, n) + "<" + set_name(b, n);
  };
  for (unsigned a : masks)
    for (unsigned b : masks)
      if (a != b && (a & b) == a) {
        c.add_hmor(mor(a, b), set_name(a, n), set_name(b, n));
        c.add_vmor(mor(a, b), set_name(a, n), set_name(b, n));
      }
  for (unsigned a : masks)
    for (unsigned b : masks)
      for (unsigned d : masks)
        if (a != b && b != d && (a & b) == a && (b & d) == b) {
          c.set_hcomp(mor(a, b), mor(b, d), mor(a, d));
          c.set_vcomp(mor(a, b), mor(b, d), mor(a, d));
        }
  for (unsigned b : masks)
    for (unsigned cc : masks) {
      const unsigned a = b & cc, d = b | cc;
      c.add_square(mor(a, b), mor(a, cc), mor(b, d), mor(cc, d));
    }
  for (int size = 0; size <= n; ++size) {
    std::vector<std::string> cls;
    for (unsigned s : masks)
      if (__builtin_popcount(s) == size) cls.push_back(set_name(s, n));
    c.add_isoclass(cls);
  }
  for (unsigned a : masks)
    for (unsigned b : masks)
      if ((a & b) == 0) c.add_union(set_name(a, n), set_name(b, n), set_name(a | b, n));
  return c;
}

SquaresCategory sizes(int n) {
  if (n < 0) throw ContractError("sizes needs n >= 0");
  SquaresCategory c;
  auto name = [](int a) { return std::to_string(a); };
  auto mor = [&](int a, int b) { return a == b ? "id(" + name(a) + ")" : name(a) + "<" + name(b); };
  for (int a = 0; a <= n; ++a) c.add_object(name(a), a == 0);
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      c.add_hmor(mor(a, b), name(a), name(b));
      c.add_vmor(mor(a, b), name(a), name(b));
    }
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int d = b + 1; d <= n; ++d) {
        c.set_hcomp(mor(a, b), mor(b, d), mor(a, d));
        c.set_vcomp(mor(a, b), mor(b, d), mor(a, d));
      }
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int cc = a; cc <= n; ++cc) {
        const int d = b + cc - a;
        if (d <= n) c.add_square(mor(a, b), mor(a, cc), mor(b, d), mor(cc, d));
      }
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) c.add_union(name(a), name(b), name(a + b));
  return c;
}

SquaresCategory empty_category() {
  SquaresCategory c;
  c.add_object("0", true);
  c.add_identity_squares();
  return c;
}

SquaresCategory point_category() {
  SquaresCategory c;
  c.add_object("0", true);
  c.add_object("A");
  c.add_hmor("0>A", "0", "A");
  c.add_vmor("0>A", "0", "A");
  c.add_identity_squares();
  return c;
}

SquaresCategory doubling_category() {
  SquaresCategory c;
  c.add_object("0", true);
  c.add_object("A");
  c.add_object("B");
  for (auto add : {&SquaresCategory::add_hmor, &SquaresCategory::add_vmor}) {
    (c.*add)("a", "0", "A");
    (c.*add)("ab", "A", "B");
    (c.*add)("b", "0", "B");
  }
  c.set_hcomp("a", "ab", "b");
  c.set_vcomp("a", "ab", "b");
  c.add_identity_squares();
  c.add_square("a", "a", "ab", "ab");
  return c;
}

// ---------------------------------------------------------------------------
// Text format

SquaresCategory parse_squares(std::istream& in) {
  SquaresCategory c;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string tok; ls >> tok;) w.push_back(tok);
    if (w.empty()) continue;
    const std::string& key = w[0];
    auto need = [&](std::size_t count) {
      if (w.size() != count) throw ParseError(number, "'" + key + "' expects " + std::to_string(count - 1) + " arguments");
    };
    try {
      if (key == "object") {
        if (w.size() == 3 && w[2] != "initial") throw ParseError(number, "expected 'initial', got '" + w[2] + "'");
        if (w.size() != 2 && w.size() != 3) throw ParseError(number, "'object' expects an id and optional 'initial'");
        c.add_object(w[1], w.size() == 3);
      } else if (key == "hmor") {
        need(4);
        c.add_hmor(w[1], w[2], w[3]);
      } else if (key == "vmor") {
        need(4);
        c.add_vmor(w[1], w[2], w[3]);
      } else if (key == "hcomp") {
        need(4);
        c.set_hcomp(w[1], w[2], w[3]);
      } else if (key == "vcomp") {
        need(4);
        c.set_vcomp(w[1], w[2], w[3]);
      } else if (key == "square") {
        need(5);
        c.add_square(w[1], w[2], w[3], w[4]);
      } else if (key == "identity-squares") {
        need(1);
        c.add_identity_squares();
      } else if (key == "isoclass") {
        if (w.size() < 2) throw ParseError(number, "'isoclass' expects at least one object");
        c.add_isoclass({w.begin() + 1, w.end()});
      } else if (key == "union") {
        need(4);
        c.add_union(w[1], w[2], w[3]);
      } else {
        throw ParseError(number, "unknown directive '" + key + "'");
      }
    } catch (const ContractError& e) {
      throw ParseError(number, e.what());
    }
  }
  return c;
}

SquaresCategory parse_squares(const std::string& text) {
  std::istringstream in(text);
  return parse_squares(in);
}

std::string to_text(const SquaresCategory& c) {
  std::ostringstream os;
  for (std::size_t o = 0; o < c.object_count(); ++o)
    os << "object " << c.object(o) << (c.initial() == o ? " initial" : "") << "\n";
  auto is_id = [&](bool horizontal, std::size_t m) {
    const auto& mor = horizontal ? c.hmors()[m] : c.vmors()[m];
    return (horizontal ? c.hid(mor.src) : c.vid(mor.src)) == m;
  };
  for (std::size_t m = 0; m < c.hmors().size(); ++m)
    if (!is_id(true, m)) os << "hmor " << c.hmors()[m].id << " " << c.object(c.hmors()[m].src) << " " << c.object(c.hmors()[m].dst) << "\n";
  for (std::size_t m = 0; m < c.vmors().size(); ++m)
    if (!is_id(false, m)) os << "vmor " << c.vmors()[m].id << " " << c.object(c.vmors()[m].src) << " " << c.object(c.vmors()[m].dst) << "\n";
  for (std::size_t f = 0; f < c.hmors().size(); ++f)
    for (std::size_t g = 0; g < c.hmors().size(); ++g)
      if (!is_id(true, f) && !is_id(true, g) && c.hmors()[f].dst == c.hmors()[g].src)
        if (auto h = c.hcompose(f, g)) os << "hcomp " << c.hmors()[f].id << " " << c.hmors()[g].id << " " << c.hmors()[*h].id << "\n";
  for (std::size_t f = 0; f < c.vmors().size(); ++f)
    for (std::size_t g = 0; g < c.vmors().size(); ++g)
      if (!is_id(false, f) && !is_id(false, g) && c.vmors()[f].dst == c.vmors()[g].src)
        if (auto h = c.vcompose(f, g)) os << "vcomp " << c.vmors()[f].id << " " << c.vmors()[g].id << " " << c.vmors()[*h].id << "\n";
  for (const Square& s : c.squares())
    os << "square " << c.hmors()[s.top].id << " " << c.vmors()[s.left].id << " " << c.vmors()[s.right].id << " "
       << c.hmors()[s.bottom].id << "\n";
  for (const auto& cls : c.declared_isoclasses()) {
    os << "isoclass";
    for (std::size_t o : cls) os << " " << c.object(o);
    os << "\n";
  }
  for (const auto& [pair, u] : c.unions())
    os << "union " << c.object(pair.first) << " " << c.object(pair.second) << " " << c.object(u) << "\n";
  return os.str();
}

}  // namespace scissors
