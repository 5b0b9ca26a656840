#include "scissors/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "scissors/errors.hpp"

namespace scissors {

DegeneracyWord normalize_word(std::vector<int> a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < a.size(); ++p)
      if (a[p] <= a[p + 1]) {
        const int i = a[p], j = a[p + 1];
        a[p] = j + 1;
        a[p + 1] = i;
        changed = true;
      }
  }
  return a;
}

std::string word_to_string(const DegeneracyWord& w) {
  std::string s;
  for (int i : w) s += "s" + std::to_string(i);
  return s;
}

DegeneracyWord parse_word(const std::string& text) {
  DegeneracyWord w;
  std::size_t p = 0;
  while (p < text.size()) {
    if (text[p] != 's' || p + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p + 1])))
      throw ContractError("malformed degeneracy word '" + text + "'");
    ++p;
    int v = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) v = v * 10 + (text[p++] - '0');
    w.push_back(v);
  }
  return w;
}

namespace {

bool in_normal_form(const DegeneracyWord& w, int base_degree) {
  const int k = static_cast<int>(w.size());
  for (int q = 0; q < k; ++q) {
    if (w[q] < 0 || w[q] > base_degree + k - 1 - q) return false;
    if (q > 0 && w[q - 1] <= w[q]) return false;
  }
  return true;
}

}  // namespace

SimplicialObject::SimplicialObject(SimplicialKind kind, std::vector<std::vector<Simplex>> simplices)
    : kind_(kind), simplices_(std::move(simplices)) {
  while (!simplices_.empty() && simplices_.back().empty()) simplices_.pop_back();
  for (int n = 0; n <= top_degree(); ++n)
    for (std::size_t i = 0; i < simplices_[n].size(); ++i) {
      const std::string& label = simplices_[n][i].label;
      if (label.empty()) throw StructuralError("simplex in degree " + std::to_string(n) + " has an empty id");
      if (!by_label_.emplace(label, SimplexRef{n, i}).second)
        throw StructuralError("duplicate simplex id '" + label + "'");
    }
  validate();
}

std::size_t SimplicialObject::count(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  return simplices_[n].size();
}

std::vector<std::size_t> SimplicialObject::counts() const {
  std::vector<std::size_t> c;
  for (const auto& d : simplices_) c.push_back(d.size());
  return c;
}

const Simplex& SimplicialObject::simplex(int n, std::size_t id) const {
  if (n < 0 || n > top_degree() || id >= simplices_[n].size())
    throw ContractError("no simplex " + std::to_string(id) + " in degree " + std::to_string(n));
  return simplices_[n][id];
}

std::optional<SimplexRef> SimplicialObject::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Element SimplicialObject::face(const Element& x, int i) const {
  const int k = x.degree();
  if (k == 0 || i < 0 || i > k)
    throw ContractError("face d_" + std::to_string(i) + " undefined in degree " + std::to_string(k));
  DegeneracyWord out;
  int idx = i;
  for (std::size_t p = 0; p < x.word.size(); ++p) {
    const int j = x.word[p];
    if (idx < j) {
      out.push_back(j - 1);
    } else if (idx == j || idx == j + 1) {
      out.insert(out.end(), x.word.begin() + static_cast<std::ptrdiff_t>(p) + 1, x.word.end());
      return Element{x.base, normalize_word(std::move(out))};
    } else {
      out.push_back(j);
      --idx;
    }
  }
  const Simplex& s = simplex(x.base);
  const FaceTarget& ft = s.faces.at(static_cast<std::size_t>(idx));
  out.insert(out.end(), ft.word.begin(), ft.word.end());
  const int m = x.base.degree - 1 - static_cast<int>(ft.word.size());
  return Element{SimplexRef{m, ft.id}, normalize_word(std::move(out))};
}

Element SimplicialObject::degeneracy(const Element& x, int i) const {
  if (kind_ != SimplicialKind::simplicial) throw ContractError("degeneracies are undefined on a semisimplicial object");
  if (i < 0 || i > x.degree())
    throw ContractError("degeneracy s_" + std::to_string(i) + " undefined in degree " + std::to_string(x.degree()));
  std::vector<int> w{i};
  w.insert(w.end(), x.word.begin(), x.word.end());
  return Element{x.base, normalize_word(std::move(w))};
}

std::string SimplicialObject::label(const Element& x) const {
  const std::string& base = simplex(x.base).label;
  if (x.word.empty()) return base;
  return word_to_string(x.word) + "(" + base + ")";
}

void SimplicialObject::validate() const {
  for (int n = 0; n <= top_degree(); ++n) {
    for (const Simplex& s : simplices_[n]) {
      const std::size_t expected = n == 0 ? 0 : static_cast<std::size_t>(n) + 1;
      if (s.faces.size() != expected)
        throw StructuralError("simplex '" + s.label + "' of degree " + std::to_string(n) + " has " +
                              std::to_string(s.faces.size()) + " faces, expected " + std::to_string(expected));
      for (std::size_t i = 0; i < s.faces.size(); ++i) {
        const FaceTarget& ft = s.faces[i];
        const int m = n - 1 - static_cast<int>(ft.word.size());
        const std::string where = "face " + std::to_string(i) + " of '" + s.label + "'";
        if (kind_ == SimplicialKind::semisimplicial && !ft.word.empty())
          throw StructuralError(where + " carries a degeneracy word in a semisimplicial object");
        if (m < 0 || ft.id >= count(m)) throw StructuralError(where + " references a missing simplex");
        if (!in_normal_form(ft.word, m))
          throw StructuralError(where + " has a degeneracy word not in normal form: " + word_to_string(ft.word));
      }
    }
  }
  for (int n = 2; n <= top_degree(); ++n)
    for (std::size_t id = 0; id < simplices_[n].size(); ++id) {
      const Element x{SimplexRef{n, id}, {}};
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (face(face(x, j), i) != face(face(x, i), j - 1))
            throw StructuralError("simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                  " = d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                                  " fails on simplex '" + simplices_[n][id].label + "'");
    }
}

// ---------------------------------------------------------------------------
// FiniteCategory

std::size_t FiniteCategory::add_object(const std::string& id) {
  if (object_index_.count(id)) throw ContractError("duplicate object '" + id + "'");
  object_index_[id] = objects_.size();
  objects_.push_back(id);
  return objects_.size() - 1;
}

std::size_t FiniteCategory::add_morphism(const std::string& id, const std::string& src, const std::string& dst) {
  if (morphism_index_.count(id)) throw ContractError("duplicate morphism '" + id + "'");
  auto s = find_object(src), d = find_object(dst);
  if (!s || !d) throw ContractError("morphism '" + id + "' has an unknown endpoint");
  morphism_index_[id] = morphisms_.size();
  morphisms_.push_back(Morphism{id, *s, *d});
  return morphisms_.size() - 1;
}

std::size_t FiniteCategory::add_identity(const std::string& obj, const std::string& id) {
  auto o = find_object(obj);
  if (!o) throw ContractError("identity for unknown object '" + obj + "'");
  if (identity_.count(*o)) throw ContractError("object '" + obj + "' already has an identity");
  const std::size_t m = add_morphism(id.empty() ? "id(" + obj + ")" : id, obj, obj);
  identity_[*o] = m;
  return m;
}

void FiniteCategory::set_composite(const std::string& f, const std::string& g, const std::string& h) {
  auto fi = find_morphism(f), gi = find_morphism(g), hi = find_morphism(h);
  if (!fi || !gi || !hi) throw ContractError("composite (" + f + ", " + g + ", " + h + ") names an unknown morphism");
  auto [it, inserted] = composite_.emplace(std::make_pair(*fi, *gi), *hi);
  if (!inserted && it->second != *hi)
    throw StructuralError("composition table: conflicting composites for (" + f + ", " + g + ")");
}

std::optional<std::size_t> FiniteCategory::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteCategory::find_morphism(const std::string& id) const {
  auto it = morphism_index_.find(id);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteCategory::identity(std::size_t obj) const {
  auto it = identity_.find(obj);
  if (it == identity_.end()) return std::nullopt;
  return it->second;
}

bool FiniteCategory::is_identity(std::size_t m) const {
  auto id = identity(morphisms_.at(m).src);
  return id && *id == m;
}

std::optional<std::size_t> FiniteCategory::find_composite(std::size_t f, std::size_t g) const {
  if (auto it = composite_.find({f, g}); it != composite_.end()) return it->second;
  if (morphisms_.at(f).dst != morphisms_.at(g).src) return std::nullopt;
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  return std::nullopt;
}

std::size_t FiniteCategory::compose(std::size_t f, std::size_t g) const {
  auto h = find_composite(f, g);
  if (!h)
    throw ContractError("no composite for (" + morphisms_.at(f).id + ", " + morphisms_.at(g).id + ")");
  return *h;
}

void FiniteCategory::validate() const {
  if (!identity_.empty() && identity_.size() != objects_.size())
    throw StructuralError("identities are declared for some objects but not all");
  for (const auto& [pair, h] : composite_) {
    const auto& f = morphisms_[pair.first];
    const auto& g = morphisms_[pair.second];
    const std::string triple = "(" + f.id + ", " + g.id + ", " + morphisms_[h].id + ")";
    if (f.dst != g.src) throw StructuralError("composition table: " + triple + " composes non-composable morphisms");
    if (morphisms_[h].src != f.src || morphisms_[h].dst != g.dst)
      throw StructuralError("composition table: " + triple + " has a composite with the wrong endpoints");
  }
  const std::size_t m = morphisms_.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (morphisms_[f].dst == morphisms_[g].src && !find_composite(f, g))
        throw StructuralError("composition table: violating triple (" + morphisms_[f].id + ", " +
                              morphisms_[g].id + ", ?): composable pair without a composite");
  for (std::size_t f = 0; f < m; ++f) {
    if (auto id = identity(morphisms_[f].src); id && compose(*id, f) != f)
      throw StructuralError("identity law fails: (" + morphisms_[*id].id + ", " + morphisms_[f].id + ")");
    if (auto id = identity(morphisms_[f].dst); id && compose(f, *id) != f)
      throw StructuralError("identity law fails: (" + morphisms_[f].id + ", " + morphisms_[*id].id + ")");
  }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms_[f].dst != morphisms_[g].src) continue;
      const std::size_t fg = compose(f, g);
      for (std::size_t h = 0; h < m; ++h) {
        if (morphisms_[g].dst != morphisms_[h].src) continue;
        if (compose(fg, h) != compose(f, compose(g, h)))
          throw StructuralError("associativity fails on the triple (" + morphisms_[f].id + ", " + morphisms_[g].id +
                                ", " + morphisms_[h].id + ")");
      }
    }
}

// ---------------------------------------------------------------------------
// Nerve

SimplicialObject nerve(const FiniteCategory& cat, int max_degree) {
  cat.validate();
  const bool unital = cat.unital();
  const SimplicialKind kind = unital ? SimplicialKind::simplicial : SimplicialKind::semisimplicial;
  std::vector<std::size_t> arrows;
  for (std::size_t f = 0; f < cat.morphism_count(); ++f)
    if (!cat.is_identity(f)) arrows.push_back(f);

  using String = std::vector<std::size_t>;
  std::vector<std::vector<String>> strings;
  std::vector<std::map<String, std::size_t>> index;

  strings.emplace_back();
  index.emplace_back();
  // Degree 0 strings are recorded by object index as a one-element marker.
  for (std::size_t o = 0; o < cat.object_count(); ++o) {
    index[0][{o}] = o;
    strings[0].push_back({o});
  }
  for (int n = 1;; ++n) {
    std::vector<String> next;
    if (n == 1) {
      for (std::size_t f : arrows) next.push_back({f});
    } else {
      for (const String& s : strings[n - 1])
        for (std::size_t g : arrows)
          if (cat.morphism(s.back()).dst == cat.morphism(g).src) {
            String t = s;
            t.push_back(g);
            next.push_back(std::move(t));
          }
    }
    if (next.empty()) break;
    if (n > max_degree)
      throw ResourceError("nerve has nondegenerate simplices beyond degree " + std::to_string(max_degree));
    index.emplace_back();
    for (std::size_t i = 0; i < next.size(); ++i) index[n][next[i]] = i;
    strings.push_back(std::move(next));
  }

  auto label_of = [&](int n, const String& s) {
    if (n == 0) return cat.object(s[0]);
    std::string l;
    for (std::size_t f : s) l += (l.empty() ? "" : ",") + cat.morphism(f).id;
    return l;
  };

  // Expresses a string that may contain identities as (nondegenerate target, word).
  auto resolve = [&](const String& s, std::size_t source_object) {
    String core;
    std::vector<int> word;
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (cat.is_identity(s[p])) word.push_back(static_cast<int>(p));
      else core.push_back(s[p]);
    }
    std::reverse(word.begin(), word.end());
    if (core.empty()) return FaceTarget{index[0].at({source_object}), word};
    return FaceTarget{index[core.size()].at(core), word};
  };

  std::vector<std::vector<Simplex>> simplices(strings.size());
  for (std::size_t n = 0; n < strings.size(); ++n)
    for (const String& s : strings[n]) {
      Simplex x;
      x.label = label_of(static_cast<int>(n), s);
      if (n == 1) {
        x.faces.push_back(FaceTarget{cat.morphism(s[0]).dst, {}});
        x.faces.push_back(FaceTarget{cat.morphism(s[0]).src, {}});
      } else if (n >= 2) {
        for (std::size_t i = 0; i <= n; ++i) {
          String t;
          if (i == 0) {
            t.assign(s.begin() + 1, s.end());
          } else if (i == n) {
            t.assign(s.begin(), s.end() - 1);
          } else {
            t.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) - 1);
            t.push_back(cat.compose(s[i - 1], s[i]));
            t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
          }
          x.faces.push_back(resolve(t, cat.morphism(t[0]).src));
        }
      }
      simplices[n].push_back(std::move(x));
    }
  return SimplicialObject(kind, std::move(simplices));
}

SimplicialObject free_degeneracies(const SimplicialObject& x) {
  if (x.kind() != SimplicialKind::semisimplicial)
    throw ContractError("free_degeneracies expects a semisimplicial object");
  std::vector<std::vector<Simplex>> s;
  for (int n = 0; n <= x.top_degree(); ++n) {
    s.emplace_back();
    for (std::size_t i = 0; i < x.count(n); ++i) s.back().push_back(x.simplex(n, i));
  }
  return SimplicialObject(SimplicialKind::simplicial, std::move(s));
}

std::vector<Element> all_elements(const SimplicialObject& x, int n) {
  std::vector<Element> out;
  if (n < 0) return out;
  const int lowest = x.kind() == SimplicialKind::simplicial ? 0 : n;
  for (int m = lowest; m <= std::min(n, x.top_degree()); ++m) {
    const int k = n - m;
    if (x.count(m) == 0) continue;
    // Strictly decreasing words of length k with entries in [0, n-1]; iterate subsets.
    std::vector<int> choose(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) choose[q] = q;
    while (true) {
      DegeneracyWord w(choose.rbegin(), choose.rend());
      for (std::size_t id = 0; id < x.count(m); ++id) out.push_back(Element{SimplexRef{m, id}, w});
      int q = k - 1;
      while (q >= 0 && choose[q] == n - k + q) --q;
      if (q < 0) break;
      ++choose[q];
      for (int r = q + 1; r < k; ++r) choose[r] = choose[r - 1] + 1;
    }
  }
  return out;
}

SimplicialObject edgewise_subdivide(const SimplicialObject& x) {
  const bool simplicial = x.kind() == SimplicialKind::simplicial;
  const int top = x.top_degree();
  const int sd_top = simplicial ? top : (top >= 1 ? (top - 1) / 2 : -1);

  auto sd_face = [&](const Element& e, int n, int i) { return x.face(x.face(e, n + 1 + i), n - i); };
  auto sd_degeneracy = [&](const Element& e, int n, int i) {
    return x.degeneracy(x.degeneracy(e, n + 1 + i), n - i);
  };
  // Index j with e = s_j d_j e in sd degree n, or -1.
  auto degenerate_direction = [&](const Element& e, int n) {
    if (!simplicial) return -1;
    for (int j = 0; j < n; ++j)
      if (sd_degeneracy(sd_face(e, n, j), n - 1, j) == e) return j;
    return -1;
  };

  std::vector<std::vector<Element>> cells(static_cast<std::size_t>(sd_top + 1));
  std::vector<std::map<Element, std::size_t>> index(static_cast<std::size_t>(sd_top + 1));
  for (int n = 0; n <= sd_top; ++n)
    for (Element& e : all_elements(x, 2 * n + 1))
      if (degenerate_direction(e, n) < 0) {
        index[n][e] = cells[n].size();
        cells[n].push_back(std::move(e));
      }

  std::vector<std::vector<Simplex>> simplices(cells.size());
  for (int n = 0; n <= sd_top; ++n)
    for (const Element& e : cells[n]) {
      Simplex s;
      s.label = x.label(e);
      for (int i = 0; n >= 1 && i <= n; ++i) {
        Element f = sd_face(e, n, i);
        int m = n - 1;
        std::vector<int> word;
        for (int j; (j = degenerate_direction(f, m)) >= 0; --m) {
          word.push_back(j);
          f = sd_face(f, m, j);
        }
        auto it = index[m].find(f);
        if (it == index[m].end()) throw StructuralError("edgewise subdivision: face of '" + s.label + "' not found");
        s.faces.push_back(FaceTarget{it->second, normalize_word(std::move(word))});
      }
      simplices[n].push_back(std::move(s));
    }
  return SimplicialObject(x.kind(), std::move(simplices));
}

ChainComplex normalized_chains(const SimplicialObject& x) {
  const int top = std::max(x.top_degree(), 0);
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(x.count(n));
  std::vector<SparseMatrix> boundaries;
  for (int n = 1; n <= top; ++n) {
    SparseMatrix d(ranks[n - 1], ranks[n]);
    for (std::size_t id = 0; id < ranks[n]; ++id) {
      std::map<std::uint32_t, Integer> col;
      const Simplex& s = x.simplex(n, id);
      for (std::size_t i = 0; i < s.faces.size(); ++i)
        if (s.faces[i].word.empty()) col[static_cast<std::uint32_t>(s.faces[i].id)] += (i % 2 ? -1 : 1);
      for (auto& [r, v] : col)
        if (sgn(v) != 0) d.columns[id].emplace_back(r, v);
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

// ---------------------------------------------------------------------------
// Text format

SimplicialObject parse_simplicial(std::istream& in) {
  struct Declared {
    int degree;
    std::size_t id;
    int line;
  };
  struct PendingFace {
    std::string simplex;
    int index;
    std::string target;
    DegeneracyWord word;
    int line;
  };
  std::optional<SimplicialKind> kind;
  std::vector<std::vector<Simplex>> simplices;
  std::map<std::string, Declared> declared;
  std::vector<PendingFace> faces;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto to_int = [&](const std::string& t) {
      try {
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
      } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + t + "'");
      }
    };
    if (tok[0] == "kind") {
      if (tok.size() != 2) throw ParseError(line, "expected 'kind simplicial|semisimplicial'");
      if (kind) throw ParseError(line, "duplicate kind declaration");
      if (tok[1] == "simplicial") kind = SimplicialKind::simplicial;
      else if (tok[1] == "semisimplicial") kind = SimplicialKind::semisimplicial;
      else throw ParseError(line, "unknown kind '" + tok[1] + "'");
    } else if (tok[0] == "simplex") {
      if (tok.size() != 3) throw ParseError(line, "expected 'simplex <degree> <id>'");
      const int d = to_int(tok[1]);
      if (d < 0) throw ParseError(line, "negative degree");
      if (declared.count(tok[2])) throw ParseError(line, "duplicate simplex id '" + tok[2] + "'");
      if (simplices.size() <= static_cast<std::size_t>(d)) simplices.resize(static_cast<std::size_t>(d) + 1);
      declared[tok[2]] = Declared{d, simplices[d].size(), line};
      Simplex s;
      s.label = tok[2];
      s.faces.resize(d == 0 ? 0 : static_cast<std::size_t>(d) + 1, FaceTarget{static_cast<std::size_t>(-1), {}});
      simplices[d].push_back(std::move(s));
    } else if (tok[0] == "face") {
      if (tok.size() != 4 && tok.size() != 5) throw ParseError(line, "expected 'face <id> <i> <target> [<word>]'");
      DegeneracyWord w;
      if (tok.size() == 5) {
        try {
          w = parse_word(tok[4]);
        } catch (const ContractError& e) {
          throw ParseError(line, e.what());
        }
      }
      faces.push_back(PendingFace{tok[1], to_int(tok[2]), tok[3], w, line});
    } else {
      throw ParseError(line, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!kind) throw ParseError(line, "missing 'kind' declaration");
  for (const PendingFace& f : faces) {
    auto s = declared.find(f.simplex);
    if (s == declared.end()) throw ParseError(f.line, "face of undeclared simplex '" + f.simplex + "'");
    auto t = declared.find(f.target);
    if (t == declared.end()) throw ParseError(f.line, "face target '" + f.target + "' is undeclared");
    const int n = s->second.degree;
    if (f.index < 0 || f.index > n || n == 0) throw ParseError(f.line, "face index out of range");
    const int expected = n - 1 - static_cast<int>(f.word.size());
    if (t->second.degree != expected)
      throw ParseError(f.line, "face target '" + f.target + "' has degree " + std::to_string(t->second.degree) +
                                   ", expected " + std::to_string(expected));
    FaceTarget& slot = simplices[n][s->second.id].faces[f.index];
    if (slot.id != static_cast<std::size_t>(-1)) throw ParseError(f.line, "duplicate face declaration");
    slot = FaceTarget{t->second.id, f.word};
  }
  for (const auto& [label, d] : declared)
    for (const FaceTarget& ft : simplices[d.degree][d.id].faces)
      if (ft.id == static_cast<std::size_t>(-1)) throw ParseError(d.line, "simplex '" + label + "' is missing a face");
  return SimplicialObject(*kind, std::move(simplices));
}

SimplicialObject parse_simplicial(const std::string& text) {
  std::istringstream in(text);
  return parse_simplicial(in);
}

std::string to_text(const SimplicialObject& x) {
  std::ostringstream out;
  out << "kind " << (x.kind() == SimplicialKind::simplicial ? "simplicial" : "semisimplicial") << "\n";
  for (int n = 0; n <= x.top_degree(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) out << "simplex " << n << " " << x.simplex(n, i).label << "\n";
  for (int n = 1; n <= x.top_degree(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) {
      const Simplex& s = x.simplex(n, i);
      for (std::size_t f = 0; f < s.faces.size(); ++f) {
        const int m = n - 1 - static_cast<int>(s.faces[f].word.size());
        out << "face " << s.label << " " << f << " " << x.simplex(m, s.faces[f].id).label;
        if (!s.faces[f].word.empty()) out << " " << word_to_string(s.faces[f].word);
        out << "\n";
      }
    }
  return out.str();
}

}  // namespace scissors
