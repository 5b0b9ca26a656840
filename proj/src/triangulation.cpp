#include "scissors/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "scissors/errors.hpp"
#include "scissors/homology.hpp"

namespace scissors {
namespace {

std::string tuple_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s + ")";
}

Tuple drop(const Tuple& t, std::size_t i) {
  Tuple r;
  r.reserve(t.size() - 1);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (k != i) r.push_back(t[k]);
  return r;
}

Tuple sorted(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Problems that make the face lattice meaningless.
std::vector<std::string> basic_problems(const Triangulation& t) {
  std::vector<std::string> p;
  if (t.dim < 0) p.push_back("negative dimension");
  if (t.facets.empty()) p.push_back("no facets");
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    const Tuple& s = t.facets[f];
    if (s.size() != static_cast<std::size_t>(t.dim) + 1) {
      p.push_back("facet " + std::to_string(f) + " " + tuple_string(s) + " has " + std::to_string(s.size()) +
                  " vertices, expected " + std::to_string(t.dim + 1));
      continue;
    }
    for (auto v : s)
      if (v >= t.vertices) p.push_back("facet " + std::to_string(f) + " " + tuple_string(s) + " uses vertex " +
                                       std::to_string(v) + " >= vertex count " + std::to_string(t.vertices));
    if (std::set<std::uint32_t>(s.begin(), s.end()).size() != s.size())
      p.push_back("facet " + std::to_string(f) + " " + tuple_string(s) + " repeats a vertex");
  }
  return p;
}

// ridge -> list of (facet, omitted position), sorted by ridge
using RidgeIncidence = std::vector<std::pair<Tuple, std::vector<std::pair<std::size_t, std::size_t>>>>;

RidgeIncidence ridge_incidence(const Triangulation& t) {
  RidgeIncidence inc;
  if (t.dim == 0) return inc;
  std::vector<std::pair<Tuple, std::pair<std::size_t, std::size_t>>> entries;
  entries.reserve(t.facets.size() * (static_cast<std::size_t>(t.dim) + 1));
  for (std::size_t f = 0; f < t.facets.size(); ++f)
    for (std::size_t i = 0; i < t.facets[f].size(); ++i) entries.emplace_back(drop(t.facets[f], i), std::make_pair(f, i));
  std::sort(entries.begin(), entries.end());
  for (auto& [ridge, fi] : entries) {
    if (inc.empty() || inc.back().first != ridge) inc.emplace_back(std::move(ridge), std::vector<std::pair<std::size_t, std::size_t>>{});
    inc.back().second.push_back(fi);
  }
  return inc;
}

// Orientation propagation over closed-pseudomanifold adjacency; conflict -> nullopt.
/// Ridges in one facet are skipped when allow_boundary is set.
std::optional<std::vector<int>> propagate_orientation(
    const Triangulation& t, const RidgeIncidence& inc,
    bool allow_boundary = false) {
  const std::size_t n = t.facets.size();
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>> adj(n);  // (other, i, j)
  for (const auto& [ridge, fs] : inc) {
    if (allow_boundary && fs.size() == 1) continue;
    if (fs.size() != 2) return std::nullopt;
    adj[fs[0].first].emplace_back(fs[1].first, fs[0].second, fs[1].second);
    adj[fs[1].first].emplace_back(fs[0].first, fs[1].second, fs[0].second);
  }
  std::vector<int> sign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const std::size_t s = q.front();
      q.pop();
      for (const auto& [o, i, j] : adj[s]) {
        const int want = -sign[s] * ((i + j) % 2 ? -1 : 1);
        if (sign[o] == 0) {
          sign[o] = want;
          q.push(o);
        } else if (sign[o] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

}  // namespace

FaceLattice::FaceLattice(const Triangulation& t) {
  if (auto p = basic_problems(t); !p.empty()) throw ContractError("triangulation: " + p.front());
  faces_.resize(static_cast<std::size_t>(t.dim) + 1);
  std::vector<std::vector<Tuple>> lists(faces_.size());
  const int bits = std::max(1, static_cast<int>(std::bit_width(t.vertices)));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < lists.size(); ++k) {
    const std::size_t len = k + 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask < (1u << faces_.size()); ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) == len) masks.push_back(mask);
    if (static_cast<std::size_t>(bits) * len <= 64) {
      // Pack each face into one word; lexicographic order is numeric order.
      std::vector<std::uint64_t> keys;
      keys.reserve(masks.size() * t.facets.size());
      for (const Tuple& f : t.facets)
        for (std::uint32_t mask : masks) {
          std::uint64_t key = 0;
          for (std::size_t i = 0; i < f.size(); ++i)
            if (mask & (1u << i)) key = (key << bits) | f[i];
          keys.push_back(key);
        }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      lists[k].reserve(keys.size());
      const std::uint64_t low = (std::uint64_t{1} << bits) - 1;
      for (std::uint64_t key : keys) {
        Tuple face(len);
        for (std::size_t i = len; i-- > 0; key >>= bits) face[i] = static_cast<std::uint32_t>(key & low);
        lists[k].push_back(std::move(face));
      }
    } else {
      for (const Tuple& f : t.facets)
        for (std::uint32_t mask : masks) {
          Tuple sub;
          sub.reserve(len);
          for (std::size_t i = 0; i < f.size(); ++i)
            if (mask & (1u << i)) sub.push_back(f[i]);
          lists[k].push_back(std::move(sub));
        }
      std::sort(lists[k].begin(), lists[k].end());
      lists[k].erase(std::unique(lists[k].begin(), lists[k].end()), lists[k].end());
    }
  }
  by_set_.resize(faces_.size());
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    faces_[k] = std::move(lists[k]);
    // Increasing tuples are their own vertex sets, so the index is only needed otherwise.
    if (std::all_of(faces_[k].begin(), faces_[k].end(), [](const Tuple& f) { return std::is_sorted(f.begin(), f.end()); }))
      continue;
    for (std::size_t i = 0; i < faces_[k].size(); ++i) by_set_[k].emplace_back(sorted(faces_[k][i]), i);
    std::sort(by_set_[k].begin(), by_set_[k].end());
  }
}

std::optional<std::size_t> FaceLattice::find(int k, const Tuple& face) const {
  if (k < 0 || k > dim()) return std::nullopt;
  auto it = std::lower_bound(faces_[k].begin(), faces_[k].end(), face);
  if (it == faces_[k].end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - faces_[k].begin());
}

std::vector<std::size_t> FaceLattice::find_by_vertex_set(int k, const Tuple& face) const {
  std::vector<std::size_t> out;
  if (k < 0 || k > dim()) return out;
  const Tuple key = sorted(face);
  if (by_set_[k].empty()) {
    if (auto i = find(k, key)) out.push_back(*i);
    return out;
  }
  auto it = std::lower_bound(by_set_[k].begin(), by_set_[k].end(), std::make_pair(key, std::size_t{0}));
  for (; it != by_set_[k].end() && it->first == key; ++it) out.push_back(it->second);
  return out;
}

ChainComplex FaceLattice::chains() const {
  std::vector<std::size_t> ranks;
  for (const auto& f : faces_) ranks.push_back(f.size());
  std::vector<SparseMatrix> boundaries;
  for (int k = 1; k <= dim(); ++k) {
    SparseMatrix d(ranks[k - 1], ranks[k]);
    for (std::size_t j = 0; j < faces_[k].size(); ++j) {
      SparseVector col;
      for (std::size_t i = 0; i < faces_[k][j].size(); ++i) {
        auto r = find(k - 1, drop(faces_[k][j], i));
        col.emplace_back(static_cast<std::uint32_t>(*r), i % 2 ? -1 : 1);
      }
      std::sort(col.begin(), col.end());
      d.columns[j] = std::move(col);
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

long FaceLattice::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < faces_.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(faces_[k].size());
  return chi;
}

ValidationReport validate(const Triangulation& t, bool allow_boundary) {
  ValidationReport r;
  r.problems = basic_problems(t);
  if (!r.problems.empty()) {
    r.valid = false;
    return r;
  }
  std::map<Tuple, std::size_t> seen;
  for (std::size_t f = 0; f < t.facets.size(); ++f)
    if (auto [it, ok] = seen.emplace(t.facets[f], f); !ok)
      r.problems.push_back("facets " + std::to_string(it->second) + " and " + std::to_string(f) + " repeat " +
                           tuple_string(t.facets[f]));
  std::vector<char> used(t.vertices, 0);
  for (const Tuple& f : t.facets)
    for (auto v : f) used[v] = 1;
  for (std::size_t v = 0; v < t.vertices; ++v)
    if (!used[v]) r.problems.push_back("vertex " + std::to_string(v) + " lies in no facet");

  const auto inc = ridge_incidence(t);
  bool closed = true;
  for (const auto& [ridge, fs] : inc) {
    if (fs.size() == 1) {
      closed = false;
      ++r.boundary_ridges;
      if (allow_boundary) continue;
    }
    if (fs.size() != 2) {
      closed = false;
      std::string list;
      for (const auto& [f, i] : fs) list += " " + tuple_string(t.facets[f]);
      r.problems.push_back("face " + tuple_string(ridge) + " lies in " + std::to_string(fs.size()) +
                           " facets:" + list);
    }
  }

  // Connectivity of the facet adjacency graph (through shared ridges).
  {
    std::vector<std::size_t> parent(t.facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [ridge, fs] : inc)
      for (std::size_t k = 1; k < fs.size(); ++k) parent[root(fs[k].first)] = root(fs[0].first);
    std::set<std::size_t> roots;
    for (std::size_t f = 0; f < t.facets.size(); ++f) roots.insert(root(f));
    r.connected = roots.size() == 1;
  }

  if (t.orientation) {
    const auto& o = *t.orientation;
    if (o.size() != t.facets.size()) {
      r.problems.push_back("orientation lists " + std::to_string(o.size()) + " signs for " +
                           std::to_string(t.facets.size()) + " facets");
    } else {
      for (std::size_t f = 0; f < o.size(); ++f)
        if (o[f] != 1 && o[f] != -1) r.problems.push_back("orientation sign of facet " + std::to_string(f) + " is not +-1");
      for (const auto& [ridge, fs] : inc) {
        if (fs.size() != 2) continue;
        const auto [f, i] = fs[0];
        const auto [g, j] = fs[1];
        const int sum = o[f] * (i % 2 ? -1 : 1) + o[g] * (j % 2 ? -1 : 1);
        if (sum != 0)
          r.problems.push_back("orientation does not cancel on face " + tuple_string(ridge) + " shared by facets " +
                               std::to_string(f) + " and " + std::to_string(g));
      }
    }
  }

  if (seen.size() == t.facets.size()) {
    FaceLattice lattice(t);
    r.euler_characteristic = lattice.euler_characteristic();
    auto h = homology(lattice.chains());
    r.top_homology = h.back();
    r.orientable = closed ? r.connected && r.top_homology == FgAbGroup(1)
                          : r.problems.empty() && propagate_orientation(t, inc, true).has_value();
  }
  r.valid = r.problems.empty();
  return r;
}

void require_valid(const Triangulation& t) {
  auto problems = basic_problems(t);
  if (!problems.empty()) throw ContractError("invalid triangulation: " + problems.front());
  for (const auto& [ridge, fs] : ridge_incidence(t))
    if (fs.size() != 2)
      throw ContractError("invalid triangulation: face " + tuple_string(ridge) + " lies in " +
                          std::to_string(fs.size()) + " facets");
  std::set<Tuple> seen(t.facets.begin(), t.facets.end());
  if (seen.size() != t.facets.size()) throw ContractError("invalid triangulation: repeated facet");
  if (t.orientation) {
    auto r = validate(t);
    if (!r.valid) throw ContractError("invalid triangulation: " + r.problems.front());
  }
}

std::optional<std::vector<int>> compute_orientation(const Triangulation& t) {
  if (!basic_problems(t).empty()) return std::nullopt;
  return propagate_orientation(t, ridge_incidence(t));
}

long euler_characteristic(const Triangulation& t) { return FaceLattice(t).euler_characteristic(); }

void require_permutation(const Triangulation& t, const VertexMap& perm) {
  if (perm.size() != t.vertices)
    throw ContractError("permutation has " + std::to_string(perm.size()) + " entries for " +
                        std::to_string(t.vertices) + " vertices");
  std::vector<char> hit(t.vertices, 0);
  for (auto v : perm) {
    if (v >= t.vertices || hit[v]) throw ContractError("vertex map is not a permutation");
    hit[v] = 1;
  }
}

Triangulation product(const Triangulation& a, const Triangulation& b) {
  if (!basic_problems(a).empty() || !basic_problems(b).empty()) throw ContractError("product: invalid factor");
  Triangulation p;
  p.dim = a.dim + b.dim;
  p.vertices = a.vertices * b.vertices;
  const std::size_t steps = static_cast<std::size_t>(p.dim);
  for (const Tuple& s : a.facets)
    for (const Tuple& u : b.facets) {
      // Each lattice path is a choice of which of the p+q steps advance in the first factor.
      std::vector<char> pattern(steps, 0);
      std::fill(pattern.begin() + b.dim, pattern.end(), 1);  // lexicographically smallest first
      do {
        Tuple f;
        std::size_t i = 0, j = 0;
        f.push_back(static_cast<std::uint32_t>(s[i] * b.vertices + u[j]));
        for (char step : pattern) {
          if (step) ++i;
          else ++j;
          f.push_back(static_cast<std::uint32_t>(s[i] * b.vertices + u[j]));
        }
        p.facets.push_back(std::move(f));
      } while (std::next_permutation(pattern.begin(), pattern.end()));
    }
  return p;
}

Subdivision barycentric_subdivision(const Triangulation& t) {
  FaceLattice lattice(t);
  Subdivision out;
  std::vector<std::size_t> offset(static_cast<std::size_t>(t.dim) + 2, 0);
  for (int k = 0; k <= t.dim; ++k) {
    offset[k + 1] = offset[k] + lattice.count(k);
    for (std::size_t i = 0; i < lattice.count(k); ++i) out.vertex_face.emplace_back(k, i);
  }
  Triangulation& s = out.triangulation;
  s.dim = t.dim;
  s.vertices = offset.back();
  // Flags tau_0 < ... < tau_d are obtained by deleting one vertex at a time from a facet.
  for (const Tuple& f : t.facets) {
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      // order lists positions removed from the facet, top to bottom.
      Tuple flag(f.size());
      std::vector<char> keep(f.size(), 1);
      for (std::size_t step = 0; step < f.size(); ++step) {
        Tuple face;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (keep[i]) face.push_back(f[i]);
        const int k = static_cast<int>(face.size()) - 1;
        flag[k] = static_cast<std::uint32_t>(offset[k] + *lattice.find(k, face));
        keep[order[step]] = 0;
      }
      s.facets.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

Triangulation parse_triangulation(std::istream& in) {
  Triangulation t;
  bool have_dim = false, have_vertices = false;
  std::vector<int> orient;
  std::string raw;
  int line = 0;
  auto to_long = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + s + "'");
    }
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok[0] == "dim") {
      if (tok.size() != 2 || have_dim) throw ParseError(line, "expected a single 'dim <d>'");
      t.dim = static_cast<int>(to_long(tok[1]));
      if (t.dim < 0) throw ParseError(line, "negative dimension");
      have_dim = true;
    } else if (tok[0] == "vertices") {
      if (tok.size() != 2 || have_vertices) throw ParseError(line, "expected a single 'vertices <n>'");
      const long n = to_long(tok[1]);
      if (n < 0) throw ParseError(line, "negative vertex count");
      t.vertices = static_cast<std::size_t>(n);
      have_vertices = true;
    } else if (tok[0] == "facet") {
      if (!have_dim) throw ParseError(line, "'facet' before 'dim'");
      if (tok.size() != static_cast<std::size_t>(t.dim) + 2)
        throw ParseError(line, "facet needs " + std::to_string(t.dim + 1) + " vertices");
      Tuple f;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const long v = to_long(tok[i]);
        if (v < 0) throw ParseError(line, "negative vertex index");
        f.push_back(static_cast<std::uint32_t>(v));
      }
      t.facets.push_back(std::move(f));
    } else if (tok[0] == "orient") {
      if (tok.size() != 2) throw ParseError(line, "expected 'orient <+-1>'");
      const long s = to_long(tok[1]);
      if (s != 1 && s != -1) throw ParseError(line, "orientation sign must be 1 or -1");
      orient.push_back(static_cast<int>(s));
    } else if (tok[0] == "perm") {
      if (t.perm) throw ParseError(line, "duplicate 'perm' line");
      VertexMap p;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const long v = to_long(tok[i]);
        if (v < 0) throw ParseError(line, "negative vertex index");
        p.push_back(static_cast<std::uint32_t>(v));
      }
      t.perm = std::move(p);
    } else if (tok[0] == "bordism") {
      if (tok.size() != 2 || t.bordism) throw ParseError(line, "expected a single 'bordism <label>'");
      t.bordism = tok[1];
    } else {
      throw ParseError(line, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!have_dim) throw ParseError(line, "missing 'dim'");
  if (!have_vertices) throw ParseError(line, "missing 'vertices'");
  if (!orient.empty()) {
    if (orient.size() != t.facets.size())
      throw ParseError(line, "got " + std::to_string(orient.size()) + " orientation signs for " +
                                 std::to_string(t.facets.size()) + " facets");
    t.orientation = std::move(orient);
  }
  return t;
}

Triangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  return parse_triangulation(in);
}

std::string to_text(const Triangulation& t) {
  std::ostringstream out;
  out << "dim " << t.dim << "\nvertices " << t.vertices << "\n";
  for (const Tuple& f : t.facets) {
    out << "facet";
    for (auto v : f) out << " " << v;
    out << "\n";
  }
  if (t.orientation)
    for (int s : *t.orientation) out << "orient " << s << "\n";
  if (t.perm) {
    out << "perm";
    for (auto v : *t.perm) out << " " << v;
    out << "\n";
  }
  if (t.bordism) out << "bordism " << *t.bordism << "\n";
  return out.str();
}

}  // namespace scissors
