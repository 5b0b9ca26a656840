#include "scissors/manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "scissors/errors.hpp"

namespace scissors {
namespace {

std::string tuple_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s + ")";
}

Tuple image_of(const VertexMap& phi, const Tuple& t) {
  Tuple r;
  r.reserve(t.size());
  for (auto v : t) r.push_back(phi[v]);
  return r;
}

// Sign of the permutation p with image[i] = face[p(i)].
int reorder_sign(const Tuple& image, const Tuple& face) {
  std::vector<std::size_t> p(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    p[i] = static_cast<std::size_t>(std::find(face.begin(), face.end(), image[i]) - face.begin());
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

Manifold::Manifold(Triangulation t) : t_(std::move(t)) {
  require_valid(t_);
  faces_ = std::make_shared<const FaceLattice>(t_);
  basis_ = std::make_shared<const HomologyBasis>(faces_->chains());
  orientation_ = t_.orientation ? t_.orientation : compute_orientation(t_);
}

std::vector<std::size_t> Manifold::betti() const {
  std::vector<std::size_t> b;
  for (const auto& g : groups()) b.push_back(g.free_rank);
  return b;
}

std::pair<std::size_t, int> map_face(const FaceLattice& lattice, int k, const Tuple& face, const VertexMap& phi) {
  const Tuple image = image_of(phi, face);
  if (auto exact = lattice.find(k, image)) return {*exact, 1};
  auto candidates = lattice.find_by_vertex_set(k, image);
  if (candidates.empty())
    throw ContractError("vertex map is not facet-preserving: face " + tuple_string(face) + " goes to " +
                        tuple_string(image) + ", which is not a face");
  if (candidates.size() > 1)
    throw ContractError("vertex map is ambiguous on face " + tuple_string(face) + ": several faces span " +
                        tuple_string(image));
  return {candidates[0], reorder_sign(image, lattice.faces(k)[candidates[0]])};
}

ChainMap automorphism_chain_map(const Manifold& m, const VertexMap& phi) {
  require_permutation(m.triangulation(), phi);
  const FaceLattice& lattice = m.faces();
  ChainMap f;
  for (int k = 0; k <= lattice.dim(); ++k) {
    const std::size_t n = lattice.count(k);
    SparseMatrix c(n, n);
    std::string error;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      try {
        auto [i, s] = map_face(lattice, k, lattice.faces(k)[j], phi);
        c.columns[j].emplace_back(static_cast<std::uint32_t>(i), s);
      } catch (const ContractError& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) throw ContractError(error);
    f.components.push_back(std::move(c));
  }
  return f;
}

HomologyMap automorphism_action(const Manifold& m, const VertexMap& phi) {
  return induced_map(m.homology(), m.homology(), automorphism_chain_map(m, phi));
}

HomologyMap automorphism_action(const Triangulation& t, const VertexMap& phi) {
  return automorphism_action(Manifold(t), phi);
}

int orientation_character(const Manifold& m, const VertexMap& phi) {
  if (m.groups().back() != FgAbGroup(1)) throw ContractError("orientation character needs H_d = Z");
  const Integer d = free_determinant(automorphism_action(m, phi), m.dim());
  return sgn(d);
}

int kervaire_semicharacteristic(const Manifold& m) {
  if (m.dim() % 2 == 0) throw ContractError("kappa defined for odd dimensions only");
  std::size_t sum = 0;
  for (int i = 0; 2 * i <= m.dim() - 1; ++i) sum += m.groups()[2 * i].free_rank;
  return static_cast<int>(sum % 2);
}

int kervaire_semicharacteristic(const Triangulation& t) {
  if (t.dim % 2 == 0) throw ContractError("kappa defined for odd dimensions only");
  return kervaire_semicharacteristic(Manifold(t));
}

int k1_class(const Manifold& m, const VertexMap& phi) {
  const HomologyMap h = automorphism_action(m, phi);
  int product = 1;
  for (int i = 0; i <= m.dim(); ++i) {
    const Integer d = free_determinant(h, i);
    if (d != 1 && d != -1)
      throw ContractError("map is not an automorphism on H_" + std::to_string(i) + "/tors (det " + d.get_str() + ")");
    product *= sgn(d);
  }
  return product;
}

int k1_class(const Triangulation& t, const VertexMap& phi) { return k1_class(Manifold(t), phi); }

bool check_duality_identity(const Manifold& m, const VertexMap& phi, int i) {
  if (!m.orientable() || m.groups().back() != FgAbGroup(1))
    throw ContractError("duality identity needs a closed orientable manifold");
  if (i < 0 || i > m.dim()) throw ContractError("degree " + std::to_string(i) + " out of range");
  const HomologyMap h = automorphism_action(m, phi);
  const Integer lhs = free_determinant(h, i) * free_determinant(h, m.dim() - i);
  Integer rhs;
  mpz_pow_ui(rhs.get_mpz_t(), free_determinant(h, m.dim()).get_mpz_t(), m.groups()[i].free_rank);
  return lhs == rhs;
}

bool check_duality_identity(const Triangulation& t, const VertexMap& phi, int i) {
  return check_duality_identity(Manifold(t), phi, i);
}

bool is_automorphism(const Manifold& m, const VertexMap& phi) {
  try {
    check_chain_map(m.faces().chains(), m.faces().chains(), automorphism_chain_map(m, phi));
    return true;
  } catch (const ContractError&) {
    return false;
  }
}

std::vector<VertexMap> find_automorphisms(const Triangulation& t, std::size_t limit) {
  require_valid(t);
  const std::size_t n = t.vertices;
  std::set<Tuple> facet_sets;
  for (Tuple f : t.facets) {
    std::sort(f.begin(), f.end());
    facet_sets.insert(f);
  }
  // Vertex order: breadth first through facets so constraints bite early.
  std::vector<std::uint32_t> order;
  std::vector<char> placed(n, 0);
  for (const Tuple& f : t.facets)
    for (auto v : f)
      if (!placed[v]) {
        placed[v] = 1;
        order.push_back(v);
      }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<std::vector<std::size_t>> completes(order.size());
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    std::size_t last = 0;
    for (auto v : t.facets[f]) last = std::max(last, position[v]);
    completes[last].push_back(f);
  }

  std::vector<VertexMap> found;
  VertexMap phi(n, 0);
  std::vector<char> used(n, 0);
  Manifold m(t);
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (found.size() >= limit) return;
    if (depth == order.size()) {
      if (is_automorphism(m, phi)) found.push_back(phi);
      return;
    }
    const std::uint32_t v = order[depth];
    // Try the identity image first so the identity map is found first.
    std::vector<std::uint32_t> candidates;
    if (!used[v]) candidates.push_back(v);
    for (std::uint32_t w = 0; w < n; ++w)
      if (!used[w] && w != v) candidates.push_back(w);
    for (std::uint32_t w : candidates) {
      phi[v] = w;
      used[w] = 1;
      bool ok = true;
      for (std::size_t f : completes[depth]) {
        Tuple img = image_of(phi, t.facets[f]);
        std::sort(img.begin(), img.end());
        if (!facet_sets.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
      used[w] = 0;
      if (found.size() >= limit) return;
    }
  };
  recurse(recurse, 0);
  return found;
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
  if (g.size() != f.size()) throw ContractError("compose: permutation sizes differ");
  VertexMap h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = g[f[v]];
  return h;
}

VertexMap inverse(const VertexMap& f) {
  VertexMap h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[f[v]] = static_cast<std::uint32_t>(v);
  return h;
}

VertexMap identity_permutation(std::size_t n) {
  VertexMap p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Triangulation mapping_torus(const Triangulation& t, const VertexMap& phi, bool allow_subdivision) {
  require_valid(t);
  require_permutation(t, phi);
  std::set<Tuple> facets(t.facets.begin(), t.facets.end());
  bool exact = true;
  for (const Tuple& f : t.facets)
    if (!facets.count(image_of(phi, f))) {
      exact = false;
      break;
    }
  if (!exact) {
    if (!allow_subdivision)
      throw ContractError("mapping torus: the vertex map does not carry facet tuples onto facet tuples "
                          "and subdivision is disabled");
    Subdivision sd = barycentric_subdivision(t);
    FaceLattice lattice(t);
    std::vector<std::size_t> offset(static_cast<std::size_t>(t.dim) + 2, 0);
    for (int k = 0; k <= t.dim; ++k) offset[k + 1] = offset[k] + lattice.count(k);
    VertexMap moved(sd.triangulation.vertices);
    for (std::size_t v = 0; v < moved.size(); ++v) {
      const auto [k, i] = sd.vertex_face[v];
      moved[v] = static_cast<std::uint32_t>(offset[k] + map_face(lattice, k, lattice.faces(k)[i], phi).first);
    }
    return mapping_torus(sd.triangulation, moved, false);
  }

  const std::size_t n = t.vertices;
  Triangulation out;
  out.dim = t.dim + 1;
  out.vertices = 3 * n;
  auto vertex = [&](std::uint32_t v, int layer) {
    return layer == 3 ? phi[v] : static_cast<std::uint32_t>(layer * n + v);
  };
  for (int layer = 0; layer < 3; ++layer)
    for (const Tuple& f : t.facets)
      for (std::size_t k = 0; k < f.size(); ++k) {
        Tuple s;
        for (std::size_t i = 0; i <= k; ++i) s.push_back(vertex(f[i], layer));
        for (std::size_t i = k; i < f.size(); ++i) s.push_back(vertex(f[i], layer + 1));
        out.facets.push_back(std::move(s));
      }
  return out;
}

std::vector<std::vector<Tuple>> boundary_components(const Triangulation& t) {
  std::map<Tuple, int> count;
  for (const Tuple& f : t.facets)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Tuple r;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != i) r.push_back(f[k]);
      ++count[r];
    }
  std::vector<Tuple> ridges;
  for (const auto& [r, c] : count) {
    if (c > 2) throw ContractError("face " + tuple_string(r) + " lies in more than two facets");
    if (c == 1) ridges.push_back(r);
  }
  // Union ridges that share a vertex.
  std::vector<std::size_t> parent(ridges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::uint32_t, std::size_t> owner;
  for (std::size_t r = 0; r < ridges.size(); ++r)
    for (auto v : ridges[r]) {
      auto [it, fresh] = owner.emplace(v, r);
      if (!fresh) parent[root(r)] = root(it->second);
    }
  std::map<std::size_t, std::vector<Tuple>> groups;
  for (std::size_t r = 0; r < ridges.size(); ++r) groups[root(r)].push_back(ridges[r]);
  std::vector<std::vector<Tuple>> out;
  for (auto& [root_id, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_sk_embedding(const SubcomplexInclusion& inc) {
  const Triangulation& host = inc.host;
  Triangulation sub;
  sub.dim = host.dim;
  sub.vertices = host.vertices;
  std::set<std::size_t> chosen;
  for (std::size_t f : inc.selected) {
    if (f >= host.facets.size()) throw ContractError("selected facet " + std::to_string(f) + " out of range");
    if (!chosen.insert(f).second) throw ContractError("selected facet " + std::to_string(f) + " listed twice");
    sub.facets.push_back(host.facets[f]);
  }
  const auto host_components = boundary_components(host);
  std::set<std::vector<Tuple>> host_set(host_components.begin(), host_components.end());
  std::set<std::uint32_t> host_boundary_vertices;
  for (const auto& c : host_components)
    for (const Tuple& r : c) host_boundary_vertices.insert(r.begin(), r.end());

  for (const auto& component : boundary_components(sub)) {
    if (host_set.count(component)) continue;
    bool touches = false;
    for (const Tuple& r : component)
      for (auto v : r)
        if (host_boundary_vertices.count(v)) touches = true;
    if (touches) return false;
  }
  return true;
}

}  // namespace scissors
