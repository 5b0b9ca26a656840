#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "scissors/homology.hpp"
#include "scissors/simplicial.hpp"
#include "scissors/squares.hpp"
#include "scissors/triangulation.hpp"

namespace scissors::testing {

/// Standard 2-simplex: vertices a b c, edges ab ac bc, face abc.
inline std::string delta2_text(const std::string& kind) {
  return "kind " + kind +
         "\n"
         "simplex 0 a\nsimplex 0 b\nsimplex 0 c\n"
         "simplex 1 ab\nsimplex 1 ac\nsimplex 1 bc\n"
         "simplex 2 abc\n"
         "face ab 0 b\nface ab 1 a\nface ac 0 c\nface ac 1 a\nface bc 0 c\nface bc 1 b\n"
         "face abc 0 bc\nface abc 1 ac\nface abc 2 ab\n";
}

/// One vertex, one edge with both faces on the vertex.
inline std::string circle_text(const std::string& kind) {
  return "kind " + kind + "\nsimplex 0 v\nsimplex 1 e\nface e 0 v\nface e 1 v\n";
}

inline SimplicialObject point(SimplicialKind kind = SimplicialKind::simplicial) {
  return SimplicialObject(kind, {{Simplex{"p", {}}}});
}

/// Linear order 0 < 1 < .. < n-1 as a unital category.
inline FiniteCategory chain_poset(int n) {
  FiniteCategory c;
  for (int i = 0; i < n; ++i) c.add_object(std::to_string(i));
  for (int i = 0; i < n; ++i) c.add_identity(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.add_morphism(std::to_string(i) + "<" + std::to_string(j), std::to_string(i), std::to_string(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto m = [](int a, int b) { return std::to_string(a) + "<" + std::to_string(b); };
        c.set_composite(m(i, j), m(j, k), m(i, k));
      }
  return c;
}

/// Poset given by its strict relations (already transitively closed).
inline FiniteCategory poset(const std::vector<std::string>& objects, const std::vector<std::pair<std::string, std::string>>& less) {
  FiniteCategory c;
  for (const auto& o : objects) c.add_object(o);
  for (const auto& o : objects) c.add_identity(o);
  auto name = [](const std::string& a, const std::string& b) { return a + "<" + b; };
  for (const auto& [a, b] : less) c.add_morphism(name(a, b), a, b);
  for (const auto& [a, b] : less)
    for (const auto& [b2, d] : less)
      if (b == b2) c.set_composite(name(a, b), name(b, d), name(a, d));
  return c;
}

/// Ordered faces of a triangulation as a semisimplicial set (d_i deletes vertex i).
inline SimplicialObject semisimplicial_faces(const Triangulation& t) {
  const FaceLattice lattice(t);
  std::vector<std::vector<Simplex>> simplices(static_cast<std::size_t>(t.dim) + 1);
  for (int k = 0; k <= t.dim; ++k)
    for (const Tuple& f : lattice.faces(k)) {
      Simplex s;
      for (auto v : f) s.label += (s.label.empty() ? "" : ".") + std::to_string(v);
      if (k > 0)
        for (int i = 0; i <= k; ++i) {
          Tuple g = f;
          g.erase(g.begin() + i);
          s.faces.push_back(FaceTarget{*lattice.find(k - 1, g), {}});
        }
      simplices[k].push_back(std::move(s));
    }
  return SimplicialObject(SimplicialKind::semisimplicial, std::move(simplices));
}

inline std::vector<FgAbGroup> groups_of(const SimplicialObject& x) { return homology(normalized_chains(x)); }

/// Drops trailing trivial groups so objects of different top degree compare.
inline std::vector<FgAbGroup> trimmed(std::vector<FgAbGroup> g) {
  while (!g.empty() && g.back().is_trivial()) g.pop_back();
  return g;
}

/// Same category with every name prefixed and objects inserted in reverse order.
inline SquaresCategory relabeled(const SquaresCategory& c, const std::string& prefix) {
  SquaresCategory out;
  auto name = [&](const std::string& s) { return prefix + s; };
  for (std::size_t o = c.object_count(); o-- > 0;) out.add_object(name(c.object(o)), c.initial() == o);
  auto is_hid = [&](std::size_t m) { return c.hid(c.hmors()[m].src) == m; };
  auto is_vid = [&](std::size_t m) { return c.vid(c.vmors()[m].src) == m; };
  auto hname = [&](std::size_t m) { return is_hid(m) ? "id(" + name(c.object(c.hmors()[m].src)) + ")" : name(c.hmors()[m].id); };
  auto vname = [&](std::size_t m) { return is_vid(m) ? "id(" + name(c.object(c.vmors()[m].src)) + ")" : name(c.vmors()[m].id); };
  for (std::size_t m = c.hmors().size(); m-- > 0;)
    if (!is_hid(m)) out.add_hmor(hname(m), name(c.object(c.hmors()[m].src)), name(c.object(c.hmors()[m].dst)));
  for (std::size_t m = c.vmors().size(); m-- > 0;)
    if (!is_vid(m)) out.add_vmor(vname(m), name(c.object(c.vmors()[m].src)), name(c.object(c.vmors()[m].dst)));
  for (std::size_t f = 0; f < c.hmors().size(); ++f)
    for (std::size_t g = 0; g < c.hmors().size(); ++g)
      if (!is_hid(f) && !is_hid(g) && c.hmors()[f].dst == c.hmors()[g].src)
        if (auto h = c.hcompose(f, g)) out.set_hcomp(hname(f), hname(g), hname(*h));
  for (std::size_t f = 0; f < c.vmors().size(); ++f)
    for (std::size_t g = 0; g < c.vmors().size(); ++g)
      if (!is_vid(f) && !is_vid(g) && c.vmors()[f].dst == c.vmors()[g].src)
        if (auto h = c.vcompose(f, g)) out.set_vcomp(vname(f), vname(g), vname(*h));
  for (const Square& s : c.squares()) out.add_square(hname(s.top), vname(s.left), vname(s.right), hname(s.bottom));
  for (const auto& cls : c.declared_isoclasses()) {
    std::vector<std::string> names;
    for (std::size_t o : cls) names.push_back(name(c.object(o)));
    std::reverse(names.begin(), names.end());
    out.add_isoclass(names);
  }
  for (const auto& [pair, u] : c.unions()) out.add_union(name(c.object(pair.first)), name(c.object(pair.second)), name(c.object(u)));
  return out;
}

}  // namespace scissors::testing
