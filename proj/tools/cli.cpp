#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "scissors/cutpaste.hpp"
#include "scissors/errors.hpp"
#include "scissors/fixtures.hpp"
#include "scissors/homology.hpp"
#include "scissors/manifold.hpp"
#include "scissors/simplicial.hpp"
#include "scissors/snf.hpp"
#include "scissors/squares.hpp"
#include "scissors/triangulation.hpp"

namespace scissors::cli {
namespace {

enum class Format { triangulation, simplicial, squares, matrix };

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ContractError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

/// Format from the first directive of the text.
Format detect(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "dim") return Format::triangulation;
    if (tok == "kind") return Format::simplicial;
    if (tok == "matrix") return Format::matrix;
    return Format::squares;
  }
  throw ParseError(1, "empty input");
}

VertexMap parse_perm(const std::string& text) {
  std::istringstream in(text);
  VertexMap p;
  for (std::string tok; in >> tok;) {
    if (!std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 9)
      throw ParseError(1, "--perm: '" + tok + "' is not a vertex index");
    p.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  return p;
}

/// Inline permutation wins over the file's perm line.
VertexMap resolve_perm(const Triangulation& t, const std::string& inline_perm, std::ostream& err) {
  if (!inline_perm.empty()) {
    VertexMap p = parse_perm(inline_perm);
    if (t.perm && *t.perm != p) err << "warning: --perm overrides the file's perm line\n";
    return p;
  }
  if (t.perm) return *t.perm;
  throw ContractError("no permutation: pass --perm or add a perm line");
}

/// Label i of the --bordism list (the last one repeats), else the file's bordism line.
std::optional<std::string> resolve_bordism(const Triangulation& t, const std::vector<std::string>& labels, std::size_t i,
                                           std::ostream& err) {
  if (labels.empty()) return t.bordism;
  const std::string& label = labels[std::min(i, labels.size() - 1)];
  if (t.bordism && *t.bordism != label) err << "warning: --bordism overrides the file's bordism line\n";
  return label;
}

void print_groups(const std::vector<FgAbGroup>& groups, std::ostream& out) {
  for (std::size_t n = 0; n < groups.size(); ++n) out << "H" << n << ": " << groups[n] << "\n";
}

std::string coordinates_text(const std::vector<Integer>& coords, const std::vector<std::string>& gens) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    const Integer mag = abs(coords[i]);
    if (s.empty()) s += sgn(coords[i]) < 0 ? "-" : "";
    else s += sgn(coords[i]) < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str();
    s += gens[i].find(' ') == std::string::npos ? gens[i] : "(" + gens[i] + ")";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology, manifold invariants and cut-and-paste groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, file_b, perm, rel = "skk", fixture_name;
  std::vector<std::string> bordism;
  std::size_t budget = 1000000;
  int nmax = 3;
  bool no_subdivide = false, list = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a triangulation, simplicial object or squares category");
  validate_cmd->add_option("file", file, "input file or -")->required();
  bool allow_boundary = false;
  validate_cmd->add_flag("--allow-boundary", allow_boundary, "accept a triangulation with boundary");
  auto* homology_cmd = app.add_subcommand("homology", "integral homology of a triangulation or simplicial object");
  homology_cmd->add_option("file", file)->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "(dim, chi, kappa, bordism) of a closed oriented triangulation");
  invariants_cmd->add_option("file", file)->required();
  invariants_cmd->add_option("--bordism", bordism, "bordism label (dimension >= 5)");
  auto* equiv_cmd = app.add_subcommand("equiv", "decide SK or SKK equivalence");
  equiv_cmd->add_option("--rel", rel)->check(CLI::IsMember({"sk", "skk"}));
  equiv_cmd->add_option("a", file)->required();
  equiv_cmd->add_option("b", file_b)->required();
  equiv_cmd->add_option("--bordism", bordism, "label for both inputs, or one per input");
  auto* k1_cmd = app.add_subcommand("k1", "SKK class of a vertex automorphism");
  k1_cmd->add_option("file", file)->required();
  k1_cmd->add_option("--perm", perm, "images of vertices 0..n-1");
  auto* torus_cmd = app.add_subcommand("torus", "mapping torus of a vertex automorphism");
  torus_cmd->add_option("file", file)->required();
  torus_cmd->add_option("--perm", perm);
  torus_cmd->add_flag("--no-subdivide", no_subdivide, "fail instead of subdividing");
  auto* subdivide_cmd = app.add_subcommand("subdivide", "edgewise subdivision of a simplicial object");
  subdivide_cmd->add_option("file", file)->required();
  auto* k0_cmd = app.add_subcommand("k0", "K0 presentation of a squares category");
  k0_cmd->add_option("file", file)->required();
  auto* grid_cmd = app.add_subcommand("grid", "grid nerve of a squares category");
  grid_cmd->add_option("file", file)->required();
  grid_cmd->add_option("--nmax", nmax)->check(CLI::Range(0, 16));
  grid_cmd->add_option("--budget", budget);
  auto* fixture_cmd = app.add_subcommand("fixture", "print a built-in triangulation");
  fixture_cmd->add_option("name", fixture_name);
  fixture_cmd->add_flag("--list", list);
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form invariant factors of a matrix");
  snf_cmd->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      const std::string text = read_input(file, in);
      switch (detect(text)) {
        case Format::triangulation: {
          const Triangulation t = parse_triangulation(text);
          const ValidationReport r = validate(t, allow_boundary);
          out << "valid: " << (r.valid ? "true" : "false") << "\n";
          for (const auto& p : r.problems) out << "problem: " << p << "\n";
          if (r.valid && allow_boundary) out << "boundary components: " << boundary_components(t).size() << "\n";
          if (r.valid) {
            out << "connected: " << (r.connected ? "true" : "false") << "\n";
            out << "orientable: " << (r.orientable ? "true" : "false") << "\n";
            out << "chi: " << r.euler_characteristic << "\n";
          }
          return r.valid ? 0 : 1;
        }
        case Format::simplicial: {
          const SimplicialObject x = parse_simplicial(text);
          out << "valid: true\ncounts:";
          for (auto c : x.counts()) out << " " << c;
          out << "\n";
          return 0;
        }
        case Format::squares: {
          const SquaresReport r = validate_squares(parse_squares(text));
          out << "valid: " << (r.valid ? "true" : "false") << "\n";
          for (const auto& v : r.violations) out << "problem: " << v << "\n";
          return r.valid ? 0 : 1;
        }
        case Format::matrix:
          throw ContractError("validate expects a triangulation, simplicial object or squares category");
      }
    }
    if (*homology_cmd) {
      const std::string text = read_input(file, in);
      const Format f = detect(text);
      if (f == Format::triangulation) {
        const Triangulation t = parse_triangulation(text);
        print_groups(homology(FaceLattice(t).chains()), out);
      } else if (f == Format::simplicial) {
        print_groups(homology(normalized_chains(parse_simplicial(text))), out);
      } else {
        throw ContractError("homology expects a triangulation or simplicial object");
      }
      return 0;
    }
    if (*invariants_cmd) {
      if (bordism.size() > 1) throw ContractError("invariants takes at most one --bordism label");
      const Triangulation t = parse_triangulation(read_input(file, in));
      out << to_report(invariant_tuple(t, resolve_bordism(t, bordism, 0, err))) << "\n";
      return 0;
    }
    if (*equiv_cmd) {
      if (bordism.size() > 2) throw ContractError("equiv takes at most two --bordism labels");
      const Triangulation a = parse_triangulation(read_input(file, in));
      const Triangulation b = parse_triangulation(read_input(file_b, in));
      const InvariantTuple ta = invariant_tuple(a, resolve_bordism(a, bordism, 0, err));
      const InvariantTuple tb = invariant_tuple(b, resolve_bordism(b, bordism, 1, err));
      const bool verdict = rel == "skk" ? skk_equivalent(ta, tb) : sk_equivalent(ta, tb);
      out << "{dim:" << ta.dim << ", chi:[" << ta.chi << "," << tb.chi << "]";
      if (ta.kappa) out << ", kappa:[" << *ta.kappa << "," << *tb.kappa << "]";
      out << ", bordism:[" << ta.bordism.to_string() << "," << tb.bordism.to_string() << "], verdict:"
          << (verdict ? "true" : "false") << "}\n";
      return 0;
    }
    if (*k1_cmd) {
      const Triangulation t = parse_triangulation(read_input(file, in));
      out << k1_class(t, resolve_perm(t, perm, err)) << "\n";
      return 0;
    }
    if (*torus_cmd) {
      const Triangulation t = parse_triangulation(read_input(file, in));
      out << to_text(mapping_torus(t, resolve_perm(t, perm, err), !no_subdivide));
      return 0;
    }
    if (*subdivide_cmd) {
      out << to_text(edgewise_subdivide(parse_simplicial(read_input(file, in))));
      return 0;
    }
    if (*k0_cmd) {
      const K0Presentation p = k0_presentation(parse_squares(read_input(file, in)));
      out << "K0: " << p.group << "\n";
      out << "generators:";
      for (const auto& g : p.generators) out << " " << g;
      out << "\n";
      for (std::size_t c = 0; c < p.class_labels.size(); ++c)
        out << p.class_labels[c] << " = " << coordinates_text(p.class_coordinates[c], p.generators) << "\n";
      return 0;
    }
    if (*grid_cmd) {
      const SimplicialObject x = grid_nerve(parse_squares(read_input(file, in)), nmax, budget);
      for (int n = 0; n <= nmax; ++n) out << "degree " << n << ": " << x.count(n) << "\n";
      out << "identities: ok\n";
      print_groups(homology(normalized_chains(x)), out);
      return 0;
    }
    if (*fixture_cmd) {
      if (list) {
        for (const auto& name : fixtures::fixture_names()) out << name << "\n";
        return 0;
      }
      if (fixture_name.empty()) throw ContractError("fixture needs a name (or --list)");
      out << to_text(fixtures::fixture(fixture_name));
      return 0;
    }
    if (*snf_cmd) {
      const IntMatrix m = parse_matrix(read_input(file, in));
      out << "rank: " << smith_normal_form(m, Transforms::none).rank << "\ninvariant factors:";
      for (const auto& d : invariant_factors(m)) out << " " << d;
      out << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "error: structural: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    err << "error: contract: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "error: resource: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace scissors::cli
