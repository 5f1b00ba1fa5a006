// crosscap: command line front end for the triangulation library.
//
// Exit codes, uniform across subcommands:
//   0  success (and, for predicate-style commands, the property holds)
//   1  the property fails (e.g. the complex is not a closed 3-manifold)
//   2  malformed input or I/O failure

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crosscap/gadget.hpp"
#include "crosscap/homology.hpp"
#include "crosscap/sat.hpp"
#include "crosscap/skeleton.hpp"
#include "crosscap/triangulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitBadInput = 2;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

crosscap::Triangulation load_triangulation(const std::string& path) {
    return crosscap::parse_triangulation(read_input(path));
}

int run_check_manifold(const std::string& path, bool json) {
    crosscap::Triangulation t = load_triangulation(path);
    crosscap::Skeleton sk = crosscap::compute_skeleton(t);
    crosscap::ManifoldReport r = crosscap::check_closed_3_manifold(t, sk);
    bool orientable = r.is_manifold && crosscap::is_orientable(t);

    if (json) {
        nlohmann::json out{
            {"tetrahedra", t.tet_count()},
            {"vertices", sk.vertex_count()},
            {"edges", sk.edge_count()},
            {"faces", sk.face_count()},
            {"euler_characteristic", sk.euler_characteristic(t.tet_count())},
            {"closed", r.closed},
            {"edges_valid", r.edges_valid},
            {"links_valid", r.links_valid},
            {"manifold", r.is_manifold},
        };
        if (r.is_manifold) out["orientable"] = orientable;
        if (!r.boundary_faces.empty()) out["boundary_faces"] = r.boundary_faces.size();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "tetrahedra: " << t.tet_count() << "  vertices: " << sk.vertex_count()
                  << "  edges: " << sk.edge_count() << "  faces: " << sk.face_count() << "\n";
        if (!r.closed)
            std::cout << "not closed: " << r.boundary_faces.size() << " boundary face(s)\n";
        else if (!r.edges_valid)
            std::cout << "invalid: " << r.bad_edge_classes.size()
                      << " edge(s) identified with their own reversal\n";
        else if (!r.links_valid)
            std::cout << "invalid: " << r.bad_vertex_classes.size()
                      << " vertex link(s) are not 2-spheres\n";
        else
            std::cout << "closed 3-manifold, "
                      << (orientable ? "orientable" : "non-orientable") << "\n";
    }
    return r.is_manifold ? kExitOk : kExitPropertyFails;
}

int run_homology(const std::string& path, bool json, int only_k, bool z2) {
    crosscap::Triangulation t = load_triangulation(path);
    auto groups = crosscap::homology(t);
    auto b2 = crosscap::betti_mod2(groups);
    auto keep = [only_k](size_t k) { return only_k < 0 || static_cast<size_t>(only_k) == k; };

    if (json) {
        nlohmann::json out;
        if (!z2) {
            out["groups"] = nlohmann::json::array();
            for (size_t k = 0; k < groups.size(); ++k) {
                if (!keep(k)) continue;
                nlohmann::json torsion = nlohmann::json::array();
                for (const auto& d : groups[k].torsion) torsion.push_back(d.str());
                out["groups"].push_back({{"rank", groups[k].rank},
                                         {"torsion", torsion},
                                         {"pretty", crosscap::to_string(groups[k])}});
            }
        }
        if (z2 || only_k < 0) {
            out["betti_mod2"] = nlohmann::json::array();
            for (size_t k = 0; k < b2.size(); ++k)
                if (keep(k)) out["betti_mod2"].push_back(b2[k]);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (!z2)
            for (size_t k = 0; k < groups.size(); ++k)
                if (keep(k)) std::cout << "H_" << k << " = " << crosscap::to_string(groups[k]) << "\n";
        if (z2 || only_k < 0) {
            std::cout << "mod 2 Betti numbers:";
            for (size_t k = 0; k < b2.size(); ++k)
                if (keep(k)) std::cout << " " << b2[k];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_double(const std::string& path, const std::string& out_path) {
    crosscap::Triangulation t = load_triangulation(path);
    crosscap::Triangulation d = crosscap::double_triangulation(t);
    write_output(out_path, crosscap::serialize_triangulation(d));
    return kExitOk;
}

/// "u1:0,2,1;c1:0,3,1,2" -> per-circle page orders, defaulting to identity
/// for circles the spec does not mention.
std::vector<std::vector<int>> parse_circle_orders(const crosscap::TwoComplex& k,
                                                  const std::string& spec) {
    std::vector<std::vector<int>> orders(k.circles.size());
    for (size_t c = 0; c < k.circles.size(); ++c) {
        orders[c].resize(k.circles[c].pages.size());
        std::iota(orders[c].begin(), orders[c].end(), 0);
    }
    if (spec.empty()) return orders;

    std::istringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        auto colon = group.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("bad circle order '" + group + "': expected label:i,j,...");
        std::string label = group.substr(0, colon);
        size_t c = 0;
        while (c < k.circles.size() && k.circles[c].label != label) ++c;
        if (c == k.circles.size()) throw std::runtime_error("unknown circle '" + label + "'");
        std::vector<int> order;
        std::istringstream items(group.substr(colon + 1));
        std::string item;
        while (std::getline(items, item, ',')) order.push_back(std::stoi(item));
        orders[c] = std::move(order);
    }
    return orders;
}

int run_build_gadget(const std::string& path, const std::string& order_spec,
                     const std::string& out_path) {
    crosscap::SatInstance inst = crosscap::parse_sat(read_input(path));
    crosscap::TwoComplex k = crosscap::build_two_complex(inst);
    auto orders = parse_circle_orders(k, order_spec);
    crosscap::Triangulation m =
        crosscap::double_triangulation(crosscap::thicken(k, orders).tri);
    write_output(out_path, crosscap::serialize_triangulation(m));
    return kExitOk;
}

int run_witness(const std::string& path, const std::string& assignment_spec, bool json) {
    crosscap::SatInstance inst = crosscap::parse_sat(read_input(path));

    std::vector<bool> assignment;
    if (assignment_spec == "auto") {
        auto found = crosscap::solve_one_in_three(inst);
        if (!found) {
            if (json)
                std::cout << nlohmann::json{{"satisfiable", false}}.dump(2) << "\n";
            else
                std::cout << "unsatisfiable: no one-in-three assignment exists\n";
            return kExitPropertyFails;
        }
        assignment = *found;
    } else {
        if (static_cast<int>(assignment_spec.size()) != inst.variable_count)
            throw std::runtime_error("assignment must have one bit per variable");
        for (char ch : assignment_spec) {
            if (ch != '0' && ch != '1')
                throw std::runtime_error("assignment bits must be 0 or 1");
            assignment.push_back(ch == '1');
        }
    }

    crosscap::AssignmentWitness w = crosscap::witness_surface(inst, assignment);
    std::string bits;
    for (bool b : w.assignment) bits += b ? '1' : '0';
    long long genus = 2 - w.euler_characteristic; // non-orientable Euler genus

    if (json) {
        nlohmann::json out{{"satisfiable", true},
                           {"assignment", bits},
                           {"triangles", w.surface.triangle_count()},
                           {"euler_characteristic", w.euler_characteristic},
                           {"orientable", w.orientable},
                           {"euler_genus", genus}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "assignment: " << bits << "\n"
                  << "witness surface: " << w.surface.triangle_count()
                  << " triangles, Euler characteristic " << w.euler_characteristic << ", "
                  << (w.orientable ? "orientable" : "non-orientable") << ", Euler genus "
                  << genus << "\n";
    }
    return kExitOk;
}

int run_solve_sat(const std::string& path, bool json) {
    crosscap::SatInstance inst = crosscap::parse_sat(read_input(path));
    auto found = crosscap::solve_one_in_three(inst);
    std::string bits;
    if (found)
        for (bool b : *found) bits += b ? '1' : '0';

    if (json) {
        nlohmann::json out{{"satisfiable", found.has_value()}};
        if (found) out["assignment"] = bits;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (found ? "satisfiable: " + bits : std::string("unsatisfiable")) << "\n";
    }
    return found ? kExitOk : kExitPropertyFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangulated 3-manifold toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, order_spec;
    std::string assignment_spec = "auto";
    bool json = false;
    bool z2 = false;
    int only_k = -1;

    CLI::App* check = app.add_subcommand(
        "check-manifold", "Decide whether a triangulation is a closed 3-manifold");
    check->add_option("input", in_path, "triangulation file, or - for stdin")->required();
    check->add_flag("--json", json, "machine readable output");

    CLI::App* hom = app.add_subcommand(
        "homology", "Integral homology groups and mod 2 Betti numbers");
    hom->add_option("input", in_path, "triangulation file, or - for stdin")->required();
    hom->add_option("--k", only_k, "restrict output to H_k")->check(CLI::Range(0, 3));
    hom->add_flag("--z2", z2, "mod 2 Betti numbers only");
    hom->add_flag("--json", json, "machine readable output");

    CLI::App* dbl = app.add_subcommand(
        "double", "Double a triangulation along its boundary");
    dbl->add_option("input", in_path, "triangulation file, or - for stdin")->required();
    dbl->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* build = app.add_subcommand(
        "build-gadget",
        "Compile a one-in-three SAT instance into a closed 3-manifold triangulation");
    build->add_option("input", in_path, "SAT file, or - for stdin")->required();
    build->add_option("--circle-order", order_spec,
                      "per-circle page orders, e.g. u1:0,2,1;c2:0,3,1,2");
    build->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* wit = app.add_subcommand(
        "witness", "Build the embedded witness surface for a satisfying assignment");
    wit->add_option("input", in_path, "SAT file, or - for stdin")->required();
    wit->add_option("--assignment", assignment_spec,
                    "assignment bits (variable 1 first), or 'auto' to solve");
    wit->add_flag("--json", json, "machine readable output");

    CLI::App* solve = app.add_subcommand(
        "solve-sat", "Find a one-in-three satisfying assignment by brute force");
    solve->add_option("input", in_path, "SAT file, or - for stdin")->required();
    solve->add_flag("--json", json, "machine readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (check->parsed()) return run_check_manifold(in_path, json);
        if (hom->parsed()) return run_homology(in_path, json, only_k, z2);
        if (dbl->parsed()) return run_double(in_path, out_path);
        if (build->parsed()) return run_build_gadget(in_path, order_spec, out_path);
        if (wit->parsed()) return run_witness(in_path, assignment_spec, json);
        if (solve->parsed()) return run_solve_sat(in_path, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
