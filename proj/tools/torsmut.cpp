// torsmut: exact calculator for torsion classes, brick labels, and two-term
// silting mutation over finite-dimensional quiver algebras over F_p.
//
// Exit codes: 0 success, 1 verification failure, 2 input error (malformed
// input, exceeded caps, incomplete ambient where completeness is required).
// All output is deterministic for a fixed configuration; TORSMUT_THREADS is
// accepted as a parallelism hint and never affects output.

#include "torsmut/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace torsmut;

namespace {

struct Session {
    std::string family = "a2";
    std::string algebra_path;
    int p = 2;
    bool p_given = false;
    int bound = 8;

    std::shared_ptr<const QuiverAlgebra> alg;
    std::optional<TorsionCalc> calc;
    std::optional<TorsLattice> lat;

    std::shared_ptr<const QuiverAlgebra> algebra() {
        if (!alg) {
            if (!algebra_path.empty()) {
                std::ifstream in(algebra_path);
                if (!in) throw std::runtime_error("cannot open " + algebra_path);
                alg = algebra_from_json(json::parse(in));
                if (p_given && alg->p != static_cast<u32>(p))
                    throw std::runtime_error("--p conflicts with the algebra file");
            } else {
                alg = builtin_algebra(family, static_cast<u32>(p));
            }
        }
        return alg;
    }

    TorsionCalc& calculator() {
        if (!calc) calc.emplace(enumerate_indecomposables(algebra(), bound));
        return *calc;
    }

    TorsLattice& lattice() {
        if (!lat) lat = build_lattice(calculator());
        return *lat;
    }

    // Index of a torsion class in the lattice, by set equality.
    int class_index(const IndSet& t) {
        const auto& classes = lattice().classes;
        for (size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == t) return static_cast<int>(i);
        throw std::runtime_error("torsion class not in lattice");
    }
};

void validate_threads_hint() {
    const char* env = std::getenv("TORSMUT_THREADS");
    if (!env) return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::runtime_error("TORSMUT_THREADS must be a positive integer");
}

// Bare "--dot" / "--json" surface as the CLI11 flag sentinel "true": stdout.
void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty() || path == "true") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string id_set_string(const IndSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

int cmd_algebra_check(Session& s) {
    auto alg = s.algebra();
    std::cout << "p: " << alg->p << "\n";
    std::cout << "vertices: " << alg->num_vertices() << "\n";
    std::cout << "arrows: " << alg->quiver.num_arrows() << "\n";
    std::cout << "relations: " << alg->relations.size() << "\n";
    std::cout << "algebra dimension: " << alg->dim() << "\n";
    for (int v = 0; v < alg->num_vertices(); ++v) {
        Rep pv = standard_module(alg, StdKind::Projective, v);
        std::cout << "P(" << alg->quiver.vertices[v]
                  << ") dim vector: " << dim_vector_string(pv.dims) << "\n";
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_ind_list(Session& s) {
    std::cout << ind_list_to_json(s.calculator().ind()).dump(2) << "\n";
    return 0;
}

int cmd_tors_lattice(Session& s, const std::string& dot_arg, bool dot_set,
                     const std::string& json_arg, bool json_set) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    if (dot_set) write_or_print(lattice_to_dot(c, lat), dot_arg);
    if (json_set) write_or_print(lattice_to_json(lat).dump(2) + "\n", json_arg);
    if (!dot_set && !json_set) {
        std::cout << lat.classes.size() << " torsion classes, " << lat.cover_edges.size()
                  << " cover edges\n";
        for (size_t i = 0; i < lat.classes.size(); ++i)
            std::cout << "t" << i << ": " << id_set_string(lat.classes[i]) << "\n";
    }
    return 0;
}

int cmd_tors_labels(Session& s) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    for (size_t e = 0; e < lat.cover_edges.size(); ++e) {
        int brick = lat.labels[e];
        std::cout << "t" << lat.cover_edges[e].first << " -> t" << lat.cover_edges[e].second
                  << ": brick " << brick << " dims " << dim_vector_string(c.item(brick).dims)
                  << "\n";
    }
    return 0;
}

int cmd_mutations(Session& s, int from) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    if (from < 0 || from >= static_cast<int>(lat.classes.size()))
        throw std::runtime_error("class id out of range");
    TorsionPair u = pair_from_torsion_class(c, lat.classes[from]);
    std::vector<Mutation> muts = right_mutations_of(c, u);
    std::cout << "class t" << from << " " << id_set_string(lat.classes[from]) << ": "
              << muts.size() << " right mutations\n";
    for (const auto& m : muts) {
        int to = s.class_index(m.to.t_class);
        std::cout << "  semibrick " << id_set_string(m.semibrick) << " -> t" << to << " "
                  << id_set_string(m.to.t_class) << "\n";
    }
    return 0;
}

int cmd_silting_list(Session& s) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    json arr = json::array();
    for (size_t i = 0; i < lat.classes.size(); ++i) {
        json j = silting_to_json(silting_from_torsion_class(c, lat.classes[i]));
        j["class"] = static_cast<int>(i);
        arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
}

int cmd_silting_mutate(Session& s, int at, const std::string& dir_name,
                       std::optional<int> from) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    int from_id = from ? *from : static_cast<int>(lat.classes.size()) - 1;
    if (from_id < 0 || from_id >= static_cast<int>(lat.classes.size()))
        throw std::runtime_error("class id out of range");
    MutationDir dir = dir_name == "left" ? MutationDir::Left : MutationDir::Right;
    SiltingObject obj = silting_from_torsion_class(c, lat.classes[from_id]);
    SiltingObject mutated = mutate_silting(c, obj, at, dir);
    json j = silting_to_json(mutated);
    j["from"] = from_id;
    j["at"] = at;
    j["dir"] = dir_name;
    j["to"] = s.class_index(torsion_class_from_silting(c, mutated));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_theorem_c(Session& s) {
    CoverEquivalenceReport rep = verify_theorem_c(s.calculator(), s.lattice());
    std::cout << rep.pairs << " nested pairs, " << rep.covers << " covers, "
              << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_verify_triples(Session& s) {
    TorsionCalc& c = s.calculator();
    TorsLattice& lat = s.lattice();
    int nested = 0, failures = 0;
    for (size_t i = 0; i < lat.classes.size(); ++i)
        for (size_t j = 0; j < lat.classes.size(); ++j) {
            if (i == j || !set_subset(lat.classes[i], lat.classes[j])) continue;
            ++nested;
            TorsionPair u = pair_from_torsion_class(c, lat.classes[i]);
            TorsionPair t = pair_from_torsion_class(c, lat.classes[j]);
            IndSet mid = triple_from_pairs(c, u, t);
            auto [t2, u2] = pairs_from_triple(c, u.t_class, mid, t.f_class);
            bool round_trip = t2.t_class == t.t_class && t2.f_class == t.f_class &&
                              u2.t_class == u.t_class && u2.f_class == u.f_class;
            bool hom_vanishes = true;
            for (int a : u.t_class)
                for (int b : mid)
                    if (c.hom_dim_ids(a, b) != 0) hom_vanishes = false;
            for (int a : mid)
                for (int b : t.f_class)
                    if (c.hom_dim_ids(a, b) != 0) hom_vanishes = false;
            for (int a : u.t_class)
                for (int b : t.f_class)
                    if (c.hom_dim_ids(a, b) != 0) hom_vanishes = false;
            if (!round_trip || !hom_vanishes) {
                ++failures;
                std::cout << "failure: t" << i << " <= t" << j
                          << (round_trip ? "" : " round trip") << (hom_vanishes ? "" : " hom")
                          << "\n";
            }
        }
    std::cout << nested << " nested pairs: " << (failures == 0 ? "all round trips ok" : "")
              << (failures ? std::to_string(failures) + " failures" : "") << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_kronecker_demo(Session& s, int n, std::optional<int> demo_bound) {
    int bound = demo_bound ? *demo_bound : s.bound;
    auto alg = builtin_algebra("kronecker", static_cast<u32>(s.p));
    TorsionCalc c(enumerate_indecomposables(alg, bound));
    std::cout << "kronecker window: bound " << bound << ", " << c.size()
              << " indecomposables (incomplete slice)\n";

    // Preprojective chain: dim vectors (k, k+1); pre[k] realizes P^(k+1).
    std::vector<int> pre;
    for (int k = 0;; ++k) {
        int found = -1;
        for (int i = 0; i < c.size(); ++i)
            if (c.item(i).dims == std::vector<int>{k, k + 1}) found = i;
        if (found < 0) break;
        pre.push_back(found);
    }
    if (static_cast<int>(pre.size()) < n + 2)
        throw std::runtime_error("bound too small: need the first " + std::to_string(n + 2) +
                                 " preprojectives in the window");

    auto chain_pair = [&](int m) {
        TorsionPair t;
        std::vector<Rep> low;
        for (int k = 0; k < m; ++k) low.push_back(c.item(pre[k]));
        t.t_pred = [low](TorsionCalc&, const Rep& x) {
            for (const auto& f : low)
                if (!hom_basis(x, f).empty()) return false;
            return true;
        };
        t.f_pred = [low](TorsionCalc&, const Rep& x) {
            for (const auto& part : decompose(x)) {
                bool hit = false;
                for (const auto& f : low)
                    if (part.dims == f.dims && is_isomorphic(part, f)) hit = true;
                if (!hit) return false;
            }
            return true;
        };
        for (int z = 0; z < c.size(); ++z) {
            if (t.t_pred(c, c.item(z))) t.t_class.push_back(z);
            if (t.f_pred(c, c.item(z))) t.f_class.push_back(z);
        }
        return t;
    };

    TorsionPair tn = chain_pair(n);
    TorsionPair tn1 = chain_pair(n + 1);
    TorsionPair tn2 = chain_pair(n + 2);

    MutationCheck step = check_mutation(c, tn1, tn);
    bool step_ok = step.ok && step.semibrick == IndSet{pre[n]};
    std::cout << "mutation t" << (n + 1) << " -> t" << n << ": " << (step.ok ? "yes" : "no")
              << "\n";
    std::cout << "irreducible: " << (step_ok ? "yes" : "no") << "\n";
    std::cout << "semibrick: {P^(" << (n + 1) << ")}\n";

    WideCheck skip_wide = semibrick_wide_check(c, set_sorted({pre[n], pre[n + 1]}));
    MutationCheck skip = check_mutation(c, tn2, tn);
    std::cout << "pair-skip t" << (n + 2) << "->t" << n
              << " wide: " << (skip_wide.wide ? "yes" : "no") << "\n";
    std::cout << "pair-skip mutation t" << (n + 2) << " -> t" << n << ": "
              << (skip.ok ? "yes" : "no") << "\n";

    bool expected = step_ok && !skip_wide.wide && !skip.ok;
    return expected ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact torsion-class, brick-label, and two-term silting calculator over F_p"};
    app.require_subcommand(1);

    Session s;
    app.add_option("--family", s.family,
                   "builtin algebra family: a2, a3, a4, an:<n>, nakayama:<n>,<l>, kronecker")
        ->capture_default_str();
    app.add_option("--algebra", s.algebra_path, "path to an algebra JSON file");
    auto* popt = app.add_option("--p", s.p, "field modulus (prime)")->capture_default_str();
    app.add_option("--bound", s.bound, "total-dimension bound for enumeration")
        ->capture_default_str();

    // algebra check
    auto* algebra_cmd = app.add_subcommand("algebra", "algebra-level commands");
    algebra_cmd->require_subcommand(1);
    algebra_cmd->add_subcommand("check", "validate the algebra and print dimensions");

    // ind list
    auto* ind_cmd = app.add_subcommand("ind", "indecomposable-module commands");
    ind_cmd->require_subcommand(1);
    ind_cmd->add_subcommand("list", "list indecomposables as JSON with stable ids");

    // tors lattice / tors labels
    auto* tors_cmd = app.add_subcommand("tors", "torsion-class commands");
    tors_cmd->require_subcommand(1);
    auto* tors_lattice = tors_cmd->add_subcommand("lattice", "enumerate the lattice");
    std::string dot_arg, json_arg;
    auto* dot_opt =
        tors_lattice->add_option("--dot", dot_arg, "write DOT (to stdout without a path)");
    dot_opt->expected(0, 1);
    auto* json_opt =
        tors_lattice->add_option("--json", json_arg, "write JSON (to stdout without a path)");
    json_opt->expected(0, 1);
    tors_cmd->add_subcommand("labels", "print the brick label of every cover relation");

    // mutations --from
    auto* mutations_cmd = app.add_subcommand("mutations", "list right mutations of a class");
    int from_class = 0;
    mutations_cmd->add_option("--from", from_class, "lattice class id")->required();

    // silting list / silting mutate
    auto* silting_cmd = app.add_subcommand("silting", "two-term silting commands");
    silting_cmd->require_subcommand(1);
    silting_cmd->add_subcommand("list", "list the silting object of every torsion class");
    auto* silting_mutate = silting_cmd->add_subcommand("mutate", "mutate one summand");
    int at_index = 0;
    std::string dir_name;
    int mutate_from = -1;
    silting_mutate->add_option("--at", at_index, "summand index")->required();
    silting_mutate->add_option("--dir", dir_name, "mutation direction")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    auto* mutate_from_opt = silting_mutate->add_option(
        "--from", mutate_from, "lattice class id (default: the top class)");

    // verify theorem-c / verify triples
    auto* verify_cmd = app.add_subcommand("verify", "verification reports");
    verify_cmd->require_subcommand(1);
    verify_cmd->add_subcommand("theorem-c",
                               "check cover = irreducible mutation = brick = one-summand "
                               "exchange on all class pairs");
    verify_cmd->add_subcommand("triples", "filtration-triple round trip on nested pairs");

    // kronecker-demo
    auto* demo_cmd =
        app.add_subcommand("kronecker-demo", "irreducible mutation vs pair-skip on the "
                                             "Kronecker preprojective chain");
    int demo_n = 1;
    int demo_bound_val = -1;
    demo_cmd->add_option("--n", demo_n, "chain position")->capture_default_str();
    auto* demo_bound_opt =
        demo_cmd->add_option("--bound", demo_bound_val, "window bound (default: global --bound)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    s.p_given = popt->count() > 0;

    try {
        validate_threads_hint();
        if (algebra_cmd->parsed()) return cmd_algebra_check(s);
        if (ind_cmd->parsed()) return cmd_ind_list(s);
        if (tors_cmd->parsed()) {
            if (tors_lattice->parsed())
                return cmd_tors_lattice(s, dot_arg, dot_opt->count() > 0, json_arg,
                                        json_opt->count() > 0);
            return cmd_tors_labels(s);
        }
        if (mutations_cmd->parsed()) return cmd_mutations(s, from_class);
        if (silting_cmd->parsed()) {
            if (silting_mutate->parsed())
                return cmd_silting_mutate(s, at_index, dir_name,
                                          mutate_from_opt->count()
                                              ? std::optional<int>(mutate_from)
                                              : std::nullopt);
            return cmd_silting_list(s);
        }
        if (verify_cmd->parsed()) {
            if (verify_cmd->get_subcommands().front()->get_name() == "theorem-c")
                return cmd_verify_theorem_c(s);
            return cmd_verify_triples(s);
        }
        if (demo_cmd->parsed())
            return cmd_kronecker_demo(s, demo_n,
                                      demo_bound_opt->count()
                                          ? std::optional<int>(demo_bound_val)
                                          : std::nullopt);
        throw std::runtime_error("no subcommand");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
