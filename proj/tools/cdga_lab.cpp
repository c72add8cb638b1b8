// cdga-lab: exact CDGA computations, geometric tensor checks, and the
// floating-point isotopy verifier, with text and canonical-JSON output.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cdgalab/formality.hpp"
#include "cdgalab/geomcheck.hpp"
#include "cdgalab/homology.hpp"
#include "cdgalab/io.hpp"
#include "cdgalab/isotopy.hpp"
#include "cdgalab/massey.hpp"

namespace {

using cdgalab::io::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

/// Argument that is either a path to a JSON file or inline JSON.
json read_json_arg(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw InputError("malformed JSON in " + arg + ": " + e.what());
        }
        return j;
    }
    try {
        return json::parse(arg);
    } catch (const json::parse_error&) {
        throw InputError("not a readable file or inline JSON: " + arg);
    }
}

struct Loaded {
    cdgalab::CdgaPtr cdga;
    const cdgalab::ModelBundle* bundle = nullptr;
};

Loaded load_input(const std::string& model, const std::string& file) {
    if (model.empty() == file.empty())
        throw InputError("provide exactly one input source: --model or --file");
    Loaded l;
    if (!model.empty()) {
        try {
            l.bundle = &cdgalab::catalog(model);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        l.cdga = l.bundle->cdga;
    } else {
        l.cdga = cdgalab::io::cdga_from_json(read_json_file(file));
    }
    return l;
}

std::vector<std::string> split_classes(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
        if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
        if (s.empty()) throw InputError("empty class expression");
    }
    return out;
}

cdgalab::GcaElement parse_expr(const cdgalab::CdgaPtr& c, const std::string& expr) {
    try {
        return c->parse_element(expr);
    } catch (const std::exception& e) {
        throw InputError(std::string("cannot parse element '") + expr + "': " + e.what());
    }
}

cdgalab::TwoForm load_two_form(const Loaded& l, const std::string& omega_arg) {
    size_t n = l.cdga->algebra()->generators().size();
    if (omega_arg.empty()) {
        if (l.bundle && l.bundle->omega) return *l.bundle->omega;
        throw InputError("this model has no built-in form; pass --omega");
    }
    if (omega_arg.find('[') == 0 || std::ifstream(omega_arg).good()) {
        json j = read_json_arg(omega_arg);
        return cdgalab::TwoForm::from_matrix(cdgalab::io::matrix_from_json(j));
    }
    return cdgalab::TwoForm::from_element(parse_expr(l.cdga, omega_arg), n);
}

cdgalab::AlmostComplexStructure load_j(const Loaded& l, const std::string& j_arg) {
    if (j_arg.empty()) {
        if (l.bundle && l.bundle->J) return *l.bundle->J;
        throw InputError("this model has no built-in almost complex structure; pass --J");
    }
    json j = read_json_arg(j_arg);
    if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
    cdgalab::AlmostComplexStructure acs{cdgalab::io::matrix_from_json(j)};
    try {
        acs.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return acs;
}

cdgalab::LieAlgebraPresentation load_lie(const Loaded& l, const std::string& lie_arg) {
    if (lie_arg.empty()) {
        if (l.bundle && l.bundle->lie) return *l.bundle->lie;
        throw InputError("this model has no Lie presentation; pass --lie");
    }
    return cdgalab::io::lie_from_json(read_json_arg(lie_arg));
}

int default_seed() {
    const char* env = std::getenv("CDGA_LAB_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw InputError("CDGA_LAB_SEED must be an integer");
    }
}

bool expect_matches(const json& node, const std::string& value) {
    if (node.is_string()) return node.get<std::string>() == value;
    try {
        if (node == json::parse(value)) return true;
    } catch (const json::parse_error&) {
    }
    return node.dump() == value;
}

/// Returns 1 when some --expect key=value is violated, else 0.
int apply_expects(const json& report, const std::vector<std::string>& expects, bool json_mode,
                  const std::string& text) {
    if (json_mode)
        std::cout << report.dump() << "\n";
    else if (!text.empty())
        std::cout << text << "\n";
    for (const auto& e : expects) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw InputError("--expect needs key=value: " + e);
        std::string key = e.substr(0, eq), value = e.substr(eq + 1);
        const json* node = &report;
        std::stringstream ks(key);
        std::string part;
        while (std::getline(ks, part, '.')) {
            if (node->is_array()) {
                size_t idx = std::stoul(part);
                if (idx >= node->size()) throw InputError("--expect key out of range: " + key);
                node = &(*node)[idx];
            } else if (node->is_object() && node->contains(part)) {
                node = &node->at(part);
            } else {
                throw InputError("--expect key not found in report: " + key);
            }
        }
        if (!expect_matches(*node, value)) {
            std::cerr << "expectation violated: " << key << " = " << node->dump() << ", wanted "
                      << value << "\n";
            return 1;
        }
    }
    return 0;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

cdgalab::Cohomology make_cohomology(const Loaded& l, bool invariant) {
    if (!invariant) return cdgalab::Cohomology(cdgalab::CochainComplex::full(l.cdga));
    if (l.bundle && l.bundle->invariant)
        return cdgalab::Cohomology(cdgalab::CochainComplex::sub(*l.bundle->invariant));
    if (l.bundle && l.bundle->action)
        return cdgalab::Cohomology(
            cdgalab::CochainComplex::sub(cdgalab::invariant_subcdga(l.cdga, *l.bundle->action)));
    throw InputError("--invariant requires a model with a group action");
}

json coh_class_to_json(const cdgalab::CohClass& c) {
    json coords = json::array();
    for (const auto& s : c.coords) coords.push_back(cdgalab::io::scalar_to_json(s));
    return json{{"degree", c.degree},
                {"representative", c.representative.to_string()},
                {"coords", coords},
                {"zero", c.is_zero()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CDGA engine and geometric checks"};
    app.require_subcommand(1);

    std::string model, file, lie_arg, j_arg, omega_arg, action_arg, lattice_arg;
    std::string classes_spec, witness_spec;
    int degree = 0, n_half = 0, p_deg = 1, samples = 5;
    bool json_mode = false, invariant = false;
    std::vector<std::string> expects;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        sub->add_flag("--json", json_mode, "emit a canonical JSON report");
        sub->add_option("--expect", expects, "key=value assertions on the report");
        if (with_input) {
            sub->add_option("--model", model, "built-in model name");
            sub->add_option("--file", file, "CDGA description file");
        }
        return sub;
    };

    auto* sc_validate = add_common(app.add_subcommand("validate", "check d^2, Jacobi, action order"));
    sc_validate->add_option("--lie", lie_arg, "Lie algebra file");
    sc_validate->add_option("--action", action_arg, "group action file");

    auto* sc_betti = add_common(app.add_subcommand("betti", "Betti numbers"));
    sc_betti->add_flag("--invariant", invariant, "use the invariant subalgebra");

    auto* sc_coh = add_common(app.add_subcommand("cohomology", "basis of one degree"));
    sc_coh->add_option("--degree", degree, "cohomological degree")->required();
    sc_coh->add_flag("--invariant", invariant, "use the invariant subalgebra");

    auto* sc_cup = add_common(app.add_subcommand("cup", "cup product of two classes"));
    sc_cup->add_option("--classes", classes_spec, "two class expressions, comma separated")->required();

    auto* sc_massey = add_common(app.add_subcommand("massey", "triple or higher Massey product"));
    sc_massey->add_option("--classes", classes_spec, "class expressions, comma separated")->required();
    sc_massey->add_option("--witness", witness_spec, "pairing witness class expression");
    sc_massey->add_option("--samples", samples, "re-seeded systems for certification");
    sc_massey->add_flag("--invariant", invariant, "use the invariant subalgebra");

    auto* sc_formality = add_common(app.add_subcommand("formality", "minimality and the C+N criterion"));
    (void)sc_formality;

    auto* sc_nij = add_common(app.add_subcommand("nijenhuis", "integrability tensor"));
    sc_nij->add_option("--J", j_arg, "almost complex structure (matrix JSON)");
    sc_nij->add_option("--lie", lie_arg, "Lie algebra file");

    auto* sc_symp = add_common(app.add_subcommand("symplectic", "closedness and nondegeneracy"));
    sc_symp->add_option("--omega", omega_arg, "two-form (element expression or matrix JSON)");
    sc_symp->add_option("--n", n_half, "half dimension")->required();

    auto* sc_compat = add_common(app.add_subcommand("compat", "compatibility form g and tameness"));
    sc_compat->add_option("--omega", omega_arg, "two-form");
    sc_compat->add_option("--J", j_arg, "almost complex structure");

    auto* sc_inv = add_common(app.add_subcommand("invariant", "invariant subalgebra dimensions"));
    sc_inv->add_option("--action", action_arg, "group action file");

    auto* sc_lef = add_common(app.add_subcommand("lefschetz", "hard Lefschetz map on degree p"));
    sc_lef->add_option("--omega", omega_arg, "symplectic class expression");
    sc_lef->add_option("--p", p_deg, "source degree")->required();

    auto* sc_fixed = add_common(app.add_subcommand("fixed-points", "lattice fixed point count"));
    sc_fixed->add_option("--lattice", lattice_arg, "lattice model JSON");

    auto* sc_iso = add_common(app.add_subcommand("isotopy-verify", "equivariant isotopy battery"), false);
    sc_iso->add_option("--samples", samples, "path samples");

    CLI11_PARSE(app, argc, argv);

    try {
        json report;
        std::string text;

        if (sc_validate->parsed()) {
            Loaded l = load_input(model, file);  // d^2 = 0 checked at construction
            json checks = json::array();
            checks.push_back("d^2 = 0");
            if (!lie_arg.empty() || (l.bundle && l.bundle->lie)) {
                load_lie(l, lie_arg).validate_jacobi();
                checks.push_back("Jacobi identity");
            }
            if (!action_arg.empty()) {
                cdgalab::io::action_from_json(l.cdga, read_json_arg(action_arg));
                checks.push_back("action order");
            } else if (l.bundle && l.bundle->action) {
                checks.push_back("action order");  // validated when the catalog was built
            }
            report = json{{"valid", true}, {"checks", checks}};
            text = "valid";
        } else if (sc_betti->parsed()) {
            Loaded l = load_input(model, file);
            auto h = make_cohomology(l, invariant);
            auto b = h.betti();
            report["betti"] = b;
            for (size_t k = 0; k < b.size(); ++k) report["b" + std::to_string(k)] = b[k];
            text = join_ints(b);
        } else if (sc_coh->parsed()) {
            Loaded l = load_input(model, file);
            auto h = make_cohomology(l, invariant);
            if (degree < 0 || degree > h.complex().top_degree())
                throw InputError("degree out of range");
            json basis = json::array();
            for (const auto& c : h.basis(degree)) basis.push_back(c.representative.to_string());
            report = json{{"degree", degree}, {"dim", h.dim(degree)}, {"basis", basis}};
            text = "dim H^" + std::to_string(degree) + " = " + std::to_string(h.dim(degree));
            for (const auto& b : basis) text += "\n  [" + b.get<std::string>() + "]";
        } else if (sc_cup->parsed()) {
            Loaded l = load_input(model, file);
            auto exprs = split_classes(classes_spec);
            if (exprs.size() != 2) throw InputError("cup needs exactly two classes");
            cdgalab::Cohomology h(cdgalab::CochainComplex::full(l.cdga));
            auto a = h.class_of(parse_expr(l.cdga, exprs[0]));
            auto b = h.class_of(parse_expr(l.cdga, exprs[1]));
            auto c = h.cup(a, b);
            report = json{{"value", coh_class_to_json(c)}, {"zero", c.is_zero()}};
            text = c.is_zero() ? "0" : "[" + c.representative.to_string() + "]";
        } else if (sc_massey->parsed()) {
            Loaded l = load_input(model, file);
            auto h = make_cohomology(l, invariant);
            std::vector<cdgalab::CohClass> cls;
            for (const auto& e : split_classes(classes_spec))
                cls.push_back(h.class_of(parse_expr(l.cdga, e)));
            if (cls.size() < 3) throw InputError("massey needs at least three classes");
            int seed = default_seed();
            if (cls.size() == 3 && witness_spec.empty() && seed == 0) {
                auto r = cdgalab::triple_massey(h, cls[0], cls[1], cls[2]);
                report = json{{"defined", r.defined},
                              {"value", coh_class_to_json(r.value)},
                              {"indeterminacy_dim", r.indeterminacy.size()},
                              {"nontrivial", r.nontrivial}};
                text = "value [" + r.value.representative.to_string() + "], " +
                       (r.nontrivial ? "nontrivial" : "trivial") + " modulo indeterminacy";
            } else {
                auto r = cdgalab::higher_massey(h, cls, seed);
                report = json{{"defined", r.defined}, {"value", coh_class_to_json(r.value)}};
                text = "value [" + r.value.representative.to_string() + "]";
                if (!witness_spec.empty()) {
                    auto w = h.class_of(parse_expr(l.cdga, witness_spec));
                    auto cert = cdgalab::witness_certify(h, r, w, samples);
                    report["certified"] = cert.verdict == "certified nonzero";
                    report["verdict"] = cert.verdict;
                    report["pairing"] = coh_class_to_json(cert.pairing);
                    report["samples"] = samples;
                    text += ", " + cert.verdict;
                }
            }
        } else if (sc_formality->parsed()) {
            Loaded l = load_input(model, file);
            cdgalab::Cohomology h(cdgalab::CochainComplex::full(l.cdga));
            auto rep = cdgalab::formality_report(h);
            report = json{{"verdict", rep.verdict}, {"minimal", rep.minimality.minimal}};
            if (rep.witness) report["witness"] = rep.witness->to_string();
            text = rep.verdict;
            if (rep.witness) text += ", witness " + rep.witness->to_string();
        } else if (sc_nij->parsed()) {
            Loaded l = load_input(model, file);
            auto lie = load_lie(l, lie_arg);
            auto j = load_j(l, j_arg);
            auto rep = cdgalab::nijenhuis(lie, j);
            json table = json::object();
            for (const auto& [ij, v] : rep.table) {
                if (cdgalab::is_zero_vec(v)) continue;
                json row = json::array();
                for (const auto& s : v) row.push_back(cdgalab::io::scalar_to_json(s));
                table["N(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ")"] = row;
            }
            report = json{{"integrable", rep.integrable}, {"nonzero", table}};
            text = rep.integrable ? "integrable (N_J = 0)" : "not integrable";
        } else if (sc_symp->parsed()) {
            Loaded l = load_input(model, file);
            auto omega = load_two_form(l, omega_arg);
            auto rep = cdgalab::symplectic_check(l.cdga, omega, n_half);
            report = json{{"closed", rep.closed}, {"nondegenerate", rep.nondegenerate}};
            text = std::string(rep.closed ? "closed" : "not closed") + ", " +
                   (rep.nondegenerate ? "nondegenerate" : "degenerate");
        } else if (sc_compat->parsed()) {
            Loaded l = load_input(model, file);
            auto omega = load_two_form(l, omega_arg);
            auto j = load_j(l, j_arg);
            auto rep = cdgalab::compatibility_form(omega, j);
            auto tame = cdgalab::tame_check(omega, j);
            json witness = json::array();
            for (const auto& s : tame.witness) witness.push_back(cdgalab::io::scalar_to_json(s));
            report = json{{"g", cdgalab::io::matrix_to_json(rep.g)},
                          {"symmetric", rep.symmetric},
                          {"positive_definite", rep.positive_definite},
                          {"riemannian", rep.riemannian},
                          {"tame", tame.tame},
                          {"tame_witness", witness}};
            text = std::string(rep.riemannian ? "compatible (Riemannian)" : "not a metric pair") +
                   ", " + (tame.tame ? "tame" : "not tame");
        } else if (sc_inv->parsed()) {
            Loaded l = load_input(model, file);
            cdgalab::SubCdga sub;
            if (!action_arg.empty()) {
                auto act = cdgalab::io::action_from_json(l.cdga, read_json_arg(action_arg));
                sub = cdgalab::invariant_subcdga(l.cdga, act);
            } else if (l.bundle && l.bundle->invariant) {
                sub = *l.bundle->invariant;
            } else if (l.bundle && l.bundle->action) {
                sub = cdgalab::invariant_subcdga(l.cdga, *l.bundle->action);
            } else {
                throw InputError("invariant needs --action or a model with one");
            }
            json dims = json::array();
            std::vector<int> dim_list;
            for (int k = 0; k <= l.cdga->algebra()->top_degree(); ++k) {
                dims.push_back(sub.dim(k));
                dim_list.push_back(sub.dim(k));
            }
            report = json{{"dims", dims}};
            for (size_t k = 0; k < dim_list.size(); ++k)
                report["dim" + std::to_string(k)] = dim_list[k];
            text = join_ints(dim_list);
        } else if (sc_lef->parsed()) {
            Loaded l = load_input(model, file);
            cdgalab::Cohomology h(cdgalab::CochainComplex::full(l.cdga));
            cdgalab::CohClass om;
            if (!omega_arg.empty()) {
                om = h.class_of(parse_expr(l.cdga, omega_arg));
            } else if (l.bundle && l.bundle->omega_element) {
                om = h.class_of(*l.bundle->omega_element);
            } else {
                throw InputError("lefschetz needs --omega or a model with a built-in form");
            }
            int top = h.complex().top_degree();
            if (top % 2 != 0) throw InputError("lefschetz needs an even top degree");
            auto rep = cdgalab::lefschetz(h, om, p_deg, top / 2);
            report = json{{"rank", rep.rank},
                          {"isomorphism", rep.isomorphism},
                          {"matrix", cdgalab::io::matrix_to_json(rep.matrix)}};
            text = "rank " + std::to_string(rep.rank) +
                   (rep.isomorphism ? ", isomorphism" : ", not an isomorphism");
        } else if (sc_fixed->parsed()) {
            cdgalab::LatticeModel lat;
            if (!lattice_arg.empty()) {
                lat = cdgalab::io::lattice_from_json(read_json_arg(lattice_arg));
            } else if (!model.empty()) {
                const auto& bundle = cdgalab::catalog(model);
                if (!bundle.lattice) throw InputError("model has no lattice data: " + model);
                lat = *bundle.lattice;
            } else {
                throw InputError("fixed-points needs --lattice or --model");
            }
            long long count = cdgalab::count_fixed_points(lat);
            if (count == cdgalab::kEntireSpaceFixed) {
                report = json{{"count", nullptr}, {"entire_space_fixed", true}};
                text = "entire space fixed";
            } else {
                report = json{{"count", count}, {"entire_space_fixed", false}};
                text = std::to_string(count);
            }
        } else if (sc_iso->parsed()) {
            auto rep = cdgalab::iso::run_verification(samples == 5 ? 1000 : samples);
            report = json{{"so_membership", rep.so_membership},
                          {"equivariance_max", rep.equivariance_max},
                          {"endpoint_errors", {rep.endpoint_error_start, rep.endpoint_error_end}},
                          {"junction_derivatives", rep.junction_derivatives},
                          {"shell_continuity", rep.shell_continuity},
                          {"pass", rep.pass}};
            if (!rep.detail.empty()) report["detail"] = rep.detail;
            text = rep.pass ? "all checks pass" : "FAILED: " + rep.detail;
        }

        return apply_expects(report, expects, json_mode, text);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
