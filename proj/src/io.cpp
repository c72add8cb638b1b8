#include "cdgalab/io.hpp"

namespace cdgalab::io {

json scalar_to_json(const Scalar& s) {
    if (s.order() == 1) return s.coeffs()[0].to_string();
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_object()) {
        int order = j.at("order").get<int>();
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
        coeffs.resize(static_cast<size_t>(euler_phi(order)));
        return Scalar(order, std::move(coeffs));
    }
    throw std::invalid_argument("scalar: expected a string, integer, or {order, coeffs}");
}

json monomial_to_json(const Algebra& alg, const Monomial& m) {
    json out = json::array();
    for (const auto& [idx, exp] : m.factors) {
        const std::string& name = alg.generators()[static_cast<size_t>(idx)].name;
        if (exp == 1)
            out.push_back(name);
        else
            out.push_back(json::array({name, exp}));
    }
    return out;
}

Monomial monomial_from_json(const Algebra& alg, const json& j) {
    std::vector<int> word;
    for (const auto& f : j) {
        if (f.is_string()) {
            word.push_back(alg.generator_index(f.get<std::string>()));
        } else if (f.is_array() && f.size() == 2) {
            int idx = alg.generator_index(f[0].get<std::string>());
            int exp = f[1].get<int>();
            if (exp < 1) throw std::invalid_argument("monomial: exponent must be positive");
            for (int k = 0; k < exp; ++k) word.push_back(idx);
        } else {
            throw std::invalid_argument("monomial: factor must be a name or [name, exponent]");
        }
    }
    auto [sign, mono] = normalize(alg, word);
    if (sign != 1) throw std::invalid_argument("monomial: not in canonical form");
    return mono;
}

json element_to_json(const GcaElement& a) {
    json out = json::array();
    for (const auto& [m, c] : a.terms())
        out.push_back(json{{"coeff", scalar_to_json(c)}, {"monomial", monomial_to_json(*a.algebra(), m)}});
    return out;
}

GcaElement element_from_json(const AlgebraPtr& alg, const json& j) {
    if (j.is_string()) return parse_element_expr(alg, j.get<std::string>());
    GcaElement out(alg);
    for (const auto& term : j) {
        Scalar coeff = scalar_from_json(term.at("coeff"));
        std::vector<int> word;
        for (const auto& f : term.at("monomial")) {
            if (f.is_string()) {
                word.push_back(alg->generator_index(f.get<std::string>()));
            } else {
                int idx = alg->generator_index(f[0].get<std::string>());
                for (int k = 0; k < f[1].get<int>(); ++k) word.push_back(idx);
            }
        }
        auto [sign, mono] = normalize(*alg, word);
        if (sign == 0) continue;
        if (sign == -1) coeff = -coeff;
        out.add_term(mono, coeff);
    }
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (size_t i = 0; i < m.row_count(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.col_count(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        out.push_back(row);
    }
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected an array of rows");
    Matrix m(j.size(), j[0].size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.col_count()) throw std::invalid_argument("matrix: ragged rows");
        for (size_t k = 0; k < m.col_count(); ++k) m.at(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

CdgaPtr cdga_from_json(const json& j) {
    int field = j.value("field", 1);
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.value("degree", 1)});
    std::optional<int> cap;
    if (j.contains("cap")) cap = j.at("cap").get<int>();
    auto alg = std::make_shared<const Algebra>(std::move(gens), field, cap);

    std::vector<GcaElement> d(alg->generators().size(), GcaElement::zero(alg));
    if (j.contains("differential")) {
        for (const auto& [name, val] : j.at("differential").items())
            d[static_cast<size_t>(alg->generator_index(name))] = element_from_json(alg, val);
    }
    std::map<int, int> conj;
    if (j.contains("conjugation")) {
        for (const auto& [a, b] : j.at("conjugation").items())
            conj[alg->generator_index(a)] = alg->generator_index(b.get<std::string>());
    }
    return Cdga::create(alg, std::move(d), std::move(conj));
}

json cdga_to_json(const CdgaPtr& c) {
    const Algebra& alg = *c->algebra();
    json gens = json::array();
    for (const auto& g : alg.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    json diff = json::object();
    for (size_t i = 0; i < alg.generators().size(); ++i)
        if (!c->d_generator(static_cast<int>(i)).is_zero())
            diff[alg.generators()[i].name] = element_to_json(c->d_generator(static_cast<int>(i)));
    json out{{"field", alg.field_order()}, {"generators", gens}, {"differential", diff}};
    if (c->has_conjugation()) {
        json conj = json::object();
        for (const auto& [a, b] : c->conjugation())
            conj[alg.generators()[static_cast<size_t>(a)].name] =
                alg.generators()[static_cast<size_t>(b)].name;
        out["conjugation"] = conj;
    }
    if (alg.degree_cap()) out["cap"] = *alg.degree_cap();
    return out;
}

LieAlgebraPresentation lie_from_json(const json& j) {
    LieAlgebraPresentation lie;
    lie.dimension = j.at("dimension").get<int>();
    if (j.contains("names"))
        for (const auto& n : j.at("names")) lie.names.push_back(n.get<std::string>());
    size_t n = static_cast<size_t>(lie.dimension);
    for (size_t k = 0; k < n; ++k) lie.structure.emplace_back(n, n);
    for (const auto& b : j.at("brackets")) {
        int i = b.at("i").get<int>() - 1;
        int jj = b.at("j").get<int>() - 1;
        if (i < 0 || jj < 0 || i >= lie.dimension || jj >= lie.dimension)
            throw std::invalid_argument("lie: bracket index out of range");
        for (const auto& [k, v] : b.at("coeffs").items()) {
            int kk = std::stoi(k) - 1;
            if (kk < 0 || kk >= lie.dimension)
                throw std::invalid_argument("lie: coefficient index out of range");
            Scalar c = scalar_from_json(v);
            lie.structure[static_cast<size_t>(kk)].at(static_cast<size_t>(i), static_cast<size_t>(jj)) = c;
            lie.structure[static_cast<size_t>(kk)].at(static_cast<size_t>(jj), static_cast<size_t>(i)) = -c;
        }
    }
    lie.validate_antisymmetry();
    return lie;
}

GroupAction action_from_json(const CdgaPtr& c, const json& j) {
    int order = j.at("order").get<int>();
    const AlgebraPtr& alg = c->algebra();
    std::vector<GcaElement> images;
    for (const auto& g : alg->generators()) {
        const auto& imgs = j.at("images");
        if (!imgs.contains(g.name))
            throw std::invalid_argument("action: missing image for generator " + g.name);
        images.push_back(element_from_json(alg, imgs.at(g.name)));
    }
    return GroupAction(order, extend_morphism(c, c, std::move(images)));
}

LatticeModel lattice_from_json(const json& j) {
    LatticeModel m;
    for (const auto& c : j.at("coords")) {
        LatticeCoord coord;
        coord.exponent = c.at("exponent").get<int>();
        if (c.contains("twist") && !c.at("twist").is_null()) {
            const auto& t = c.at("twist");
            if (t.contains("by")) {
                int by = t.at("by").get<int>();
                coord.twist = {by, by};
            } else {
                coord.twist = {t.at("translate_of").get<int>(), t.at("times").get<int>()};
            }
        }
        m.coords.push_back(coord);
    }
    m.window = j.value("window", 2);
    return m;
}

}  // namespace cdgalab::io
