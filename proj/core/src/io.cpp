#include "deforma/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "deforma/errors.hpp"

namespace deforma::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("not valid JSON");
    return j;
}

void check_version(const json& j) {
    if (!j.is_object()) throw SchemaError("top level must be an object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<long>() != 1)
        throw SchemaError("unknown or missing schema_version");
}

Rational rational_of(const json& j) {
    std::string s;
    if (j.is_string())
        s = j.get<std::string>();
    else if (j.is_number_integer())
        s = std::to_string(j.get<long>());
    else
        throw SchemaError("rational entries must be strings or integers");
    auto r = Rational::parse(s);
    if (!r) throw SchemaError("malformed rational '" + s + "'");
    return *r;
}

std::size_t size_of(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long>() < 0)
        throw SchemaError(std::string(what) + " must be a non-negative integer");
    return static_cast<std::size_t>(j.get<long>());
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Vec vec_of(const json& j, std::size_t expect, const char* what) {
    if (!j.is_array() || j.size() != expect)
        throw SchemaError(std::string(what) + ": wrong vector length");
    Vec v;
    v.reserve(expect);
    for (const auto& e : j) v.push_back(rational_of(e));
    return v;
}

json cochain_to_json(const Cochain& c) {
    json out;
    out["arity"] = c.arity();
    json values = json::array();
    if (c.arity() == 2) {
        for (std::size_t i = 0; i < c.dim(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < c.dim(); ++j)
                row.push_back(vec_to_json(c.on_basis({i, j})));
            values.push_back(row);
        }
    } else if (c.arity() == 1) {
        for (std::size_t i = 0; i < c.dim(); ++i)
            values.push_back(vec_to_json(c.on_basis({i})));
    } else {
        throw SchemaError("cochain files carry arity 1 or 2 only");
    }
    out["values"] = values;
    return out;
}

Cochain cochain_of(const json& j, std::size_t dim) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("values"))
        throw SchemaError("cochain object needs arity and values");
    std::size_t arity = size_of(j["arity"], "arity");
    const json& values = j["values"];
    Cochain c(arity, dim);
    if (arity == 2) {
        if (!values.is_array() || values.size() != dim)
            throw SchemaError("cochain values must be a d x d x d array");
        for (std::size_t i = 0; i < dim; ++i) {
            if (!values[i].is_array() || values[i].size() != dim)
                throw SchemaError("cochain values must be a d x d x d array");
            for (std::size_t jj = 0; jj < dim; ++jj)
                c.set_on_basis({i, jj}, vec_of(values[i][jj], dim, "cochain value"));
        }
    } else if (arity == 1) {
        if (!values.is_array() || values.size() != dim)
            throw SchemaError("cochain values must be a d x d array");
        for (std::size_t i = 0; i < dim; ++i)
            c.set_on_basis({i}, vec_of(values[i], dim, "cochain value"));
    } else {
        throw SchemaError("cochain files carry arity 1 or 2 only");
    }
    return c;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileNotFound("cannot write '" + path + "'");
    out << text;
}

AlgebraStructure parse_algebra(const std::string& text) {
    json j = parse_json(text);
    return [&j]() {
        check_version(j);
        if (!j.contains("dimension") || !j.contains("table"))
            throw SchemaError("algebra file needs dimension and table");
        std::size_t d = size_of(j["dimension"], "dimension");
        std::vector<std::string> labels;
        if (j.contains("basis")) {
            if (!j["basis"].is_array() || j["basis"].size() != d)
                throw SchemaError("basis labels must match the dimension");
            for (const auto& e : j["basis"]) {
                if (!e.is_string()) throw SchemaError("basis labels must be strings");
                labels.push_back(e.get<std::string>());
            }
        }
        AlgebraStructure a(d, labels);
        const json& table = j["table"];
        if (!table.is_array() || table.size() != d)
            throw SchemaError("table must be a d x d array of coordinate vectors");
        for (std::size_t i = 0; i < d; ++i) {
            if (!table[i].is_array() || table[i].size() != d)
                throw SchemaError("table must be a d x d array of coordinate vectors");
            for (std::size_t jj = 0; jj < d; ++jj) {
                Vec v = vec_of(table[i][jj], d, "table entry");
                for (std::size_t l = 0; l < d; ++l) a.gamma(i, jj, l) = v[l];
            }
        }
        return a;
    }();
}

std::string write_algebra(const AlgebraStructure& a) {
    json j;
    j["schema_version"] = 1;
    j["dimension"] = a.dim();
    j["basis"] = a.labels();
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < a.dim(); ++jj)
            row.push_back(vec_to_json(a.mult_basis(i, jj)));
        table.push_back(row);
    }
    j["table"] = table;
    return j.dump() + "\n";
}

AlgebraStructure read_algebra(const std::string& path) {
    return parse_algebra(read_file(path));
}

TruncatedDeformation parse_deformation(const std::string& text,
                                       const std::string& base_dir) {
    json j = parse_json(text);
    check_version(j);
    if (!j.contains("algebra") || !j.contains("order") || !j.contains("terms"))
        throw SchemaError("deformation file needs algebra, order and terms");
    TruncatedDeformation d;
    if (j["algebra"].is_string()) {
        std::filesystem::path p(j["algebra"].get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        d.base = read_algebra(p.string());
    } else {
        d.base = parse_algebra(j["algebra"].dump());
    }
    std::size_t order = size_of(j["order"], "order");
    if (!j["terms"].is_array() || j["terms"].size() != order)
        throw SchemaError("terms length must equal order");
    for (const auto& t : j["terms"]) {
        Cochain c = cochain_of(t, d.base.dim());
        if (c.arity() != 2) throw SchemaError("deformation terms must have arity 2");
        d.terms.push_back(std::move(c));
    }
    return d;
}

std::string write_deformation(const TruncatedDeformation& d) {
    json j;
    j["schema_version"] = 1;
    j["algebra"] = parse_json(write_algebra(d.base));
    j["order"] = d.order();
    json terms = json::array();
    for (const auto& t : d.terms) terms.push_back(cochain_to_json(t));
    j["terms"] = terms;
    return j.dump() + "\n";
}

TruncatedDeformation read_deformation(const std::string& path) {
    return parse_deformation(read_file(path),
                             std::filesystem::path(path).parent_path().string());
}

GaugeElement parse_gauge(const std::string& text) {
    json j = parse_json(text);
    check_version(j);
    if (!j.contains("dimension") || !j.contains("order") || !j.contains("terms"))
        throw SchemaError("gauge file needs dimension, order and terms");
    GaugeElement x;
    x.dim = size_of(j["dimension"], "dimension");
    std::size_t order = size_of(j["order"], "order");
    if (!j["terms"].is_array() || j["terms"].size() != order)
        throw SchemaError("terms length must equal order");
    for (const auto& t : j["terms"]) {
        Cochain c = cochain_of(t, x.dim);
        if (c.arity() != 1) throw SchemaError("gauge terms must have arity 1");
        x.terms.push_back(std::move(c));
    }
    return x;
}

std::string write_gauge(const GaugeElement& x) {
    json j;
    j["schema_version"] = 1;
    j["dimension"] = x.dim;
    j["order"] = x.order();
    json terms = json::array();
    for (const auto& t : x.terms) terms.push_back(cochain_to_json(t));
    j["terms"] = terms;
    return j.dump() + "\n";
}

GaugeElement read_gauge(const std::string& path) { return parse_gauge(read_file(path)); }

namespace {

GradedSpace space_of(const json& j) {
    if (!j.is_object()) throw SchemaError("degrees must map degree to dimension");
    std::map<int, std::size_t> dims;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int deg;
        try {
            deg = std::stoi(it.key());
        } catch (...) {
            throw SchemaError("degree keys must be integers");
        }
        dims[deg] = size_of(it.value(), "component dimension");
    }
    return GradedSpace(dims);
}

std::map<std::size_t, GradedMultilinearMap>
ops_of(const json& j, const GradedSpace& domain, const GradedSpace& codomain, bool linf,
       int degree_shift) {
    std::map<std::size_t, GradedMultilinearMap> ops;
    if (!j.is_object()) throw SchemaError("ops must map arity to entry lists");
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t k;
        try {
            k = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (...) {
            throw SchemaError("op arities must be positive integers");
        }
        if (k < 1) throw SchemaError("op arities must be positive integers");
        int degree = linf ? 2 - static_cast<int>(k) : static_cast<int>(k) - 2;
        degree += degree_shift;
        GradedMultilinearMap op(k, degree, domain, codomain);
        if (!it.value().is_array()) throw SchemaError("op entries must be an array");
        for (const auto& entry : it.value()) {
            if (!entry.is_object() || !entry.contains("inputs") || !entry.contains("output"))
                throw SchemaError("op entry needs inputs and output");
            const json& inputs = entry["inputs"];
            if (!inputs.is_array() || inputs.size() != k)
                throw SchemaError("op entry inputs must list arity many pairs");
            std::vector<BasisRef> tuple;
            for (const auto& p : inputs) {
                if (!p.is_array() || p.size() != 2)
                    throw SchemaError("op inputs are [degree, index] pairs");
                int deg = static_cast<int>(p[0].get<long>());
                std::size_t idx = size_of(p[1], "basis index");
                if (idx >= domain.dim(deg))
                    throw SchemaError("op input index outside the component");
                tuple.push_back(BasisRef{deg, idx});
            }
            int out_deg = op.output_degree(tuple);
            GradedElement val = op.on_basis(tuple);
            for (const auto& o : entry["output"]) {
                if (!o.is_array() || o.size() != 3)
                    throw SchemaError("op outputs are [degree, index, coeff] triples");
                int deg = static_cast<int>(o[0].get<long>());
                std::size_t idx = size_of(o[1], "basis index");
                if (deg != out_deg)
                    throw SchemaError("op output degree must equal the forced degree");
                if (idx >= codomain.dim(deg))
                    throw SchemaError("op output index outside the component");
                val.coords.at(idx) += rational_of(o[2]);
            }
            op.set(tuple, val.coords);
        }
        if (!op.is_zero()) ops.emplace(k, std::move(op));
    }
    return ops;
}

json ops_to_json(const std::map<std::size_t, GradedMultilinearMap>& ops) {
    json out = json::object();
    for (const auto& [k, op] : ops) {
        json entries = json::array();
        for (const auto& [tuple, value] : op.entries()) {
            json e;
            json inputs = json::array();
            for (const auto& r : tuple) inputs.push_back({r.degree, r.index});
            e["inputs"] = inputs;
            json output = json::array();
            int out_deg = op.output_degree(tuple);
            for (std::size_t i = 0; i < value.size(); ++i)
                if (!value[i].is_zero()) output.push_back({out_deg, i, value[i].str()});
            e["output"] = output;
            entries.push_back(e);
        }
        out[std::to_string(k)] = entries;
    }
    return out;
}

} // namespace

LInfinityStructure ParsedStructure::as_l_infinity() const {
    if (kind != "linf") throw SchemaError("structure file is not of kind linf");
    return LInfinityStructure::load(space, ops);
}

AInfinityStructure ParsedStructure::as_a_infinity() const {
    if (kind != "ainf") throw SchemaError("structure file is not of kind ainf");
    return AInfinityStructure::load(space, ops);
}

ParsedStructure parse_structure(const std::string& text) {
    json j = parse_json(text);
    check_version(j);
    if (!j.contains("kind") || !j.contains("degrees") || !j.contains("ops"))
        throw SchemaError("structure file needs kind, degrees and ops");
    ParsedStructure s;
    if (!j["kind"].is_string()) throw SchemaError("kind must be a string");
    s.kind = j["kind"].get<std::string>();
    if (s.kind != "linf" && s.kind != "ainf")
        throw SchemaError("kind must be linf or ainf");
    s.space = space_of(j["degrees"]);
    s.ops = ops_of(j["ops"], s.space, s.space, s.kind == "linf", 0);
    return s;
}

std::string write_structure(const ParsedStructure& s) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = s.kind;
    json degrees = json::object();
    for (auto& [deg, n] : s.space.components()) degrees[std::to_string(deg)] = n;
    j["degrees"] = degrees;
    j["ops"] = ops_to_json(s.ops);
    return j.dump() + "\n";
}

ParsedStructure read_structure(const std::string& path) {
    return parse_structure(read_file(path));
}

ParsedStructure to_parsed(const LInfinityStructure& L) {
    return ParsedStructure{"linf", L.space, L.ops};
}

ParsedStructure to_parsed(const AInfinityStructure& A) {
    return ParsedStructure{"ainf", A.space, A.ops};
}

MCElementSeries parse_series(const std::string& text, const GradedSpace& space) {
    json j = parse_json(text);
    check_version(j);
    if (!j.contains("order") || !j.contains("terms"))
        throw SchemaError("series file needs order and terms");
    std::size_t order = size_of(j["order"], "order");
    if (!j["terms"].is_array() || j["terms"].size() != order)
        throw SchemaError("terms length must equal order");
    MCElementSeries s = MCElementSeries::zero(space, order);
    for (std::size_t k = 0; k < order; ++k) {
        const json& term = j["terms"][k];
        if (!term.is_array()) throw SchemaError("series terms are [index, coeff] lists");
        for (const auto& p : term) {
            if (!p.is_array() || p.size() != 2)
                throw SchemaError("series entries are [index, coeff] pairs");
            std::size_t idx = size_of(p[0], "series index");
            if (idx >= space.dim(1))
                throw SchemaError("series index outside the degree-1 component");
            s.terms[k].coords.at(idx) += rational_of(p[1]);
        }
    }
    return s;
}

std::string write_series(const MCElementSeries& s) {
    json j;
    j["schema_version"] = 1;
    j["order"] = s.order();
    json terms = json::array();
    for (const auto& t : s.terms) {
        json entries = json::array();
        for (std::size_t i = 0; i < t.coords.size(); ++i)
            if (!t.coords[i].is_zero()) entries.push_back({i, t.coords[i].str()});
        terms.push_back(entries);
    }
    j["terms"] = terms;
    return j.dump() + "\n";
}

MCElementSeries read_series(const std::string& path, const GradedSpace& space) {
    return parse_series(read_file(path), space);
}

WeakMorphism parse_morphism(const std::string& text, const std::string& base_dir) {
    json j = parse_json(text);
    check_version(j);
    if (!j.contains("source") || !j.contains("target") || !j.contains("components"))
        throw SchemaError("morphism file needs source, target and components");
    auto load_side = [&base_dir](const json& side) {
        if (side.is_string()) {
            std::filesystem::path p(side.get<std::string>());
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            return read_structure(p.string()).as_l_infinity();
        }
        return parse_structure(side.dump()).as_l_infinity();
    };
    WeakMorphism f;
    f.source = load_side(j["source"]);
    f.target = load_side(j["target"]);
    // component f_k has degree 1-k; reuse the linf convention (2-k) shifted by -1
    f.components = ops_of(j["components"], f.source.space, f.target.space, true, -1);
    return f;
}

WeakMorphism read_morphism(const std::string& path) {
    return parse_morphism(read_file(path),
                          std::filesystem::path(path).parent_path().string());
}

std::string write_cohomology_report(const CohomologyReport& r) {
    json j;
    j["degree"] = r.degree;
    j["dim_cochains"] = r.dim_cochains;
    j["dim_cocycles"] = r.dim_cocycles;
    j["dim_coboundaries"] = r.dim_coboundaries;
    j["betti"] = r.betti;
    json reps = json::array();
    for (const auto& c : r.representatives) reps.push_back(vec_to_json(c.flat_coeffs()));
    j["representatives"] = reps;
    return j.dump() + "\n";
}

} // namespace deforma::io
