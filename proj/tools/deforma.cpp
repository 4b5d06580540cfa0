// Command line front end: exact deformation-theoretic invariants of finite
// dimensional algebras. Exit codes: 0 = property holds / output written,
// 1 = mathematical failure, 2 = operational error (I/O, schema, usage).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deforma/cohomology.hpp"
#include "deforma/coderivation.hpp"
#include "deforma/deformation.hpp"
#include "deforma/errors.hpp"
#include "deforma/gauge.hpp"
#include "deforma/io.hpp"
#include "deforma/linfinity.hpp"

using namespace deforma;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kOperational = 2;

std::string tuple_str(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string tuple_str(const std::vector<BasisRef>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        s += "[" + std::to_string(t[i].degree) + "," + std::to_string(t[i].index) + "]";
    }
    return s + ")";
}

std::size_t nonzero_count(const Cochain& c) {
    std::size_t n = 0;
    for (const auto& x : c.flat_coeffs())
        if (!x.is_zero()) ++n;
    return n;
}

int cmd_check_assoc(const std::string& path) {
    AlgebraStructure a = io::read_algebra(path);
    auto rep = is_associative(a);
    if (rep.associative) {
        std::cout << "associative: yes (dimension " << a.dim() << ")\n";
        return kOk;
    }
    const auto& w = *rep.witness;
    std::cout << "associative: no\nviolated at (i, j, k, r) = (" << w.i << ", " << w.j
              << ", " << w.k << ", " << w.r << ")\n";
    return kMathFailure;
}

int cmd_cohomology(const std::string& path, std::size_t degree,
                   const std::string& json_out) {
    AlgebraStructure a = io::read_algebra(path);
    if (!is_associative(a)) {
        std::cout << "input algebra is not associative\n";
        return kMathFailure;
    }
    auto rep = cohomology(a, degree);
    std::cout << "degree " << degree << "\n"
              << "dim C^" << degree << " = " << rep.dim_cochains << "\n"
              << "dim ker = " << rep.dim_cocycles << "\n"
              << "dim im  = " << rep.dim_coboundaries << "\n"
              << "betti   = " << rep.betti << "\n";
    if (degree == 1)
        std::cout << "derivations = " << rep.dim_cocycles
                  << ", inner derivations = " << rep.dim_coboundaries << "\n";
    for (std::size_t i = 0; i < rep.representatives.size(); ++i)
        std::cout << "representative " << i << ": " << nonzero_count(rep.representatives[i])
                  << " nonzero coefficients\n";
    if (!json_out.empty()) io::write_file(json_out, io::write_cohomology_report(rep));
    return kOk;
}

int deform_validate(const TruncatedDeformation& d) {
    auto rep = validate_deformation(d);
    if (rep.valid) {
        std::cout << "valid through order " << d.order() << "\n";
        return kOk;
    }
    std::cout << "invalid: order " << rep.failure->order_k << " fails at basis triple "
              << tuple_str(rep.failure->triple) << "\n";
    return kMathFailure;
}

int deform_extend(const TruncatedDeformation& d, const std::string& out) {
    auto oc = obstruction(d);
    if (!oc.vanishes_in_cohomology) {
        std::cout << "obstructed: class in H^3 = [";
        for (std::size_t i = 0; i < oc.class_coords.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << oc.class_coords[i];
        }
        std::cout << "]\n";
        return kMathFailure;
    }
    TruncatedDeformation ext = d;
    ext.terms.push_back(*oc.extension_term);
    if (out.empty()) {
        std::cout << io::write_deformation(ext);
    } else {
        io::write_file(out, io::write_deformation(ext));
        std::cout << "extended to order " << ext.order() << " -> " << out << "\n";
    }
    return kOk;
}

int deform_equivalent(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                      const std::string& out) {
    auto res = gauge_equivalent(d1, d2);
    if (!res.element) {
        std::cout << "not equivalent: first inconsistent order "
                  << *res.failed_order << "\n";
        return kMathFailure;
    }
    if (out.empty()) {
        std::cout << io::write_gauge(*res.element);
    } else {
        io::write_file(out, io::write_gauge(*res.element));
        std::cout << "gauge element written -> " << out << "\n";
    }
    return kOk;
}

int deform_classify(const TruncatedDeformation& d) {
    if (d.order() < 1) {
        std::cout << "classify needs at least one term\n";
        return kMathFailure;
    }
    Vec coords = classify_infinitesimal(d.base, d.terms[0]);
    std::cout << "H^2 coordinates: [";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << coords[i];
    }
    std::cout << "]\n";
    return kOk;
}

int deform_gauge_apply(const TruncatedDeformation& d, const std::string& gauge_path,
                       const std::string& out) {
    GaugeElement x = io::read_gauge(gauge_path);
    if (x.dim != d.base.dim())
        throw SchemaError("gauge element dimension does not match the algebra");
    if (x.order() < d.order()) x.terms.resize(d.order(), Cochain(1, x.dim));
    TruncatedDeformation moved = gauge_apply(x, d);
    if (out.empty()) {
        std::cout << io::write_deformation(moved);
    } else {
        io::write_file(out, io::write_deformation(moved));
        std::cout << "transformed deformation written -> " << out << "\n";
    }
    return kOk;
}

int deform_mc_residual(const TruncatedDeformation& d) {
    bool all_zero = true;
    for (std::size_t k = 1; k <= d.order(); ++k) {
        Cochain r = maurer_cartan_residual(d, k);
        std::size_t nz = nonzero_count(r);
        all_zero = all_zero && nz == 0;
        std::cout << "order " << k << ": " << nz << " nonzero entries\n";
    }
    return all_zero ? kOk : kMathFailure;
}

int deform_poisson(const TruncatedDeformation& d) {
    auto rep = poisson_limit(d);
    auto show = [](const char* name, bool ok,
                   const std::optional<PoissonWitness>& witness) {
        std::cout << name << ": " << (ok ? "ok" : "FAIL");
        if (!ok && witness) std::cout << " at " << tuple_str(witness->tuple);
        std::cout << "\n";
    };
    show("antisymmetry", rep.antisymmetry_ok, rep.antisymmetry_witness);
    show("jacobi", rep.jacobi_ok, rep.jacobi_witness);
    show("leibniz", rep.leibniz_ok, rep.leibniz_witness);
    return rep.all_ok() ? kOk : kMathFailure;
}

int homotopy_linf_check(const std::string& path, std::size_t max_n) {
    auto L = io::read_structure(path).as_l_infinity();
    auto rep = check_l_infinity(L, max_n);
    if (rep.ok) {
        std::cout << "all axioms hold through n = " << max_n << "\n";
        return kOk;
    }
    std::cout << "axiom " << rep.failure->n << " fails at basis tuple "
              << tuple_str(rep.failure->tuple) << "\n";
    return kMathFailure;
}

int homotopy_ainf_check(const std::string& path, std::size_t max_n) {
    auto A = io::read_structure(path).as_a_infinity();
    auto rep = check_a_infinity(A, max_n);
    if (rep.ok) {
        std::cout << "all axioms hold through n = " << max_n << "\n";
        return kOk;
    }
    std::cout << "axiom " << rep.failure->n << " fails at basis tuple "
              << tuple_str(rep.failure->tuple) << "\n";
    return kMathFailure;
}

int homotopy_coder_lift(const std::string& path, std::size_t truncation) {
    auto parsed = io::read_structure(path);
    CoalgebraFlavor flavor =
        parsed.kind == "ainf" ? CoalgebraFlavor::tensor : CoalgebraFlavor::symmetric;
    std::map<std::size_t, GradedMultilinearMap> ops =
        parsed.kind == "ainf" ? parsed.as_a_infinity().ops : parsed.as_l_infinity().ops;
    auto lift = lift_to_coderivation(ops, parsed.space, flavor, truncation);
    std::cout << (parsed.kind == "ainf" ? "tensor" : "symmetric") << " flavor, truncation "
              << truncation << "\n";
    if (lift.square_is_zero) {
        std::cout << "theta^2 = 0 on all words of length <= " << truncation << "\n";
        return kOk;
    }
    std::size_t first = 0;
    for (auto& [s, table] : lift.square.corestrictions) {
        first = s;
        break;
    }
    std::cout << "theta^2 != 0; first nonzero corestriction at word length " << first
              << "\n";
    return kMathFailure;
}

int homotopy_mc_push(const std::string& morphism_path, const std::string& series_path,
                     const std::string& out) {
    WeakMorphism f = io::read_morphism(morphism_path);
    MCElementSeries s = io::read_series(series_path, f.source.space);
    auto res = mc_pushforward(f, s);
    if (out.empty()) {
        std::cout << io::write_series(res.series);
    } else {
        io::write_file(out, io::write_series(res.series));
        std::cout << "pushed series written -> " << out << "\n";
    }
    if (res.target_ok) {
        std::cout << "target residuals vanish through order " << s.order() << "\n";
        return kOk;
    }
    std::cout << "target residual nonzero at order " << *res.first_bad_order << "\n";
    return kMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation invariants of finite dimensional algebras"};
    app.require_subcommand(1);

    std::string path, path2, gauge_path, out, json_out;
    std::size_t degree = 2, max_n = 4, truncation = 4;

    auto* assoc = app.add_subcommand("check-assoc", "test the d^4 associativity equations");
    assoc->add_option("file", path, "algebra file")->required();

    auto* coh = app.add_subcommand("cohomology", "betti numbers and representatives");
    coh->add_option("file", path, "algebra file")->required();
    coh->add_option("--degree", degree, "cohomological degree")->required();
    coh->add_option("--json-out", json_out, "machine-readable report path");

    auto* deform = app.add_subcommand("deform", "deformation computations");
    deform->require_subcommand(1);
    long order = -1;
    auto add_def = [&](const char* name, const char* desc) {
        auto* sub = deform->add_subcommand(name, desc);
        sub->add_option("file", path, "deformation file")->required();
        sub->add_option("--order", order, "re-truncate (or zero-pad) to this order")
            ->check(CLI::PositiveNumber);
        return sub;
    };
    auto* dval = add_def("validate", "check the order-k equations");
    auto* dext = add_def("extend", "append the canonical next-order term");
    dext->add_option("--out", out, "output deformation file");
    auto* deqv = add_def("equivalent", "search for a gauge equivalence");
    deqv->add_option("other", path2, "second deformation file")->required();
    deqv->add_option("--out", out, "output gauge file");
    auto* dcls = add_def("classify", "H^2 coordinates of the first-order term");
    auto* dgap = add_def("gauge-apply", "transform by a gauge element");
    dgap->add_option("gauge", gauge_path, "gauge element file")->required();
    dgap->add_option("--out", out, "output deformation file");
    auto* dmcr = add_def("mc-residual", "per-order residual sizes");
    auto* dpoi = add_def("poisson", "classical-limit bracket checks");

    auto* homotopy = app.add_subcommand("homotopy", "homotopy-algebra computations");
    homotopy->require_subcommand(1);
    auto* hlinf = homotopy->add_subcommand("linf-check", "homotopy Lie axioms");
    hlinf->add_option("file", path, "structure file")->required();
    hlinf->add_option("--max-n", max_n, "largest axiom index");
    auto* hainf = homotopy->add_subcommand("ainf-check", "homotopy associative axioms");
    hainf->add_option("file", path, "structure file")->required();
    hainf->add_option("--max-n", max_n, "largest axiom index");
    auto* hlift = homotopy->add_subcommand("coder-lift", "square of the lifted coderivation");
    hlift->add_option("file", path, "structure file")->required();
    hlift->add_option("--truncation", truncation, "word-length truncation");
    auto* hpush = homotopy->add_subcommand("mc-push", "push a Maurer-Cartan series");
    hpush->add_option("morphism", path, "morphism file")->required();
    hpush->add_option("series", path2, "series file")->required();
    hpush->add_option("--out", out, "output series file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kOperational;
    }

    try {
        if (*assoc) return cmd_check_assoc(path);
        if (*coh) return cmd_cohomology(path, degree, json_out);
        if (deform->parsed()) {
            TruncatedDeformation d = io::read_deformation(path);
            if (order > 0)
                d.terms.resize(static_cast<std::size_t>(order),
                               Cochain(2, d.base.dim()));
            if (*dval) return deform_validate(d);
            if (*dext) return deform_extend(d, out);
            if (*deqv) return deform_equivalent(d, io::read_deformation(path2), out);
            if (*dcls) return deform_classify(d);
            if (*dgap) return deform_gauge_apply(d, gauge_path, out);
            if (*dmcr) return deform_mc_residual(d);
            if (*dpoi) return deform_poisson(d);
        }
        if (homotopy->parsed()) {
            if (*hlinf) return homotopy_linf_check(path, max_n);
            if (*hainf) return homotopy_ainf_check(path, max_n);
            if (*hlift) return homotopy_coder_lift(path, truncation);
            if (*hpush) return homotopy_mc_push(path, path2, out);
        }
    } catch (const FileNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOperational;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kOperational;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOperational;
    }
    return kOperational;
}
