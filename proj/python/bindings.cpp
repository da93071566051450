#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yangian/identities.hpp"
#include "yangian/rmatrix.hpp"
#include "yangian/suites.hpp"

namespace py = pybind11;
using namespace yang;

namespace {

Series series_of(const std::string& s) {
    if (s == "B" || s == "b") return Series::B;
    if (s == "C" || s == "c") return Series::C;
    if (s == "D" || s == "d") return Series::D;
    throw py::value_error("series must be B, C or D");
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["paper_anchor"] = r.anchor;
    d["pass"] = r.pass;
    d["witness"] = r.witness;
    d["detail"] = r.detail;
    d["instances"] = r.instances;
    return d;
}

py::dict tuple_dict(const DrinfeldTuple& t) {
    py::list polys;
    for (auto& p : t.polys) {
        py::list cs;
        for (auto& c : p.coeffs()) cs.append(c.str());
        polys.append(cs);
    }
    py::dict d;
    d["side"] = t.side == Side::Rtt ? "rtt" : "cur";
    d["polys"] = polys;
    return d;
}

DrinfeldTuple tuple_from(const std::string& side, const std::vector<std::vector<std::string>>& polys) {
    DrinfeldTuple t;
    if (side == "rtt")
        t.side = Side::Rtt;
    else if (side == "cur")
        t.side = Side::Cur;
    else
        throw py::value_error("side must be 'rtt' or 'cur'");
    for (auto& cs : polys) {
        std::vector<K> c;
        for (auto& s : cs) c.push_back(K::parse(s));
        t.polys.push_back(PolyU(c));
    }
    return t;
}

struct Algebra {
    Spec g;
};

}  // namespace

PYBIND11_MODULE(yangian, m) {
    m.doc() = "Exact checks for orthogonal and symplectic Yangians";
    m.attr("__version__") = tool_version;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<HighestWeightError>(m, "HighestWeightError", PyExc_RuntimeError);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init([](const std::string& s, int n) { return Algebra{make_spec(series_of(s), n)}; }),
             py::arg("series"), py::arg("n"))
        .def_property_readonly("name", [](const Algebra& a) { return a.g->name(); })
        .def_property_readonly("n", [](const Algebra& a) { return a.g->n(); })
        .def_property_readonly("N", [](const Algebra& a) { return a.g->N(); })
        .def_property_readonly("dim", [](const Algebra& a) { return a.g->dim(); })
        .def_property_readonly("kappa", [](const Algebra& a) { return K(a.g->kappa()).str(); })
        .def_property_readonly("allowed_nodes", [](const Algebra& a) { return a.g->allowed_nodes(); })
        .def("translation_table",
             [](const Algebra& a) {
                 py::list rows;
                 for (auto& r : translation_table(*a.g)) {
                     py::dict d;
                     d["k"] = r.k;
                     d["node"] = r.node;
                     d["offset"] = r.offset.str();
                     d["formula"] = r.formula;
                     rows.append(d);
                 }
                 return rows;
             })
        .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.g->name() + ">"; });

    m.def("check_tensor_identities", [](const Algebra& a) { return report_dict(check_tensor_identities(*a.g)); });
    m.def("check_casimir", [](const Algebra& a) { return report_dict(check_casimir(*a.g)); });
    m.def(
        "check_qybe", [](const Algebra& a, const std::string& z) { return report_dict(check_qybe(*a.g, K::parse(z))); },
        py::arg("algebra"), py::arg("zeta") = "1");
    m.def("check_gnw_identities", [](const Algebra& a) { return report_dict(check_gnw_identities(*a.g)); });
    m.def(
        "check_translation",
        [](const Algebra& a, int node, const std::string& z, int order) {
            return report_dict(check_translation(a.g, node, K::parse(z), order));
        },
        py::arg("algebra"), py::arg("node"), py::arg("zeta") = "1", py::arg("order") = 8);
    m.def(
        "check_cnm_highest_weight",
        [](const Algebra& a, int mm, const std::string& z, int order) {
            return report_dict(check_cnm_highest_weight(a.g, mm, K::parse(z), order));
        },
        py::arg("algebra"), py::arg("m"), py::arg("zeta") = "1", py::arg("order") = 8);
    m.def(
        "verify_transport",
        [](const Algebra& a, const std::string& route, const std::string& z) {
            Route r = parse_route(route);
            K zeta = K::parse(z);
            if (r == Route::JCur) return report_dict(verify_transport(natural_j_rep(a.g, zeta), r));
            return report_dict(verify_transport(rtt_natural_rep(a.g, zeta), r));
        },
        py::arg("algebra"), py::arg("route"), py::arg("zeta") = "1",
        "Transport of the natural module along 'rtt-j', 'j-cur' or 'rtt-j-cur'.");
    m.def(
        "translate",
        [](const Algebra& a, const std::string& side, const std::vector<std::vector<std::string>>& polys,
           const std::string& z) { return tuple_dict(translate_tuple(tuple_from(side, polys), *a.g, K::parse(z))); },
        py::arg("algebra"), py::arg("side"), py::arg("polys"), py::arg("zeta") = "1",
        "Polynomials as coefficient lists [c0, ..., cd] of rational strings.");

    m.def(
        "run_suite",
        [](const std::vector<std::pair<std::string, int>>& specs, const std::vector<std::string>& suites,
           const std::vector<std::string>& zetas, int order, int rmax) {
            SuiteConfig cfg;
            for (auto& [s, n] : specs) cfg.specs.push_back({series_of(s), n});
            cfg.suites = suites;
            cfg.zetas.clear();
            for (auto& z : zetas) cfg.zetas.push_back(K::parse(z));
            cfg.order = order;
            cfg.rmax = rmax;
            Report r;
            {
                py::gil_scoped_release release;
                r = run_suite(cfg);
            }
            py::list recs;
            for (auto& rec : r.records) {
                py::dict d;
                d["suite"] = rec.suite;
                d["spec"] = rec.spec;
                d["zeta"] = rec.zeta;
                d["id"] = rec.id;
                d["paper_anchor"] = rec.anchor;
                d["status"] = rec.status;
                d["witness"] = rec.witness;
                d["detail"] = rec.detail;
                recs.append(d);
            }
            py::list tables;
            for (auto& t : r.tables) {
                py::list entries;
                for (auto& e : t.entries) {
                    py::dict d;
                    d["node"] = e.node;
                    d["zeta"] = e.zeta;
                    d["input"] = tuple_dict(e.input);
                    d["output"] = tuple_dict(e.output);
                    d["status"] = e.status;
                    entries.append(d);
                }
                py::dict td;
                td["spec"] = t.spec;
                td["entries"] = entries;
                tables.append(td);
            }
            py::dict out;
            out["report_version"] = 1;
            out["all_pass"] = r.all_pass();
            out["records"] = recs;
            out["translation_tables"] = tables;
            return out;
        },
        py::arg("specs"), py::arg("suites"), py::arg("zetas") = std::vector<std::string>{"1"}, py::arg("order") = 8,
        py::arg("rmax") = 3);
}
