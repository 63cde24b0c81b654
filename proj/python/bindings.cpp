// Python bindings for the main operations. Scalars cross the boundary as
// canonical text, so exactness survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meetdet/formats.hpp"

namespace py = pybind11;
using namespace meetdet;

namespace {

Scalar s(const std::string& text) { return Scalar::parse(text); }

FMap named_fmap(const std::string& name, int arity) {
    if (name == "sign") return FMap::sign_product(arity);
    if (name == "one") return FMap::constant_one(arity);
    throw PreconditionError("fmap must be 'sign' or 'one' here");
}

Hypermatrix hm_from_strings(int n, int k, const std::vector<std::string>& entries) {
    std::vector<Scalar> parsed;
    parsed.reserve(entries.size());
    for (const auto& e : entries) parsed.push_back(s(e));
    return Hypermatrix::from_entries(n, k, std::move(parsed));
}

GroundedFunction gf_from_strings(std::shared_ptr<const MeetSemilattice> sl, std::vector<int> X,
                                 std::vector<int> z,
                                 const std::vector<std::vector<std::string>>& F) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(F.size());
    for (const auto& row : F) {
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(s(e));
        rows.push_back(std::move(r));
    }
    return GroundedFunction::make(std::move(sl), std::move(X), std::move(z), std::move(rows));
}

} // namespace

PYBIND11_MODULE(_meetdet, m) {
    m.doc() = "exact hyperdeterminants and closed forms on meet semilattices";

    py::register_exception<ParseError>(m, "MeetdetParseError");
    py::register_exception<PreconditionError>(m, "MeetdetPreconditionError");

    py::class_<Poset>(m, "Poset")
        .def_static("from_covers", &Poset::from_covers, py::arg("n"), py::arg("covers"),
                    py::arg("labels") = std::vector<std::string>{})
        .def("n", &Poset::n)
        .def("leq", &Poset::leq)
        .def("label", &Poset::label);

    py::class_<MeetSemilattice, std::shared_ptr<MeetSemilattice>>(m, "MeetSemilattice")
        .def_static("from_poset",
                    [](const Poset& p) {
                        return std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(p));
                    })
        .def("n", &MeetSemilattice::n)
        .def("meet", &MeetSemilattice::meet)
        .def("poset", &MeetSemilattice::poset, py::return_value_policy::reference_internal);

    py::class_<Hypermatrix>(m, "Hypermatrix")
        .def_static("from_entries", &hm_from_strings, py::arg("n"), py::arg("k"),
                    py::arg("entries"))
        .def("n", &Hypermatrix::n)
        .def("k", &Hypermatrix::k)
        .def("entry", [](const Hypermatrix& h, const std::vector<int>& idx) {
            return h.at(idx).str();
        });

    py::class_<GroundedFunction>(m, "GroundedFunction")
        .def_static("make",
                    [](std::shared_ptr<MeetSemilattice> sl, std::vector<int> X,
                       std::vector<int> z, const std::vector<std::vector<std::string>>& F) {
                        return gf_from_strings(std::move(sl), std::move(X), std::move(z), F);
                    },
                    py::arg("lattice"), py::arg("X"), py::arg("z"), py::arg("F"));

    m.def("scalar_canon", [](const std::string& t) { return s(t).str(); });
    m.def("scalar_add", [](const std::string& a, const std::string& b) {
        return (s(a) + s(b)).str();
    });
    m.def("scalar_sub", [](const std::string& a, const std::string& b) {
        return (s(a) - s(b)).str();
    });
    m.def("scalar_mul", [](const std::string& a, const std::string& b) {
        return (s(a) * s(b)).str();
    });

    m.def("zeta_matrix", [](const Poset& p) {
        const auto z = zeta_matrix(p);
        std::vector<std::vector<std::string>> out;
        for (int i = 0; i < z.rows(); ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < z.cols(); ++j) row.push_back(z.at(i, j).str());
            out.push_back(std::move(row));
        }
        return out;
    });
    m.def("mobius_matrix", [](const Poset& p) {
        const auto mu = mobius_matrix(p);
        std::vector<std::vector<std::string>> out;
        for (int i = 0; i < mu.rows(); ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < mu.cols(); ++j) row.push_back(mu.at(i, j).str());
            out.push_back(std::move(row));
        }
        return out;
    });

    m.def("fdet_bruteforce",
          [](const Hypermatrix& h, const std::string& fmap, bool force) {
              return fdet_bruteforce(h, named_fmap(fmap, h.k() - 2), force).str();
          },
          py::arg("hypermatrix"), py::arg("fmap") = "sign", py::arg("force") = false);
    m.def("fdet_expansion",
          [](const Hypermatrix& h, const std::string& fmap, bool force) {
              return fdet_expansion(h, named_fmap(fmap, h.k() - 2), force).str();
          },
          py::arg("hypermatrix"), py::arg("fmap") = "sign", py::arg("force") = false);
    m.def("cayley_det",
          [](const Hypermatrix& h, bool force) { return cayley_det(h, force).str(); },
          py::arg("hypermatrix"), py::arg("force") = false);
    m.def("det1", [](const Hypermatrix& h, bool force) { return det1(h, force).str(); },
          py::arg("hypermatrix"), py::arg("force") = false);

    m.def("lindstrom_fdet", [](const GroundedFunction& gf, int k, const std::string& fmap) {
        return lindstrom_fdet(gf, k, named_fmap(fmap, k - 2)).str();
    });
    m.def("meet_closed_fdet", [](const GroundedFunction& gf, int k, const std::string& fmap) {
        return meet_closed_fdet(gf, k, named_fmap(fmap, k - 2)).str();
    });
    m.def("factor_closed_fdet", [](const GroundedFunction& gf, int k, const std::string& fmap) {
        return factor_closed_fdet(gf, k, named_fmap(fmap, k - 2)).str();
    });
    m.def("li_expansion_det",
          [](const GroundedFunction& gf) { return li_expansion_det(gf).str(); });
    m.def("ligen_fdet", [](const GroundedFunction& gf, int k, const std::string& fmap) {
        return ligen_fdet(gf, k, named_fmap(fmap, k - 2)).str();
    });
    m.def("genhauk_fdet", [](const GroundedFunction& gf, int k, const std::string& fmap) {
        return genhauk_fdet(gf, k, named_fmap(fmap, k - 2)).str();
    });
    m.def("build_meet_hypermatrix", &build_meet_hypermatrix);

    m.def("euler_phi", &euler_phi);
    m.def("gcd_hypermatrix", [](const std::vector<long>& S, int k, const std::string& fn) {
        const long bound = *std::max_element(S.begin(), S.end());
        return gcd_hypermatrix(S, k, ArithmeticFunction::named(fn, bound));
    });
    m.def("divisor_semilattice", [](std::vector<long> S) {
        auto dsl = divisor_semilattice(std::move(S));
        return py::make_tuple(
            std::const_pointer_cast<MeetSemilattice>(
                std::static_pointer_cast<const MeetSemilattice>(dsl.lattice)),
            dsl.values);
    });
}
