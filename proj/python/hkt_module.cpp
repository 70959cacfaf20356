#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hkt/chars.hpp"
#include "hkt/elliptic.hpp"
#include "hkt/extquot.hpp"
#include "hkt/gcw.hpp"
#include "hkt/ktables.hpp"
#include "hkt/version.hpp"

namespace py = pybind11;
using namespace hkt;

namespace {

py::object big(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict ranks_dict(const KRanks& k) {
    py::dict d;
    d["k0"] = big(k.k0);
    d["k1"] = big(k.k1);
    d["torsion_free"] = k.torsion_free;
    d["special_flag"] = k.special_flag;
    return d;
}

RootDatum datum_of(const std::string& type, int n) {
    if (type == "G2") return RootDatum::catalog(RootDatumKind::G2, {});
    return catalog_root_datum(type, {n});
}

}  // namespace

PYBIND11_MODULE(hkt, m) {
    m.doc() = "K-theory of C*-completed affine Hecke algebras at q = 1: closed-form rank "
              "tables, an extended-quotient cohomology oracle, elliptic representation "
              "lattices by Smith normal form, and a G-CW local-coefficient cohomology engine.";
    m.attr("__version__") = kVersion;

    m.def("partitions",
          [](int n) {
              std::vector<std::vector<int>> out;
              for (const auto& p : enum_partitions(n)) out.push_back(p.parts());
              return out;
          },
          py::arg("n"), "All partitions of n in reverse-lexicographic order.");

    m.def("count_multipartitions",
          [](int k, int n) { return big(count_multipartitions(k, n)); }, py::arg("k"),
          py::arg("n"), "Number of ordered k-tuples of partitions of total weight n.");

    m.def("ktheory_ranks",
          [](const std::string& type, int n) { return ranks_dict(ktheory_ranks(type, n)); },
          py::arg("type"), py::arg("n") = 1,
          "Closed-form K-theory ranks for GL, SL, PGL, SO_odd, Sp, SO_even or G2.");

    m.def("pgl_sheaf_ranks",
          [](const std::vector<int>& mu) { return big(pgl_sheaf_ranks(to_partition(mu))); },
          py::arg("mu"), "Per-partition PGL summand rank (both evaluation routes, cross-checked).");

    m.def("kunneth_product",
          [](std::pair<long long, long long> a, std::pair<long long, long long> b) {
              KRanks ka{Int(a.first), Int(a.second), true, false};
              KRanks kb{Int(b.first), Int(b.second), true, false};
              KRanks k = kunneth_product(ka, kb);
              return std::make_pair(big(k.k0), big(k.k1));
          },
          py::arg("a"), py::arg("b"));

    m.def("equivariant_poincare",
          [](const std::string& type, int n) {
              auto p = equivariant_poincare(datum_of(type, n));
              py::list dims;
              for (const auto& d : p.dims) dims.append(big(d));
              py::dict out;
              out["dims"] = dims;
              out["even_total"] = big(p.even_total);
              out["odd_total"] = big(p.odd_total);
              return out;
          },
          py::arg("type"), py::arg("n") = 1,
          "Rational cohomology of the extended quotient by exact Burnside averaging.");

    m.def("compare_with_closed_form",
          [](const std::string& type, int n) {
              auto rep = compare_with_closed_form(datum_of(type, n));
              py::dict out;
              out["closed_form"] = ranks_dict(rep.closed_form);
              out["oracle_even"] = big(rep.oracle.even_total);
              out["oracle_odd"] = big(rep.oracle.odd_total);
              out["pass"] = rep.pass;
              return out;
          },
          py::arg("type"), py::arg("n") = 1);

    m.def("elliptic_report",
          [](const std::string& group, const std::vector<int>& n) {
              auto rep = elliptic_quotient(*WeylGroup::build(group, n));
              py::dict out;
              out["group"] = rep.group;
              out["irreducibles"] = rep.irr_count;
              out["induced_columns"] = rep.column_count;
              out["rank"] = rep.rank;
              py::list tors;
              for (const auto& t : rep.torsion_invariants) tors.append(big(t));
              out["torsion"] = tors;
              out["elliptic_class_count"] = rep.elliptic_class_count;
              return out;
          },
          py::arg("group"), py::arg("n"),
          "Rank and torsion of R_Z(W) modulo parabolically induced characters (via SNF).");

    m.def("character_table",
          [](const std::string& group, const std::vector<int>& n) {
              auto T = character_table(*WeylGroup::build(group, n));
              py::dict out;
              out["group"] = T.group_name;
              out["order"] = big(T.group_order);
              out["class_labels"] = T.class_labels;
              py::list sizes;
              for (const auto& s : T.class_sizes) sizes.append(big(s));
              out["class_sizes"] = sizes;
              out["irr_labels"] = T.irr_labels;
              out["values"] = T.values;
              return out;
          },
          py::arg("group"), py::arg("n"));

    m.def("bala_carter_classes",
          [](int n) {
              py::list out;
              for (const auto& c : unipotent_classes_so_odd(n)) {
                  auto r = component_group_rank(c);
                  py::dict d;
                  d["alpha"] = c.alpha.parts();
                  d["beta"] = c.beta.parts();
                  d["vanishes"] = r.vanishes;
                  d["elliptic_rank"] = big(r.elliptic_rank);
                  out.append(d);
              }
              return out;
          },
          py::arg("n"));

    m.def("builtin_complexes", []() { return builtin_complex_names(); });

    m.def("gcw_cohomology",
          [](const std::string& builtin, const std::string& file) {
              const GCWComplex& K = file.empty() ? builtin_complex(builtin)
                                                 : parse_complex_file(file);
              auto res = gcw_cohomology(K);
              py::list out;
              for (const auto& d : res.degrees) {
                  py::dict deg;
                  deg["rank"] = d.free_rank;
                  py::list tors;
                  for (const auto& t : d.torsion) tors.append(big(t));
                  deg["torsion"] = tors;
                  out.append(deg);
              }
              return out;
          },
          py::arg("builtin") = "", py::arg("file") = "",
          "Equivariant cohomology of a finite G-CW complex with its "
          "representation-ring local system.");

    m.def("gcw_duality_check",
          [](const std::string& builtin) {
              return gcw_homology_and_duality(builtin_complex(builtin)).duality_ok;
          },
          py::arg("builtin"));

    m.def("set_cache_dir", &set_cache_dir, py::arg("dir"));
}
