#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noncross/gf.hpp"
#include "noncross/oracle.hpp"
#include "noncross/partition.hpp"

namespace py = pybind11;
using namespace noncross;

namespace {

py::object to_py_int(const BigInt& v) {
    PyObject* p = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

py::list to_py_ints(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py_int(v));
    return out;
}

Pattern pattern_arg(const std::string& text) { return Pattern::from_word(parse_word(text)); }

void require_cap(int n, int max_brute_n) {
    if (n > max_brute_n)
        throw std::invalid_argument("n " + std::to_string(n) + " exceeds brute-force cap " +
                                    std::to_string(max_brute_n) + " (max_brute_n)");
}

py::dict report_to_dict(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["params"] = r.params;
    d["status"] = r.pass ? "pass" : "fail";
    if (r.first_discrepancy) {
        py::dict fd;
        fd["index"] = r.first_discrepancy->index;
        fd["expected"] = r.first_discrepancy->expected;
        fd["actual"] = r.first_discrepancy->actual;
        d["first_discrepancy"] = fd;
    } else {
        d["first_discrepancy"] = py::none();
    }
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration of pattern-avoiding set partitions";

    m.def("reduce", [](const std::string& word) { return format_word(reduce(parse_word(word)).word); },
          py::arg("word"), "Reduced form of a word, e.g. reduce('135351') == '123231'.");
    m.def("is_canonical", [](const std::string& word) { return is_canonical(parse_word(word)); },
          py::arg("word"));
    m.def("from_blocks",
          [](const std::vector<std::vector<int>>& blocks) {
              return format_word(from_blocks(blocks).word);
          },
          py::arg("blocks"), "Canonical word of a partition given as blocks.");
    m.def("to_blocks",
          [](const std::string& word) {
              return to_blocks(SetPartition::from_word(parse_word(word)));
          },
          py::arg("word"));
    m.def("contains",
          [](const std::string& word, const std::string& pattern) {
              return word_contains(parse_word(word), pattern_arg(pattern));
          },
          py::arg("word"), py::arg("pattern"));
    m.def("occurrence",
          [](const std::string& word, const std::string& pattern) -> py::object {
              auto witness = find_occurrence(parse_word(word), pattern_arg(pattern));
              if (!witness) return py::none();
              return py::cast(*witness);
          },
          py::arg("word"), py::arg("pattern"),
          "1-based positions of one occurrence, or None when avoiding.");
    m.def("crossing_pattern",
          [](int k, int d) { return format_word(crossing_pattern(k, d).word); }, py::arg("k"),
          py::arg("d"));
    m.def("enumerate_partitions",
          [](int n) {
              std::vector<std::string> out;
              for (const auto& p : enumerate_partitions(n)) out.push_back(format_word(p.word));
              return out;
          },
          py::arg("n"));
    m.def("initial_run_length",
          [](const std::string& word) {
              return initial_run_length(SetPartition::from_word(parse_word(word)));
          },
          py::arg("word"));
    m.def("count_avoiding",
          [](int n, const std::string& pattern, int max_brute_n) {
              require_cap(n, max_brute_n);
              return to_py_int(count_avoiding(n, pattern_arg(pattern)));
          },
          py::arg("n"), py::arg("pattern"), py::arg("max_brute_n") = 12);
    m.def("count_avoiding_by_run",
          [](int n, const std::string& pattern, int max_brute_n) {
              require_cap(n, max_brute_n);
              py::dict out;
              for (const auto& [run, cnt] : count_avoiding_by_run(n, pattern_arg(pattern)))
                  out[py::int_(run)] = to_py_int(cnt);
              return out;
          },
          py::arg("n"), py::arg("pattern"), py::arg("max_brute_n") = 12);

    m.def("gf_k2", [](int k, int order) { return to_py_ints(gf_k2(k, order)); }, py::arg("k"),
          py::arg("order"), "Counts of partitions avoiding 12...k12, n = 0..order.");
    m.def("gf_k1", [](int k, int order) { return to_py_ints(gf_k1(k, order)); }, py::arg("k"),
          py::arg("order"));
    m.def("gf_k0", [](int k, int n) { return to_py_int(gf_k0(k, n)); }, py::arg("k"), py::arg("n"));
    m.def("gf_k0_sequence", [](int k, int order) { return to_py_ints(gf_k0_sequence(k, order)); },
          py::arg("k"), py::arg("order"));
    m.def("gf_q", [](int ell, int order) { return to_py_ints(gf_q(ell, order)); }, py::arg("l"),
          py::arg("order"));
    m.def("stirling2", [](int n, int i) { return to_py_int(stirling2(n, i)); }, py::arg("n"),
          py::arg("i"));
    m.def("bell", [](int n) { return to_py_int(bell(n)); }, py::arg("n"));
    m.def("catalan", [](int n) { return to_py_int(catalan(n)); }, py::arg("n"));
    m.def("a007317", [](int n) { return to_py_int(a007317(n)); }, py::arg("n"));
    m.def("closed_form_k1", [](int k, int n) { return to_py_int(closed_form_k1(k, n)); },
          py::arg("k"), py::arg("n"));
    m.def("kernel_residual_is_zero", [](int k, int order) { return kernel_residual(k, order).is_zero(); },
          py::arg("k"), py::arg("order"));

    m.def("bruteforce_series",
          [](int k, int d, int n_max, int max_brute_n) {
              return to_py_ints(bruteforce_series(k, d, n_max, BruteForceLimits{max_brute_n}));
          },
          py::arg("k"), py::arg("d"), py::arg("n_max"), py::arg("max_brute_n") = 12);
    m.def("verify",
          [](const std::string& suite, int max_brute_n) {
              if (suite != "quick" && suite != "full")
                  throw std::invalid_argument("suite must be 'quick' or 'full'");
              auto reports = run_suite(suite == "quick" ? Suite::quick : Suite::full,
                                       BruteForceLimits{max_brute_n});
              py::list out;
              for (const auto& r : reports) out.append(report_to_dict(r));
              return out;
          },
          py::arg("suite") = "quick", py::arg("max_brute_n") = 12,
          "Run the self-verification suite; returns one report dict per check.");

#ifdef VERSION_INFO
#define NONCROSS_STR2(x) #x
#define NONCROSS_STR(x) NONCROSS_STR2(x)
    m.attr("__version__") = NONCROSS_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
