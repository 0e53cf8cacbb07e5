#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "wdq/concept_bag.hpp"
#include "wdq/directory.hpp"
#include "wdq/directory_io.hpp"
#include "wdq/metrics.hpp"
#include "wdq/rng.hpp"
#include "wdq/semantics.hpp"
#include "wdq/session_io.hpp"
#include "wdq/simulator.hpp"

namespace py = pybind11;

namespace {

wdq::ContentMode mode_from_string(const std::string& name) {
  if (name == "resources") return wdq::ContentMode::resources;
  if (name == "children") return wdq::ContentMode::children;
  if (name == "auto" || name == "automatic") return wdq::ContentMode::automatic;
  throw std::invalid_argument("unknown content mode '" + name + "'");
}

std::string mode_to_string(wdq::ContentMode mode) {
  switch (mode) {
    case wdq::ContentMode::resources: return "resources";
    case wdq::ContentMode::children: return "children";
    default: return "auto";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structural and semantic quality measures for web directories";

  py::register_exception<wdq::ValidationError>(m, "ValidationError",
                                               PyExc_ValueError);
  py::register_exception<wdq::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<wdq::SessionFormatError>(m, "SessionFormatError",
                                                  PyExc_ValueError);
  py::register_exception<wdq::UnreachableError>(m, "UnreachableError",
                                                PyExc_ValueError);
  py::register_exception<wdq::InconsistentSessionError>(
      m, "InconsistentSessionError", PyExc_ValueError);

  py::class_<wdq::ConceptBag>(m, "ConceptBag")
      .def(py::init<>())
      .def(py::init([](const std::vector<std::string>& terms) {
        return wdq::ConceptBag::from_terms(terms);
      }))
      .def("add", &wdq::ConceptBag::add, py::arg("term"),
           py::arg("count") = 1)
      .def("count", &wdq::ConceptBag::count, py::arg("term"))
      .def("size", &wdq::ConceptBag::size)
      .def("distinct", &wdq::ConceptBag::distinct)
      .def("empty", &wdq::ConceptBag::empty)
      .def("terms", &wdq::ConceptBag::to_terms)
      .def("counts",
           [](const wdq::ConceptBag& bag) {
             std::map<std::string, std::size_t> out;
             for (const auto& [term, count] : bag.counts()) out[term] = count;
             return out;
           })
      .def("__len__", &wdq::ConceptBag::size)
      .def("__contains__",
           [](const wdq::ConceptBag& bag, const std::string& term) {
             return bag.count(term) > 0;
           })
      .def("__eq__",
           [](const wdq::ConceptBag& a, const wdq::ConceptBag& b) {
             return a == b;
           })
      .def("__repr__", [](const wdq::ConceptBag& bag) {
        return "ConceptBag(" + bag.to_string() + ")";
      });

  m.def("bag_union", &wdq::bag_union);
  m.def("bag_difference", &wdq::bag_difference);
  m.def("bag_gap", &wdq::bag_gap);
  m.def("bag_jaccard", &wdq::bag_jaccard);

  py::class_<wdq::NavConfig>(m, "NavConfig")
      .def(py::init<>())
      .def(py::init([](bool allow_up) {
             wdq::NavConfig nav;
             nav.allow_up = allow_up;
             return nav;
           }),
           py::arg("allow_up"))
      .def_readwrite("allow_up", &wdq::NavConfig::allow_up);

  py::class_<wdq::SemanticsConfig>(m, "SemanticsConfig")
      .def(py::init([](const std::string& mode, double dist_cap,
                       std::size_t epsilon) {
             wdq::SemanticsConfig cfg;
             cfg.mode = mode_from_string(mode);
             cfg.dist_cap = dist_cap;
             cfg.epsilon = epsilon;
             return cfg;
           }),
           py::arg("mode") = "auto", py::arg("dist_cap") = 1000.0,
           py::arg("epsilon") = 0)
      .def_property(
          "mode",
          [](const wdq::SemanticsConfig& cfg) {
            return mode_to_string(cfg.mode);
          },
          [](wdq::SemanticsConfig& cfg, const std::string& name) {
            cfg.mode = mode_from_string(name);
          })
      .def_readwrite("dist_cap", &wdq::SemanticsConfig::dist_cap)
      .def_readwrite("epsilon", &wdq::SemanticsConfig::epsilon);

  py::class_<wdq::Category>(m, "Category")
      .def_readonly("id", &wdq::Category::id)
      .def_readonly("level", &wdq::Category::level)
      .def_readonly("url", &wdq::Category::url)
      .def_readonly("children", &wdq::Category::children)
      .def_readonly("cross_links", &wdq::Category::cross_links)
      .def_readonly("resources", &wdq::Category::resources)
      .def("__repr__", [](const wdq::Category& c) {
        return "Category('" + c.id + "', level=" + std::to_string(c.level) +
               ")";
      });

  py::class_<wdq::Resource>(m, "Resource")
      .def_readonly("id", &wdq::Resource::id)
      .def_readonly("url", &wdq::Resource::url)
      .def_readonly("concepts", &wdq::Resource::concepts)
      .def("__repr__",
           [](const wdq::Resource& r) { return "Resource('" + r.id + "')"; });

  py::class_<wdq::Violation>(m, "Violation")
      .def_property_readonly(
          "rule", [](const wdq::Violation& v) { return wdq::rule_name(v.rule); })
      .def_readonly("ids", &wdq::Violation::ids)
      .def_readonly("message", &wdq::Violation::message)
      .def("__repr__", [](const wdq::Violation& v) {
        return "Violation(" + v.message + ")";
      });

  py::class_<wdq::WebDirectory>(m, "WebDirectory")
      .def_property_readonly(
          "root",
          [](const wdq::WebDirectory& wd) { return wd.root(); })
      .def_property_readonly("depth", &wdq::WebDirectory::depth)
      .def("categories", &wdq::WebDirectory::categories,
           py::return_value_policy::reference_internal)
      .def("resources", &wdq::WebDirectory::resources,
           py::return_value_policy::reference_internal)
      .def("category", &wdq::WebDirectory::category, py::arg("id"),
           py::return_value_policy::reference_internal)
      .def("resource", &wdq::WebDirectory::resource, py::arg("id"),
           py::return_value_policy::reference_internal)
      .def("has_category", &wdq::WebDirectory::has_category)
      .def("has_resource", &wdq::WebDirectory::has_resource)
      .def("parent_of",
           [](const wdq::WebDirectory& wd, const std::string& id)
               -> std::optional<std::string> {
             const wdq::Category* parent = wd.parent_of(id);
             if (parent == nullptr) return std::nullopt;
             return parent->id;
           })
      .def("navigable_neighbors", &wdq::navigable_neighbors, py::arg("id"),
           py::arg("nav") = wdq::NavConfig{})
      .def("shortest_path_length", &wdq::shortest_path_length, py::arg("src"),
           py::arg("dst"), py::arg("nav") = wdq::NavConfig{})
      .def("to_json", [](const wdq::WebDirectory& wd) {
        return wdq::write_directory(wd);
      })
      .def("__repr__", [](const wdq::WebDirectory& wd) {
        return "WebDirectory(categories=" +
               std::to_string(wd.categories().size()) +
               ", resources=" + std::to_string(wd.resources().size()) + ")";
      });

  m.def(
      "parse_directory",
      [](const std::string& text) { return wdq::parse_directory(text); },
      py::arg("text"));
  m.def(
      "load_directory",
      [](const std::string& text) {
        return wdq::load_directory_from_string(text);
      },
      py::arg("text"));
  m.def(
      "load_directory_file",
      [](const std::string& path) {
        return wdq::load_directory_from_file(path);
      },
      py::arg("path"));
  m.def("validate", &wdq::validate, py::arg("directory"));
  m.def("skip_level", &wdq::skip_level, py::arg("directory"), py::arg("level"));

  m.def("semantic_content", &wdq::semantic_content, py::arg("directory"),
        py::arg("id"), py::arg("cfg") = wdq::SemanticsConfig{});
  m.def("similarity", &wdq::similarity, py::arg("directory"), py::arg("a"),
        py::arg("b"), py::arg("cfg") = wdq::SemanticsConfig{});
  m.def("distance", &wdq::distance, py::arg("directory"), py::arg("a"),
        py::arg("b"), py::arg("cfg") = wdq::SemanticsConfig{});

  py::class_<wdq::CategoryGap>(m, "CategoryGap")
      .def_readonly("id", &wdq::CategoryGap::id)
      .def_readonly("gap", &wdq::CategoryGap::gap)
      .def_readonly("size", &wdq::CategoryGap::size)
      .def_readonly("normalized", &wdq::CategoryGap::normalized)
      .def_readonly("vacuous", &wdq::CategoryGap::vacuous);

  py::class_<wdq::IdealityReport>(m, "IdealityReport")
      .def_readonly("gaps", &wdq::IdealityReport::gaps)
      .def_readonly("max_gap", &wdq::IdealityReport::max_gap)
      .def_readonly("ideal", &wdq::IdealityReport::ideal)
      .def_readonly("realistically_ideal",
                    &wdq::IdealityReport::realistically_ideal)
      .def_readonly("epsilon", &wdq::IdealityReport::epsilon);

  m.def("audit_ideality", &wdq::audit_ideality, py::arg("directory"),
        py::arg("cfg") = wdq::SemanticsConfig{});
  m.def("is_ideal", &wdq::is_ideal, py::arg("directory"),
        py::arg("cfg") = wdq::SemanticsConfig{});
  m.def("is_realistically_ideal", &wdq::is_realistically_ideal,
        py::arg("directory"), py::arg("cfg") = wdq::SemanticsConfig{});

  py::class_<wdq::BrowseSession>(m, "BrowseSession")
      .def(py::init([](const std::string& target_resource,
                       const std::string& target_category,
                       const std::vector<std::string>& visits,
                       bool truncated) {
             wdq::BrowseSession s;
             s.target_resource = target_resource;
             s.target_category = target_category;
             s.visits = visits;
             s.truncated = truncated;
             return s;
           }),
           py::arg("target_resource"), py::arg("target_category"),
           py::arg("visits"), py::arg("truncated") = false)
      .def_readwrite("target_resource", &wdq::BrowseSession::target_resource)
      .def_readwrite("target_category", &wdq::BrowseSession::target_category)
      .def_readwrite("visits", &wdq::BrowseSession::visits)
      .def_readwrite("truncated", &wdq::BrowseSession::truncated)
      .def("__repr__", [](const wdq::BrowseSession& s) {
        return "BrowseSession(target_resource='" + s.target_resource +
               "', visits=" + std::to_string(s.visits.size()) + ")";
      });

  py::class_<wdq::SessionMetrics>(m, "SessionMetrics")
      .def_readonly("pr", &wdq::SessionMetrics::pr)
      .def_readonly("mr", &wdq::SessionMetrics::mr)
      .def_readonly("ddp_steps", &wdq::SessionMetrics::ddp_steps)
      .def_readonly("ddp_partial_sums", &wdq::SessionMetrics::ddp_partial_sums)
      .def_readonly("ddp_total", &wdq::SessionMetrics::ddp_total)
      .def_readonly("monotone", &wdq::SessionMetrics::monotone);

  py::class_<wdq::Stats>(m, "Stats")
      .def_readonly("count", &wdq::Stats::count)
      .def_readonly("mean", &wdq::Stats::mean)
      .def_readonly("median", &wdq::Stats::median)
      .def_readonly("stddev", &wdq::Stats::stddev)
      .def_readonly("min", &wdq::Stats::min)
      .def_readonly("max", &wdq::Stats::max);

  py::class_<wdq::AggregateReport>(m, "AggregateReport")
      .def_readonly("count", &wdq::AggregateReport::count)
      .def_readonly("pr", &wdq::AggregateReport::pr)
      .def_readonly("mr", &wdq::AggregateReport::mr)
      .def_readonly("ddp_total", &wdq::AggregateReport::ddp_total)
      .def_readonly("pr_zero_fraction", &wdq::AggregateReport::pr_zero_fraction)
      .def_readonly("mr_zero_fraction", &wdq::AggregateReport::mr_zero_fraction)
      .def_readonly("monotone_fraction",
                    &wdq::AggregateReport::monotone_fraction);

  m.def("path_ratio", &wdq::path_ratio, py::arg("directory"),
        py::arg("session"), py::arg("nav") = wdq::NavConfig{});
  m.def("max_revisit", &wdq::max_revisit, py::arg("session"));
  m.def(
      "ddp",
      [](const wdq::WebDirectory& wd, const wdq::BrowseSession& s,
         const wdq::SemanticsConfig& cfg) { return wdq::ddp(wd, s, cfg); },
      py::arg("directory"), py::arg("session"),
      py::arg("cfg") = wdq::SemanticsConfig{});
  m.def("score_session", &wdq::score_session, py::arg("directory"),
        py::arg("session"), py::arg("cfg") = wdq::SemanticsConfig{},
        py::arg("nav") = wdq::NavConfig{});
  m.def("aggregate", &wdq::aggregate, py::arg("metrics"));
  m.def("session_to_json", &wdq::session_to_json, py::arg("session"));
  m.def("read_sessions_text",
        [](const std::string& text, const wdq::WebDirectory& wd) {
          std::istringstream in(text);
          auto numbered = wdq::read_sessions(in, wd);
          std::vector<wdq::BrowseSession> out;
          out.reserve(numbered.size());
          for (auto& ns : numbered) out.push_back(std::move(ns.session));
          return out;
        },
        py::arg("text"), py::arg("directory"));

  py::class_<wdq::Policy>(m, "Policy")
      .def(py::init([](const std::string& kind, double noise,
                       std::size_t max_steps) {
             auto parsed = wdq::parse_policy(kind);
             if (!parsed)
               throw std::invalid_argument("unknown policy '" + kind + "'");
             wdq::Policy p;
             p.kind = *parsed;
             p.noise = noise;
             p.max_steps = max_steps;
             return p;
           }),
           py::arg("kind"), py::arg("noise") = 0.0, py::arg("max_steps") = 0)
      .def_property_readonly(
          "kind", [](const wdq::Policy& p) { return wdq::policy_name(p.kind); })
      .def_readwrite("noise", &wdq::Policy::noise)
      .def_readwrite("max_steps", &wdq::Policy::max_steps);

  py::class_<wdq::SimConfig>(m, "SimConfig")
      .def(py::init([](std::uint64_t seed, bool allow_up,
                       const std::string& mode, double dist_cap,
                       std::optional<std::string> start) {
             wdq::SimConfig cfg;
             cfg.seed = seed;
             cfg.nav.allow_up = allow_up;
             cfg.semantics.mode = mode_from_string(mode);
             cfg.semantics.dist_cap = dist_cap;
             cfg.start = std::move(start);
             return cfg;
           }),
           py::arg("seed") = 0, py::arg("allow_up") = false,
           py::arg("mode") = "auto", py::arg("dist_cap") = 1000.0,
           py::arg("start") = std::nullopt)
      .def_readwrite("seed", &wdq::SimConfig::seed)
      .def_readwrite("start", &wdq::SimConfig::start);

  py::class_<wdq::BatchFailure>(m, "BatchFailure")
      .def_readonly("target", &wdq::BatchFailure::target)
      .def_readonly("message", &wdq::BatchFailure::message);

  py::class_<wdq::BatchResult>(m, "BatchResult")
      .def_readonly("sessions", &wdq::BatchResult::sessions)
      .def_readonly("failures", &wdq::BatchResult::failures);

  m.def("simulate", &wdq::simulate, py::arg("directory"), py::arg("target"),
        py::arg("policy") = wdq::Policy{}, py::arg("cfg") = wdq::SimConfig{});
  m.def("batch_simulate", &wdq::batch_simulate, py::arg("directory"),
        py::arg("targets"), py::arg("policy") = wdq::Policy{},
        py::arg("cfg") = wdq::SimConfig{}, py::arg("count") = 1);

  m.def("derive_seed", &wdq::derive_seed, py::arg("base"), py::arg("a"),
        py::arg("b"));
}
