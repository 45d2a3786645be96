#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sinr/bench.hpp"
#include "sinr/io.hpp"
#include "sinr/oracle.hpp"
#include "sinr/report.hpp"
#include "sinr/scheduler.hpp"

namespace py = pybind11;
using namespace sinr;

PYBIND11_MODULE(_core, m) {
  m.doc() = "SINR link scheduling with the mean power assignment";

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y);

  py::class_<Link>(m, "Link")
      .def(py::init<>())
      .def(py::init([](std::int64_t id, Point s, Point r) {
             return Link{id, s, r};
           }),
           py::arg("id"), py::arg("sender"), py::arg("receiver"))
      .def_readwrite("id", &Link::id)
      .def_readwrite("sender", &Link::sender)
      .def_readwrite("receiver", &Link::receiver);

  py::enum_<ModelKind>(m, "ModelKind")
      .value("Directed", ModelKind::Directed)
      .value("Bidirectional", ModelKind::Bidirectional);

  py::class_<LinkInstance>(m, "LinkInstance")
      .def(py::init<>())
      .def_readwrite("links", &LinkInstance::links)
      .def_readwrite("model", &LinkInstance::model)
      .def_readwrite("alpha", &LinkInstance::alpha)
      .def_readwrite("beta", &LinkInstance::beta)
      .def_readwrite("noise", &LinkInstance::noise)
      .def("__len__", &LinkInstance::size);

  m.def("distance", &distance);
  m.def("link_length", &link_length);
  m.def("asym_distance", &asym_distance);
  m.def("length_diversity", &length_diversity);
  m.def("validate", &validate);

  py::enum_<PowerKind>(m, "PowerKind")
      .value("Uniform", PowerKind::Uniform)
      .value("Mean", PowerKind::Mean)
      .value("Linear", PowerKind::Linear)
      .value("Explicit", PowerKind::Explicit);

  py::class_<PowerAssignment>(m, "PowerAssignment")
      .def(py::init<>())
      .def_readwrite("kind", &PowerAssignment::kind)
      .def_readwrite("scale", &PowerAssignment::scale)
      .def_readwrite("explicit_powers", &PowerAssignment::explicit_powers)
      .def_static("uniform", &PowerAssignment::uniform, py::arg("c") = 1.0)
      .def_static("mean", &PowerAssignment::mean, py::arg("c") = 1.0)
      .def_static("linear", &PowerAssignment::linear, py::arg("c") = 1.0)
      .def_static("explicit_table", &PowerAssignment::explicit_table);

  m.def("power_of", &power_of);
  m.def("affectance", &affectance);
  m.def("slot_affectance", &slot_affectance);
  m.def("is_sinr_feasible", &is_sinr_feasible);

  py::class_<SignalReport>(m, "SignalReport")
      .def_readonly("worst_affectance", &SignalReport::worst_affectance)
      .def_readonly("signal_level", &SignalReport::signal_level)
      .def_readonly("worst_link", &SignalReport::worst_link);

  m.def("signal_level", &signal_level);
  m.def("is_p_signal", &is_p_signal);
  m.def("noise_power_ok", &noise_power_ok);

  py::enum_<IndependenceCriterion>(m, "IndependenceCriterion")
      .value("General", IndependenceCriterion::General)
      .value("MeanPower", IndependenceCriterion::MeanPower);

  m.def("q_independent_pair", &q_independent_pair);
  m.def("q_independent_mean", &q_independent_mean);
  m.def("is_q_independent_set", &is_q_independent_set);
  m.def("tau_close", &tau_close);
  m.def("boundedness",
        py::overload_cast<const LinkInstance&, const std::vector<std::int64_t>&>(&boundedness));
  m.def("is_well_separated",
        py::overload_cast<const LinkInstance&, const std::vector<std::int64_t>&>(
            &is_well_separated));

  py::class_<ConflictGraph>(m, "ConflictGraph")
      .def_readonly("vertices", &ConflictGraph::vertices)
      .def_readonly("adj", &ConflictGraph::adj)
      .def_readonly("q", &ConflictGraph::q)
      .def_readonly("model", &ConflictGraph::model)
      .def("__len__", &ConflictGraph::size)
      .def("edge_count", &ConflictGraph::edge_count)
      .def("adjacent", &ConflictGraph::adjacent);

  m.def("build_conflict_graph", &build_conflict_graph);
  m.def("write_edge_list", &write_edge_list);
  m.def("read_edge_list",
        py::overload_cast<const std::string&>(&read_edge_list));

  py::class_<DegeneracyOrder>(m, "DegeneracyOrder")
      .def_readonly("order", &DegeneracyOrder::order)
      .def_readonly("delta", &DegeneracyOrder::delta);

  py::class_<Coloring>(m, "Coloring")
      .def_readonly("colors", &Coloring::colors)
      .def_readonly("num_colors", &Coloring::num_colors)
      .def("color_of", &Coloring::color_of);

  m.def("degeneracy_order", &degeneracy_order);
  m.def("hochbaum_color", &hochbaum_color);
  m.def("is_proper", &is_proper);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def(py::init([](PowerAssignment pa, std::vector<std::vector<std::int64_t>> slots) {
             return Schedule{std::move(pa), std::move(slots)};
           }),
           py::arg("power"), py::arg("slots"))
      .def_readwrite("power", &Schedule::power)
      .def_readwrite("slots", &Schedule::slots)
      .def("slot_count", &Schedule::slot_count)
      .def("link_count", &Schedule::link_count);

  m.def("refine", &refine);

  m.def("partition_equilength", &partition_equilength);
  m.def("bucketize", &bucketize);
  m.def(
      "schedule_independent",
      [](const LinkInstance& inst, const std::vector<std::int64_t>& q_set, double q) {
        return schedule_independent(inst, q_set, q);
      },
      py::arg("inst"), py::arg("links"), py::arg("q"));
  m.def(
      "schedule_pc", [](const LinkInstance& inst) { return schedule_pc(inst); },
      py::arg("inst"));
  m.def("noise_lift", py::overload_cast<const LinkInstance&>(&noise_lift));
  m.def("noise_lift",
        py::overload_cast<const LinkInstance&, const Schedule&>(&noise_lift));

  m.def("enumerate_feasible", &enumerate_feasible, py::arg("inst"), py::arg("power"),
        py::arg("max_n") = 16);
  m.def("optimal_schedule_fixed", &optimal_schedule_fixed, py::arg("inst"), py::arg("power"),
        py::arg("max_n") = 12);
  m.def("pc_feasible", &pc_feasible, py::arg("inst"), py::arg("links"), py::arg("max_n") = 16);
  m.def("optimal_schedule_pc", &optimal_schedule_pc, py::arg("inst"), py::arg("max_n") = 12);
  m.def("chromatic_exact", &chromatic_exact, py::arg("graph"), py::arg("max_n") = 12);
  m.def("gain_matrix", &gain_matrix);

  py::enum_<LengthDist>(m, "LengthDist")
      .value("Fixed", LengthDist::Fixed)
      .value("Uniform", LengthDist::Uniform)
      .value("LambdaTarget", LengthDist::LambdaTarget);

  py::class_<GeneratorSpec>(m, "GeneratorSpec")
      .def(py::init<>())
      .def_readwrite("n", &GeneratorSpec::n)
      .def_readwrite("seed", &GeneratorSpec::seed)
      .def_readwrite("area_side", &GeneratorSpec::area_side)
      .def_readwrite("dist", &GeneratorSpec::dist)
      .def_readwrite("length", &GeneratorSpec::length)
      .def_readwrite("length_min", &GeneratorSpec::length_min)
      .def_readwrite("length_max", &GeneratorSpec::length_max)
      .def_readwrite("lambda_target", &GeneratorSpec::lambda_target)
      .def_readwrite("model", &GeneratorSpec::model)
      .def_readwrite("alpha", &GeneratorSpec::alpha)
      .def_readwrite("beta", &GeneratorSpec::beta)
      .def_readwrite("noise", &GeneratorSpec::noise);

  m.def("generate", &generate);

  py::class_<ScheduleReport>(m, "ScheduleReport")
      .def_readonly("slot_count", &ScheduleReport::slot_count)
      .def_readonly("feasible", &ScheduleReport::feasible)
      .def_readonly("worst_affectance", &ScheduleReport::worst_affectance)
      .def_readonly("signal_level", &ScheduleReport::signal_level)
      .def_readonly("worst_link", &ScheduleReport::worst_link)
      .def_readonly("lambda_", &ScheduleReport::lambda)
      .def_readonly("covered", &ScheduleReport::covered)
      .def_readonly("instance_n", &ScheduleReport::instance_n)
      .def_readonly("slot_boundedness", &ScheduleReport::slot_boundedness)
      .def_readonly("violations", &ScheduleReport::violations);

  m.def("verify", &verify);

  m.def("dumps_instance",
        [](const LinkInstance& inst) { return dump_json(instance_to_json(inst)); });
  m.def("loads_instance",
        [](const std::string& text) { return instance_from_json(json::parse(text)); });
  m.def("dumps_schedule",
        [](const Schedule& sched) { return dump_json(schedule_to_json(sched)); });
  m.def("loads_schedule",
        [](const std::string& text) { return schedule_from_json(json::parse(text)); });
  m.def("dumps_report",
        [](const ScheduleReport& rep) { return dump_json(report_to_json(rep)); });
}
