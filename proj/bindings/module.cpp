#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vinfer/af_io.hpp"
#include "vinfer/emotions.hpp"
#include "vinfer/engine.hpp"
#include "vinfer/report.hpp"
#include "vinfer/scenario_io.hpp"

namespace py = pybind11;
using namespace vinfer;

PYBIND11_MODULE(_vinfer, m) {
  m.doc() = "Value inference from observed emotion expressions";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ScenarioParseError", PyExc_ValueError);
  py::register_exception<FrameworkError>(m, "FrameworkError", PyExc_ValueError);
  py::register_exception<EnumerationCapError>(m, "EnumerationCapError", PyExc_ValueError);
  py::register_exception<SessionError>(m, "SessionError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ValueError);

  py::enum_<EmotionKind>(m, "EmotionKind")
      .value("Joy", EmotionKind::Joy)
      .value("Distress", EmotionKind::Distress);

  py::enum_<Label>(m, "Label")
      .value("In", Label::In)
      .value("Out", Label::Out)
      .value("Undec", Label::Undec);

  py::enum_<Argument::Polarity>(m, "Polarity")
      .value("Supports", Argument::Polarity::Supports)
      .value("Opposes", Argument::Polarity::Opposes);

  py::enum_<Expression::Form>(m, "Form")
      .value("Complete", Expression::Form::Complete)
      .value("Incomplete", Expression::Form::Incomplete)
      .value("Absent", Expression::Form::Absent);

  py::enum_<Diagnostic::Severity>(m, "Severity")
      .value("Warning", Diagnostic::Severity::Warning)
      .value("Fatal", Diagnostic::Severity::Fatal);

  py::enum_<AfFormat>(m, "AfFormat")
      .value("Apx", AfFormat::Apx)
      .value("Tgf", AfFormat::Tgf)
      .value("Dot", AfFormat::Dot);

  py::enum_<ReportMode>(m, "ReportMode")
      .value("Human", ReportMode::Human)
      .value("Structured", ReportMode::Structured);

  py::class_<Literal>(m, "Literal")
      .def(py::init<std::string, bool>(), py::arg("atom"), py::arg("positive") = true)
      .def_readwrite("atom", &Literal::atom)
      .def_readwrite("positive", &Literal::positive)
      .def("complement", &Literal::complement)
      .def("str", &Literal::str)
      .def("__str__", &Literal::str)
      .def("__repr__", [](const Literal& v) { return "Literal('" + v.str() + "')"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Literal& v) { return py::hash(py::str(v.str())); });

  py::class_<State>(m, "State")
      .def(py::init<>())
      .def(py::init<std::string, std::map<std::string, bool>>(), py::arg("id"),
           py::arg("valuation"))
      .def_readwrite("id", &State::id)
      .def_readwrite("valuation", &State::valuation);

  py::class_<Transition>(m, "Transition")
      .def(py::init<std::string, std::string, std::string>(), py::arg("source"),
           py::arg("action"), py::arg("target"))
      .def_readwrite("source", &Transition::source)
      .def_readwrite("action", &Transition::action)
      .def_readwrite("target", &Transition::target)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Transition& t) {
        return py::hash(py::str(t.source + " -" + t.action + "-> " + t.target));
      });

  py::class_<WorldModel>(m, "WorldModel")
      .def(py::init<>())
      .def_readwrite("atoms", &WorldModel::atoms)
      .def_readwrite("agents", &WorldModel::agents)
      .def_readwrite("actions", &WorldModel::actions)
      .def_readwrite("states", &WorldModel::states)
      .def_readwrite("transitions", &WorldModel::transitions)
      .def_readwrite("epistemic", &WorldModel::epistemic)
      .def_readwrite("values", &WorldModel::values)
      .def("literal_universe", &WorldModel::literal_universe)
      .def("epistemic_successors", &WorldModel::epistemic_successors, py::arg("agent"),
           py::arg("state"))
      .def("values_at", &WorldModel::values_at, py::arg("agent"), py::arg("state"))
      .def(py::self == py::self);

  py::class_<Formula>(m, "Formula")
      .def_static("lit", &Formula::lit)
      .def_static("negation", &Formula::negation)
      .def_static("conjunction", &Formula::conjunction)
      .def_static("disjunction", &Formula::disjunction)
      .def_static("believes", &Formula::believes)
      .def_static("before_action", &Formula::before_action)
      .def_static("has_value", &Formula::has_value)
      .def("str", &Formula::str)
      .def("__str__", &Formula::str);

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_readonly("severity", &Diagnostic::severity)
      .def_readonly("message", &Diagnostic::message)
      .def("__repr__", [](const Diagnostic& d) {
        return std::string(d.severity == Diagnostic::Severity::Fatal ? "error: "
                                                                     : "warning: ") +
               d.message;
      });

  py::class_<CompleteEmotion>(m, "CompleteEmotion")
      .def(py::init<std::string, EmotionKind, std::string, Literal>(), py::arg("agent"),
           py::arg("kind"), py::arg("action"), py::arg("value"))
      .def_readwrite("agent", &CompleteEmotion::agent)
      .def_readwrite("kind", &CompleteEmotion::kind)
      .def_readwrite("action", &CompleteEmotion::action)
      .def_readwrite("value", &CompleteEmotion::value);

  py::class_<IncompleteEmotion>(m, "IncompleteEmotion")
      .def(py::init<std::string, EmotionKind, std::string>(), py::arg("agent"),
           py::arg("kind"), py::arg("action"))
      .def_readwrite("agent", &IncompleteEmotion::agent)
      .def_readwrite("kind", &IncompleteEmotion::kind)
      .def_readwrite("action", &IncompleteEmotion::action);

  py::class_<BackgroundRule>(m, "BackgroundRule")
      .def(py::init<std::string, Literal>(), py::arg("action"), py::arg("consequence"))
      .def_readwrite("action", &BackgroundRule::action)
      .def_readwrite("consequence", &BackgroundRule::consequence)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const BackgroundRule& r) {
        return py::hash(py::str(r.action + " => " + r.consequence.str()));
      });

  py::class_<Expression>(m, "Expression")
      .def_static("complete", &Expression::complete, py::arg("kind"), py::arg("value"))
      .def_static("incomplete", &Expression::incomplete, py::arg("kind"))
      .def_static("absent", &Expression::absent, py::arg("kind"))
      .def_readonly("form", &Expression::form)
      .def_readonly("kind", &Expression::kind)
      .def_readonly("value", &Expression::value)
      .def("str", &Expression::str)
      .def("__str__", &Expression::str)
      .def(py::self == py::self);

  py::class_<AutoExpression>(m, "AutoExpression")
      .def(py::init<std::optional<EmotionKind>>(), py::arg("kind") = std::nullopt)
      .def_readwrite("kind", &AutoExpression::kind)
      .def(py::self == py::self);

  py::class_<Observation>(m, "Observation")
      .def(py::init<int, std::string, std::string, std::string, Expression>(),
           py::arg("index"), py::arg("state"), py::arg("expresser"), py::arg("action"),
           py::arg("expression"))
      .def_readwrite("index", &Observation::index)
      .def_readwrite("state", &Observation::state)
      .def_readwrite("expresser", &Observation::expresser)
      .def_readwrite("action", &Observation::action)
      .def_readwrite("expression", &Observation::expression)
      .def(py::self == py::self);

  py::class_<ScriptedEvent>(m, "ScriptedEvent")
      .def(py::init<int, std::string, std::string, ScriptedExpression>(), py::arg("index"),
           py::arg("state"), py::arg("action"), py::arg("expression"))
      .def_readwrite("index", &ScriptedEvent::index)
      .def_readwrite("state", &ScriptedEvent::state)
      .def_readwrite("action", &ScriptedEvent::action)
      .def_readwrite("expression", &ScriptedEvent::expression)
      .def(py::self == py::self);

  py::class_<Argument>(m, "Argument")
      .def_readonly("polarity", &Argument::polarity)
      .def_readonly("value", &Argument::value)
      .def_readonly("obs_index", &Argument::obs_index)
      .def_readonly("action", &Argument::action)
      .def_readonly("kind", &Argument::kind)
      .def("id", &Argument::id)
      .def("__repr__", [](const Argument& a) { return "Argument('" + a.id() + "')"; })
      .def(py::self == py::self);

  py::class_<ArgumentationFramework>(m, "ArgumentationFramework")
      .def(py::init<>())
      .def_readwrite("arguments", &ArgumentationFramework::arguments)
      .def_readwrite("attacks", &ArgumentationFramework::attacks)
      .def(py::self == py::self);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("model", &Scenario::model)
      .def_readwrite("observer", &Scenario::observer)
      .def_readwrite("expresser", &Scenario::expresser)
      .def_readwrite("rules", &Scenario::rules)
      .def_readwrite("script", &Scenario::script)
      .def_readwrite("options", &Scenario::options)
      .def("disclose_full", &Scenario::disclose_full)
      .def(py::self == py::self);

  py::class_<ValueVerdicts>(m, "ValueVerdicts")
      .def(py::init<>())
      .def_readwrite("believed", &ValueVerdicts::believed)
      .def_readwrite("believed_not", &ValueVerdicts::believed_not)
      .def_readwrite("undecided", &ValueVerdicts::undecided)
      .def(py::self == py::self);

  py::class_<ObserveDelta>(m, "ObserveDelta")
      .def_readonly("new_arguments", &ObserveDelta::new_arguments)
      .def_readonly("new_attacks", &ObserveDelta::new_attacks)
      .def_readonly("notes", &ObserveDelta::notes)
      .def(py::self == py::self);

  py::class_<Session>(m, "Session")
      .def(py::init<std::string, std::set<BackgroundRule>>(), py::arg("expresser"),
           py::arg("rules"))
      .def("observe", &Session::observe, py::arg("observation"))
      .def("verdicts", &Session::verdicts)
      .def_property_readonly("expresser", &Session::expresser)
      .def_property_readonly("rules", &Session::rules)
      .def_property_readonly("history", &Session::history)
      .def_property_readonly("arguments", &Session::arguments)
      .def_property_readonly("framework", &Session::framework)
      .def_property_readonly("labelling", &Session::labelling);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("observation", &TraceStep::observation)
      .def_readonly("delta", &TraceStep::delta)
      .def_readonly("verdicts", &TraceStep::verdicts);

  py::class_<Trace>(m, "Trace")
      .def_readonly("steps", &Trace::steps)
      .def("final_verdicts", &Trace::final_verdicts);

  m.def("eval_formula", &eval, py::arg("model"), py::arg("state"), py::arg("formula"));
  m.def("predecessors", &predecessors, py::arg("model"), py::arg("state"),
        py::arg("action"));
  m.def("validate", &validate, py::arg("model"));
  m.def("has_fatal", &has_fatal, py::arg("diagnostics"));
  m.def("complete_emotion_formula", &complete_emotion_formula, py::arg("emotion"));
  m.def("holds_complete", &holds_complete, py::arg("model"), py::arg("state"),
        py::arg("emotion"));
  m.def("holds_incomplete", &holds_incomplete, py::arg("model"), py::arg("state"),
        py::arg("emotion"));
  m.def("witnesses", &witnesses, py::arg("model"), py::arg("state"), py::arg("emotion"));
  m.def("candidate_value", &candidate_value, py::arg("kind"), py::arg("consequence"));
  m.def("build_arguments", &build_arguments, py::arg("rules"), py::arg("history"));
  m.def("build_afv", &build_afv, py::arg("arguments"));
  m.def("attacks_argument", &attacks_argument, py::arg("attacker"), py::arg("target"));
  m.def("grounded", &grounded, py::arg("framework"));
  m.def("characteristic_oracle", &characteristic_oracle, py::arg("framework"));
  m.def("enumerate_complete", &enumerate_complete, py::arg("framework"),
        py::arg("cap") = kEnumerationCap);
  m.def("verdicts_of", &verdicts_of, py::arg("arguments"), py::arg("labelling"));
  m.def("simulate", &simulate, py::arg("scenario"));
  m.def("parse_scenario",
        [](const std::string& text) { return parse_scenario(text); }, py::arg("text"));
  m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
  m.def("validate_scenario", &validate_scenario, py::arg("scenario"));
  m.def(
      "export_af",
      [](const ArgumentationFramework& af, AfFormat format,
         const std::set<std::string>& blocking) { return export_af(af, format, blocking); },
      py::arg("framework"), py::arg("format"),
      py::arg("blocking") = std::set<std::string>{});
  m.def("parse_apx", [](const std::string& text) { return parse_apx(text); },
        py::arg("text"));
  m.def("parse_tgf", [](const std::string& text) { return parse_tgf(text); },
        py::arg("text"));
  m.def("render_report", &render_report, py::arg("trace"), py::arg("mode"));
  m.def("render_verdicts", &render_verdicts, py::arg("verdicts"));
}
