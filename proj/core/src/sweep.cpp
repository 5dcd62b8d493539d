#include "ising2q/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "ising2q/entanglement.hpp"
#include "ising2q/error.hpp"

namespace ising2q {

namespace {

std::string axis_path(int which) { return which == 1 ? "/axis1" : "/axis2"; }

void validate_axis(const Axis& a, int which) {
  const std::string path = axis_path(which);
  if (a.count < 2) throw SpecError(path + "/count", "must be >= 2");
  if (!std::isfinite(a.start)) throw SpecError(path + "/start", "must be finite");
  if (!std::isfinite(a.stop)) throw SpecError(path + "/stop", "must be finite");
  if (!(a.start < a.stop)) throw SpecError(path + "/stop", "must be greater than start");
}

}  // namespace

std::string_view param_name(Param p) {
  switch (p) {
    case Param::B1: return "B1";
    case Param::B2: return "B2";
    case Param::Theta1: return "theta1";
    case Param::Theta2: return "theta2";
    case Param::T: return "T";
  }
  return "?";
}

std::optional<Param> parse_param(std::string_view name) {
  for (Param p : {Param::B1, Param::B2, Param::Theta1, Param::Theta2, Param::T})
    if (param_name(p) == name) return p;
  return std::nullopt;
}

double get_param(const ModelParams& p, Param which) {
  switch (which) {
    case Param::B1: return p.B1;
    case Param::B2: return p.B2;
    case Param::Theta1: return p.theta1;
    case Param::Theta2: return p.theta2;
    case Param::T: return p.T;
  }
  return 0.0;
}

void set_param(ModelParams& p, Param which, double value) {
  switch (which) {
    case Param::B1: p.B1 = value; break;
    case Param::B2: p.B2 = value; break;
    case Param::Theta1: p.theta1 = value; break;
    case Param::Theta2: p.theta2 = value; break;
    case Param::T: p.T = value; break;
  }
}

double Axis::at(std::size_t i) const {
  if (i + 1 == static_cast<std::size_t>(count)) return stop;
  const double frac = static_cast<double>(i) / static_cast<double>(count - 1);
  return start + (stop - start) * frac;
}

std::vector<double> Axis::coordinates() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i);
  return out;
}

void SweepSpec::validate() const {
  try {
    base.validate();
  } catch (const ParameterError& e) {
    throw SpecError("/base/" + e.field(), e.what());
  }
  validate_axis(axis1, 1);
  if (axis2) {
    validate_axis(*axis2, 2);
    if (axis2->param == axis1.param) throw SpecError("/axis2/param", "must differ from axis1");
  }
  for (std::size_t k = 0; k < couplings.size(); ++k) {
    const Coupling& c = couplings[k];
    const std::string path = "/couplings/" + std::to_string(k);
    if (c.target == axis1.param || (axis2 && c.target == axis2->param))
      throw SpecError(path + "/target", "must not be a swept parameter");
    if (c.target == c.source) throw SpecError(path + "/source", "must differ from target");
    if (!std::isfinite(c.value)) throw SpecError(path + "/value", "must be finite");
  }
}

ModelParams SweepSpec::resolve(std::size_t i, std::size_t j) const {
  ModelParams p = base;
  set_param(p, axis1.param, axis1.at(i));
  if (axis2) set_param(p, axis2->param, axis2->at(j));
  for (const Coupling& c : couplings) {
    const double src = get_param(p, c.source);
    set_param(p, c.target, c.kind == CouplingKind::Ratio ? c.value * src : src + c.value);
  }
  return p;
}

std::size_t SweepSpec::size() const {
  std::size_t n = static_cast<std::size_t>(axis1.count);
  if (axis2) n *= static_cast<std::size_t>(axis2->count);
  return n;
}

double SweepResult::at(std::size_t i, std::size_t j) const {
  const std::size_t cols = axes.size() > 1 ? static_cast<std::size_t>(axes[1].count) : 1;
  return values.at(i * cols + j);
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();

  SweepResult result;
  result.axes.push_back(spec.axis1);
  if (spec.axis2) result.axes.push_back(*spec.axis2);
  result.base = spec.base;
  result.label = spec.label;
  result.values.assign(spec.size(), 0.0);

  const std::size_t cols = spec.axis2 ? static_cast<std::size_t>(spec.axis2->count) : 1;
  const std::size_t total = result.values.size();

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < total && !failed.load(); k = next.fetch_add(1)) {
      const std::size_t i = k / cols;
      const std::size_t j = k % cols;
      const ModelParams p = spec.resolve(i, j);
      try {
        result.values[k] = concurrence_at(p);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "at " << param_name(spec.axis1.param) << "=" << spec.axis1.at(i);
        if (spec.axis2) msg << ", " << param_name(spec.axis2->param) << "=" << spec.axis2->at(j);
        msg << ": " << e.what();
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::make_exception_ptr(SweepPointError(msg.str()));
        failed.store(true);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

ArgMax argmax(const SweepResult& result) {
  if (result.values.empty()) throw SpecError("", "argmax of an empty sweep");
  std::size_t best = 0;
  for (std::size_t k = 1; k < result.values.size(); ++k)
    if (result.values[k] > result.values[best]) best = k;

  const std::size_t cols = result.axes.size() > 1 ? static_cast<std::size_t>(result.axes[1].count) : 1;
  ArgMax out;
  out.value = result.values[best];
  out.indices.push_back(best / cols);
  out.coordinates.push_back(result.axes[0].at(best / cols));
  if (result.axes.size() > 1) {
    out.indices.push_back(best % cols);
    out.coordinates.push_back(result.axes[1].at(best % cols));
  }
  return out;
}

}  // namespace ising2q
