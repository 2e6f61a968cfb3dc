#include "extendkit/extension.hpp"

#include "extendkit/parallel.hpp"

namespace extendkit {

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::hausdorff: return "hausdorff";
    case OperatorKind::omega: return "omega";
    case OperatorKind::mho: return "mho";
    case OperatorKind::theta: return "theta";
    case OperatorKind::bohr: return "bohr";
    case OperatorKind::pasch: return "pasch";
  }
  return "unknown";
}

std::optional<OperatorKind> operator_by_name(std::string_view name) {
  for (auto k : {OperatorKind::hausdorff, OperatorKind::omega, OperatorKind::mho,
                 OperatorKind::theta, OperatorKind::bohr, OperatorKind::pasch}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

Extension::Extension(BoundedFunction phi, OperatorSpec spec)
    : phi_(std::move(phi)), spec_(std::move(spec)) {
  const char* name = to_string(spec_.kind);
  const bool needs_extender =
      spec_.kind == OperatorKind::omega || spec_.kind == OperatorKind::theta;
  if (needs_extender && !spec_.extender) {
    throw InputError(std::string(name) + " needs an extender (tietze or riesz)");
  }
  if (spec_.kind == OperatorKind::mho && !spec_.dual) {
    throw InputError("mho needs a dual weight (dieudonne or the reciprocal of an extender)");
  }
  if (spec_.kappa && spec_.kind != OperatorKind::pasch) {
    throw InputError("kappa only applies to the pasch operator");
  }
  if (spec_.kappa && !(*spec_.kappa >= 0.0)) throw InputError("kappa must be >= 0");

  switch (spec_.kind) {
    case OperatorKind::omega:
      if (phi_.min() < 0.0) {
        throw InputError("omega requires a nonnegative function; negative values are not "
                         "extended continuously (use theta for signed functions)");
      }
      break;
    case OperatorKind::mho:
      if (phi_.min() < 0.0) throw InputError("mho requires a nonnegative function");
      if (phi_.min() == 0.0) {
        warnings_.push_back(
            "mho: min phi = 0, so the extension vanishes off the sample wherever a zero is "
            "reachable and is discontinuous at points of A where phi > 0");
      }
      break;
    case OperatorKind::theta:
      pos_ = pos_part(phi_);
      neg_ = neg_part(phi_);
      break;
    case OperatorKind::pasch:
      if (!spec_.kappa && phi_.min() < 0.0) {
        throw InputError("pasch requires a nonnegative function (or pass kappa)");
      }
      break;
    default:
      break;
  }
}

Extension Extension::with_strategy(Strategy s) const {
  Extension copy = *this;
  copy.spec_.strategy = s;
  return copy;
}

EvalResult Extension::evaluate(const Point& p) const {
  const Strategy s = spec_.strategy;
  switch (spec_.kind) {
    case OperatorKind::hausdorff: return evaluate_hausdorff(phi_, p, s);
    case OperatorKind::omega: return evaluate_omega(phi_, *spec_.extender, p, s);
    case OperatorKind::mho: return evaluate_mho(phi_, *spec_.dual, p, s);
    case OperatorKind::theta: return evaluate_theta_parts(*pos_, *neg_, *spec_.extender, p, s);
    case OperatorKind::bohr: return evaluate_bohr(phi_, p, s);
    case OperatorKind::pasch:
      if (spec_.kappa) return evaluate_inf_convolution(phi_, *spec_.kappa, p, s);
      return evaluate_pasch(phi_, p, s);
  }
  return {};
}

std::vector<double> Extension::evaluate_many(std::span<const Point> queries,
                                             unsigned threads) const {
  std::vector<double> out(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) { out[i] = evaluate(queries[i]).value; },
               threads);
  return out;
}

}  // namespace extendkit
