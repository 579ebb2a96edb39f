#include "efdkit/random_terms.hpp"

#include <algorithm>
#include <vector>

#include "efdkit/errors.hpp"

namespace efdkit {

namespace {

Term leaf(std::mt19937_64& rng, const TermGenOptions& opt) {
  const int vars = opt.x_vars + opt.z_vars;
  std::uniform_int_distribution<int> pick(0, vars);  // `vars` means the constant 0
  const int v = pick(rng);
  if (v == vars) return Term::zero();
  if (v < opt.x_vars) return Term::x(v + 1);
  return Term::z(v - opt.x_vars + 1);
}

std::int64_t coefficient(std::mt19937_64& rng, const TermGenOptions& opt) {
  const std::int64_t lo = opt.signature == Signature::Group ? opt.coef_min : std::max<std::int64_t>(1, opt.coef_min);
  const std::int64_t hi = std::max(lo, opt.coef_max);
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Term build(std::mt19937_64& rng, const TermGenOptions& opt, int depth) {
  if (depth <= 1) return leaf(rng, opt);
  std::vector<Op> ops{Op::Var, Op::Plus, Op::Scalar};
  switch (opt.signature) {
    case Signature::Group: ops.insert(ops.end(), {Op::Neg, Op::Join, Op::Meet}); break;
    case Signature::Hoop: ops.push_back(Op::Diff); break;
    case Signature::MV:
      ops.insert(ops.end(), {Op::MVNeg, Op::Join, Op::Meet, Op::Diff, Op::Times, Op::Power});
      break;
  }
  const Op op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
  switch (op) {
    case Op::Plus: return Term::plus(build(rng, opt, depth - 1), build(rng, opt, depth - 1));
    case Op::Join: return Term::join(build(rng, opt, depth - 1), build(rng, opt, depth - 1));
    case Op::Meet: return Term::meet(build(rng, opt, depth - 1), build(rng, opt, depth - 1));
    case Op::Diff: return Term::diff(build(rng, opt, depth - 1), build(rng, opt, depth - 1));
    case Op::Times: return Term::times(build(rng, opt, depth - 1), build(rng, opt, depth - 1));
    case Op::Neg: return Term::neg(build(rng, opt, depth - 1));
    case Op::MVNeg: return Term::mv_neg(build(rng, opt, depth - 1));
    case Op::Scalar: return Term::scalar(coefficient(rng, opt), build(rng, opt, depth - 1));
    case Op::Power:
      return Term::power(std::uniform_int_distribution<int>(1, std::max(1, opt.max_power))(rng),
                         build(rng, opt, depth - 1));
    default: return leaf(rng, opt);
  }
}

}  // namespace

Term random_term(std::mt19937_64& rng, const TermGenOptions& opt) {
  if (opt.x_vars + opt.z_vars < 0 || opt.max_depth < 1) throw InvalidArgument("bad term generator options");
  const int depth = std::uniform_int_distribution<int>(1, opt.max_depth)(rng);
  return build(rng, opt, depth);
}

}  // namespace efdkit
