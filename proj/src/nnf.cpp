#include "lassobmc/nnf.hpp"

#include "lassobmc/errors.hpp"

namespace lbmc {

namespace {

FormulaPtr rewrite(const FormulaPtr& f, bool negated) {
  using K = FormulaKind;
  auto keep = [&](K kind, FormulaPtr a, FormulaPtr b) {
    auto out = mk::binary(kind, std::move(a), std::move(b));
    auto copy = std::make_shared<Formula>(*out);
    copy->pos = f->pos;
    return FormulaPtr(copy);
  };
  auto keep1 = [&](K kind, FormulaPtr a) {
    auto copy = std::make_shared<Formula>(*mk::unary(kind, std::move(a)));
    copy->pos = f->pos;
    return FormulaPtr(copy);
  };

  switch (f->kind) {
    case K::True:
      return negated ? mk::falsity() : f;
    case K::False:
      return negated ? mk::truth() : f;
    case K::Not:
      return rewrite(f->subs[0], !negated);
    case K::And:
      return keep(negated ? K::Or : K::And, rewrite(f->subs[0], negated), rewrite(f->subs[1], negated));
    case K::Or:
      return keep(negated ? K::And : K::Or, rewrite(f->subs[0], negated), rewrite(f->subs[1], negated));
    case K::Implies:
      // a implies b == not a or b
      return keep(negated ? K::And : K::Or, rewrite(f->subs[0], !negated), rewrite(f->subs[1], negated));
    case K::All:
    case K::Exists: {
      K kind = f->kind;
      if (negated) kind = kind == K::All ? K::Exists : K::All;
      auto q = mk::quant(kind, f->var, f->exprs[0], rewrite(f->subs[0], negated));
      auto copy = std::make_shared<Formula>(*q);
      copy->pos = f->pos;
      return copy;
    }
    case K::X:
      return keep1(negated ? K::Xw : K::X, rewrite(f->subs[0], negated));
    case K::Xw:
      return keep1(negated ? K::X : K::Xw, rewrite(f->subs[0], negated));
    case K::G:
      return keep1(negated ? K::F : K::G, rewrite(f->subs[0], negated));
    case K::F:
      return keep1(negated ? K::G : K::F, rewrite(f->subs[0], negated));
    case K::U:
      return keep(negated ? K::R : K::U, rewrite(f->subs[0], negated), rewrite(f->subs[1], negated));
    case K::R:
      return keep(negated ? K::U : K::R, rewrite(f->subs[0], negated), rewrite(f->subs[1], negated));
    case K::In:
    case K::Eq:
    case K::No:
    case K::Some:
    case K::Lone:
    case K::One:
    case K::Infinite:
    case K::Finite: {
      if (!negated) return f;
      auto copy = std::make_shared<Formula>(*mk::negate(f));
      copy->pos = f->pos;
      return copy;
    }
    case K::Call:
      throw InternalError("nnf: predicate calls must be inlined first");
  }
  throw InternalError("nnf: unhandled formula kind");
}

}  // namespace

FormulaPtr nnf(const FormulaPtr& f) { return rewrite(f, false); }

bool is_nnf(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Implies:
    case FormulaKind::Call:
      return false;
    case FormulaKind::Not: {
      const auto k = f.subs[0]->kind;
      return is_atom(k) && k != FormulaKind::True && k != FormulaKind::False && k != FormulaKind::Call;
    }
    default:
      for (const auto& s : f.subs)
        if (!is_nnf(*s)) return false;
      return true;
  }
}

}  // namespace lbmc
