#include "qdtm/measure.hpp"

#include "qdtm/error.hpp"

namespace qdtm {

namespace {

Interval compact_in(const Space& space, const Rational& lo, const Rational& hi,
                    const char* what) {
  require(lo <= hi, "InvalidMeasure", std::string(what) + " needs lo <= hi");
  if (space.is_compact())
    require(space.contains(lo) && space.contains(hi), "InvalidMeasure",
            std::string(what) + " leaves the compact space");
  return Interval::closed(lo, hi);
}

}  // namespace

Dtm Dtm::simple_contains(const Space& space, const Rational& lo, const Rational& hi) {
  return Dtm(space, SimpleContains{compact_in(space, lo, hi, "SimpleContains")});
}

Dtm Dtm::dirac(const Space& space, const Rational& x) {
  if (space.is_compact())
    require(space.contains(x), "InvalidMeasure", "Dirac point leaves the space");
  return Dtm(space, Dirac{x});
}

Dtm Dtm::lebesgue_on(const Space& space, const Rational& lo, const Rational& hi) {
  return Dtm(space, LebesgueOn{compact_in(space, lo, hi, "LebesgueOn")});
}

Dtm Dtm::combo(const Space& space, std::vector<std::pair<Rational, Dtm>> terms) {
  ConicCombo combo;
  combo.terms.reserve(terms.size());
  for (auto& [coeff, sub] : terms) {
    require(coeff >= 0, "InvalidMeasure", "conic combination needs coefficients >= 0");
    require_same_space(space, sub.space());
    combo.terms.emplace_back(coeff, std::make_shared<const Dtm>(std::move(sub)));
  }
  return Dtm(space, std::move(combo));
}

Rational Dtm::operator()(const IntervalSet& set) const {
  require(is_admissible(set, space_), "NotAdmissibleSet",
          "measures evaluate open or closed sets only, got " + interval_set_str(set));
  return eval_unchecked(set);
}

Rational Dtm::eval_unchecked(const IntervalSet& set) const {
  struct Visitor {
    const IntervalSet& set;
    Rational operator()(const SimpleContains& n) const {
      return is_subset(IntervalSet(n.d), set) ? 1 : 0;
    }
    Rational operator()(const Dirac& n) const { return set.contains(n.x) ? 1 : 0; }
    Rational operator()(const LebesgueOn& n) const {
      return total_length(set_intersect(set, IntervalSet(n.i)));
    }
    Rational operator()(const ConicCombo& n) const {
      Rational sum = 0;
      for (const auto& [coeff, sub] : n.terms)
        sum += coeff * sub->eval_unchecked(set);
      return sum;
    }
  };
  return std::visit(Visitor{set}, node_);
}

Rational Dtm::total_mass() const { return eval_unchecked(whole_space(space_)); }

bool Dtm::is_measure_type() const {
  struct Visitor {
    bool operator()(const Dtm::SimpleContains& n) const { return n.d.singleton(); }
    bool operator()(const Dtm::Dirac&) const { return true; }
    bool operator()(const Dtm::LebesgueOn&) const { return true; }
    bool operator()(const Dtm::ConicCombo& n) const {
      for (const auto& [coeff, sub] : n.terms)
        if (coeff > 0 && !sub->is_measure_type()) return false;
      return true;
    }
  };
  return std::visit(Visitor{}, node_);
}

std::string Dtm::describe() const {
  struct Visitor {
    std::string operator()(const Dtm::SimpleContains& n) const {
      return "simple" + interval_str(n.d);
    }
    std::string operator()(const Dtm::Dirac& n) const {
      return "dirac(" + rational_str(n.x) + ")";
    }
    std::string operator()(const Dtm::LebesgueOn& n) const {
      return "lebesgue" + interval_str(n.i);
    }
    std::string operator()(const Dtm::ConicCombo& n) const {
      std::string out = "(";
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) out += " + ";
        out += rational_str(n.terms[i].first) + "*" + n.terms[i].second->describe();
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, node_);
}

}  // namespace qdtm
