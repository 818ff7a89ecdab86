#include "qdtm/step_function.hpp"

#include "qdtm/error.hpp"

#include <algorithm>

namespace qdtm {

namespace {

using Node = MonotonePwFunction::Node;
using Direction = MonotonePwFunction::Direction;

void validate(Direction dir, const std::vector<Node>& nodes) {
  require(!nodes.empty(), "InvalidStepFunction", "needs at least one node");
  auto ordered = [&](const Rational& a, const Rational& b) {
    return dir == Direction::NonDecreasing ? a <= b : b <= a;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(ordered(nodes[i].left, nodes[i].value) &&
                ordered(nodes[i].value, nodes[i].right),
            "InvalidStepFunction", "node limits out of monotone order");
    if (i) {
      require(nodes[i - 1].t < nodes[i].t, "InvalidStepFunction",
              "breakpoints must be strictly increasing");
      require(ordered(nodes[i - 1].right, nodes[i].left), "InvalidStepFunction",
              "affine segment contradicts monotone direction");
    }
  }
}

Rational segment_slope(const Node& a, const Node& b) {
  return (b.left - a.right) / (b.t - a.t);
}

std::vector<Node> canonicalize(std::vector<Node> nodes) {
  // Remove nodes that neither jump nor change slope.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      if (n.left != n.value || n.value != n.right) continue;
      bool removable = false;
      if (i == 0 && nodes.size() > 1) {
        removable = segment_slope(nodes[0], nodes[1]) == 0;
      } else if (i + 1 == nodes.size() && nodes.size() > 1) {
        removable = segment_slope(nodes[i - 1], nodes[i]) == 0;
      } else if (i > 0 && i + 1 < nodes.size()) {
        removable = segment_slope(nodes[i - 1], nodes[i]) ==
                    segment_slope(nodes[i], nodes[i + 1]);
      }
      if (removable) {
        nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (nodes.size() == 1 && nodes[0].left == nodes[0].value &&
      nodes[0].value == nodes[0].right) {
    nodes[0].t = 0;  // canonical constant
  }
  return nodes;
}

}  // namespace

MonotonePwFunction::MonotonePwFunction(Direction direction, std::vector<Node> nodes)
    : direction_(direction), nodes_(std::move(nodes)) {
  validate(direction_, nodes_);
  nodes_ = canonicalize(std::move(nodes_));
}

MonotonePwFunction MonotonePwFunction::constant(const Rational& c) {
  return MonotonePwFunction(Direction::NonDecreasing, {{0, c, c, c}});
}

Rational MonotonePwFunction::value(const Rational& t) const {
  if (t < nodes_.front().t) return nodes_.front().left;
  if (t > nodes_.back().t) return nodes_.back().right;
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Node& n, const Rational& v) { return n.t < v; });
  if (it != nodes_.end() && it->t == t) return it->value;
  const Node& a = *(it - 1);
  const Node& b = *it;
  return a.right + segment_slope(a, b) * (t - a.t);
}

Rational MonotonePwFunction::left_limit(const Rational& t) const {
  if (t <= nodes_.front().t) return nodes_.front().left;
  if (t > nodes_.back().t) return nodes_.back().right;
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Node& n, const Rational& v) { return n.t < v; });
  if (it != nodes_.end() && it->t == t) return it->left;
  const Node& a = *(it - 1);
  const Node& b = *it;
  return a.right + segment_slope(a, b) * (t - a.t);
}

Rational MonotonePwFunction::right_limit(const Rational& t) const {
  if (t < nodes_.front().t) return nodes_.front().left;
  if (t >= nodes_.back().t) return nodes_.back().right;
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Node& n, const Rational& v) { return n.t < v; });
  if (it != nodes_.end() && it->t == t) return it->right;
  const Node& a = *(it - 1);
  const Node& b = *it;
  return a.right + segment_slope(a, b) * (t - a.t);
}

Rational MonotonePwFunction::riemann_integral(const Rational& a, const Rational& b) const {
  require(a <= b, "InvalidInterval", "integration bounds out of order");
  if (a == b) return 0;
  std::vector<Rational> cuts{a, b};
  for (const Node& n : nodes_)
    if (n.t > a && n.t < b) cuts.push_back(n.t);
  std::sort(cuts.begin(), cuts.end());
  Rational sum = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational lo = cuts[i], hi = cuts[i + 1];
    sum += (right_limit(lo) + left_limit(hi)) / 2 * (hi - lo);
  }
  return sum;
}

std::vector<Rational> MonotonePwFunction::left_discontinuities() const {
  std::vector<Rational> out;
  for (const Node& n : nodes_)
    if (n.left != n.value) out.push_back(n.t);
  return out;
}

std::vector<Rational> MonotonePwFunction::right_discontinuities() const {
  std::vector<Rational> out;
  for (const Node& n : nodes_)
    if (n.value != n.right) out.push_back(n.t);
  return out;
}

MonotonePwFunction add(const MonotonePwFunction& a, const MonotonePwFunction& b) {
  require(a.direction_ == b.direction_, "InvalidStepFunction",
          "cannot add functions of opposite direction");
  std::vector<Rational> ts;
  for (const Node& n : a.nodes_) ts.push_back(n.t);
  for (const Node& n : b.nodes_) ts.push_back(n.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Node> nodes;
  nodes.reserve(ts.size());
  for (const Rational& t : ts) {
    nodes.push_back({t, a.left_limit(t) + b.left_limit(t), a.value(t) + b.value(t),
                     a.right_limit(t) + b.right_limit(t)});
  }
  return MonotonePwFunction(a.direction_, std::move(nodes));
}

MonotonePwFunction scale(const MonotonePwFunction& a, const Rational& c) {
  MonotonePwFunction::Direction dir = a.direction_;
  if (c < 0) {
    dir = dir == MonotonePwFunction::Direction::NonDecreasing
              ? MonotonePwFunction::Direction::NonIncreasing
              : MonotonePwFunction::Direction::NonDecreasing;
  }
  std::vector<Node> nodes = a.nodes_;
  for (Node& n : nodes) {
    n.left *= c;
    n.value *= c;
    n.right *= c;
  }
  return MonotonePwFunction(dir, std::move(nodes));
}

}  // namespace qdtm
