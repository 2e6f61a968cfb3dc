#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "extendkit/metric.hpp"

namespace extendkit {

struct Neighbor {
  double dist;
  std::size_t id;
};

// Static kd-tree over a coordinate point set (euclidean or real-line).
// Traversal is best-first, which yields points in nondecreasing
// (distance, id) order; the same order a stable sort of a linear scan gives.
class KdTree {
 public:
  static constexpr std::size_t kLeafSize = 16;

  // `coords` is row-major, n points of dimension `dim`.
  KdTree(std::span<const double> coords, std::size_t dim, MetricKind kind);

  std::size_t size() const { return ids_.size(); }
  std::size_t node_count() const { return nodes_.size(); }

  // Minimum and maximum of values[id] over the points below each node.
  struct ValueBounds {
    std::vector<double> lo;
    std::vector<double> hi;
  };
  ValueBounds value_bounds(std::span<const double> values) const;

  // Depth-first branch and bound, nearer child first. skip(node, d) drops a
  // subtree whose points are all at distance >= d; visit(id, dist) sees
  // every point of the leaves that survive. skip is rechecked when a
  // deferred sibling is resumed, so it may tighten as visit runs.
  template <class Skip, class Visit>
  void search(std::span<const double> q, Skip&& skip, Visit&& visit) const;

  class Traversal {
   public:
    Traversal(const KdTree& tree, std::span<const double> query);
    // False once every point has been produced.
    bool next(Neighbor& out);
    std::size_t points_visited() const { return points_visited_; }

   private:
    struct Entry {
      double key;
      std::uint32_t is_point;  // nodes before points on equal keys
      std::size_t ref;
    };
    struct Later {
      bool operator()(const Entry& a, const Entry& b) const {
        if (a.key != b.key) return a.key > b.key;
        if (a.is_point != b.is_point) return a.is_point > b.is_point;
        return a.ref > b.ref;
      }
    };
    void push(Entry e);
    Entry pop();

    const KdTree* tree_;
    std::span<const double> query_;
    std::vector<Entry> heap_;
    std::size_t points_visited_ = 0;
  };

 private:
  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::int64_t left = -1;
    std::int64_t right = -1;
    bool leaf() const { return left < 0; }
  };

  std::size_t build(std::size_t begin, std::size_t end);
  double lower_bound(std::size_t node, std::span<const double> q) const;
  double point_distance(std::size_t slot, std::span<const double> q) const;

  std::size_t dim_;
  MetricKind kind_;
  std::vector<double> coords_;  // permuted into leaf order
  std::vector<std::size_t> ids_;
  std::vector<Node> nodes_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

template <class Skip, class Visit>
void KdTree::search(std::span<const double> q, Skip&& skip, Visit&& visit) const {
  if (nodes_.empty()) return;
  struct Pending {
    std::size_t node;
    double bound;
  };
  std::vector<Pending> stack;
  stack.reserve(64);
  stack.push_back({0, lower_bound(0, q)});
  while (!stack.empty()) {
    const Pending top = stack.back();
    stack.pop_back();
    if (skip(top.node, top.bound)) continue;
    const Node& node = nodes_[top.node];
    if (node.leaf()) {
      for (std::size_t slot = node.begin; slot < node.end; ++slot) {
        visit(ids_[slot], point_distance(slot, q));
      }
      continue;
    }
    const auto left = static_cast<std::size_t>(node.left);
    const auto right = static_cast<std::size_t>(node.right);
    const double bl = lower_bound(left, q);
    const double br = lower_bound(right, q);
    if (bl <= br) {
      stack.push_back({right, br});
      stack.push_back({left, bl});
    } else {
      stack.push_back({left, bl});
      stack.push_back({right, br});
    }
  }
}

}  // namespace extendkit
