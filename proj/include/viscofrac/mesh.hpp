#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "viscofrac/crack_path.hpp"
#include "viscofrac/domain.hpp"
#include "viscofrac/kernels.hpp"
#include "viscofrac/tip_motion.hpp"

namespace viscofrac {

struct GrowMeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Conforming triangulation of the cracked domain. Nodes along the crack
/// strictly behind the tip are duplicated into plus/minus copies (plus on
/// the left of the walking direction mouth -> tip); the tip node is single.
/// The path ahead of the tip, up to s_ahead, is constrained into the edge
/// set so the tip can later slide along it.
struct CrackedMesh {
  std::vector<Vec2> X;
  std::vector<std::array<int, 3>> tri;  // counterclockwise
  std::vector<int> region;              // material region per element
  std::vector<signed char> tri_side;    // -1 / 0 / +1 crack side tag

  struct ChainNode {
    int plus = -1;
    int minus = -1;  // == plus while the node is single
    double s = 0.0;
    bool split() const { return minus != plus; }
  };
  std::vector<ChainNode> chain;  // ordered by arc, from the mouth to s_ahead
  int tip_index = -1;            // index into `chain` of the current tip
  double s_crack = 0.0;
  double s_ahead = 0.0;

  std::vector<int> dirichlet_nodes;  // sorted, unique
  double h = 0.0;

  std::size_t n_nodes() const { return X.size(); }
  std::size_t n_elems() const { return tri.size(); }
  int tip_node() const { return tip_index >= 0 ? chain[static_cast<std::size_t>(tip_index)].plus : -1; }
  std::size_t duplicated_pairs() const {
    std::size_t c = 0;
    for (const auto& cn : chain) c += cn.split() ? 1 : 0;
    return c;
  }

  double area(std::size_t e) const {
    const auto& t = tri[e];
    return 0.5 * orient2(X[static_cast<std::size_t>(t[0])], X[static_cast<std::size_t>(t[1])],
                         X[static_cast<std::size_t>(t[2])]);
  }
  Vec2 centroid(std::size_t e) const {
    const auto& t = tri[e];
    return (X[static_cast<std::size_t>(t[0])] + X[static_cast<std::size_t>(t[1])] +
            X[static_cast<std::size_t>(t[2])]) * (1.0 / 3.0);
  }
  /// Min interior angle in degrees, ignoring the fan around the tip node.
  double min_angle_off_tip() const;
  void audit_or_throw() const;  // orientation, degeneracy, duplication rules
};

/// Triangulate the domain minus the crack gamma([a0, s_crack]), with the
/// path constrained up to s_ahead (>= s_crack) and mesh size <= h.
CrackedMesh build_cracked_mesh(const DomainSpec& domain, const CrackPath& path,
                               double s_crack, double h, double s_ahead = -1.0);

/// Move the window-start mesh through the tip motion to time t. Connectivity
/// is preserved unless a constrained-path node falls behind the new tip, in
/// which case it is split into a plus/minus pair. Throws GrowMeshError when
/// the discrete volume-change check fails (caller falls back to a rebuild).
CrackedMesh grow_mesh(const CrackedMesh& mesh, const MeshMotion& motion, double t);

/// Nodal and per-element state carried by the solver.
struct NodalField {
  std::vector<double> v;  // 2 dofs per node (x then y interleaved)
  NodalField() = default;
  explicit NodalField(std::size_t nodes) : v(2 * nodes, 0.0) {}
  Vec2 at(std::size_t node) const { return {v[2 * node], v[2 * node + 1]}; }
  void set(std::size_t node, const Vec2& val) { v[2 * node] = val.x; v[2 * node + 1] = val.y; }
  std::size_t nodes() const { return v.size() / 2; }
};

struct TransferStats {
  std::size_t fallback_nearest = 0;  // points resolved by nearest same-side element
};

/// Interpolate nodal fields between overlapping meshes (P1, side-aware near
/// the crack). Per-element fields are transferred by sampling at the new
/// element centroid.
NodalField transfer_nodal(const CrackedMesh& from, const CrackedMesh& to,
                          const NodalField& field, TransferStats* stats = nullptr);
SymField transfer_element_field(const CrackedMesh& from, const CrackedMesh& to,
                                const SymField& field, TransferStats* stats = nullptr);

}  // namespace viscofrac
