#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tcoi/canonical.hpp"
#include "tcoi/generators.hpp"
#include "tcoi/tree.hpp"

namespace tcoi {

/// gamma_t,coi(T) = n - beta(T). Throws Undefined when diam(T) < 3.
bool in_family_T_beta(const Tree& t);
/// gamma_t,coi(T) = n - |L(T)|. Throws Undefined when diam(T) < 3.
bool in_family_T_L(const Tree& t);
/// V = L u S u SS and SS is contained in N(S*); no optimisation involved.
/// Throws Undefined when diam(T) < 3.
bool structural_TL_check(const Tree& t);
/// Stricter variant: V = L u S u SS and every semi-support v has an isolated
/// support neighbour whose only non-leaf neighbour is v.
/// Throws Undefined when diam(T) < 3.
bool strict_structural_TL_check(const Tree& t);

/// Operation sequence that grows P_4 (labelled 0-1-2-3) into a tree.
struct Certificate {
  std::vector<OperationStep> steps;
  CanonicalCode final_code;

  std::size_t length() const { return steps.size(); }
};

struct Decomposition {
  std::optional<Certificate> certificate;
  /// certificate vertex label -> vertex of the decomposed tree.
  std::vector<Vertex> labels;
  /// Number of reductions that no proof case produced and that came from the
  /// exhaustive scan of reverse operations instead.
  std::size_t fallback_steps = 0;
  /// Member of T_beta, yet no valid reduction was found.
  bool stuck = false;
};

/// Peels the tree back to P_4 one reverse operation at a time. Each reduction
/// is proposed by the induction cases (excess leaf on a support; all vertices
/// leaves or supports; the Q_r and pendant-P_4 configurations around a
/// semi-support) and accepted only if the smaller tree is still in T_beta and
/// the forward step's precondition holds there.
/// Throws Undefined when diam(T) < 3.
Decomposition decompose(const Tree& t);

/// Certificate for members of T_beta, nullopt otherwise.
std::optional<Certificate> decompose_to_P4(const Tree& t);

/// Replays from P_4, checking each step's precondition. Throws InvalidStep.
/// When `trace` is given every intermediate tree (P_4 first) is appended.
Tree replay(const Certificate& cert, std::vector<Tree>* trace = nullptr);

/// Replays and compares against `target` (and the recorded final code, when
/// present). Returns true, or throws InvalidStep / Mismatch.
bool verify_certificate(const Certificate& cert, const Tree& target);

/// All op-kind sequences of length <= max_len that grow P_4 into a tree
/// isomorphic to t, over every valid attachment vertex.
/// Throws Undefined when diam(T) < 3.
std::set<std::vector<OpKind>> exhaustive_sequence_search(const Tree& t, std::size_t max_len);

/// Text form:
///   base=P4
///   O<k> attach=<v> new=<v1,...>
///   canon=<hex>
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace tcoi
