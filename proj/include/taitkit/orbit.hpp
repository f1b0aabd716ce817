#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "taitkit/diagram.hpp"
#include "taitkit/flype.hpp"
#include "taitkit/goeritz.hpp"

namespace taitkit {

/// Minimal traversal code of the rotation system with over/under flags.
/// Equal exactly for diagrams related by an orientation-preserving
/// homeomorphism of the sphere; component orientations are ignored.
struct CanonicalCode {
  std::vector<int> values;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string to_string() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const Diagram& d);

/// The traversal code read from one starting dart (exposed for tests).
CanonicalCode traversal_code(const Diagram& d, DartId start);

struct OrbitLimits {
  std::size_t max_nodes = 10000;
  int max_depth = 64;
};

struct OrbitEdge {
  std::size_t from = 0;  // index into members
  std::size_t to = 0;
  FlypeSite site;        // site on the representative of `from`

  friend auto operator<=>(const OrbitEdge&, const OrbitEdge&) = default;
  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct OrbitMember {
  CanonicalCode code;
  Diagram representative;
  int depth = 0;
};

struct OrbitReport {
  std::vector<CanonicalCode> seeds;
  std::vector<OrbitMember> members;  // sorted by code
  std::vector<OrbitEdge> edges;      // sorted
  InvariantVector invariants;
  bool invariants_consistent = true;
  bool truncated = false;
  OrbitLimits limits;

  /// Index of code among members, or npos.
  std::size_t find(const CanonicalCode& code) const;
};

/// Breadth-first closure under apply_flype, deduplicated by canonical code.
/// Throws PreconditionFailed unless d is reduced, alternating and prime.
OrbitReport flype_orbit(const Diagram& d, const OrbitLimits& limits = {});

enum class Relation { Related, NotRelatedWithin, DistinguishedByInvariant };

struct RelationResult {
  Relation relation = Relation::NotRelatedWithin;
  std::string invariant;  // set for DistinguishedByInvariant
  bool truncated = false;
  std::size_t explored = 0;
  int distance = -1;  // flype distance when Related
};

RelationResult is_flype_related(const Diagram& a, const Diagram& b, const OrbitLimits& limits = {});

const char* to_string(Relation r) noexcept;
std::string describe(const RelationResult& r);

std::string to_json(const OrbitReport& report);
std::string to_dot(const OrbitReport& report);

}  // namespace taitkit
